#include "qform/forms.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace qform {

namespace {

Int narrow(Wide v)
{
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("quadratic form coefficient exceeds 64 bits");
    return static_cast<Int>(v);
}

Int gcd3(Int a, Int b, Int c)
{
    return std::gcd(std::gcd(a, b), c);
}

// Returns (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> ext_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
        std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
    }
    if (old_r < 0)
        return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

Int parse_int(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

std::string to_string(QuadForm const& f)
{
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

std::ostream& operator<<(std::ostream& os, QuadForm const& f)
{
    return os << to_string(f);
}

QuadForm parse_form(std::string_view text)
{
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    auto first = text.find(',');
    auto second = first == std::string_view::npos ? first : text.find(',', first + 1);
    if (second == std::string_view::npos || text.find(',', second + 1) != std::string_view::npos)
        throw std::invalid_argument("expected a form as a,b,c: '" + std::string(text) + "'");
    return {parse_int(text.substr(0, first)), parse_int(text.substr(first + 1, second - first - 1)),
            parse_int(text.substr(second + 1))};
}

Discriminant::Discriminant(Int value) : value_(value)
{
    if (value >= 0 || (mod(value, 4) != 0 && mod(value, 4) != 1))
        throw std::invalid_argument("invalid negative discriminant " + std::to_string(value));
}

Int discriminant(QuadForm const& f)
{
    return narrow(Wide(f.b) * f.b - Wide(4) * f.a * f.c);
}

Validity validate(QuadForm const& f)
{
    Wide d = Wide(f.b) * f.b - Wide(4) * f.a * f.c;
    return {f.a > 0 && d < 0, gcd3(f.a, f.b, f.c) == 1};
}

bool is_reduced(QuadForm const& f)
{
    if (!(std::abs(f.b) <= f.a && f.a <= f.c))
        return false;
    if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

QuadForm reduce(QuadForm f)
{
    if (!validate(f).positive_definite)
        throw std::domain_error("reduce: form " + to_string(f) + " is not positive definite");
    Wide a = f.a, b = f.b, c = f.c;
    for (;;) {
        if (!(-a < b && b <= a)) {
            // x -> x + s y moves b into (-a, a]
            Wide two_a = 2 * a;
            Wide r = b % two_a;
            if (r < 0)
                r += two_a;
            if (r > a)
                r -= two_a;
            Wide s = (r - b) / two_a;
            c = a * s * s + b * s + c;
            b = r;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0)
            b = -b;
        break;
    }
    return {narrow(a), narrow(b), narrow(c)};
}

std::vector<QuadForm> enumerate_reduced_forms(Discriminant delta, bool primitive_only)
{
    Int const d = delta.value();
    std::vector<QuadForm> out;
    for (Int a = 1; 3 * a * a <= -d; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod(b - d, 2) != 0)
                continue;
            Int num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            Int c = num / (4 * a);
            if (c < a || (a == c && b < 0))
                continue;
            if (primitive_only && gcd3(a, b, c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int class_number(Discriminant delta)
{
    return static_cast<Int>(enumerate_reduced_forms(delta, true).size());
}

Int unit_index(Discriminant delta)
{
    if (delta.value() == -3)
        return 3;
    if (delta.value() == -4)
        return 2;
    return 1;
}

Int class_number_lift(Discriminant delta, Int p)
{
    if (!is_prime(p))
        throw std::invalid_argument("class_number_lift: " + std::to_string(p) + " is not prime");
    Int numerator = class_number(delta) * (p - kronecker(delta.value(), p));
    return numerator / unit_index(delta);
}

QuadForm principal_form(Discriminant delta)
{
    Int d = delta.value();
    if (mod(d, 4) == 0)
        return {1, 0, -d / 4};
    return {1, 1, (1 - d) / 4};
}

QuadForm compose(QuadForm const& f, QuadForm const& g)
{
    Int const d = discriminant(f);
    if (discriminant(g) != d)
        throw std::invalid_argument("compose: discriminants differ for " + to_string(f) + " and " +
                                    to_string(g));
    if (!validate(f).primitive || !validate(g).primitive)
        throw std::invalid_argument("compose: forms must be primitive");

    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;

    Int y1 = 0, dd = 0;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        dd = f1.a;
    } else {
        auto [g1, u, v] = ext_gcd(f2.a, f1.a);
        (void)v;
        y1 = u;
        dd = g1;
    }

    Int x2 = 0, y2 = 0, d1 = 0;
    if (s % dd == 0) {
        y2 = -1;
        x2 = 0;
        d1 = dd;
    } else {
        auto [g2, xs, yd] = ext_gcd(s, dd);
        x2 = xs;
        y2 = -yd;
        d1 = g2;
    }

    Int v1 = f1.a / d1;
    Int v2 = f2.a / d1;
    Wide rw = (Wide(y1) * y2 * n - Wide(x2) * f2.c) % v1;
    if (rw < 0)
        rw += v1;
    Wide a3 = Wide(v1) * v2;
    Wide b3 = f2.b + 2 * Wide(v2) * rw;
    Wide num = b3 * b3 - d;
    if (num % (4 * a3) != 0)
        throw std::logic_error("compose: non-integral third coefficient");
    Wide c3 = num / (4 * a3);
    return reduce({narrow(a3), narrow(b3), narrow(c3)});
}

int kronecker(Int a, Int n)
{
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0)
        return 0;
    int v = 0;
    while ((n & 1) == 0) {
        ++v;
        n /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    // n odd and positive from here on
    for (;;) {
        if (a == 0)
            return n > 1 ? 0 : k;
        v = 0;
        while ((a & 1) == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1)
            k *= tab2[n & 7];
        if (a & n & 2)
            k = -k;
        Int r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (Int i = 5; i <= n / i; i += 6)
        if (n % i == 0 || n % (i + 2) == 0)
            return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(Int n)
{
    if (n == 0)
        return false;
    for (auto [p, e] : factorize(n < 0 ? -n : n))
        if (e > 1)
            return false;
    return true;
}

bool is_fundamental(Discriminant delta)
{
    Int d = delta.value();
    if (mod(d, 4) == 1)
        return is_squarefree(d);
    Int m = d / 4;
    Int r = mod(m, 4);
    return (r == 2 || r == 3) && is_squarefree(m);
}

Int num_genera(Discriminant delta)
{
    Int d = delta.value();
    int odd_primes = 0;
    for (auto [p, e] : factorize(-d))
        if (p != 2)
            ++odd_primes;
    int mu = odd_primes;
    if (mod(d, 4) == 0) {
        Int n = -d / 4;
        if (mod(n, 4) == 1 || mod(n, 4) == 2 || mod(n, 8) == 4)
            mu += 1;
        else if (mod(n, 8) == 0)
            mu += 2;
    }
    return mu == 0 ? 1 : Int(1) << (mu - 1);
}

DiscriminantInfo discriminant_info(Discriminant delta)
{
    DiscriminantInfo info{delta};
    info.w = unit_index(delta);
    info.is_fundamental = is_fundamental(delta);
    info.class_number = class_number(delta);
    info.num_genera = num_genera(delta);
    info.is_idoneal = info.class_number == info.num_genera;
    return info;
}

} // namespace qform
