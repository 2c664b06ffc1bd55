#include "qform/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace qform {

namespace {

using Coeff = PowerSeries::Coeff;

Coeff checked_narrow(Wide v)
{
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN))
        throw std::overflow_error("power series coefficient exceeds 64 bits");
    return static_cast<Coeff>(v);
}

Wide checked_add(Wide x, Wide y)
{
    Wide r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("power series accumulator overflow");
    return r;
}

Wide floor_div(Wide num, Wide den)
{
    Wide q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

Wide ceil_div(Wide num, Wide den)
{
    return -floor_div(-num, den);
}

Wide isqrt(Wide n)
{
    if (n <= 0)
        return 0;
    auto r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Nonzero terms of E(sign q^scale) below the bound, as (exponent, coefficient).
std::vector<std::pair<std::size_t, int>> pentagonal_terms(std::size_t N, std::size_t scale, int sign)
{
    std::vector<std::pair<std::size_t, int>> terms{{0, 1}};
    for (long j = 1;; ++j) {
        bool any = false;
        for (long jj : {j, -j}) {
            auto g = static_cast<std::size_t>(jj * (3 * jj - 1) / 2);
            if (g * scale > N)
                continue;
            any = true;
            int c = (j % 2 == 0) ? 1 : -1;
            if (sign < 0 && g % 2 == 1)
                c = -c;
            terms.emplace_back(g * scale, c);
        }
        if (!any)
            break;
    }
    std::sort(terms.begin(), terms.end());
    return terms;
}

} // namespace

PowerSeries::PowerSeries(std::size_t truncation) : coeffs_(truncation + 1, 0) {}

PowerSeries::PowerSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("PowerSeries: at least the constant coefficient is required");
}

PowerSeries PowerSeries::one(std::size_t truncation)
{
    return monomial(truncation, 0, 1);
}

PowerSeries PowerSeries::monomial(std::size_t truncation, std::size_t exponent, Coeff coeff)
{
    PowerSeries s(truncation);
    if (exponent <= truncation)
        s.coeffs_[exponent] = coeff;
    return s;
}

PowerSeries PowerSeries::truncated(std::size_t n) const
{
    if (n > truncation())
        throw std::invalid_argument("PowerSeries::truncated: cannot extend a truncated series");
    return PowerSeries(std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

PowerSeries PowerSeries::operator-() const
{
    return Coeff(-1) * *this;
}

PowerSeries operator+(PowerSeries const& x, PowerSeries const& y)
{
    std::size_t n = std::min(x.truncation(), y.truncation());
    std::vector<Coeff> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out[i] = checked_narrow(Wide(x.coeffs_[i]) + y.coeffs_[i]);
    return PowerSeries(std::move(out));
}

PowerSeries operator-(PowerSeries const& x, PowerSeries const& y)
{
    std::size_t n = std::min(x.truncation(), y.truncation());
    std::vector<Coeff> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out[i] = checked_narrow(Wide(x.coeffs_[i]) - y.coeffs_[i]);
    return PowerSeries(std::move(out));
}

PowerSeries operator*(Coeff k, PowerSeries const& x)
{
    std::vector<Coeff> out(x.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_narrow(Wide(k) * x.coeffs_[i]);
    return PowerSeries(std::move(out));
}

PowerSeries operator*(PowerSeries const& x, PowerSeries const& y)
{
    std::size_t n = std::min(x.truncation(), y.truncation());
    std::vector<Wide> acc(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        if (x.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (y.coeffs_[j] != 0)
                acc[i + j] = checked_add(acc[i + j], Wide(x.coeffs_[i]) * y.coeffs_[j]);
    }
    std::vector<Coeff> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        out[i] = checked_narrow(acc[i]);
    return PowerSeries(std::move(out));
}

bool operator==(PowerSeries const& x, PowerSeries const& y)
{
    return !first_mismatch(x, y).has_value();
}

std::optional<Mismatch> first_mismatch(PowerSeries const& lhs, PowerSeries const& rhs)
{
    std::size_t n = std::min(lhs.truncation(), rhs.truncation());
    for (std::size_t i = 0; i <= n; ++i)
        if (lhs[i] != rhs[i])
            return Mismatch{i, lhs[i], rhs[i]};
    return std::nullopt;
}

PowerSeries substitute_power(PowerSeries const& s, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("substitute_power: k must be positive");
    std::size_t N = s.truncation();
    std::vector<Coeff> out(N + 1, 0);
    for (std::size_t i = 0; i * k <= N; ++i)
        out[i * k] = s[i];
    return PowerSeries(std::move(out));
}

PowerSeries negate_argument(PowerSeries const& s)
{
    std::vector<Coeff> out(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t i = 1; i < out.size(); i += 2)
        out[i] = checked_narrow(-Wide(out[i]));
    return PowerSeries(std::move(out));
}

PowerSeries shift(PowerSeries const& s, std::size_t e)
{
    std::size_t N = s.truncation();
    std::vector<Coeff> out(N + 1, 0);
    for (std::size_t i = 0; i + e <= N; ++i)
        out[i + e] = s[i];
    return PowerSeries(std::move(out));
}

PowerSeries project(PowerSeries const& s, std::size_t m, std::int64_t r)
{
    if (m == 0)
        throw std::invalid_argument("project: modulus must be positive");
    auto residue = static_cast<std::size_t>(mod(r, static_cast<Int>(m)));
    std::vector<Coeff> out(s.truncation() + 1, 0);
    for (std::size_t i = residue; i < out.size(); i += m)
        out[i] = s[i];
    return PowerSeries(std::move(out));
}

PowerSeries reciprocal(PowerSeries const& s)
{
    Coeff c0 = s[0];
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("reciprocal: constant term must be a unit");
    std::size_t N = s.truncation();
    std::vector<Coeff> out(N + 1, 0);
    out[0] = c0;
    for (std::size_t n = 1; n <= N; ++n) {
        Wide acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (s[k] != 0 && out[n - k] != 0)
                acc = checked_add(acc, Wide(s[k]) * out[n - k]);
        out[n] = checked_narrow(-acc * c0);
    }
    return PowerSeries(std::move(out));
}

PowerSeries theta_series(QuadForm const& f, std::size_t N)
{
    if (!validate(f).positive_definite)
        throw std::domain_error("theta_series: form " + to_string(f) + " is not positive definite");
    // 4a f(x,y) = (2ax + by)^2 + |D| y^2
    Wide const a = f.a, b = f.b;
    Wide const abs_d = -Wide(discriminant(f));
    Wide const bound = 4 * a * static_cast<Wide>(N);
    Wide const ymax = isqrt(bound / abs_d);
    std::vector<Coeff> out(N + 1, 0);
    for (Wide y = -ymax; y <= ymax; ++y) {
        Wide rest = bound - abs_d * y * y;
        if (rest < 0)
            continue;
        Wide s = isqrt(rest);
        Wide lo = ceil_div(-s - b * y, 2 * a);
        Wide hi = floor_div(s - b * y, 2 * a);
        for (Wide x = lo; x <= hi; ++x) {
            Wide value = f(static_cast<Int>(x), static_cast<Int>(y));
            if (value >= 0 && value <= static_cast<Wide>(N))
                ++out[static_cast<std::size_t>(value)];
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries phi_series(std::size_t N)
{
    std::vector<Coeff> out(N + 1, 0);
    out[0] = 1;
    for (std::size_t n = 1; n * n <= N; ++n)
        out[n * n] += 2;
    return PowerSeries(std::move(out));
}

PowerSeries psi_series(std::size_t N)
{
    std::vector<Coeff> out(N + 1, 0);
    for (long n = 0;; ++n) {
        bool any = false;
        for (long m : {n, -n - 1}) {
            auto e = static_cast<std::size_t>(2 * m * m - m);
            if (e <= N) {
                ++out[e];
                any = true;
            }
        }
        if (!any)
            break;
    }
    return PowerSeries(std::move(out));
}

PowerSeries euler_series(std::size_t N, std::size_t scale, int sign)
{
    std::vector<Coeff> out(N + 1, 0);
    for (auto [e, c] : pentagonal_terms(N, scale, sign))
        out[e] += c;
    return PowerSeries(std::move(out));
}

PowerSeries eta_quotient(EtaQuotientSpec const& spec, std::size_t N)
{
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> acc(N + 1, 0);
    if (spec.leading_power <= N)
        acc[spec.leading_power] = 1;
    for (auto const& factor : spec.factors) {
        if (factor.scale == 0 || (factor.sign != 1 && factor.sign != -1))
            throw std::invalid_argument("eta_quotient: invalid factor");
        auto terms = pentagonal_terms(N, factor.scale, factor.sign);
        for (int rep = 0; rep < std::abs(factor.exponent); ++rep) {
            if (factor.exponent > 0) {
                for (std::size_t n = N + 1; n-- > 0;)
                    for (std::size_t t = 1; t < terms.size() && terms[t].first <= n; ++t)
                        acc[n] += terms[t].second * acc[n - terms[t].first];
            } else {
                // constant term 1: divide by back substitution
                for (std::size_t n = 0; n <= N; ++n)
                    for (std::size_t t = 1; t < terms.size() && terms[t].first <= n; ++t)
                        acc[n] -= terms[t].second * acc[n - terms[t].first];
            }
        }
    }
    std::vector<Coeff> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        if (acc[n] > INT64_MAX || acc[n] < INT64_MIN)
            throw std::overflow_error("eta_quotient: coefficient exceeds 64 bits at q^" + std::to_string(n));
        out[n] = static_cast<Coeff>(acc[n]);
    }
    return PowerSeries(std::move(out));
}

void to_json(nlohmann::json& j, PowerSeries const& s)
{
    j = nlohmann::json{{"truncation", s.truncation()},
                       {"coeffs", std::vector<Coeff>(s.coeffs().begin(), s.coeffs().end())}};
}

void from_json(nlohmann::json const& j, PowerSeries& s)
{
    auto coeffs = j.at("coeffs").get<std::vector<Coeff>>();
    auto truncation = j.at("truncation").get<std::size_t>();
    if (coeffs.size() != truncation + 1)
        throw std::invalid_argument("PowerSeries JSON: coeffs length must be truncation + 1");
    s = PowerSeries(std::move(coeffs));
}

} // namespace qform
