// Lifting identities between discriminants delta and delta p^2, the worked
// instances, and the eta/theta basics with the class-number-two decompositions.

#include <stdexcept>

#include "cases_common.hpp"

namespace qform {

using namespace cases;

std::vector<std::pair<Int, Int>> idoneal_lift_pairs()
{
    static constexpr Int by_two[] = {3,   4,   7,   8,   12,  15,  16,  24,  28,   40,   48,   60,   72,  88,
                                     112, 120, 168, 232, 240, 280, 312, 408, 520, 760, 840, 1320, 1848};
    static constexpr Int by_three[] = {3, 4, 8, 11, 20, 32, 35};
    std::vector<std::pair<Int, Int>> out;
    for (Int d : by_two)
        out.emplace_back(-d, 2);
    for (Int d : by_three)
        out.emplace_back(-d, 3);
    out.emplace_back(-3, 5);
    out.emplace_back(-4, 5);
    out.emplace_back(-3, 7);
    return out;
}

int two_adic_t(Int delta)
{
    if (mod(delta, 16) == 0)
        return 2;
    return mod(delta, 2) == 0 ? 1 : 0;
}

PowerSeries lift_identity_rhs(std::vector<QuadForm> const& small_forms, Int delta, Int p, Int r,
                              Int multiplicity, std::size_t N)
{
    Int const w = unit_index(Discriminant(delta));
    S base = sum_theta(small_forms, N);
    S out = (w * multiplicity) * at(base, static_cast<std::size_t>(p * p));
    if (p == 2) {
        out += proj(base, std::size_t{1} << (two_adic_t(delta) + 1), r);
    } else {
        for (Int i = 1; i < p; ++i)
            if (kronecker(r * i, p) == 1)
                out += proj(base, static_cast<std::size_t>(p), i);
    }
    return out;
}

namespace {

bool idoneal(Discriminant d)
{
    return class_number(d) == num_genera(d);
}

} // namespace

std::vector<IdentityCase> theorem1_cases(Discriminant delta, Int p)
{
    if (!is_prime(p))
        throw std::invalid_argument("theorem1_cases: p must be prime");
    Discriminant lifted(delta.value() * p * p);
    if (!idoneal(delta) || !idoneal(lifted))
        throw std::invalid_argument("theorem1_cases: " + std::to_string(delta.value()) + " and " +
                                    std::to_string(lifted.value()) + " must both be idoneal");

    auto small = genus_partition(delta);
    auto large = genus_partition(lifted);
    auto phi = phi_correspondence(small, large, p);

    std::vector<IdentityCase> out;
    std::string const prefix = "thm1/" + std::to_string(delta.value()) + "/p" + std::to_string(p) + "/G";
    for (std::size_t i = 0; i < large.genera.size(); ++i) {
        QuadForm big = large.genera[i].forms.front();
        QuadForm little = small.genera[phi[i]].forms.front();
        Int d = delta.value();
        out.push_back(make(prefix + std::to_string(i + 1), Scale::theta, [=](std::size_t N) {
            Int w = unit_index(Discriminant(d));
            auto rs = represented_coprime_values(big, d * p * p, 2);
            std::vector<SeriesPair> pairs;
            S rhs = lift_identity_rhs({little}, d, p, rs[0], 1, N);
            pairs.push_back({w * th(big, N), rhs});
            pairs.push_back({lift_identity_rhs({little}, d, p, rs[1], 1, N), rhs});
            return pairs;
        }));
    }
    return out;
}

std::vector<IdentityCase> section3_worked_cases()
{
    std::vector<IdentityCase> out;
    auto const T = Scale::theta;
    std::string const w = "thm1/worked/";

    // delta = -20, p = 3
    out.push_back(single(w + "aa1", T, [](std::size_t N) {
        return std::pair{th(1, 0, 45, N), at(th(1, 0, 5, N), 9) + proj(th(1, 0, 5, N), 3, 1)};
    }));
    out.push_back(single(w + "aa2", T, [](std::size_t N) {
        return std::pair{th(5, 0, 9, N), at(th(1, 0, 5, N), 9) + proj(th(1, 0, 5, N), 3, 2)};
    }));
    out.push_back(single(w + "aa3", T, [](std::size_t N) {
        return std::pair{th(7, 4, 7, N), at(th(2, 2, 3, N), 9) + proj(th(2, 2, 3, N), 3, 1)};
    }));
    out.push_back(single(w + "aa4", T, [](std::size_t N) {
        return std::pair{th(2, 2, 23, N), at(th(2, 2, 3, N), 9) + proj(th(2, 2, 3, N), 3, 2)};
    }));

    // delta = -3, p = 3
    out.push_back(single(w + "-3p3", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(1, 1, 7, N), 3 * at(hex, 9) + proj(hex, 3, 1)};
    }));

    // delta = -4, p = 5
    out.push_back(single(w + "iiv", T, [](std::size_t N) {
        S sq = th(1, 0, 1, N);
        return std::pair{2 * th(1, 0, 25, N), 2 * at(sq, 25) + proj(sq, 5, {1, 4})};
    }));
    out.push_back(single(w + "iiiv", T, [](std::size_t N) {
        S sq = th(1, 0, 1, N);
        return std::pair{2 * th(2, 2, 13, N), 2 * at(sq, 25) + proj(sq, 5, {2, 3})};
    }));

    // delta = -3, p = 7
    out.push_back(single(w + "147p", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(1, 1, 37, N), 3 * at(hex, 49) + proj(hex, 7, {1, 2, 4})};
    }));
    out.push_back(single(w + "147pp", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(3, 3, 13, N), 3 * at(hex, 49) + proj(hex, 7, {3, 5, 6})};
    }));

    // delta = -112, p = 2
    struct Row {
        QuadForm big, little;
        Int r;
    };
    Row const rows[] = {
        {{1, 0, 112}, {1, 0, 28}, 1},
        {{4, 4, 29}, {1, 0, 28}, 5},
        {{7, 0, 16}, {4, 0, 7}, 7},
        {{11, 6, 11}, {4, 0, 7}, 3},
    };
    int k = 1;
    for (auto const& row : rows) {
        out.push_back(single(w + "-112p2/" + std::to_string(k++), T, [row](std::size_t N) {
            S base = th(row.little, N);
            return std::pair{th(row.big, N), at(base, 4) + proj(base, 8, row.r)};
        }));
    }
    return out;
}

namespace {

/// Fundamental discriminants of class number two with |delta| <= bound.
std::vector<Int> class_number_two_fundamentals(Int bound)
{
    std::vector<Int> out;
    for (Int d = -3; d >= -bound; --d) {
        if (mod(d, 4) != 0 && mod(d, 4) != 1)
            continue;
        Discriminant delta(d);
        if (is_fundamental(delta) && class_number(delta) == 2)
            out.push_back(d);
    }
    return out;
}

} // namespace

std::vector<IdentityCase> section1_cases()
{
    std::vector<IdentityCase> out;
    auto const E = Scale::eta;

    out.push_back(single("sec1/phi", E, [](std::size_t N) {
        return std::pair{phi_series(N), eta(N, 0, {{2, 5}, {4, -2}, {1, -2}})};
    }));
    out.push_back(single("sec1/psi", E, [](std::size_t N) {
        return std::pair{psi_series(N), eta(N, 0, {{2, 2}, {1, -1}})};
    }));
    out.push_back(single("sec1/em", E, [](std::size_t N) {
        return std::pair{euler_series(N, 1, -1), eta(N, 0, {{2, 3}, {4, -1}, {1, -1}})};
    }));

    // 1 + L1(delta) + (m|p) L2((-1|p) p, -(-1|p) t) for -delta = t p
    for (Int d : class_number_two_fundamentals(1000)) {
        Int n = -d;
        Int p = 0, t = 0;
        if (n % 2 == 0) {
            t = 1;
            while (n % 2 == 0) {
                n /= 2;
                t *= 2;
            }
            p = n;
        } else {
            auto factors = factorize(n);
            if (factors.size() != 2)
                throw std::logic_error("class-number-two discriminant without two prime factors");
            t = factors[0].first;
            p = factors[1].first;
        }
        out.push_back(make("sec1/cons/" + std::to_string(d), Scale::theta, [d, p, t](std::size_t N) {
            int eps = kronecker(-1, p);
            S common = constant(1, N) + lambert_expand(l1_spec(d), N);
            S twist = lambert_expand(l2_spec(eps * p, -eps * t), N);
            std::vector<SeriesPair> pairs;
            for (auto const& f : enumerate_reduced_forms(Discriminant(d))) {
                Int m = represented_coprime_values(f, 2 * d, 1).front();
                pairs.push_back({th(f, N), common + kronecker(m, p) * twist});
            }
            return pairs;
        }));
    }
    return out;
}

} // namespace qform
