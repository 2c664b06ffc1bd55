// Eta quotient and Lambert series identities for discriminants -15, -36, -75
// and -180, with the closed representation formulas checked against theta
// enumeration.

#include <functional>

#include "cases_common.hpp"

namespace qform {

using namespace cases;

std::vector<IdentityCase> section2_cases()
{
    std::vector<IdentityCase> out;
    auto const E = Scale::eta;
    std::string const s = "sec2/";

    // E^2(q^3) E^2(q^5) / (E(q) E(q^15)) and q E^2(q) E^2(q^15) / (E(q^3) E(q^5))
    auto eta_even = [](std::size_t N) { return eta(N, 0, {{3, 2}, {5, 2}, {1, -1}, {15, -1}}); };
    auto eta_odd = [](std::size_t N) { return eta(N, 1, {{1, 2}, {15, 2}, {3, -1}, {5, -1}}); };
    // P(q) = 1 - sum (-15|n) q^n / (1 + q^n) and its partner Q(q)
    auto big_p = [](std::size_t N) { return constant(1, N) - lam("P15_tail", N); };
    auto big_q = [](std::size_t N) { return lam("Q15", N); };
    auto phi_pair = [](std::size_t N, std::size_t j, std::size_t k) {
        S phi = phi_series(N);
        return at(phi, j) * at(phi, k);
    };

    out.push_back(single(s + "eta1", E, [=](std::size_t N) {
        return std::pair{constant(1, N) + lambert_expand(l1_spec(-15), N), eta_even(N)};
    }));
    out.push_back(single(s + "eta2", E, [=](std::size_t N) { return std::pair{lam("g15", N), eta_odd(N)}; }));
    out.push_back(single(s + "beta1", E, [=](std::size_t N) {
        return std::pair{big_p(N), eta(N, 0, {{1, 1}, {6, 1}, {10, 1}, {15, 1}, {2, -1}, {30, -1}})};
    }));
    out.push_back(single(s + "beta2", E, [=](std::size_t N) {
        return std::pair{big_q(N), eta(N, 1, {{2, 1}, {3, 1}, {5, 1}, {30, 1}, {6, -1}, {10, -1}})};
    }));
    out.push_back(single(s + "d3", E, [](std::size_t N) {
        S psi = psi_series(N);
        return std::pair{proj(psi * at(psi, 15), 2, 0), at(psi, 6) * at(psi, 10)};
    }));
    out.push_back(single(s + "qd3", E, [](std::size_t N) {
        S psi = psi_series(N);
        return std::pair{proj(shift(at(psi, 3) * at(psi, 5), 1), 2, 0), shift(at(psi, 2) * at(psi, 30), 4)};
    }));
    out.push_back(single(s + "lsp", E, [=](std::size_t N) {
        return std::pair{phi_pair(N, 1, 15), negate_argument(big_p(N)) - negate_argument(big_q(N))};
    }));
    out.push_back(single(s + "qsp", E, [=](std::size_t N) {
        return std::pair{phi_pair(N, 3, 5), negate_argument(big_p(N)) + negate_argument(big_q(N))};
    }));
    out.push_back(single(s + "p0", E, [=](std::size_t N) {
        return std::pair{proj(phi_pair(N, 1, 15), 2, 0), at(th(1, 1, 4, N), 4)};
    }));
    out.push_back(single(s + "p00", E, [=](std::size_t N) {
        return std::pair{proj(phi_pair(N, 3, 5), 2, 0), at(th(2, 1, 2, N), 4)};
    }));
    out.push_back(single(s + "pr", E, [](std::size_t N) {
        return std::pair{th(1, 1, 4, N), constant(1, N) + lambert_expand(l1_spec(-15), N) + lam("g15", N)};
    }));
    out.push_back(single(s + "pr2", E, [](std::size_t N) {
        return std::pair{th(2, 1, 2, N), constant(1, N) + lambert_expand(l1_spec(-15), N) - lam("g15", N)};
    }));
    out.push_back(make(s + "pr3", E, [=](std::size_t N) {
        S a = th(1, 1, 4, N), b = th(2, 1, 2, N);
        std::vector<SeriesPair> pairs;
        pairs.push_back({2 * eta_even(N), a + b});
        pairs.push_back({2 * eta_odd(N), a - b});
        return pairs;
    }));
    return out;
}

namespace {

/// Pairs (multiplicative table, divisor sum) and (Lambert expansion, divisor sum).
IdentityCase table_case(std::string id, char const* table, char const* lambert, CharacterSpec chi1,
                        CharacterSpec chi2)
{
    return make(std::move(id), Scale::representation, [=](std::size_t N) {
        S divisor = twisted_divisor_series(chi1, chi2, N);
        std::vector<SeriesPair> pairs;
        pairs.push_back({multiplicative_series(named_table(table), N), divisor});
        pairs.push_back({lambert_expand(named_lambert(lambert), N), divisor});
        return pairs;
    });
}

/// Closed representation formula of one form against theta enumeration, n >= 1.
IdentityCase rep_case(std::string id, Int delta, QuadForm form)
{
    return single(std::move(id), Scale::representation, [=](std::size_t N) {
        S theta = th(form, N);
        std::vector<S::Coeff> formula(N + 1, 1);
        for (std::size_t n = 1; n <= N; ++n)
            formula[n] = rep_formula(delta, form, static_cast<Int>(n));
        return std::pair{theta, S(std::move(formula))};
    });
}

/*
 * For the two forms f, g of a discriminant and a prime ell: equal counts when
 * ell | n, and f(n) g(n) = 0 otherwise.
 */
IdentityCase corollary_case(std::string id, QuadForm f, QuadForm g, std::size_t ell)
{
    return make(std::move(id), Scale::representation, [=](std::size_t N) {
        S a = th(f, N), b = th(g, N);
        std::vector<S::Coeff> product(N + 1, 0);
        for (std::size_t n = 1; n <= N; ++n)
            if (n % ell != 0)
                product[n] = a[n] * b[n];
        std::vector<SeriesPair> pairs;
        pairs.push_back({proj(a, ell, 0), proj(b, ell, 0)});
        pairs.push_back({S(std::move(product)), S(N)});
        return pairs;
    });
}

} // namespace

std::vector<IdentityCase> section4_cases()
{
    std::vector<IdentityCase> out;
    auto const T = Scale::theta;
    std::string const s = "sec4/";

    // discriminant -36
    out.push_back(single(s + "36o", T, [](std::size_t N) {
        S sq = th(1, 0, 1, N);
        return std::pair{2 * th(1, 0, 9, N), 2 * at(sq, 9) + proj(sq, 3, 1)};
    }));
    out.push_back(single(s + "36oo", T, [](std::size_t N) {
        S sq = th(1, 0, 1, N);
        return std::pair{2 * th(2, 2, 5, N), 2 * at(sq, 9) + proj(sq, 3, 2)};
    }));
    out.push_back(single(s + "36p", T, [](std::size_t N) {
        return std::pair{th(1, 0, 1, N), constant(1, N) + 4 * lam("A36", N)};
    }));
    out.push_back(single(s + "36pp", T, [](std::size_t N) {
        S sq = th(1, 0, 1, N);
        return std::pair{proj(sq, 3, 1) - proj(sq, 3, 2), 4 * lam("D36", N)};
    }));
    auto dec36 = [](std::size_t N, int sign) {
        S a = lam("A36", N);
        return constant(1, N) + a + 3 * at(a, 9) + sign * lam("D36", N);
    };
    out.push_back(single(s + "36dec1-a", T, [=](std::size_t N) { return std::pair{th(1, 0, 9, N), dec36(N, 1)}; }));
    out.push_back(single(s + "36dec1-b", T, [=](std::size_t N) { return std::pair{th(2, 2, 5, N), dec36(N, -1)}; }));
    out.push_back(table_case(s + "A-table", "A36", "A36", {-4, false}, {1, false}));
    out.push_back(table_case(s + "D-table", "D36", "D36", {12, false}, {3, true}));
    out.push_back(rep_case(s + "h", -36, {1, 0, 9}));
    out.push_back(rep_case(s + "h2", -36, {2, 2, 5}));
    out.push_back(corollary_case(s + "h-cor", {1, 0, 9}, {2, 2, 5}, 3));

    // discriminant -75
    out.push_back(single(s + "71w", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(1, 1, 19, N), 3 * at(hex, 25) + proj(hex, 5, {1, 4})};
    }));
    out.push_back(single(s + "71ww", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(3, 3, 7, N), 3 * at(hex, 25) + proj(hex, 5, {2, 3})};
    }));
    out.push_back(make(s + "oee", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        S lhs = 3 * th(1, 1, 19, N) + 3 * th(3, 3, 7, N);
        std::vector<SeriesPair> pairs;
        pairs.push_back({lhs, 6 * at(hex, 25) + hex - proj(hex, 5, 0)});
        pairs.push_back({lhs, hex + 5 * at(hex, 25)});
        return pairs;
    }));
    out.push_back(single(s + "oe", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{3 * th(1, 1, 19, N) - 3 * th(3, 3, 7, N), proj(hex, 5, {1, 4}) - proj(hex, 5, {2, 3})};
    }));
    out.push_back(single(s + "75t", T, [](std::size_t N) {
        return std::pair{th(1, 1, 1, N), constant(1, N) + 6 * lam("f75", N)};
    }));
    out.push_back(single(s + "75tt", T, [](std::size_t N) {
        S hex = th(1, 1, 1, N);
        return std::pair{proj(hex, 5, {1, 4}) - proj(hex, 5, {2, 3}), 6 * lam("g75", N)};
    }));
    out.push_back(single(s + "k", T, [](std::size_t N) {
        S f = lam("f75", N);
        return std::pair{th(1, 1, 19, N) + th(3, 3, 7, N), constant(2, N) + 2 * f + 10 * at(f, 25)};
    }));
    out.push_back(single(s + "kk", T, [](std::size_t N) {
        return std::pair{th(1, 1, 19, N) - th(3, 3, 7, N), 2 * lam("g75", N)};
    }));
    auto dec75 = [](std::size_t N, int sign) {
        S f = lam("f75", N);
        return constant(1, N) + f + 5 * at(f, 25) + sign * lam("g75", N);
    };
    out.push_back(single(s + "kkk", T, [=](std::size_t N) { return std::pair{th(1, 1, 19, N), dec75(N, 1)}; }));
    out.push_back(single(s + "kkkkk", T, [=](std::size_t N) { return std::pair{th(3, 3, 7, N), dec75(N, -1)}; }));
    out.push_back(table_case(s + "f-table", "f75", "f75", {-3, false}, {1, false}));
    out.push_back(table_case(s + "g-table", "g75", "g75", {-15, false}, {5, true}));
    out.push_back(rep_case(s + "h5h", -75, {1, 1, 19}));
    out.push_back(rep_case(s + "h5hh", -75, {3, 3, 7}));
    out.push_back(corollary_case(s + "h5-cor", {1, 1, 19}, {3, 3, 7}, 5));

    // discriminant -180 from -20
    auto pq = [](std::size_t N, int sign) {
        return constant(1, N) + lam("P180", N) + sign * lam("Q180", N);
    };
    out.push_back(single(s + "dec1", T, [=](std::size_t N) { return std::pair{th(1, 0, 5, N), pq(N, 1)}; }));
    out.push_back(single(s + "dec2", T, [=](std::size_t N) { return std::pair{th(2, 2, 3, N), pq(N, -1)}; }));
    out.push_back(single(s + "dec3", T, [](std::size_t N) {
        S f = th(1, 0, 5, N);
        return std::pair{proj(f, 3, 1) - proj(f, 3, 2), lam("R180", N) + lam("S180", N)};
    }));
    out.push_back(single(s + "dec4", T, [](std::size_t N) {
        S f = th(2, 2, 3, N);
        return std::pair{proj(f, 3, 1) - proj(f, 3, 2), lam("R180", N) - lam("S180", N)};
    }));

    // 2 + P + eq Q - 2P(q^3) + 2 eq Q(q^3) + 3P(q^9) + 3 eq Q(q^9) + er R + es S
    auto ab = [](std::size_t N, int eq, int er, int es) {
        S p = lam("P180", N), q = lam("Q180", N);
        return constant(2, N) + p + eq * q - 2 * at(p, 3) + 2 * eq * at(q, 3) + 3 * at(p, 9) + 3 * eq * at(q, 9) +
               er * lam("R180", N) + es * lam("S180", N);
    };
    out.push_back(single(s + "ab1", T, [=](std::size_t N) { return std::pair{2 * th(1, 0, 45, N), ab(N, 1, 1, 1)}; }));
    out.push_back(single(s + "ab2", T, [=](std::size_t N) { return std::pair{2 * th(5, 0, 9, N), ab(N, 1, -1, -1)}; }));
    out.push_back(single(s + "ab3", T, [=](std::size_t N) { return std::pair{2 * th(7, 4, 7, N), ab(N, -1, 1, -1)}; }));
    out.push_back(single(s + "ab4", T, [=](std::size_t N) { return std::pair{2 * th(2, 2, 23, N), ab(N, -1, -1, 1)}; }));
    out.push_back(table_case(s + "P-table", "P180", "P180", {-20, false}, {1, false}));
    out.push_back(table_case(s + "Q-table", "Q180", "Q180", {-4, false}, {5, true}));
    out.push_back(table_case(s + "R-table", "R180", "R180", {60, false}, {-3, false}));
    out.push_back(table_case(s + "S-table", "S180", "S180", {15, true}, {12, false}));
    out.push_back(rep_case(s + "h6h", -180, {1, 0, 45}));
    out.push_back(rep_case(s + "h6h2", -180, {5, 0, 9}));
    out.push_back(rep_case(s + "h6h22", -180, {7, 4, 7}));
    out.push_back(rep_case(s + "h6h222", -180, {2, 2, 23}));
    return out;
}

} // namespace qform
