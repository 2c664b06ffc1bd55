#pragma once

// Shorthand used by the identity registrations.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qform/lambert.hpp"
#include "qform/verify.hpp"

namespace qform::cases {

using S = PowerSeries;

inline S th(Int a, Int b, Int c, std::size_t N)
{
    return theta_series(QuadForm{a, b, c}, N);
}

inline S th(QuadForm const& f, std::size_t N)
{
    return theta_series(f, N);
}

inline S sum_theta(std::vector<QuadForm> const& forms, std::size_t N)
{
    S out(N);
    for (auto const& f : forms)
        out += theta_series(f, N);
    return out;
}

/// s(q^k)
inline S at(S const& s, std::size_t k)
{
    return substitute_power(s, k);
}

/// P_{m,r} s
inline S proj(S const& s, std::size_t m, std::int64_t r)
{
    return project(s, m, r);
}

/// Sum of P_{m,r} s over the listed residues.
inline S proj(S const& s, std::size_t m, std::initializer_list<std::int64_t> residues)
{
    S out(s.truncation());
    for (auto r : residues)
        out += project(s, m, r);
    return out;
}

inline S lam(char const* name, std::size_t N)
{
    return lambert_expand(named_lambert(name), N);
}

inline S constant(S::Coeff c, std::size_t N)
{
    return S::monomial(N, 0, c);
}

/// q^lead prod E(sign q^scale)^exponent over the factors {scale, exponent[, sign]}.
inline S eta(std::size_t N, std::size_t lead, std::vector<EtaFactor> factors)
{
    return eta_quotient(EtaQuotientSpec{lead, std::move(factors)}, N);
}

/// Integer facts packed as a series so the comparator can report the first disagreement.
inline S pack(std::vector<S::Coeff> values)
{
    if (values.empty())
        values.push_back(0);
    return S(std::move(values));
}

inline std::vector<SeriesPair> one(S lhs, S rhs)
{
    std::vector<SeriesPair> out;
    out.push_back({std::move(lhs), std::move(rhs)});
    return out;
}

template <class F>
IdentityCase make(std::string id, Scale scale, F&& fn)
{
    return IdentityCase{std::move(id), scale, std::forward<F>(fn)};
}

/// A case asserting a single lhs == rhs.
template <class F>
IdentityCase single(std::string id, Scale scale, F fn)
{
    return IdentityCase{std::move(id), scale, [fn](std::size_t N) {
                            auto [lhs, rhs] = fn(N);
                            return one(std::move(lhs), std::move(rhs));
                        }};
}

} // namespace qform::cases
