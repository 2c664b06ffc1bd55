#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qform/forms.hpp"

namespace qform {

/*
 * A power series in q with exact integer coefficients, known through q^N
 * (the truncation). Binary operations shrink to the smaller truncation.
 * Arithmetic is checked: a coefficient leaving the 64-bit range throws
 * std::overflow_error instead of wrapping.
 */
class PowerSeries {
  public:
    using Coeff = std::int64_t;

    /// The zero series through q^truncation.
    explicit PowerSeries(std::size_t truncation = 0);
    /// Coefficients c0..cN; the truncation is coeffs.size() - 1.
    explicit PowerSeries(std::vector<Coeff> coeffs);

    static PowerSeries one(std::size_t truncation);
    static PowerSeries monomial(std::size_t truncation, std::size_t exponent, Coeff coeff = 1);

    std::size_t truncation() const { return coeffs_.size() - 1; }
    std::span<Coeff const> coeffs() const { return coeffs_; }

    /// [q^n]; zero above the truncation is NOT implied, n must be <= truncation().
    Coeff operator[](std::size_t n) const { return coeffs_[n]; }

    PowerSeries truncated(std::size_t n) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(PowerSeries const& x, PowerSeries const& y);
    friend PowerSeries operator-(PowerSeries const& x, PowerSeries const& y);
    friend PowerSeries operator*(PowerSeries const& x, PowerSeries const& y);
    friend PowerSeries operator*(Coeff k, PowerSeries const& x);
    PowerSeries& operator+=(PowerSeries const& y) { return *this = *this + y; }
    PowerSeries& operator-=(PowerSeries const& y) { return *this = *this - y; }

    /// Coefficientwise equality through the smaller truncation.
    friend bool operator==(PowerSeries const& x, PowerSeries const& y);

  private:
    std::vector<Coeff> coeffs_;
};

/// Position and values of the first differing coefficient.
struct Mismatch {
    std::size_t index = 0;
    PowerSeries::Coeff lhs = 0;
    PowerSeries::Coeff rhs = 0;
    friend bool operator==(Mismatch const&, Mismatch const&) = default;
};

std::optional<Mismatch> first_mismatch(PowerSeries const& lhs, PowerSeries const& rhs);

/// q -> q^k, keeping the truncation.
PowerSeries substitute_power(PowerSeries const& s, std::size_t k);
/// q -> -q.
PowerSeries negate_argument(PowerSeries const& s);
/// Multiplication by q^e, keeping the truncation.
PowerSeries shift(PowerSeries const& s, std::size_t e);
/// Keeps the coefficients whose index is congruent to r mod m.
PowerSeries project(PowerSeries const& s, std::size_t m, std::int64_t r);
/// 1/s; requires a constant term of +1 or -1.
PowerSeries reciprocal(PowerSeries const& s);

/// Representation counts of the positive definite form f through q^N.
PowerSeries theta_series(QuadForm const& f, std::size_t N);

/// Sum over n in Z of q^(n^2).
PowerSeries phi_series(std::size_t N);
/// Sum over n in Z of q^(2n^2 - n).
PowerSeries psi_series(std::size_t N);

/// One factor E(sign * q^scale)^exponent of an eta quotient.
struct EtaFactor {
    std::size_t scale = 1;
    int exponent = 1;
    int sign = 1;
};

/// q^leading_power times the product of its factors, E(q) = prod (1 - q^n).
struct EtaQuotientSpec {
    std::size_t leading_power = 0;
    std::vector<EtaFactor> factors;
};

/// E(sign q^scale) through q^N via the pentagonal number theorem.
PowerSeries euler_series(std::size_t N, std::size_t scale = 1, int sign = 1);

/*
 * Exact expansion of an eta quotient through q^N. Intermediate products are
 * carried in arbitrary precision; the final coefficients must fit in 64 bits.
 */
PowerSeries eta_quotient(EtaQuotientSpec const& spec, std::size_t N);

void to_json(nlohmann::json& j, PowerSeries const& s);
void from_json(nlohmann::json const& j, PowerSeries& s);

} // namespace qform
