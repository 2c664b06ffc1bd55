#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qform {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

/*
 * The binary quadratic form a x^2 + b xy + c y^2. Values are plain triples;
 * positive definiteness is checked by the operations that need it.
 * Ordering is lexicographic on (a, b, c).
 */
struct QuadForm {
    Int a = 0;
    Int b = 0;
    Int c = 0;

    friend auto operator<=>(QuadForm const&, QuadForm const&) = default;

    /// f(x, y), exact.
    Wide operator()(Int x, Int y) const
    {
        return Wide(a) * x * x + Wide(b) * x * y + Wide(c) * y * y;
    }

    /// The opposite form (a, -b, c), representing the inverse class.
    QuadForm opposite() const { return {a, -b, c}; }
};

std::string to_string(QuadForm const& f);
std::ostream& operator<<(std::ostream& os, QuadForm const& f);

/// Parses "a,b,c" (optionally wrapped in parentheses). Throws std::invalid_argument.
QuadForm parse_form(std::string_view text);

/// A negative integer congruent to 0 or 1 mod 4.
class Discriminant {
  public:
    /// Throws std::invalid_argument when the value is not a negative discriminant.
    explicit Discriminant(Int value);

    Int value() const { return value_; }
    friend auto operator<=>(Discriminant const&, Discriminant const&) = default;

  private:
    Int value_;
};

struct Validity {
    bool positive_definite = false;
    bool primitive = false;
    friend bool operator==(Validity const&, Validity const&) = default;
};

Int discriminant(QuadForm const& f);
Validity validate(QuadForm const& f);

bool is_reduced(QuadForm const& f);

/*
 * Returns the reduced form SL(2,Z)-equivalent to f: |b| <= a <= c, with b >= 0
 * whenever |b| = a or a = c. Throws std::domain_error unless f is positive
 * definite.
 */
QuadForm reduce(QuadForm f);

/// Reduced forms of discriminant delta, sorted by (a, b, c).
std::vector<QuadForm> enumerate_reduced_forms(Discriminant delta, bool primitive_only = true);

Int class_number(Discriminant delta);

/// Number of units of the order of discriminant delta divided by two: 3, 2 or 1.
Int unit_index(Discriminant delta);

/// h(delta) (p - (delta|p)) / w, the class number predicted for delta p^2.
Int class_number_lift(Discriminant delta, Int p);

/*
 * Gauss composition of two primitive forms of the same discriminant,
 * returned reduced. Throws std::invalid_argument on mismatched discriminants
 * or imprimitive input.
 */
QuadForm compose(QuadForm const& f, QuadForm const& g);

/// The principal form of the discriminant: (1, 0, -d/4) or (1, 1, (1-d)/4).
QuadForm principal_form(Discriminant delta);

/// Kronecker symbol (a|n).
int kronecker(Int a, Int n);

bool is_prime(Int n);
bool is_squarefree(Int n);
bool is_fundamental(Discriminant delta);

/// Number of genera, 2^(mu-1), where mu counts the assigned characters.
Int num_genera(Discriminant delta);

struct DiscriminantInfo {
    Discriminant delta;
    Int w = 1;
    bool is_fundamental = false;
    bool is_idoneal = false;
    Int class_number = 0;
    Int num_genera = 0;
};

DiscriminantInfo discriminant_info(Discriminant delta);

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Nonnegative remainder of a modulo m (m > 0).
inline Int mod(Int a, Int m)
{
    Int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace qform
