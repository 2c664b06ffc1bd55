#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qform/forms.hpp"
#include "qform/series.hpp"

namespace qform {

/// n -> (top|n), or n -> (n|top) when flipped. top = 1 gives the trivial character.
struct CharacterSpec {
    Int top = 1;
    bool flipped = false;

    int operator()(Int n) const { return flipped ? kronecker(n, top) : kronecker(top, n); }
    friend bool operator==(CharacterSpec const&, CharacterSpec const&) = default;
};

/// Sum over d | n of chi1(d) chi2(n/d), for 1 <= n <= N; the constant term is 0.
PowerSeries twisted_divisor_series(CharacterSpec chi1, CharacterSpec chi2, std::size_t N);

struct LambertTerm {
    int coeff = 1;
    std::size_t multiplier = 1;
    friend bool operator==(LambertTerm const&, LambertTerm const&) = default;
};

/*
 * sum_{n>0} chi(n) (sum_j eps_j q^{j n}) / (1 - sign q^{b n}).
 * Every numerator multiplier j satisfies 1 <= j <= b.
 */
struct LambertSpec {
    CharacterSpec outer;
    std::vector<LambertTerm> numerator;
    int denominator_sign = 1;
    std::size_t denominator_multiplier = 1;
    friend bool operator==(LambertSpec const&, LambertSpec const&) = default;
};

PowerSeries lambert_expand(LambertSpec const& spec, std::size_t N);

/// sum (delta|n) q^n / (1 - q^n).
LambertSpec l1_spec(Int delta);
/// sum_n sum_{m=1}^{|b|-1} (a|n)(b|m) q^{nm} / (1 - q^{|b| n}).
LambertSpec l2_spec(Int a, Int b);

/// Built-in Lambert series by name (see lambert_names()); throws std::out_of_range.
LambertSpec named_lambert(std::string_view name);
std::vector<std::string> lambert_names();

/// Value of a multiplicative function at p^alpha (alpha >= 1) in terms of alpha alone.
enum class PrimePowerRule {
    one,                  // 1
    zero,                 // 0
    alternating,          // (-1)^alpha
    divisor_count,        // 1 + alpha
    signed_divisor_count, // (-1)^alpha (1 + alpha)
    even_indicator,       // ((-1)^alpha + 1) / 2
};

Int apply_rule(PrimePowerRule rule, int alpha);
std::string rule_name(PrimePowerRule rule);
PrimePowerRule parse_rule(std::string_view name);

struct CongruenceRule {
    Int modulus = 1;
    std::vector<Int> residues;
    PrimePowerRule rule = PrimePowerRule::one;
};

/*
 * A multiplicative function given prime by prime: explicit rules for special
 * primes, then the first congruence class containing p.
 */
struct PrimePowerTable {
    std::string name;
    std::map<Int, PrimePowerRule> special;
    std::vector<CongruenceRule> classes;

    /// Throws std::domain_error when no rule covers p.
    PrimePowerRule rule_for(Int p) const;
};

Int multiplicative_eval(PrimePowerTable const& table, Int n);
PowerSeries multiplicative_series(PrimePowerTable const& table, std::size_t N);

/// Built-in tables by name (see table_names()); throws std::out_of_range.
PrimePowerTable named_table(std::string_view name);
std::vector<std::string> table_names();

void to_json(nlohmann::json& j, CharacterSpec const& c);
void from_json(nlohmann::json const& j, CharacterSpec& c);
void to_json(nlohmann::json& j, LambertSpec const& s);
void from_json(nlohmann::json const& j, LambertSpec& s);
void to_json(nlohmann::json& j, PrimePowerTable const& t);
void from_json(nlohmann::json const& j, PrimePowerTable& t);

/// Discriminants with a closed representation formula: -36, -75, -180.
bool has_rep_formula(Int delta);
/// The forms covered by the closed formulas of delta, in the order they are stated.
std::vector<QuadForm> rep_formula_forms(Int delta);

/*
 * Number of representations of n >= 1 by `form` from the closed product
 * formula for its discriminant. Throws std::invalid_argument for a form
 * without a formula.
 */
Int rep_formula(Int delta, QuadForm const& form, Int n);

} // namespace qform
