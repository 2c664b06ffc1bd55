#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qform/forms.hpp"
#include "qform/genus.hpp"
#include "qform/series.hpp"

namespace qform {

/// Default truncation class of an identity.
enum class Scale {
    theta,          // theta and Lambert identities, N = 1000
    eta,            // identities involving eta quotients, N = 500
    representation, // closed formulas against enumeration, N = 10000
    structural,     // finite structural checks; N is informational
};

std::size_t default_truncation(Scale scale);

/// Both sides of one identity, compared coefficientwise.
struct SeriesPair {
    PowerSeries lhs;
    PowerSeries rhs;
};

/*
 * One registered identity. `evaluate` returns every (lhs, rhs) pair the case
 * asserts; the case passes when all pairs agree. An empty result means the
 * case's hypothesis is not met (status not_applicable).
 */
struct IdentityCase {
    std::string id;
    Scale scale = Scale::theta;
    std::function<std::vector<SeriesPair>(std::size_t N)> evaluate;
};

enum class Status { pass, fail, not_applicable };

std::string to_string(Status s);

struct VerificationReport {
    std::string id;
    Status status = Status::fail;
    std::size_t N = 0;
    std::optional<Mismatch> first_mismatch;
    double ms = 0;
    std::string error; // set when evaluation threw
};

void to_json(nlohmann::json& j, VerificationReport const& r);
/// One compact JSON object, no trailing newline.
std::string to_json_line(VerificationReport const& r);

/// Evaluates a single case at truncation N (or its default when N is empty).
VerificationReport run_case(IdentityCase const& c, std::optional<std::size_t> N = std::nullopt);

/// Glob match where '*' spans any characters (including '/') and '?' matches one.
bool matches_filter(std::string_view id, std::string_view filter);

class Registry {
  public:
    void add(IdentityCase c);
    void append(std::vector<IdentityCase> cases);
    std::vector<IdentityCase> const& cases() const { return cases_; }
    std::vector<IdentityCase const*> select(std::string_view filter) const;
    IdentityCase const* find(std::string_view id) const;

  private:
    std::vector<IdentityCase> cases_;
};

/// Every (delta, p) with delta and delta p^2 both idoneal, from the known idoneal list.
std::vector<std::pair<Int, Int>> idoneal_lift_pairs();

/*
 * Identity relating a form alone in its genus G of delta p^2 to the form of
 * the corresponding genus of delta. The right side is
 *   w * multiplicity * theta_small(q^{p^2}) + (projections of theta_small),
 * where odd p selects P_{p,i} with (r i | p) = 1 and p = 2 takes P_{2^{t+1}, r}.
 */
PowerSeries lift_identity_rhs(std::vector<QuadForm> const& small_forms, Int delta, Int p, Int r,
                              Int multiplicity, std::size_t N);

/// Exponent t of the p = 2 projection modulus 2^{t+1}.
int two_adic_t(Int delta);

std::vector<IdentityCase> theorem1_cases(Discriminant delta, Int p);
std::vector<IdentityCase> section1_cases();
std::vector<IdentityCase> section2_cases();
std::vector<IdentityCase> section3_worked_cases();
std::vector<IdentityCase> section4_cases();
std::vector<IdentityCase> section5_cases();
std::vector<IdentityCase> structural_cases();

/// The full registry of identities and structural checks.
Registry const& default_registry();

std::vector<VerificationReport> verify_theorem1(Discriminant delta, Int p, std::size_t N);
std::vector<VerificationReport> verify_section2(std::size_t N);
std::vector<VerificationReport> verify_section5(std::size_t N);

struct RunConfig {
    std::optional<std::size_t> N;
    std::string filter = "*";
    unsigned jobs = 0; // 0: hardware concurrency
};

struct RunSummary {
    std::vector<VerificationReport> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t not_applicable = 0;

    bool ok() const { return failed == 0; }
};

RunSummary run_cases(std::vector<IdentityCase const*> const& cases, RunConfig const& config);
RunSummary run_all(RunConfig const& config);

} // namespace qform
