// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "genus_tables.hpp"
#include "qform/verify.hpp"

using namespace qform;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
};

/// Runs every case matching one of the patterns at its default truncation.
Outcome run_patterns(std::vector<std::string> const& patterns, std::optional<std::size_t> N = std::nullopt)
{
    Outcome out;
    std::vector<IdentityCase const*> cases;
    for (auto const& pattern : patterns) {
        auto selected = default_registry().select(pattern);
        if (selected.empty()) {
            out.ok = false;
            out.notes.push_back("no cases match " + pattern);
        }
        cases.insert(cases.end(), selected.begin(), selected.end());
    }
    RunConfig config;
    config.N = N;
    auto summary = run_cases(cases, config);
    for (auto const& r : summary.reports)
        if (r.status == Status::fail) {
            out.ok = false;
            out.notes.push_back(to_json_line(r));
        }
    out.notes.push_back(std::to_string(summary.passed) + " passed, " + std::to_string(summary.not_applicable) +
                        " not applicable, " + std::to_string(summary.failed) + " failed");
    return out;
}

Outcome class_group_tables()
{
    Outcome out;
    for (auto const& table : testing::reference_tables()) {
        Discriminant delta(table.delta);
        std::size_t forms = 0;
        for (auto const& g : table.genera)
            forms += g.forms.size();
        bool same = testing::as_named(genus_partition(delta)) == table.genera &&
                    enumerate_reduced_forms(delta).size() == forms;
        if (!same) {
            out.ok = false;
            out.notes.push_back("table mismatch for " + std::to_string(table.delta));
        }
    }
    return out;
}

struct Criterion {
    int number;
    char const* title;
    double limit_seconds;
    std::function<Outcome()> check;
};

} // namespace

int main()
{
    std::vector<Criterion> const criteria{
        {1, "class-group tables", 1, class_group_tables},
        {2, "class-number lift", 1, [] { return run_patterns({"struct/class-number-lift"}); }},
        {3, "genus-count ratio", 30, [] { return run_patterns({"struct/genus-count-ratio"}); }},
        {4, "lifting identities", 120,
         [] {
             return run_patterns({"thm1/*", "sec4/36o", "sec4/36oo", "sec4/71w", "sec4/71ww"});
         }},
        {5, "eta and theta basics", 30, [] { return run_patterns({"sec2/*"}, 500); }},
        {6, "representation formulas", 120,
         [] {
             return run_patterns(
                 {"sec4/h", "sec4/h2", "sec4/h-cor", "sec4/h5h", "sec4/h5hh", "sec4/h5-cor", "sec4/h6h*"});
         }},
        {7, "genus lifts", 120, [] { return run_patterns({"sec5/*", "struct/psi-partition/*"}); }},
        {8, "oracles", 120,
         [] {
             return run_patterns({"struct/genus-residue-oracle", "struct/kronecker-euler",
                                  "struct/composition-axioms"});
         }},
    };

    bool all = true;
    for (auto const& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (std::exception const& e) {
            outcome.ok = false;
            outcome.notes.push_back(std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.limit_seconds;
        bool pass = outcome.ok && in_time;
        all = all && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
                  << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0)
                  << c.limit_seconds << " s)";
        if (!in_time)
            std::cout << " too slow";
        std::cout << '\n';
        for (auto const& note : outcome.notes)
            std::cout << "    " << note << '\n';
    }
    return all ? 0 : 1;
}
