#include "qform/verify.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace qform {

std::size_t default_truncation(Scale scale)
{
    switch (scale) {
    case Scale::theta:
        return 1000;
    case Scale::eta:
        return 500;
    case Scale::representation:
        return 10000;
    case Scale::structural:
        return 0;
    }
    return 1000;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::not_applicable:
        return "not_applicable";
    }
    return "?";
}

void to_json(nlohmann::json& j, VerificationReport const& r)
{
    j = nlohmann::json::object();
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["N"] = r.N;
    if (r.first_mismatch)
        j["first_mismatch"] = {r.first_mismatch->index, r.first_mismatch->lhs, r.first_mismatch->rhs};
    else
        j["first_mismatch"] = nullptr;
    j["ms"] = r.ms;
    if (!r.error.empty())
        j["error"] = r.error;
}

std::string to_json_line(VerificationReport const& r)
{
    return nlohmann::json(r).dump();
}

VerificationReport run_case(IdentityCase const& c, std::optional<std::size_t> N)
{
    VerificationReport report;
    report.id = c.id;
    report.N = N.value_or(default_truncation(c.scale));
    auto start = std::chrono::steady_clock::now();
    try {
        auto pairs = c.evaluate(report.N);
        if (pairs.empty()) {
            report.status = Status::not_applicable;
        } else {
            report.status = Status::pass;
            for (auto const& pair : pairs) {
                if (auto m = first_mismatch(pair.lhs, pair.rhs)) {
                    report.status = Status::fail;
                    report.first_mismatch = m;
                    break;
                }
            }
        }
    } catch (std::exception const& e) {
        report.status = Status::fail;
        report.error = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    report.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

bool matches_filter(std::string_view id, std::string_view filter)
{
    // iterative glob with single-star backtracking
    std::size_t i = 0, f = 0, star = std::string_view::npos, mark = 0;
    while (i < id.size()) {
        if (f < filter.size() && (filter[f] == '?' || filter[f] == id[i])) {
            ++i;
            ++f;
        } else if (f < filter.size() && filter[f] == '*') {
            star = f++;
            mark = i;
        } else if (star != std::string_view::npos) {
            f = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (f < filter.size() && filter[f] == '*')
        ++f;
    return f == filter.size();
}

void Registry::add(IdentityCase c)
{
    if (find(c.id) != nullptr)
        throw std::invalid_argument("duplicate identity id '" + c.id + "'");
    cases_.push_back(std::move(c));
}

void Registry::append(std::vector<IdentityCase> cases)
{
    for (auto& c : cases)
        add(std::move(c));
}

std::vector<IdentityCase const*> Registry::select(std::string_view filter) const
{
    std::vector<IdentityCase const*> out;
    for (auto const& c : cases_)
        if (matches_filter(c.id, filter))
            out.push_back(&c);
    return out;
}

IdentityCase const* Registry::find(std::string_view id) const
{
    for (auto const& c : cases_)
        if (c.id == id)
            return &c;
    return nullptr;
}

Registry const& default_registry()
{
    static Registry const registry = [] {
        Registry r;
        for (auto [d, p] : idoneal_lift_pairs())
            r.append(theorem1_cases(Discriminant(d), p));
        r.append(section3_worked_cases());
        r.append(section1_cases());
        r.append(section2_cases());
        r.append(section4_cases());
        r.append(section5_cases());
        r.append(structural_cases());
        return r;
    }();
    return registry;
}

namespace {

std::vector<VerificationReport> run_list(std::vector<IdentityCase> const& cases, std::size_t N)
{
    std::vector<VerificationReport> out;
    for (auto const& c : cases)
        out.push_back(run_case(c, N));
    return out;
}

} // namespace

std::vector<VerificationReport> verify_theorem1(Discriminant delta, Int p, std::size_t N)
{
    return run_list(theorem1_cases(delta, p), N);
}

std::vector<VerificationReport> verify_section2(std::size_t N)
{
    return run_list(section2_cases(), N);
}

std::vector<VerificationReport> verify_section5(std::size_t N)
{
    return run_list(section5_cases(), N);
}

RunSummary run_cases(std::vector<IdentityCase const*> const& cases, RunConfig const& config)
{
    RunSummary summary;
    summary.reports.resize(cases.size());
    unsigned jobs = config.jobs != 0 ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, std::max<std::size_t>(cases.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
            summary.reports[i] = run_case(*cases[i], config.N);
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }

    for (auto const& r : summary.reports) {
        switch (r.status) {
        case Status::pass:
            ++summary.passed;
            break;
        case Status::fail:
            ++summary.failed;
            break;
        case Status::not_applicable:
            ++summary.not_applicable;
            break;
        }
    }
    return summary;
}

RunSummary run_all(RunConfig const& config)
{
    return run_cases(default_registry().select(config.filter), config);
}

} // namespace qform
