#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qform/forms.hpp"
#include "qform/genus.hpp"
#include "qform/lambert.hpp"
#include "qform/series.hpp"
#include "qform/verify.hpp"

namespace qform::cli {

namespace {

using nlohmann::json;

enum class Format { json, csv, pretty };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(std::string const& text, Format fallback)
{
    if (text.empty())
        return fallback;
    if (text == "json")
        return Format::json;
    if (text == "csv")
        return Format::csv;
    if (text == "pretty")
        return Format::pretty;
    throw UsageError("unknown format '" + text + "' (expected json, csv or pretty)");
}

std::size_t parse_truncation(std::string const& text, char const* source)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used != text.size() || value < 1)
        throw UsageError(std::string(source) + " must be a positive integer, got '" + text + "'");
    return static_cast<std::size_t>(value);
}

/// -N when given, else QFORM_N when set, else nothing.
std::optional<std::size_t> truncation(std::optional<long long> flag)
{
    if (flag) {
        if (*flag < 1)
            throw UsageError("-N must be a positive integer");
        return static_cast<std::size_t>(*flag);
    }
    if (char const* env = std::getenv("QFORM_N"); env != nullptr && *env != '\0')
        return parse_truncation(env, "QFORM_N");
    return std::nullopt;
}

QuadForm form_argument(std::string const& text)
{
    try {
        return parse_form(text);
    } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
    }
}

QuadForm definite_form(std::string const& text)
{
    QuadForm f = form_argument(text);
    if (!validate(f).positive_definite)
        throw UsageError("form " + to_string(f) + " is not positive definite");
    return f;
}

json form_json(QuadForm const& f)
{
    return json::array({f.a, f.b, f.c});
}

void print_series(std::ostream& out, Format format, PowerSeries const& s, json header)
{
    switch (format) {
    case Format::json: {
        header["N"] = s.truncation();
        header["coeffs"] = std::vector<PowerSeries::Coeff>(s.coeffs().begin(), s.coeffs().end());
        out << header.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "n,coeff\n";
        for (std::size_t n = 0; n <= s.truncation(); ++n)
            out << n << "," << s[n] << "\n";
        break;
    case Format::pretty:
        out << "[";
        for (std::size_t n = 0; n <= s.truncation(); ++n)
            out << (n ? "," : "") << s[n];
        out << "]\n";
        break;
    }
}

void cmd_classgroup(std::ostream& out, Format format, Int d)
{
    Discriminant delta(d);
    auto info = discriminant_info(delta);
    auto partition = genus_partition(delta);

    std::vector<std::string> names;
    for (auto const& c : partition.characters)
        names.push_back(c.name());

    switch (format) {
    case Format::json: {
        json genera = json::array();
        for (std::size_t i = 0; i < partition.genera.size(); ++i) {
            json forms = json::array();
            for (auto const& f : partition.genera[i].forms)
                forms.push_back(form_json(f));
            genera.push_back({{"label", "G" + std::to_string(i + 1)},
                              {"characters", partition.genera[i].characters},
                              {"forms", forms}});
        }
        json doc{{"delta", d},
                 {"h", info.class_number},
                 {"v", info.num_genera},
                 {"w", info.w},
                 {"fundamental", info.is_fundamental},
                 {"idoneal", info.is_idoneal},
                 {"characters", names},
                 {"genera", genera}};
        out << doc.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "a,b,c,genus";
        for (auto const& n : names)
            out << "," << n;
        out << "\n";
        for (std::size_t i = 0; i < partition.genera.size(); ++i) {
            for (auto const& f : partition.genera[i].forms) {
                out << f.a << "," << f.b << "," << f.c << ",G" << i + 1;
                for (int v : partition.genera[i].characters)
                    out << "," << (v > 0 ? "+1" : "-1");
                out << "\n";
            }
        }
        break;
    case Format::pretty: {
        out << "discriminant " << d << ": h = " << info.class_number << ", v = " << info.num_genera
            << ", w = " << info.w << ", " << (info.is_fundamental ? "fundamental" : "non-fundamental") << ", "
            << (info.is_idoneal ? "idoneal" : "not idoneal") << "\n";
        out << "characters:";
        for (auto const& n : names)
            out << " " << n;
        if (names.empty())
            out << " none";
        out << "\n";
        std::size_t width = 4;
        for (auto const& g : partition.genera)
            for (auto const& f : g.forms)
                width = std::max(width, to_string(f).size());
        out << std::left << std::setw(static_cast<int>(width) + 2) << "form" << std::setw(7) << "genus"
            << "characters\n";
        for (std::size_t i = 0; i < partition.genera.size(); ++i)
            for (auto const& f : partition.genera[i].forms)
                out << std::setw(static_cast<int>(width) + 2) << to_string(f) << std::setw(7)
                    << ("G" + std::to_string(i + 1)) << to_string(partition.genera[i].characters) << "\n";
        break;
    }
    }
}

void print_form_result(std::ostream& out, Format format, std::string const& key, QuadForm const& f, json header)
{
    switch (format) {
    case Format::json:
        header[key] = form_json(f);
        out << header.dump() << "\n";
        break;
    case Format::csv:
        out << "a,b,c\n" << f.a << "," << f.b << "," << f.c << "\n";
        break;
    case Format::pretty:
        out << to_string(f) << "\n";
        break;
    }
}

void cmd_repcount(std::ostream& out, Format format, Int d, QuadForm const& f, Int n)
{
    Discriminant delta(d);
    if (discriminant(f) != d)
        throw UsageError("form " + to_string(f) + " has discriminant " + std::to_string(discriminant(f)) + ", not " +
                         std::to_string(d));
    if (n < 1)
        throw UsageError("n must be positive");
    Int enumerated = theta_series(f, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    auto forms = rep_formula_forms(d);
    std::optional<Int> formula;
    if (std::find(forms.begin(), forms.end(), f) != forms.end())
        formula = rep_formula(d, f, n);

    switch (format) {
    case Format::json: {
        json doc{{"delta", d}, {"form", form_json(f)}, {"n", n}, {"enumeration", enumerated}};
        doc["formula"] = formula ? json(*formula) : json(nullptr);
        out << doc.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "n,enumeration,formula\n" << n << "," << enumerated << ",";
        if (formula)
            out << *formula;
        out << "\n";
        break;
    case Format::pretty:
        if (formula)
            out << "formula " << *formula << "\nenumeration " << enumerated << "\n";
        else
            out << enumerated << "\n";
        break;
    }
}

int cmd_verify(std::ostream& out, std::ostream& err, Format format, std::vector<std::string> patterns,
               std::optional<std::size_t> N, unsigned jobs)
{
    if (patterns.empty())
        patterns.push_back("*");
    auto const& registry = default_registry();
    std::vector<IdentityCase const*> selected;
    for (auto const& c : registry.cases()) {
        for (auto const& pattern : patterns) {
            if (matches_filter(c.id, pattern)) {
                selected.push_back(&c);
                break;
            }
        }
    }
    if (selected.empty()) {
        err << "qform verify: no registered case matches";
        for (auto const& p : patterns)
            err << " '" << p << "'";
        err << "\n";
        return usage;
    }

    RunConfig config;
    config.N = N;
    config.jobs = jobs;
    auto summary = run_cases(selected, config);

    if (format == Format::csv)
        out << "id,status,N,index,lhs,rhs,ms\n";
    for (auto const& r : summary.reports) {
        switch (format) {
        case Format::json:
            out << to_json_line(r) << "\n";
            break;
        case Format::csv:
            out << r.id << "," << to_string(r.status) << "," << r.N << ",";
            if (r.first_mismatch)
                out << r.first_mismatch->index << "," << r.first_mismatch->lhs << "," << r.first_mismatch->rhs;
            else
                out << ",,";
            out << "," << r.ms << "\n";
            break;
        case Format::pretty:
            out << std::left << std::setw(15) << to_string(r.status) << r.id;
            if (r.first_mismatch)
                out << "  first mismatch at q^" << r.first_mismatch->index << ": " << r.first_mismatch->lhs
                    << " != " << r.first_mismatch->rhs;
            if (!r.error.empty())
                out << "  error: " << r.error;
            out << "\n";
            break;
        }
    }
    err << summary.reports.size() << " cases: " << summary.passed << " passed, " << summary.failed << " failed, "
        << summary.not_applicable << " not applicable\n";
    return summary.ok() ? ok : failure;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Binary quadratic forms, theta series and identity verification", "qform"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<long long> n_flag;
    std::string format_text;
    app.add_option("-N,--truncation", n_flag, "Series truncation (default from QFORM_N)");
    app.add_option("--format", format_text, "Output format: json, csv or pretty");

    long long delta = 0;
    auto* classgroup = app.add_subcommand("classgroup", "Reduced forms, genera and characters of a discriminant");
    classgroup->add_option("delta", delta, "Negative discriminant (use -- before it if needed)")->required();

    std::string form_a, form_b;
    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a positive definite form");
    reduce_cmd->add_option("form", form_a, "Form as a,b,c")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Gauss composition of two primitive forms");
    compose_cmd->add_option("f", form_a, "First form as a,b,c")->required();
    compose_cmd->add_option("g", form_b, "Second form as a,b,c")->required();

    auto* theta_cmd = app.add_subcommand("theta", "Theta series coefficients through q^N");
    theta_cmd->add_option("form", form_a, "Form as a,b,c")->required();

    long long rep_n = 0;
    auto* repcount = app.add_subcommand("repcount", "Number of representations of n by a form");
    repcount->add_option("delta", delta, "Discriminant of the form")->required();
    repcount->add_option("form", form_a, "Form as a,b,c")->required();
    repcount->add_option("n", rep_n, "Represented integer")->required();

    std::string lambert_name;
    bool list_lambert = false;
    auto* lambert_cmd = app.add_subcommand("lambert", "Expansion of a built-in Lambert series");
    lambert_cmd->add_option("name", lambert_name, "Series name (see --list)");
    lambert_cmd->add_flag("--list", list_lambert, "List the built-in series");

    std::vector<std::string> patterns;
    std::vector<std::string> filter_patterns;
    bool verify_all = false;
    unsigned jobs = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run registered identities and structural checks");
    verify_cmd->add_option("cases", patterns, "Case ids or glob patterns");
    verify_cmd->add_option("--filter", filter_patterns, "Glob over case ids ('*' spans '/')");
    verify_cmd->add_flag("--all", verify_all, "Select every registered case");
    verify_cmd->add_option("-j,--jobs", jobs, "Worker threads (0: hardware concurrency)");

    std::vector<char const*> argv{"qform"};
    for (auto const& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return ok;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (CLI::ParseError const& e) {
        err << "qform: " << e.what() << "\n";
        return usage;
    }

    try {
        auto N = truncation(n_flag);
        if (*classgroup) {
            cmd_classgroup(out, parse_format(format_text, Format::pretty), delta);
        } else if (*reduce_cmd) {
            QuadForm f = definite_form(form_a);
            print_form_result(out, parse_format(format_text, Format::pretty), "reduced", reduce(f),
                              {{"input", form_json(f)}});
        } else if (*compose_cmd) {
            QuadForm f = definite_form(form_a), g = definite_form(form_b);
            if (discriminant(f) != discriminant(g))
                throw UsageError("forms have different discriminants");
            if (!validate(f).primitive || !validate(g).primitive)
                throw UsageError("composition needs primitive forms");
            print_form_result(out, parse_format(format_text, Format::pretty), "composite", compose(f, g),
                              {{"f", form_json(f)}, {"g", form_json(g)}});
        } else if (*theta_cmd) {
            QuadForm f = definite_form(form_a);
            print_series(out, parse_format(format_text, Format::pretty), theta_series(f, N.value_or(10)),
                         {{"form", form_json(f)}});
        } else if (*repcount) {
            cmd_repcount(out, parse_format(format_text, Format::pretty), delta, definite_form(form_a), rep_n);
        } else if (*lambert_cmd) {
            Format format = parse_format(format_text, Format::pretty);
            if (list_lambert) {
                for (auto const& name : lambert_names())
                    out << name << "\n";
            } else {
                if (lambert_name.empty())
                    throw UsageError("lambert needs a series name or --list");
                LambertSpec spec;
                try {
                    spec = named_lambert(lambert_name);
                } catch (std::out_of_range const& e) {
                    throw UsageError(e.what());
                }
                print_series(out, format, lambert_expand(spec, N.value_or(10)),
                             {{"name", lambert_name}, {"spec", spec}});
            }
        } else if (*verify_cmd) {
            patterns.insert(patterns.end(), filter_patterns.begin(), filter_patterns.end());
            if (verify_all)
                patterns.push_back("*");
            return cmd_verify(out, err, parse_format(format_text, Format::json), patterns, N, jobs);
        }
    } catch (UsageError const& e) {
        err << "qform: " << e.what() << "\n";
        return usage;
    } catch (std::invalid_argument const& e) {
        err << "qform: " << e.what() << "\n";
        return usage;
    } catch (std::domain_error const& e) {
        err << "qform: " << e.what() << "\n";
        return usage;
    } catch (std::exception const& e) {
        err << "qform: " << e.what() << "\n";
        return failure;
    }
    return ok;
}

} // namespace qform::cli
