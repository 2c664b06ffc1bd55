#include "qform/lambert.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qform {

PowerSeries twisted_divisor_series(CharacterSpec chi1, CharacterSpec chi2, std::size_t N)
{
    std::vector<PowerSeries::Coeff> out(N + 1, 0);
    std::vector<int> second(N + 1, 0);
    for (std::size_t m = 1; m <= N; ++m)
        second[m] = chi2(static_cast<Int>(m));
    for (std::size_t d = 1; d <= N; ++d) {
        int first = chi1(static_cast<Int>(d));
        if (first == 0)
            continue;
        for (std::size_t m = 1; d * m <= N; ++m)
            out[d * m] += first * second[m];
    }
    return PowerSeries(std::move(out));
}

PowerSeries lambert_expand(LambertSpec const& spec, std::size_t N)
{
    std::size_t const b = spec.denominator_multiplier;
    if (b == 0 || (spec.denominator_sign != 1 && spec.denominator_sign != -1))
        throw std::invalid_argument("lambert_expand: invalid denominator");
    for (auto const& term : spec.numerator)
        if (term.multiplier == 0 || term.multiplier > b)
            throw std::invalid_argument("lambert_expand: numerator exponent must lie in [1, b]");

    std::vector<PowerSeries::Coeff> out(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n) {
        int chi = spec.outer(static_cast<Int>(n));
        if (chi == 0)
            continue;
        for (auto const& term : spec.numerator) {
            // q^{jn} / (1 - s q^{bn}) = sum_k s^k q^{n(j + bk)}
            int sign = 1;
            for (std::size_t e = n * term.multiplier; e <= N; e += n * b) {
                out[e] += chi * term.coeff * sign;
                sign *= spec.denominator_sign;
            }
        }
    }
    return PowerSeries(std::move(out));
}

LambertSpec l1_spec(Int delta)
{
    return {{delta, false}, {{1, 1}}, 1, 1};
}

LambertSpec l2_spec(Int a, Int b)
{
    if (b == 0 || b == 1 || b == -1)
        throw std::invalid_argument("l2_spec: |b| must be at least 2");
    auto const span = static_cast<std::size_t>(b < 0 ? -b : b);
    LambertSpec spec{{a, false}, {}, 1, span};
    for (std::size_t m = 1; m < span; ++m) {
        int eps = kronecker(b, static_cast<Int>(m));
        if (eps != 0)
            spec.numerator.push_back({eps, m});
    }
    return spec;
}

namespace {

struct NamedLambert {
    char const* name;
    LambertSpec spec;
};

std::vector<NamedLambert> const& lambert_catalog()
{
    static std::vector<NamedLambert> const catalog{
        // discriminant -15 pieces
        {"P15_tail", {{-15, false}, {{1, 1}}, -1, 1}},
        {"Q15", {{5, false}, {{1, 1}, {1, 2}}, -1, 3}},
        {"g15", {{5, false}, {{1, 1}, {-1, 2}}, 1, 3}},
        // discriminant -36
        {"A36", l1_spec(-4)},
        {"D36", {{12, false}, {{1, 1}, {-1, 2}}, 1, 3}},
        // discriminant -75
        {"f75", l1_spec(-3)},
        {"g75", {{-15, false}, {{1, 1}, {-1, 2}, {-1, 3}, {1, 4}}, 1, 5}},
        // discriminant -180
        {"P180", l1_spec(-20)},
        {"Q180", {{5, true}, {{1, 1}}, -1, 2}},
        {"R180", {{60, false}, {{1, 1}, {-1, 2}}, 1, 3}},
        {"S180", {{15, true}, {{1, 1}, {-1, 5}}, -1, 6}},
        // discriminants -63 and -252
        {"f63", l1_spec(-7)},
        {"g63", {{21, false}, {{1, 1}, {-1, 2}}, 1, 3}},
    };
    return catalog;
}

} // namespace

LambertSpec named_lambert(std::string_view name)
{
    for (auto const& entry : lambert_catalog())
        if (entry.name == name)
            return entry.spec;
    throw std::out_of_range("unknown Lambert series '" + std::string(name) + "'");
}

std::vector<std::string> lambert_names()
{
    std::vector<std::string> out;
    for (auto const& entry : lambert_catalog())
        out.emplace_back(entry.name);
    return out;
}

Int apply_rule(PrimePowerRule rule, int alpha)
{
    bool even = alpha % 2 == 0;
    switch (rule) {
    case PrimePowerRule::one:
        return 1;
    case PrimePowerRule::zero:
        return 0;
    case PrimePowerRule::alternating:
        return even ? 1 : -1;
    case PrimePowerRule::divisor_count:
        return 1 + alpha;
    case PrimePowerRule::signed_divisor_count:
        return even ? 1 + alpha : -(1 + alpha);
    case PrimePowerRule::even_indicator:
        return even ? 1 : 0;
    }
    return 0;
}

namespace {

constexpr std::pair<PrimePowerRule, char const*> rule_names[] = {
    {PrimePowerRule::one, "one"},
    {PrimePowerRule::zero, "zero"},
    {PrimePowerRule::alternating, "alternating"},
    {PrimePowerRule::divisor_count, "divisor_count"},
    {PrimePowerRule::signed_divisor_count, "signed_divisor_count"},
    {PrimePowerRule::even_indicator, "even_indicator"},
};

} // namespace

std::string rule_name(PrimePowerRule rule)
{
    for (auto [r, name] : rule_names)
        if (r == rule)
            return name;
    return "?";
}

PrimePowerRule parse_rule(std::string_view name)
{
    for (auto [r, n] : rule_names)
        if (n == name)
            return r;
    throw std::invalid_argument("unknown prime power rule '" + std::string(name) + "'");
}

PrimePowerRule PrimePowerTable::rule_for(Int p) const
{
    if (auto it = special.find(p); it != special.end())
        return it->second;
    for (auto const& cls : classes)
        if (std::find(cls.residues.begin(), cls.residues.end(), mod(p, cls.modulus)) != cls.residues.end())
            return cls.rule;
    throw std::domain_error("table " + name + " has no rule for the prime " + std::to_string(p));
}

Int multiplicative_eval(PrimePowerTable const& table, Int n)
{
    Int value = 1;
    for (auto [p, alpha] : factorize(n)) {
        value *= apply_rule(table.rule_for(p), alpha);
        if (value == 0)
            break;
    }
    return value;
}

PowerSeries multiplicative_series(PrimePowerTable const& table, std::size_t N)
{
    std::vector<PowerSeries::Coeff> out(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n)
        out[n] = multiplicative_eval(table, static_cast<Int>(n));
    return PowerSeries(std::move(out));
}

namespace {

using R = PrimePowerRule;

std::vector<PrimePowerTable> const& table_catalog()
{
    static std::vector<PrimePowerTable> const catalog{
        {"A36", {{2, R::one}}, {{4, {1}, R::divisor_count}, {4, {3}, R::even_indicator}}},
        {"D36",
         {{2, R::alternating}, {3, R::zero}},
         {{12, {1}, R::divisor_count}, {12, {5}, R::signed_divisor_count}, {12, {7, 11}, R::even_indicator}}},
        {"f75", {{3, R::one}}, {{3, {1}, R::divisor_count}, {3, {2}, R::even_indicator}}},
        {"g75",
         {{3, R::alternating}, {5, R::zero}},
         {{15, {1, 4}, R::divisor_count}, {15, {7, 13}, R::signed_divisor_count}, {3, {2}, R::even_indicator}}},
        {"P180",
         {{2, R::one}, {5, R::one}},
         {{20, {1, 3, 7, 9}, R::divisor_count}, {20, {11, 13, 17, 19}, R::even_indicator}}},
        {"Q180",
         {{2, R::alternating}, {5, R::one}},
         {{20, {1, 9}, R::divisor_count},
          {20, {3, 7}, R::signed_divisor_count},
          {20, {11, 13, 17, 19}, R::even_indicator}}},
        {"R180",
         {{2, R::alternating}, {3, R::zero}, {5, R::alternating}},
         {{60, {1, 7, 43, 49}, R::divisor_count},
          {60, {23, 29, 41, 47}, R::signed_divisor_count},
          {20, {11, 13, 17, 19}, R::even_indicator}}},
        {"S180",
         {{2, R::one}, {3, R::zero}, {5, R::alternating}},
         {{60, {1, 23, 47, 49}, R::divisor_count},
          {60, {7, 29, 41, 43}, R::signed_divisor_count},
          {20, {11, 13, 17, 19}, R::even_indicator}}},
    };
    return catalog;
}

} // namespace

PrimePowerTable named_table(std::string_view name)
{
    for (auto const& t : table_catalog())
        if (t.name == name)
            return t;
    throw std::out_of_range("unknown prime power table '" + std::string(name) + "'");
}

std::vector<std::string> table_names()
{
    std::vector<std::string> out;
    for (auto const& t : table_catalog())
        out.push_back(t.name);
    return out;
}

void to_json(nlohmann::json& j, CharacterSpec const& c)
{
    j = {{"top", c.top}, {"flipped", c.flipped}};
}

void from_json(nlohmann::json const& j, CharacterSpec& c)
{
    c.top = j.at("top").get<Int>();
    c.flipped = j.value("flipped", false);
}

void to_json(nlohmann::json& j, LambertSpec const& s)
{
    nlohmann::json numerator = nlohmann::json::array();
    for (auto const& t : s.numerator)
        numerator.push_back({t.coeff, t.multiplier});
    j = {{"character", s.outer},
         {"numerator", numerator},
         {"denominator", {{"sign", s.denominator_sign}, {"multiplier", s.denominator_multiplier}}}};
}

void from_json(nlohmann::json const& j, LambertSpec& s)
{
    s.outer = j.at("character").get<CharacterSpec>();
    s.numerator.clear();
    for (auto const& t : j.at("numerator"))
        s.numerator.push_back({t.at(0).get<int>(), t.at(1).get<std::size_t>()});
    auto const& den = j.at("denominator");
    s.denominator_sign = den.at("sign").get<int>();
    s.denominator_multiplier = den.at("multiplier").get<std::size_t>();
}

void to_json(nlohmann::json& j, PrimePowerTable const& t)
{
    nlohmann::json special = nlohmann::json::object();
    for (auto const& [p, rule] : t.special)
        special[std::to_string(p)] = rule_name(rule);
    nlohmann::json classes = nlohmann::json::array();
    for (auto const& cls : t.classes)
        classes.push_back({{"modulus", cls.modulus}, {"residues", cls.residues}, {"rule", rule_name(cls.rule)}});
    j = {{"name", t.name}, {"special", special}, {"classes", classes}};
}

void from_json(nlohmann::json const& j, PrimePowerTable& t)
{
    t.name = j.value("name", std::string());
    t.special.clear();
    if (j.contains("special"))
        for (auto const& [key, value] : j.at("special").items())
            t.special[std::stoll(key)] = parse_rule(value.get<std::string>());
    t.classes.clear();
    for (auto const& cls : j.at("classes")) {
        CongruenceRule rule{cls.at("modulus").get<Int>(), cls.at("residues").get<std::vector<Int>>(),
                            parse_rule(cls.at("rule").get<std::string>())};
        if (rule.modulus < 1)
            throw std::invalid_argument("prime power table: modulus must be positive");
        t.classes.push_back(std::move(rule));
    }
}

} // namespace qform
