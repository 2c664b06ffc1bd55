#include "qform/genus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qform/series.hpp"

namespace qform {

int AssignedCharacter::operator()(Int r) const
{
    switch (kind) {
    case Kind::odd_prime:
        return kronecker(r, p);
    case Kind::minus_one:
        return kronecker(-1, r);
    case Kind::two:
        return kronecker(2, r);
    case Kind::minus_two:
        return kronecker(-2, r);
    }
    return 0;
}

std::string AssignedCharacter::name() const
{
    switch (kind) {
    case Kind::odd_prime:
        return "(r/" + std::to_string(p) + ")";
    case Kind::minus_one:
        return "(-1/r)";
    case Kind::two:
        return "(2/r)";
    case Kind::minus_two:
        return "(-2/r)";
    }
    return "?";
}

std::string to_string(CharacterVector const& v)
{
    std::string out = "<";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ",";
        out += v[i] > 0 ? "+1" : "-1";
    }
    return out + ">";
}

std::size_t GenusPartition::genus_of(QuadForm const& f) const
{
    for (std::size_t i = 0; i < genera.size(); ++i)
        if (std::find(genera[i].forms.begin(), genera[i].forms.end(), f) != genera[i].forms.end())
            return i;
    throw std::out_of_range("form " + to_string(f) + " is not a reduced primitive class of " +
                            std::to_string(delta.value()));
}

std::vector<AssignedCharacter> assigned_characters(Discriminant delta)
{
    Int const d = delta.value();
    std::vector<AssignedCharacter> out;
    for (auto [p, e] : factorize(-d))
        if (p != 2)
            out.push_back(AssignedCharacter::odd_prime(p));
    if (mod(d, 4) == 0) {
        Int n = -d / 4;
        switch (mod(n, 8)) {
        case 1:
        case 5:
        case 4:
            out.push_back(AssignedCharacter::minus_one());
            break;
        case 2:
            out.push_back(AssignedCharacter::minus_two());
            break;
        case 6:
            out.push_back(AssignedCharacter::two());
            break;
        case 0:
            out.push_back(AssignedCharacter::minus_one());
            out.push_back(AssignedCharacter::two());
            break;
        default: // n = 3 mod 4: no 2-adic character
            break;
        }
    }
    return out;
}

std::set<Int> represented_coprime_residues(QuadForm const& f, Int modulus, Int search_bound)
{
    if (modulus < 1)
        throw std::invalid_argument("represented_coprime_residues: modulus must be positive");
    std::set<Int> out;
    if (modulus == 1) {
        out.insert(0);
        return out;
    }
    // f(x, y) mod m depends only on x, y mod m, so a window of width m is complete
    Int lo = -search_bound, hi = search_bound;
    if (2 * search_bound + 1 >= modulus) {
        lo = 0;
        hi = modulus - 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
    auto reduce_mod = [modulus](Wide v) {
        Wide r = v % modulus;
        return static_cast<Int>(r < 0 ? r + modulus : r);
    };
    // f(-x, -y) = f(x, y), so half of the x window suffices when it is complete
    Int const x_hi = (lo == 0) ? modulus / 2 : hi;
    Int const two_c = reduce_mod(2 * Wide(f.c));
    for (Int x = lo; x <= x_hi; ++x) {
        // walk y upward using f(x, y + 1) - f(x, y) = b x + c (2y + 1)
        Int v = reduce_mod(Wide(f.a) * x * x + Wide(f.b) * x * lo + Wide(f.c) * lo * lo);
        Int step = reduce_mod(Wide(f.b) * x + Wide(f.c) * (2 * Wide(lo) + 1));
        for (Int y = lo; y <= hi; ++y) {
            seen[static_cast<std::size_t>(v)] = 1;
            v += step;
            if (v >= modulus)
                v -= modulus;
            step += two_c;
            if (step >= modulus)
                step -= modulus;
        }
    }
    for (Int r = 0; r < modulus; ++r)
        if (seen[static_cast<std::size_t>(r)] && std::gcd(r, modulus) == 1)
            out.insert(r);
    return out;
}

std::vector<Int> represented_coprime_values(QuadForm const& f, Int coprime_to, std::size_t count)
{
    constexpr std::size_t cap = std::size_t(1) << 22;
    for (std::size_t bound = 64; bound <= cap; bound *= 2) {
        auto theta = theta_series(f, bound);
        std::vector<Int> found;
        for (std::size_t n = 1; n <= bound && found.size() < count; ++n)
            if (theta[n] != 0 && std::gcd(static_cast<Int>(n), coprime_to) == 1)
                found.push_back(static_cast<Int>(n));
        if (found.size() == count)
            return found;
    }
    throw std::runtime_error("no represented value of " + to_string(f) + " coprime to " +
                             std::to_string(coprime_to) + " within the search bound");
}

CharacterVector character_vector_at(std::vector<AssignedCharacter> const& chars, Int r)
{
    CharacterVector out;
    out.reserve(chars.size());
    for (auto const& chi : chars)
        out.push_back(chi(r));
    return out;
}

CharacterVector character_vector(QuadForm const& f)
{
    Discriminant delta(discriminant(f));
    if (!validate(f).primitive)
        throw std::invalid_argument("character_vector: form " + to_string(f) + " is not primitive");
    Int r = represented_coprime_values(f, 2 * delta.value(), 1).front();
    return character_vector_at(assigned_characters(delta), r);
}

GenusPartition genus_partition(Discriminant delta)
{
    GenusPartition out{delta, assigned_characters(delta), {}};
    for (auto const& f : enumerate_reduced_forms(delta, true)) {
        Int r = represented_coprime_values(f, 2 * delta.value(), 1).front();
        auto vec = character_vector_at(out.characters, r);
        auto it = std::find_if(out.genera.begin(), out.genera.end(),
                               [&](Genus const& g) { return g.characters == vec; });
        if (it == out.genera.end())
            out.genera.push_back({vec, {f}});
        else
            it->forms.push_back(f);
    }
    return out;
}

int genus_count_ratio(Discriminant delta, Int p)
{
    if (!is_prime(p))
        throw std::invalid_argument("genus_count_ratio: " + std::to_string(p) + " is not prime");
    Int const d = delta.value();
    if (p > 2)
        return d % p == 0 ? 1 : 2;
    if (mod(d, 2) == 1)
        return 1;
    if (d == -4)
        return 1;
    Int r16 = mod(d, 16);
    if (r16 == 4 || r16 == 8)
        return 2;
    if (r16 == 12)
        return 1;
    return mod(d, 32) == 0 ? 1 : 2;
}

std::vector<std::size_t> phi_correspondence(GenusPartition const& small, GenusPartition const& large, Int p)
{
    if (large.delta.value() != small.delta.value() * p * p)
        throw std::invalid_argument("phi_correspondence: discriminants do not differ by p^2");
    std::vector<std::size_t> out;
    for (auto const& G : large.genera) {
        Int r = represented_coprime_values(G.forms.front(), 2 * large.delta.value(), 1).front();
        auto vec = character_vector_at(small.characters, r);
        auto it = std::find_if(small.genera.begin(), small.genera.end(),
                               [&](Genus const& g) { return g.characters == vec; });
        if (it == small.genera.end())
            throw std::runtime_error("phi_correspondence: no genus of " + std::to_string(small.delta.value()) +
                                     " matches " + to_string(vec));
        out.push_back(static_cast<std::size_t>(it - small.genera.begin()));
    }
    return out;
}

std::vector<std::size_t> phi_correspondence(Discriminant delta, Int p)
{
    return phi_correspondence(genus_partition(delta), genus_partition(Discriminant(delta.value() * p * p)), p);
}

std::vector<QuadForm> buell_lift(QuadForm const& f, Int p)
{
    if (!validate(f).primitive)
        throw std::invalid_argument("buell_lift: form " + to_string(f) + " is not primitive");
    std::vector<QuadForm> out;
    out.push_back({f.a, f.b * p, f.c * p * p});
    for (Int h = 0; h < p; ++h)
        out.push_back({f.a * p * p, p * f.b + 2 * f.a * h * p, f.a * h * h + f.b * h + f.c});
    return out;
}

LiftSet psi_lift(QuadForm const& f, GenusPartition const& large, std::size_t genus_index, Int p)
{
    LiftSet out{f, p, {}};
    for (auto const& raw : buell_lift(f, p)) {
        if (!validate(raw).primitive)
            continue;
        auto reduced = reduce(raw);
        if (large.genus_of(reduced) == genus_index)
            out.members.push_back(reduced);
    }
    std::sort(out.members.begin(), out.members.end());
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

} // namespace qform
