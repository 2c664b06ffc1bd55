#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qform/forms.hpp"

namespace qform {

/*
 * One assigned character of a discriminant. odd_prime(p) is r -> (r|p);
 * the 2-adic ones are r -> (-1|r), (2|r) and (-2|r). All are evaluated on
 * integers coprime to 2*delta, where they take values +1 or -1.
 */
struct AssignedCharacter {
    enum class Kind { odd_prime, minus_one, two, minus_two };

    Kind kind = Kind::odd_prime;
    Int p = 0;

    static AssignedCharacter odd_prime(Int p) { return {Kind::odd_prime, p}; }
    static AssignedCharacter minus_one() { return {Kind::minus_one, 0}; }
    static AssignedCharacter two() { return {Kind::two, 0}; }
    static AssignedCharacter minus_two() { return {Kind::minus_two, 0}; }

    int operator()(Int r) const;
    std::string name() const;

    friend auto operator<=>(AssignedCharacter const&, AssignedCharacter const&) = default;
};

using CharacterVector = std::vector<int>;

std::string to_string(CharacterVector const& v);

struct Genus {
    CharacterVector characters;
    std::vector<QuadForm> forms;
};

/// Classes of delta grouped by character vector; genera ordered by their smallest form.
struct GenusPartition {
    Discriminant delta;
    std::vector<AssignedCharacter> characters;
    std::vector<Genus> genera;

    /// Index of the genus containing the reduced form f; throws std::out_of_range.
    std::size_t genus_of(QuadForm const& f) const;
};

/// Odd primes dividing delta in increasing order, then the 2-adic character if any.
std::vector<AssignedCharacter> assigned_characters(Discriminant delta);

/// { f(x,y) mod modulus : |x|,|y| <= search_bound, gcd(f(x,y), modulus) = 1 }.
std::set<Int> represented_coprime_residues(QuadForm const& f, Int modulus, Int search_bound);

/*
 * The smallest `count` positive integers represented by f and coprime to
 * `coprime_to`, in increasing order. The value bound doubles from 64 until
 * enough are found; throws std::runtime_error past the cap.
 */
std::vector<Int> represented_coprime_values(QuadForm const& f, Int coprime_to, std::size_t count = 1);

/// Assigned characters of the form's discriminant at its smallest represented value coprime to 2*delta.
CharacterVector character_vector(QuadForm const& f);

/// The same characters evaluated at a given value r coprime to 2*delta.
CharacterVector character_vector_at(std::vector<AssignedCharacter> const& chars, Int r);

GenusPartition genus_partition(Discriminant delta);

/// v(delta p^2) / v(delta) read from the closed-form table.
int genus_count_ratio(Discriminant delta, Int p);

/*
 * Phi_p: for each genus G of delta p^2 (by index in its partition), the index
 * of the genus g of delta whose assigned characters agree with G on a value
 * coprime to 2 delta p^2 represented by G.
 */
std::vector<std::size_t> phi_correspondence(GenusPartition const& small, GenusPartition const& large, Int p);
std::vector<std::size_t> phi_correspondence(Discriminant delta, Int p);

/// Raw (unreduced) members of the lift {(a, bp, cp^2)} u {(ap^2, pb + 2ahp, ah^2 + bh + c)}.
std::vector<QuadForm> buell_lift(QuadForm const& f, Int p);

struct LiftSet {
    QuadForm source;
    Int p = 0;
    std::vector<QuadForm> members;
};

/// Reduced primitive members of buell_lift(f, p) lying in genus `genus_index` of `large`.
LiftSet psi_lift(QuadForm const& f, GenusPartition const& large, std::size_t genus_index, Int p);

} // namespace qform
