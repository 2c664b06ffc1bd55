#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "genus_tables.hpp"
#include "qform/genus.hpp"

using namespace qform;
using namespace qform::testing;

namespace {

NamedPartition partition_of(Int d)
{
    return as_named(genus_partition(Discriminant(d)));
}

std::set<std::string> names(std::vector<AssignedCharacter> const& chars)
{
    std::set<std::string> out;
    for (auto const& c : chars)
        out.insert(c.name());
    return out;
}

} // namespace

TEST_CASE("assigned characters")
{
    using AC = AssignedCharacter;
    CHECK(assigned_characters(Discriminant(-20)) == std::vector<AC>{AC::odd_prime(5), AC::minus_one()});
    CHECK(names(assigned_characters(Discriminant(-180))) == std::set<std::string>{"(r/5)", "(-1/r)", "(r/3)"});
    CHECK(assigned_characters(Discriminant(-92)) == std::vector<AC>{AC::odd_prime(23)});
    CHECK(assigned_characters(Discriminant(-3)) == std::vector<AC>{AC::odd_prime(3)});
    CHECK(assigned_characters(Discriminant(-8)) == std::vector<AC>{AC::minus_two()});
    CHECK(assigned_characters(Discriminant(-24)) == std::vector<AC>{AC::odd_prime(3), AC::two()});
    CHECK(names(assigned_characters(Discriminant(-224))) == std::set<std::string>{"(r/7)", "(-1/r)", "(2/r)"});
    CHECK(names(assigned_characters(Discriminant(-112))) == std::set<std::string>{"(r/7)", "(-1/r)"});
    CHECK(AC::minus_one()(3) == -1);
    CHECK(AC::two()(7) == 1);
    CHECK(AC::minus_two()(5) == -1);
    CHECK(AC::odd_prime(5)(9) == 1);
}

TEST_CASE("represented coprime residues")
{
    CHECK(represented_coprime_residues({1, 0, 5}, 20, 10) == std::set<Int>{1, 9});
    CHECK(represented_coprime_residues({2, 2, 3}, 20, 10) == std::set<Int>{3, 7});
    CHECK(represented_coprime_residues({1, 1, 1}, 1, 1) == std::set<Int>{0});
    auto small = represented_coprime_residues({7, 4, 7}, 180, 3);
    auto large = represented_coprime_residues({7, 4, 7}, 180, 12);
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    CHECK(represented_coprime_values({1, 0, 5}, 40, 3) == std::vector<Int>{1, 9, 21});
    CHECK(represented_coprime_values({2, 2, 3}, 40, 2) == std::vector<Int>{3, 7});
}

TEST_CASE("character vectors of single forms")
{
    CHECK(to_string(character_vector({1, 0, 5})) == "<+1,+1>");
    CHECK(to_string(character_vector({2, 2, 3})) == "<-1,-1>");
    CHECK(character_vector({2, 2, 23}) == CharacterVector{-1, -1, -1});
    CHECK(character_vector({8, 6, 9}) == CharacterVector{-1, 1});
    CHECK(character_vector({1, 0, 23}) == CharacterVector{1});
}

TEST_CASE("character vectors do not depend on the represented value, |delta| <= 400")
{
    for (Int d = -3; d >= -400; --d) {
        if (mod(d, 4) > 1)
            continue;
        auto chars = assigned_characters(Discriminant(d));
        for (auto const& f : enumerate_reduced_forms(Discriminant(d))) {
            auto values = represented_coprime_values(f, 2 * d, 5);
            auto first = character_vector_at(chars, values[0]);
            INFO(d << " " << f);
            CHECK(first == character_vector(f));
            for (Int r : values)
                REQUIRE(character_vector_at(chars, r) == first);
        }
    }
}

TEST_CASE("genus tables")
{
    for (auto const& table : reference_tables()) {
        INFO(table.delta);
        CHECK(partition_of(table.delta) == table.genera);
        std::size_t forms = 0;
        for (auto const& g : table.genera)
            forms += g.forms.size();
        CHECK(enumerate_reduced_forms(Discriminant(table.delta)).size() == forms);
    }
}

TEST_CASE("genus labels follow the smallest form")
{
    auto part = genus_partition(Discriminant(-180));
    REQUIRE(part.genera.size() == 4);
    CHECK(part.genera[0].forms.front() == QuadForm{1, 0, 45});
    CHECK(part.genus_of({1, 0, 45}) == 0);
    for (std::size_t i = 1; i < part.genera.size(); ++i)
        CHECK(part.genera[i - 1].forms.front() < part.genera[i].forms.front());
    CHECK_THROWS_AS(part.genus_of({1, 0, 5}), std::out_of_range);
}

TEST_CASE("every genus has the same size and the count matches the character formula")
{
    for (Int d = -3; d >= -2000; --d) {
        if (mod(d, 4) > 1)
            continue;
        Discriminant delta(d);
        auto part = genus_partition(delta);
        INFO(d);
        REQUIRE(static_cast<Int>(part.genera.size()) == num_genera(delta));
        for (auto const& g : part.genera)
            REQUIRE(g.forms.size() == part.genera.front().forms.size());
    }
}

TEST_CASE("genus count ratio")
{
    CHECK(genus_count_ratio(Discriminant(-20), 3) == 2);
    CHECK(genus_count_ratio(Discriminant(-4), 2) == 1);
    CHECK(genus_count_ratio(Discriminant(-92), 5) == 2);
    CHECK_THROWS_AS(genus_count_ratio(Discriminant(-20), 4), std::invalid_argument);
    for (Int d = -3; d >= -1000; --d) {
        if (mod(d, 4) > 1)
            continue;
        Discriminant delta(d);
        for (Int p : {2, 3, 5, 7}) {
            INFO(d << " " << p);
            REQUIRE(genus_count_ratio(delta, p) * num_genera(delta) == num_genera(Discriminant(d * p * p)));
        }
    }
}

TEST_CASE("genus correspondence")
{
    // -180 lifts -20 by 3: (1,0,45) and (5,0,9) over (1,0,5), the others over (2,2,3)
    auto small = genus_partition(Discriminant(-20));
    auto large = genus_partition(Discriminant(-180));
    auto phi = phi_correspondence(small, large, 3);
    REQUIRE(phi.size() == 4);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        QuadForm big = large.genera[i].forms.front();
        QuadForm expected = (big == QuadForm{1, 0, 45} || big == QuadForm{5, 0, 9}) ? QuadForm{1, 0, 5}
                                                                                    : QuadForm{2, 2, 3};
        CHECK(small.genera[phi[i]].forms.front() == expected);
    }
    CHECK(phi_correspondence(Discriminant(-92), 5) == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(phi_correspondence(small, large, 5), std::invalid_argument);
}

TEST_CASE("lifted forms")
{
    auto lift = buell_lift({1, 0, 23}, 5);
    std::sort(lift.begin(), lift.end());
    CHECK(lift == std::vector<QuadForm>{{1, 0, 575}, {25, 0, 23}, {25, 10, 24}, {25, 20, 27}, {25, 30, 32},
                                        {25, 40, 39}});
    auto hex = buell_lift({1, 1, 1}, 2);
    std::sort(hex.begin(), hex.end());
    CHECK(hex == std::vector<QuadForm>{{1, 2, 4}, {4, 2, 1}, {4, 6, 3}});
    for (auto const& f : buell_lift({3, 2, 8}, 5))
        CHECK(discriminant(f) == -2300);
}

TEST_CASE("lifted forms by genus")
{
    auto large = genus_partition(Discriminant(-2300));
    std::size_t const g1 = large.genus_of({1, 0, 575});
    std::size_t const g2 = large.genus_of({23, 0, 25});

    auto a = psi_lift({1, 0, 23}, large, g1, 5).members;
    CHECK(std::set<QuadForm>(a.begin(), a.end()) == join({{{1, 0, 575}}, pm(24, 10, 25)}));

    auto b = psi_lift({3, 2, 8}, large, g2, 5).members;
    CHECK(std::set<QuadForm>(b.begin(), b.end()) == std::set<QuadForm>{{3, -2, 192}, {8, 6, 73}, {13, 12, 47}});

    auto lifted = psi_lift({1, 0, 23}, large, g1, 5);
    CHECK(lifted.source == QuadForm{1, 0, 23});
    CHECK(lifted.p == 5);
}
