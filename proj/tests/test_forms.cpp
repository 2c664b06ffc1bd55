#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "qform/forms.hpp"
#include "support.hpp"

using namespace qform;

namespace {

Int powmod(Int base, Int e, Int m)
{
    Wide r = 1, b = mod(base, m);
    for (; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
    }
    return static_cast<Int>(r);
}

// Kronecker symbol from the prime factorization of n, Euler's criterion at odd primes.
int kronecker_oracle(Int a, Int n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            result = -result;
    }
    for (auto [p, e] : factorize(n)) {
        int s = 0;
        if (p == 2) {
            Int r = mod(a, 8);
            s = (r % 2 == 0) ? 0 : (r == 1 || r == 7) ? 1 : -1;
        } else {
            Int v = powmod(a, (p - 1) / 2, p);
            s = v == 0 ? 0 : v == 1 ? 1 : -1;
        }
        for (int i = 0; i < e; ++i)
            result *= s;
    }
    return result;
}

std::vector<QuadForm> forms_of(Int d)
{
    return enumerate_reduced_forms(Discriminant(d));
}

} // namespace

TEST_CASE("parse and print")
{
    CHECK(parse_form("1,0,5") == QuadForm{1, 0, 5});
    CHECK(parse_form("(2,-2,3)") == QuadForm{2, -2, 3});
    CHECK(to_string(QuadForm{7, 4, 7}) == "(7,4,7)");
    std::ostringstream os;
    os << QuadForm{3, -2, 8};
    CHECK(os.str() == "(3,-2,8)");
    CHECK_THROWS_AS(parse_form("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_form("a,b,c"), std::invalid_argument);
}

TEST_CASE("discriminant values")
{
    CHECK(Discriminant(-20).value() == -20);
    CHECK_NOTHROW(Discriminant(-3));
    CHECK_THROWS_AS(Discriminant(-21), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant(0), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant(5), std::invalid_argument);
    CHECK(discriminant(QuadForm{2, 2, 23}) == -180);
    CHECK(validate(QuadForm{2, 2, 3}) == Validity{true, true});
    CHECK(validate(QuadForm{2, 0, 2}) == Validity{true, false});
    CHECK_FALSE(validate(QuadForm{1, 0, -1}).positive_definite);
}

TEST_CASE("reduction")
{
    CHECK(reduce({7, 11, 5}) == QuadForm{1, 1, 5});
    CHECK(reduce({2, -2, 3}) == QuadForm{2, 2, 3});
    CHECK(reduce({3, -2, 3}) == QuadForm{3, 2, 3});
    CHECK(reduce({1, 0, 45}) == QuadForm{1, 0, 45});
    CHECK(is_reduced({8, 6, 73}));
    CHECK_FALSE(is_reduced({5, 6, 9}));
    CHECK_FALSE(is_reduced({9, 2, 5}));
    CHECK(reduce({5, 6, 9}) == QuadForm{5, -4, 8});
    CHECK_THROWS_AS(reduce({1, 0, -1}), std::domain_error);
    CHECK_THROWS_AS(reduce({-1, 0, -1}), std::domain_error);
}

TEST_CASE("reduction is idempotent and invariant under SL2(Z)")
{
    std::mt19937_64 rng(20261015);
    for (Int d : {-3, -4, -20, -23, -63, -92, -180, -252, -2300}) {
        for (auto const& f : forms_of(d)) {
            CHECK(is_reduced(f));
            CHECK(reduce(f) == f);
            for (int k = 0; k < 100; ++k) {
                QuadForm g = testing::random_equivalent(f, rng);
                REQUIRE(discriminant(g) == d);
                CHECK(reduce(g) == f);
            }
        }
    }
}

TEST_CASE("enumeration examples")
{
    CHECK(forms_of(-20) == std::vector<QuadForm>{{1, 0, 5}, {2, 2, 3}});
    CHECK(forms_of(-3) == std::vector<QuadForm>{{1, 1, 1}});
    CHECK(forms_of(-92) == std::vector<QuadForm>{{1, 0, 23}, {3, -2, 8}, {3, 2, 8}});
    CHECK(forms_of(-180) == std::vector<QuadForm>{{1, 0, 45}, {2, 2, 23}, {5, 0, 9}, {7, 4, 7}});
    CHECK(forms_of(-2300).size() == 18);
    CHECK(enumerate_reduced_forms(Discriminant(-36), false).size() > forms_of(-36).size());
    CHECK(class_number(Discriminant(-23)) == 3);
    CHECK(class_number(Discriminant(-4)) == 1);
}

TEST_CASE("reduced forms are canonical and distinct for |delta| <= 10^4")
{
    for (Int d = -3; d >= -10000; --d) {
        if (mod(d, 4) > 1)
            continue;
        auto forms = forms_of(d);
        REQUIRE_FALSE(forms.empty());
        for (std::size_t i = 0; i < forms.size(); ++i) {
            REQUIRE(is_reduced(forms[i]));
            REQUIRE(discriminant(forms[i]) == d);
            REQUIRE(validate(forms[i]).primitive);
            if (i > 0)
                REQUIRE(forms[i - 1] < forms[i]);
        }
    }
}

TEST_CASE("class number lift examples")
{
    CHECK(class_number_lift(Discriminant(-92), 5) == 18);
    CHECK(class_number_lift(Discriminant(-20), 3) == 4);
    CHECK(class_number_lift(Discriminant(-4), 2) == 1);
    CHECK(class_number(Discriminant(-16)) == 1);
}

TEST_CASE("class number lift agrees with enumeration for |delta| <= 10^4")
{
    for (Int d = -3; d >= -10000; --d) {
        if (mod(d, 4) > 1)
            continue;
        Discriminant delta(d);
        for (Int p : {2, 3, 5, 7}) {
            INFO("delta = " << d << ", p = " << p);
            REQUIRE(class_number_lift(delta, p) == class_number(Discriminant(d * p * p)));
        }
    }
}

TEST_CASE("composition")
{
    CHECK(compose({2, 2, 3}, {2, 2, 3}) == QuadForm{1, 0, 5});
    CHECK(compose({1, 0, 5}, {2, 2, 3}) == QuadForm{2, 2, 3});
    CHECK(compose({3, 2, 8}, {3, 2, 8}) == QuadForm{3, -2, 8});
    CHECK(compose(compose({3, 2, 8}, {3, 2, 8}), {3, 2, 8}) == QuadForm{1, 0, 23});
    CHECK(compose({3, 2, 8}, QuadForm{3, 2, 8}.opposite()) == QuadForm{1, 0, 23});
    CHECK_THROWS_AS(compose({1, 0, 5}, {1, 0, 23}), std::invalid_argument);
    CHECK_THROWS_AS(compose({2, 0, 2}, {1, 0, 4}), std::invalid_argument);

    // the class group of -2300 is cyclic of order 18
    auto forms = forms_of(-2300);
    QuadForm const e = principal_form(Discriminant(-2300));
    std::size_t max_order = 0;
    for (auto const& f : forms) {
        QuadForm g = f;
        std::size_t order = 1;
        while (g != e) {
            g = compose(g, f);
            ++order;
        }
        max_order = std::max(max_order, order);
    }
    CHECK(max_order == 18);
}

TEST_CASE("principal forms and unit index")
{
    CHECK(principal_form(Discriminant(-20)) == QuadForm{1, 0, 5});
    CHECK(principal_form(Discriminant(-23)) == QuadForm{1, 1, 6});
    CHECK(unit_index(Discriminant(-3)) == 3);
    CHECK(unit_index(Discriminant(-4)) == 2);
    CHECK(unit_index(Discriminant(-12)) == 1);
    CHECK(unit_index(Discriminant(-20)) == 1);
}

TEST_CASE("kronecker symbol examples")
{
    CHECK(kronecker(-15, 2) == 1);
    CHECK(kronecker(-20, 3) == 1);
    CHECK(kronecker(-20, 7) == 1);
    CHECK(kronecker(-20, 5) == 0);
    CHECK(kronecker(-1, 3) == -1);
    CHECK(kronecker(5, -1) == 1);
    CHECK(kronecker(-5, -1) == -1);
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(3, 1) == 1);
}

TEST_CASE("kronecker symbol matches Euler's criterion at odd primes")
{
    for (Int p = 3; p < 200; p += 2) {
        if (!is_prime(p))
            continue;
        for (Int a = -50; a <= 50; ++a) {
            Int v = powmod(a, (p - 1) / 2, p);
            int expected = v == 0 ? 0 : v == 1 ? 1 : -1;
            REQUIRE(kronecker(a, p) == expected);
        }
    }
}

TEST_CASE("kronecker symbol is multiplicative and matches a factorization oracle")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> small(-2000, 2000);
    for (int k = 0; k < 10000; ++k) {
        Int a = small(rng), b = small(rng), n = small(rng);
        if (n == 0)
            continue;
        INFO(a << " " << b << " " << n);
        REQUIRE(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
        REQUIRE(kronecker(a, n) == kronecker_oracle(a, n));
        if (mod(a, 4) <= 1 && a != 0)
            REQUIRE(kronecker(a, b * n) == kronecker(a, b) * kronecker(a, n));
    }
}

TEST_CASE("number theory helpers")
{
    CHECK(is_prime(2));
    CHECK(is_prime(1847));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1849));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK(factorize(2300) == std::vector<std::pair<Int, int>>{{2, 2}, {5, 2}, {23, 1}});
    for (Int d : {-3, -4, -7, -8, -15, -20, -23, -84})
        CHECK(is_fundamental(Discriminant(d)));
    for (Int d : {-12, -16, -36, -63, -180, -252, -2300})
        CHECK_FALSE(is_fundamental(Discriminant(d)));
}

TEST_CASE("discriminant info examples")
{
    auto i3 = discriminant_info(Discriminant(-3));
    CHECK(i3.w == 3);
    CHECK(i3.is_fundamental);
    CHECK(i3.is_idoneal);
    CHECK(i3.class_number == 1);
    CHECK(i3.num_genera == 1);

    auto i36 = discriminant_info(Discriminant(-36));
    CHECK_FALSE(i36.is_fundamental);
    CHECK(i36.is_idoneal);
    CHECK(i36.class_number == 2);
    CHECK(i36.num_genera == 2);

    auto i92 = discriminant_info(Discriminant(-92));
    CHECK(i92.class_number == 3);
    CHECK(i92.num_genera == 1);
    CHECK_FALSE(i92.is_idoneal);
}

TEST_CASE("number of genera divides the class number")
{
    for (Int d = -3; d >= -3000; --d) {
        if (mod(d, 4) > 1)
            continue;
        Discriminant delta(d);
        INFO(d);
        REQUIRE(class_number(delta) % num_genera(delta) == 0);
    }
}
