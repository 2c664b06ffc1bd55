// Closed product formulas for the number of representations by the forms of
// discriminants -36, -75 and -180.

#include <algorithm>
#include <stdexcept>

#include "qform/lambert.hpp"

namespace qform {

namespace {

int sign_pow(Int e)
{
    return e % 2 == 0 ? 1 : -1;
}

bool in(Int p, Int m, std::initializer_list<Int> residues)
{
    Int r = mod(p, m);
    for (Int x : residues)
        if (x == r)
            return true;
    return false;
}

Int count_minus36(QuadForm const& f, Int n)
{
    Int a = 0, b = 0, t = 0, lambda = 1;
    for (auto [p, e] : factorize(n)) {
        if (p == 2)
            a = e;
        else if (p == 3)
            b = e;
        else if (mod(p, 4) == 1)
            lambda *= 1 + e;
        else
            lambda *= (e % 2 == 0) ? 1 : 0;
        if (mod(p, 12) == 5)
            t += e;
    }
    int side = (f == QuadForm{1, 0, 9}) ? 1 : -1;
    if (b == 0)
        return (1 + side * sign_pow(a + t)) * lambda;
    if (b % 2 == 1)
        return 0;
    return 4 * lambda;
}

Int count_minus75(QuadForm const& f, Int n)
{
    Int a = 0, b = 0, t = 0, lambda = 1;
    for (auto [p, e] : factorize(n)) {
        if (p == 3)
            a = e;
        else if (p == 5)
            b = e;
        else if (mod(p, 3) == 1)
            lambda *= 1 + e;
        else
            lambda *= (e % 2 == 0) ? 1 : 0;
        if (in(p, 15, {7, 13}))
            t += e;
    }
    int side = (f == QuadForm{1, 1, 19}) ? 1 : -1;
    if (b == 0)
        return (1 + side * sign_pow(a + t)) * lambda;
    if (b % 2 == 1)
        return 0;
    return 6 * lambda;
}

Int count_minus180(QuadForm const& f, Int n)
{
    Int a = 0, b = 0, c = 0, t1 = 0, t2 = 0, t3 = 0, lambda = 1;
    for (auto [p, e] : factorize(n)) {
        if (p == 2)
            a = e;
        else if (p == 3)
            b = e;
        else if (p == 5)
            c = e;
        else if (in(p, 20, {1, 3, 7, 9}))
            lambda *= 1 + e;
        else
            lambda *= (e % 2 == 0) ? 1 : 0;
        if (in(p, 20, {3, 7}))
            t1 += e;
        if (in(p, 60, {23, 29, 41, 47}))
            t2 += e;
        if (in(p, 60, {7, 29, 41, 43}))
            t3 += e;
    }
    // signs of the three non-principal terms for each of the four forms
    int s1 = 1, s2 = 1, s3 = 1;
    if (f == QuadForm{1, 0, 45}) {
    } else if (f == QuadForm{5, 0, 9}) {
        s2 = s3 = -1;
    } else if (f == QuadForm{7, 4, 7}) {
        s1 = s3 = -1;
    } else {
        s1 = s2 = -1;
    }
    int e1 = sign_pow(a + t1), e2 = sign_pow(a + c + t2), e3 = sign_pow(c + t3);
    if (b == 0)
        return (1 + s1 * e1 + s2 * e2 + s3 * e3) * lambda / 2;
    return (b - 1) * (1 + s1 * e1) * lambda;
}

} // namespace

bool has_rep_formula(Int delta)
{
    return delta == -36 || delta == -75 || delta == -180;
}

std::vector<QuadForm> rep_formula_forms(Int delta)
{
    switch (delta) {
    case -36:
        return {{1, 0, 9}, {2, 2, 5}};
    case -75:
        return {{1, 1, 19}, {3, 3, 7}};
    case -180:
        return {{1, 0, 45}, {5, 0, 9}, {7, 4, 7}, {2, 2, 23}};
    default:
        return {};
    }
}

Int rep_formula(Int delta, QuadForm const& form, Int n)
{
    auto forms = rep_formula_forms(delta);
    if (std::find(forms.begin(), forms.end(), form) == forms.end())
        throw std::invalid_argument("no closed representation formula for " + to_string(form) +
                                    " of discriminant " + std::to_string(delta));
    if (n < 1)
        throw std::invalid_argument("rep_formula: n must be positive");
    switch (delta) {
    case -36:
        return count_minus36(form, n);
    case -75:
        return count_minus75(form, n);
    default:
        return count_minus180(form, n);
    }
}

} // namespace qform
