#pragma once

#include <random>

#include "qform/forms.hpp"

namespace qform::testing {

/// f(alpha x + beta y, gamma x + delta y) for an integer matrix.
inline QuadForm transform(QuadForm const& f, Int alpha, Int beta, Int gamma, Int delta)
{
    Int a = f.a * alpha * alpha + f.b * alpha * gamma + f.c * gamma * gamma;
    Int c = f.a * beta * beta + f.b * beta * delta + f.c * delta * delta;
    Int b = 2 * f.a * alpha * beta + f.b * (alpha * delta + beta * gamma) + 2 * f.c * gamma * delta;
    return {a, b, c};
}

/// A random SL2(Z) image of f built from a short word in T^k and S.
inline QuadForm random_equivalent(QuadForm f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> shift(-3, 3);
    for (int step = 0; step < 4; ++step) {
        f = transform(f, 1, shift(rng), 0, 1); // x -> x + k y
        f = transform(f, 0, -1, 1, 0);         // (x, y) -> (-y, x)
    }
    return f;
}

} // namespace qform::testing
