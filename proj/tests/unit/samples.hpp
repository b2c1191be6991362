#pragma once

#include <random>
#include <vector>

#include "bnring/laurent.hpp"
#include "bnring/partition.hpp"

namespace bnring::testing {

// Fixed seeds keep every sampled property test reproducible.
inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// Uniform choice among all partitions of degree <= max_degree.
inline Partition random_partition(int max_degree, int max_part = -1)
{
    const auto pool = partitions_up_to(max_degree, max_part);
    return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
}

inline LaurentPoly random_laurent(int span = 4, int coeff = 9)
{
    LaurentPoly p;
    for (int k = -span; k <= span; ++k) p += LaurentPoly::monomial(k, uniform(-coeff, coeff));
    return p;
}

inline LaurentPoly random_palindromic(int span = 6, int coeff = 9)
{
    LaurentPoly p = uniform(-coeff, coeff);
    for (int k = 1; k <= span; ++k) {
        const int c = uniform(-coeff, coeff);
        p += LaurentPoly::monomial(k, c) + LaurentPoly::monomial(-k, c);
    }
    return p;
}

} // namespace bnring::testing
