// Copyright 2026 The torquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORQUAD_TEST_UTIL_HPP
#define TORQUAD_TEST_UTIL_HPP

#include <random>

#include "torquad/sl2.hpp"
#include "torquad/torsion.hpp"

namespace torquad::testing
{

inline std::mt19937_64 &rng()
{
    static std::mt19937_64 gen(20240917);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// p/q with |p| <= 3q, 1 <= q <= max_den.
inline Rat random_rat(std::int64_t max_den = 24)
{
    const std::int64_t q = uniform(1, max_den);
    return Rat(uniform(-3 * q, 3 * q), q);
}

/// A point of R whose coordinates have denominators dividing some m <= max_order.
inline TorsionCoord random_point(std::int64_t max_order)
{
    const std::int64_t m = uniform(1, max_order);
    return f_pair(Rat(uniform(0, m - 1), m), Rat(uniform(0, m - 1), m));
}

inline Quad random_quad(std::int64_t max_order = 12)
{
    for (;;) {
        std::array<TorsionCoord, 4> p{random_point(max_order), random_point(max_order), random_point(max_order),
                                      random_point(max_order)};
        try {
            return Quad(p);
        } catch (const DuplicatePointError &) {
        }
    }
}

/// Four distinct points with coordinates in (1/n)Z; common order divides n.
inline Quad random_level_quad(std::int64_t n)
{
    for (;;) {
        std::array<TorsionCoord, 4> p{};
        for (auto &x : p) {
            x = f_pair(Rat(uniform(0, n - 1), n), Rat(uniform(0, n - 1), n));
        }
        try {
            return Quad(p);
        } catch (const DuplicatePointError &) {
        }
    }
}

/// Random word of length <= len in the generators [[1,1],[0,1]] and [[0,-1],[1,0]].
inline Mat2 random_mat2(int len = 8)
{
    static const Mat2 T(1, 1, 0, 1);
    static const Mat2 Ti(1, -1, 0, 1);
    static const Mat2 S(0, -1, 1, 0);
    Mat2 g;
    const int n = static_cast<int>(uniform(0, len));
    for (int i = 0; i < n; ++i) {
        switch (uniform(0, 2)) {
        case 0:
            g = g * T;
            break;
        case 1:
            g = g * Ti;
            break;
        default:
            g = g * S;
        }
    }
    return g;
}

} // namespace torquad::testing

#endif
