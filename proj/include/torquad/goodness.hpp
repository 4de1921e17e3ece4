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

#ifndef TORQUAD_GOODNESS_HPP
#define TORQUAD_GOODNESS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "torquad/sl2.hpp"
#include "torquad/torsion.hpp"

namespace torquad
{

/// A set of four rationals is good when, with f1 <= f2 <= f3 <= f4 the sorted
/// values of f_scalar, the middle inequality is strict: f2 < f3.
bool good_scalars(std::span<const Rat, 4> xs);

/// Integer form of good_scalars on residues mod n.
bool good_residues(std::span<const std::int64_t, 4> xs, std::int64_t n);

/// Coprime (a, b) for which {a r_i + b theta_i} is good.
struct Witness
{
    std::int64_t a;
    std::int64_t b;

    /// Completes (a, b) to [[a, b], [c, d]] in SL2(Z).
    Mat2 matrix() const;

    friend bool operator==(const Witness &, const Witness &) = default;
};

/// Scans residue pairs (a, b) mod n = common_order(s) with gcd(a, b, n) = 1
/// in lexicographic order and returns the first good one, lifted to
/// integers with gcd(a, b) = 1. std::nullopt means s is not good.
std::optional<Witness> good_quad(const Quad &s);

/// good_scalars({a r_i + b theta_i}) for the given integers.
bool good_for(const Quad &s, std::int64_t a, std::int64_t b);

/// {c in Z : alpha c + beta = 0 mod 1}, either empty or c = residue mod modulus.
/// modulus is the additive order of alpha in Q/Z; it is 1 (the progression
/// is all of Z or empty) when alpha is an integer.
struct Progression
{
    bool empty = true;
    std::int64_t residue = 0;
    std::int64_t modulus = 1;

    bool contains(std::int64_t c) const { return !empty && mod_floor(c - residue, modulus) == 0; }
};

/// Solves alpha c + beta = 0 mod 1 for c.
Progression solve_linear_congruence(const Rat &alpha, const Rat &beta);

class ShapeError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// The eight progressions A_1..A_8 attached to a quad of the shape
/// {(0, t1), (r, t2), (r, t3), (r4, t4)} with r <= r4 and t2 != t3:
///   A1: r c + t2,             A2: r c + t3,           A3: r4 c + t4,
///   A4: 2r c + t2 + t3,       A5: (r4 + r) c + t4 + t2,
///   A6: (r4 + r) c + t4 + t3, A7: (r4 - r) c + t4 - t2,
///   A8: (r4 - r) c + t4 - t3   (each = 0 mod 1).
struct ProgressionData
{
    std::array<Progression, 8> sets;

    /// Common difference d_i of each set, the order of its coefficient.
    std::int64_t gap(std::size_t i) const { return sets[i].modulus; }
};

/// True iff the sorted quad has the shape required by progression_data.
bool has_progression_shape(const Quad &s);

/// Throws ShapeError unless has_progression_shape(s).
ProgressionData progression_data(const Quad &s);

/// True iff the nonempty progressions cover every residue mod their lcm.
bool covers_Z(const ProgressionData &pd);

/// Sum of 1/d_i over the nonempty progressions.
Rat harmonic_sum(const ProgressionData &pd);

} // namespace torquad

#endif
