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

#ifndef TORQUAD_SL2_HPP
#define TORQUAD_SL2_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torquad/torsion.hpp"

namespace torquad
{

/// Integral 2x2 matrix [[a, b], [c, d]] with ad - bc = 1.
class Mat2
{
public:
    /// Identity.
    Mat2() = default;

    /// Throws std::invalid_argument unless ad - bc = 1.
    Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    Mat2 inverse() const;
    Mat2 transpose() const;
    Mat2 operator-() const;
    friend Mat2 operator*(const Mat2 &x, const Mat2 &y);

    friend bool operator==(const Mat2 &, const Mat2 &) = default;

    /// "[[a,b],[c,d]]"
    std::string to_string() const;
    static Mat2 parse(std::string_view text);

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// Element of SL2(Z/n); entries are kept in [0, n).
class Mat2ModN
{
public:
    Mat2ModN(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n);
    Mat2ModN(const Mat2 &m, std::int64_t n);

    static Mat2ModN identity(std::int64_t n) { return Mat2ModN(1, 0, 0, 1, n); }

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }
    std::int64_t modulus() const noexcept { return n_; }

    Mat2ModN inverse() const;
    Mat2ModN transpose() const;
    Mat2ModN operator-() const;
    friend Mat2ModN operator*(const Mat2ModN &x, const Mat2ModN &y);

    /// An integral det-1 matrix reducing to this residue matrix.
    Mat2 lift() const;

    friend bool operator==(const Mat2ModN &, const Mat2ModN &) = default;
    friend auto operator<=>(const Mat2ModN &, const Mat2ModN &) = default;

    std::string to_string() const;

private:
    std::int64_t a_, b_, c_, d_, n_;
};

/// Integers (a', b') with a' = a, b' = b (mod n) and gcd(a', b') = 1.
/// Requires gcd(a, b, n) = 1.
std::pair<std::int64_t, std::int64_t> lift_coprime(std::int64_t a, std::int64_t b, std::int64_t n);

/// F((r, theta) * g^T) = F(a r + b theta, c r + d theta).
TorsionCoord act(const Mat2 &g, const TorsionCoord &p);
Quad act(const Mat2 &g, const Quad &s);

/// Action through the residue matrix; every coordinate denominator of s
/// must divide g.modulus().
Quad act(const Mat2ModN &g, const Quad &s);

/// All of SL2(Z/n), in lexicographic order of (a, b, c, d).
std::vector<Mat2ModN> enumerate_sl2_mod_n(std::int64_t n);

/// n^3 * prod_{p | n} (1 - 1/p^2)
std::int64_t sl2_mod_n_order(std::int64_t n);

/// The SL2(Z)-orbit of s, sorted and deduplicated.
std::vector<Quad> orbit(const Quad &s);

struct MinimalRepresentative
{
    Quad quad;
    Mat2 witness; ///< act(witness, s) == quad
};

/// Lexicographically smallest element of orbit(s), with a matrix reaching it.
MinimalRepresentative minimal_representative(const Quad &s);

/// Finite subgroup of SL2(Z/n), stored as a sorted element list.
class SubgroupModN
{
public:
    SubgroupModN(std::int64_t n, std::vector<Mat2ModN> elements);

    std::int64_t modulus() const noexcept { return n_; }
    const std::vector<Mat2ModN> &elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool contains(const Mat2ModN &g) const;

    /// Identity present, closed under products and inverses.
    bool is_subgroup() const;

    bool is_subset_of(const SubgroupModN &other) const;

private:
    std::int64_t n_;
    std::vector<Mat2ModN> elems_;
};

/// Image mod n of {g^{-T} : g . s = s}, n = common_order(s).
SubgroupModN stabilizer_gamma_S(const Quad &s);

/// Number of classes {g, -g} in g.
std::int64_t psl_quotient_order(const SubgroupModN &g);

/// Precomputed action of SL2(Z/n) on the points of R of order dividing n.
/// Points are indexed in lexicographic order, so comparing sorted index
/// tuples is the same as comparing quads.
class LevelAction
{
public:
    explicit LevelAction(std::int64_t n);

    std::int64_t level() const noexcept { return n_; }
    const std::vector<TorsionCoord> &points() const noexcept { return points_; }
    const std::vector<Mat2ModN> &group() const noexcept { return group_; }
    std::int64_t point_order(std::size_t i) const { return orders_[i]; }

    /// Image index of point i under group element k.
    std::uint16_t image(std::size_t k, std::size_t i) const
    {
        return table_[k * points_.size() + i];
    }

    std::size_t index_of(const TorsionCoord &p) const;

private:
    std::int64_t n_;
    std::vector<TorsionCoord> points_;
    std::vector<std::int64_t> orders_;
    std::vector<Mat2ModN> group_;
    std::vector<std::uint16_t> table_;
};

} // namespace torquad

#endif
