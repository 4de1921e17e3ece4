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

#ifndef TORQUAD_TORSION_HPP
#define TORQUAD_TORSION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torquad/rational.hpp"

namespace torquad
{

/// Representative of x in Q/Z, in [0, 1).
Rat mod1(const Rat &x);

/// The unique F(x) in [0, 1/2] with F(x) = +-x mod 1.
Rat f_scalar(const Rat &x);

/// Additive order of x in Q/Z, i.e. the reduced denominator.
inline std::int64_t order(const Rat &x) { return x.den(); }

/// A point (r, theta) of the fundamental domain R of +-\Q^2/Z^2:
///   r = 0 and 0 <= theta <= 1/2, or
///   0 < r < 1/2 and 0 <= theta < 1, or
///   r = 1/2 and 0 <= theta <= 1/2.
struct TorsionCoord
{
    Rat r;
    Rat theta;

    /// F(r, theta): the unique element of R congruent to +-(r, theta) mod Z^2.
    static TorsionCoord reduce(const Rat &r, const Rat &theta);

    /// True iff (r, theta) already lies in R.
    static bool in_domain(const Rat &r, const Rat &theta);

    friend bool operator==(const TorsionCoord &, const TorsionCoord &) = default;
    friend std::strong_ordering operator<=>(const TorsionCoord &a, const TorsionCoord &b)
    {
        if (auto c = a.r <=> b.r; c != 0) {
            return c;
        }
        return a.theta <=> b.theta;
    }

    std::string to_string() const;
};

inline TorsionCoord f_pair(const Rat &r, const Rat &theta)
{
    return TorsionCoord::reduce(r, theta);
}

/// Smallest m >= 1 with m * (r, theta) = 0 in Q^2/Z^2.
std::int64_t order(const TorsionCoord &p);

class DuplicatePointError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered set of four distinct points of R, stored sorted
/// lexicographically by (r, theta). Sorting gives every set a unique
/// representation, so the derived ordering is the lexicographic order on
/// quads used for orbit minima.
class Quad
{
public:
    /// Reduces every point into R, sorts, and rejects repeated points.
    explicit Quad(const std::array<TorsionCoord, 4> &points);

    const std::array<TorsionCoord, 4> &points() const noexcept { return pts_; }
    const TorsionCoord &operator[](std::size_t i) const noexcept { return pts_[i]; }

    /// lcm of the four point orders.
    std::int64_t common_order() const;

    bool contains(const TorsionCoord &p) const noexcept;

    friend bool operator==(const Quad &, const Quad &) = default;
    friend std::strong_ordering operator<=>(const Quad &a, const Quad &b)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            if (auto c = a.pts_[i] <=> b.pts_[i]; c != 0) {
                return c;
            }
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<TorsionCoord, 4> pts_;
};

inline std::int64_t common_order(const Quad &s) { return s.common_order(); }

/// Parses "p/q,p'/q';...;..." (four points). Integers may omit "/1" and
/// whitespace anywhere is ignored. Points are reduced by f_pair first.
Quad parse_quad(std::string_view text);

/// Inverse of parse_quad: "r,theta;r,theta;r,theta;r,theta".
std::string format_quad(const Quad &s);

/// All points of R whose order divides n, in lexicographic order.
std::vector<TorsionCoord> points_of_order_dividing(std::int64_t n);

} // namespace torquad

template <>
struct std::hash<torquad::Quad>
{
    std::size_t operator()(const torquad::Quad &q) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto &p : q.points()) {
            for (auto v : {p.r.num(), p.r.den(), p.theta.num(), p.theta.den()}) {
                h ^= static_cast<std::size_t>(v);
                h *= 0x100000001b3ULL;
            }
        }
        return h;
    }
};

#endif
