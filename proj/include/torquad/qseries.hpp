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

#ifndef TORQUAD_QSERIES_HPP
#define TORQUAD_QSERIES_HPP

#include <array>
#include <optional>

#include "torquad/laurent.hpp"
#include "torquad/torsion.hpp"

namespace torquad
{

/// Raised for inputs where a series or value is undefined (identity point,
/// coinciding points, a theta argument in q^Z).
class DegenerateError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// exp(2 pi i x). Quarter turns are exact.
cplx root_of_unity(const Rat &x);

/// u = exp(2 pi i theta) q^r. Points of R have 0 <= r <= 1/2; products and
/// inverses used by the theta identities may leave that range.
struct UPoint
{
    Rat theta;
    Rat r;

    static UPoint from(const TorsionCoord &p) { return UPoint{p.theta, p.r}; }

    UPoint inverse() const { return UPoint{-theta, -r}; }
    friend UPoint operator*(const UPoint &a, const UPoint &b) { return UPoint{a.theta + b.theta, a.r + b.r}; }

    /// u lies in q^Z, where X has a pole and Theta vanishes.
    bool is_trivial() const { return theta.is_integer() && r.is_integer(); }

    /// Numeric value at q (principal branch of q^r).
    cplx value(cplx q) const;
};

/// 2 * lcm of the denominators of theta and r over the given points.
std::int64_t default_scale(std::initializer_list<UPoint> us);

/// Default truncation, in powers of q.
constexpr int kDefaultTerms = 8;

/// sum_{n>=1} n^k q^n / (1 - q^n), known below q^D, at scale s.
LaurentSeries s_k_series(int k, int D, std::int64_t scale = 1);
/// -5 s_3
LaurentSeries a4_series(int D, std::int64_t scale = 1);
/// -(5 s_3 + 7 s_5) / 12; every coefficient is an integer.
LaurentSeries a6_series(int D, std::int64_t scale = 1);

/// X(u, q) = sum_{n in Z} q^n u / (1 - q^n u)^2 - 2 s_1(q), for -1 < r < 1.
/// scale 0 selects default_scale({u}).
LaurentSeries x_series(const UPoint &u, int D, std::int64_t scale = 0);
/// Y(u, q) = sum_{n in Z} (q^n u)^2 / (1 - q^n u)^3 + s_1(q), for -1 < r < 1.
LaurentSeries y_series(const UPoint &u, int D, std::int64_t scale = 0);
/// Y^2 + XY - X^3 - a4 X - a6; vanishes on the Tate curve.
LaurentSeries tate_point_residual(const UPoint &u, int D);

/// Theta(u, q) = (1 - u) prod_{n>=1} (1 - q^n u)(1 - q^n / u) / (1 - q^n)^2.
LaurentSeries theta_series(const UPoint &u, int D, std::int64_t scale = 0);

/// Largest coefficient of Theta(qu) + u^-1 Theta(u) and of
/// Theta(1/u) + u^-1 Theta(u).
double theta_functional_residual(const UPoint &u, int D);

/// Largest coefficient of
///   X(u1) - X(u2) + u2 Theta(u1 u2) Theta(u1/u2) / (Theta(u1)^2 Theta(u2)^2).
double x_diff_identity_residual(const UPoint &u1, const UPoint &u2, int D);

/// (z1 - z2)(z3 - z4) / ((z1 - z4)(z3 - z2)). A missing entry is the point
/// at infinity; the two factors containing it are dropped.
LaurentSeries cross_ratio_series(const std::array<std::optional<LaurentSeries>, 4> &z);

/// (z^2 - z + 1)^3 / (z^2 (z - 1)^2)
LaurentSeries j6_series(const LaurentSeries &z);
cplx j6_value(cplx z);

/// X series of the four points of s in sorted order; the identity maps to
/// infinity. Scale 2 * common_order(s).
std::array<std::optional<LaurentSeries>, 4> quad_x_series(const Quad &s, int D);
LaurentSeries quad_cross_ratio_series(const Quad &s, int D);
/// j6 of the cross ratio of the sorted X series.
LaurentSeries mu_series(const Quad &s, int D = kDefaultTerms);

struct Constancy
{
    bool constant = true;
    cplx value{0.0, 0.0};      ///< coefficient of q^0
    std::int64_t first_exponent = 0; ///< in units of q^(1/scale), when nonconstant
    cplx first_coeff{0.0, 0.0};
    std::int64_t scale = 1;
};

/// Constant iff every known coefficient at a nonzero exponent has
/// magnitude below tol. Otherwise reports the lowest such exponent.
Constancy is_constant(const LaurentSeries &f, double tol);

/// Terms needed for |q|^terms to drop below 1e-18.
int default_numeric_terms(cplx q);

/// Direct summation over |n| <= terms (0 picks default_numeric_terms).
cplx x_value(const UPoint &u, cplx q, int terms = 0);
cplx y_value(const UPoint &u, cplx q, int terms = 0);
/// Partial product over n <= terms.
cplx theta_value(const UPoint &u, cplx q, int terms = 0);
cplx theta_value(cplx u, cplx q, int terms = 0);
/// |Theta(qu) + u^-1 Theta(u)| / max(1, |u^-1 Theta(u)|) by direct products.
double theta_functional_residual_value(cplx u, cplx q, int terms = 0);

/// Cross ratio with infinity handling as in cross_ratio_series.
cplx cross_ratio_value(const std::array<std::optional<cplx>, 4> &z);
cplx quad_cross_ratio_value(const Quad &s, cplx q, int terms = 0);
cplx mu_value(const Quad &s, cplx q, int terms = 0);

struct ThetaRatio
{
    cplx value;
    bool fallback = false; ///< a theta argument was in q^Z; X differences used instead
};

/// Theta(u1u2)Theta(u1/u2)Theta(u3u4)Theta(u3/u4) /
/// (Theta(u1u4)Theta(u1/u4)Theta(u3u2)Theta(u3/u2)).
ThetaRatio theta_cross_ratio(const std::array<UPoint, 4> &u, cplx q, int terms = 0);
/// Same for the sorted points of s.
ThetaRatio theta_cross_ratio(const Quad &s, cplx q, int terms = 0);

} // namespace torquad

#endif
