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

#ifndef TORQUAD_CURVE_FORMS_HPP
#define TORQUAD_CURVE_FORMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torquad/laurent.hpp"

namespace torquad
{

/// A point of P^1; nullopt is infinity.
using XValue = std::optional<cplx>;

/// Margin used for parameter nondegeneracy.
constexpr double kParamMargin = 1e-3;

/// y^2 = x^4 - (delta^2 + delta^-2) x^2 + 1 with origin (delta, 0).
struct JacParam
{
    cplx delta;
    bool admissible(double eps = kParamMargin) const;
};

/// x^3 + y^3 + z^3 = 3 lambda x y z with origin (1:-1:0).
struct HessParam
{
    cplx lambda;
    bool admissible(double eps = kParamMargin) const;
};

/// Uniform on the annulus 0.3 <= |z| <= 3, resampled until admissible.
JacParam sample_jac_param(std::mt19937_64 &rng, double eps = kParamMargin);
HessParam sample_hess_param(std::mt19937_64 &rng, double eps = kParamMargin);

/// e^(2 pi i / 3)
cplx omega();

/// x-image of [2]P from the x-image of P. Infinity maps to -delta.
XValue jac_double_x(const XValue &x, const JacParam &p);

/// The four 2-torsion points (+-delta^(+-1), 0).
enum class JacTranslation
{
    PlusDelta,     ///< the origin: x -> x
    MinusDelta,    ///< x -> -x
    PlusInvDelta,  ///< x -> 1/x
    MinusInvDelta, ///< x -> -1/x
};

/// x-image of P + T for the chosen 2-torsion point T.
XValue jac_translate(const XValue &x, JacTranslation t);

struct Cases125Result
{
    cplx cross_ratio;
    cplx j6;
    /// |[2]Q - (-delta, 0)| over the two 2-torsion points Q with images 0, infinity.
    double doubling_residual = 0;
};

/// Cross ratio of (x, -x, 0, infinity), the images of P, P + T, Q1, Q2
/// where T = (-delta, 0) and [2]Q1 = [2]Q2 = T.
Cases125Result verify_cases_1_2_5(const JacParam &p, cplx x);

struct Case4Result
{
    /// j6 over every choice of one image from {1, -1} and one from {i, -i}.
    std::vector<cplx> j6_values;
    /// Doubling the six 4-torsion images lands on -delta, 1/delta, -1/delta.
    double doubling_residual = 0;
};

/// Images {0, infinity, +-1, +-i} of the points of order 4.
Case4Result verify_case_4(const JacParam &p);

struct Case10Result
{
    cplx a2;
    cplx b2;
    cplx cross_ratio;
    cplx j6;
    /// |[2]a - 0| and |1 / [2]b| from jac_double_x.
    double doubling_residual = 0;
};

/// a^2 = delta^-2 (1 + branch_a i sqrt(delta^4 - 1)),
/// b^2 = delta^2 + branch_b sqrt(delta^4 - 1); branches are +1 or -1.
Case10Result verify_case_10(const JacParam &p, int branch_a, int branch_b);

struct Cases67Result
{
    std::array<cplx, 4> roots;
    double product_residual = 0;   ///< |abcd + 1|
    /// x^3 + 4(delta^2 - delta^-2) at ab+cd, ac+bd, ad+bc
    double resolvent_residual = 0;
    double torsion_residual = 0;   ///< |[2]r - r| for each root r
    double omega_residual = 0;     ///< distance of (ac+bd)/(ad+bc) to {w, w^2}, worst labeling
    /// Worst |displayed ratio + w^2| over labelings with (ac+bd)/(ad+bc) = w,
    /// and its distance to the direct cross ratio of (a, -b, 1/c, -1/d).
    double displayed_residual = 0;
    cplx j6_case6; ///< j6 of (a, -b, 1/c, -1/d)
    cplx j6_case7; ///< j6 of (a, b, -c, -d)
    /// Largest deviation of either j6 across the 24 labelings.
    double labeling_spread = 0;
};

/// Roots of x^4 + 2 delta x^3 - 2 delta^-1 x - 1, the 3-torsion images.
Cases67Result verify_cases_6_7(const JacParam &p);

/// Projective point, scaled so the largest coordinate is exactly 1.
struct HessPoint
{
    cplx x;
    cplx y;
    cplx z;

    static HessPoint make(cplx x, cplx y, cplx z);
    static HessPoint origin() { return make(1, -1, 0); }

    /// (y:x:z)
    HessPoint negated() const { return make(y, x, z); }
    /// Curve equation at the normalized coordinates.
    double residual(const HessParam &p) const;
    /// -(x + y) / z
    XValue image() const;
};

/// Largest 2x2 minor of the two normalized triples; 0 iff equal.
double proj_dist(const HessPoint &a, const HessPoint &b);
/// proj_dist(a, b) <= tol
bool same_point(const HessPoint &a, const HessPoint &b, double tol = 1e-9);

/// Chord addition; throws DegenerateError when the formula gives (0:0:0),
/// which happens for P1 = P2.
HessPoint hess_add(const HessPoint &p1, const HessPoint &p2);
HessPoint hess_double(const HessPoint &p);

/// A point with z = 1 and x uniform on the annulus; y is a root of the cubic.
HessPoint sample_hess_point(const HessParam &p, std::mt19937_64 &rng);

/// The roots of 2a^3 - 3 lambda a^2 + 1, i.e. the x = y 2-torsion points.
std::array<cplx, 3> hess_two_torsion_roots(const HessParam &p);

struct Cases389Result
{
    cplx a;
    /// Images of P0, P1, P0+Q, P1+Q, P2+Q, P3+Q.
    std::array<XValue, 6> images;
    /// Distance of images to the closed forms.
    double closed_form_residual = 0;
    double curve_residual = 0;
    /// (z1 - z4) / (z1 - z5) with z0 = infinity; equals w.
    cplx cross_ratio_case8;
    /// (z2 - z4)(z3 - z5) / ((z2 - z5)(z3 - z4)); equals -w^2.
    cplx cross_ratio_case9;
    cplx j6_case3;          ///< of the four 3-torsion images
    cplx j6_case8;
    cplx j6_case9;
};

/// Q = (a:a:1) with a the chosen root, P0 = (1:-w:0), P1 = (-1:0:1),
/// P2 = (-w:0:1), P3 = (-w^2:0:1).
Cases389Result verify_cases_3_8_9(const HessParam &p, int root_index);

struct Case11Result
{
    cplx c;
    std::array<cplx, 4> roots;
    int valid_pairings = 0;
    double pairing_residual = 0;   ///< 1/x + 1/y + 1/c over the accepted pairs
    double doubling_residual = 0;  ///< [2](x:y:1) = (c:c:1)
    double product_residual = 0;   ///< |a1 b1 a2 b2 - c|
    double relation_residual = 0;  ///< |a1 b1 (a2 + b2) + 1|
    double closed_form_residual = 0;
    double curve_residual = 0;
    /// (z2 - z1)(z3 - z4) / ((z3 - z1)(z2 - z4)) of the images of P1+v2,
    /// P2+v2, P3+v2, [2]v1+v2; equals -w^2.
    cplx cross_ratio;
    cplx j6;
    /// Largest deviation of the cross ratio across labelings of the accepted pairing.
    double labeling_spread = 0;
};

/// c a root of 2c^3 + 1 = 3 lambda c^2 and the quartic
/// c x^4 + 2c^2 x^3 + (2c^3 + 1) x^2 + 2c x + c^2 for the 4-torsion halves.
Case11Result verify_case_11(const HessParam &p, int c_root_index);

/// Sampling sweep for one family number 1..11.
struct CurveCaseReport
{
    int case_number = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string model;             ///< "jacobian" or "hessian"
    std::vector<cplx> constants;   ///< distinct j6 values, sorted
    cplx expected;                 ///< the table constant for this family
    double constant_error = 0;     ///< worst |j6 - expected| over samples
    double max_spread = 0;         ///< worst deviation from the first sample
    std::map<std::string, double> residuals; ///< named maxima
    double tol = 1e-9;
    bool pass = false;
};

/// Runs the model checks for family case_number over samples random
/// parameters drawn from seed.
CurveCaseReport curve_verify(int case_number, int samples, std::uint64_t seed);

} // namespace torquad

#endif
