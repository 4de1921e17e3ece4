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

#include "torquad/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torquad
{

namespace
{

// r * s as an integer exponent in t = q^(1/s).
std::int64_t t_exponent(const Rat &r, std::int64_t s)
{
    const Rat e = r * Rat(s);
    if (!e.is_integer()) {
        throw std::invalid_argument("exponent " + r.to_string() + " is not a multiple of 1/" + std::to_string(s));
    }
    return e.num();
}

void check_strip(const UPoint &u)
{
    if (!(Rat(-1) < u.r && u.r < Rat(1))) {
        throw std::invalid_argument("X and Y series need -1 < r < 1, got r = " + u.r.to_string());
    }
    if (u.is_trivial()) {
        throw DegenerateError("X(u) has a pole at the identity point");
    }
}

std::int64_t resolve_scale(const UPoint &u, std::int64_t scale)
{
    return scale == 0 ? default_scale({u}) : scale;
}

// sum_{N>=1} sigma_1(N) t^(N s), the q-series s_1 at scale s.
void add_s1(std::vector<cplx> &c, std::int64_t s, real sign)
{
    const auto P = static_cast<std::int64_t>(c.size());
    for (std::int64_t n = 1; n * s < P; ++n) {
        for (std::int64_t m = 1; m * n * s < P; ++m) {
            c[static_cast<std::size_t>(m * n * s)] += sign * static_cast<real>(n);
        }
    }
}

// 1 - c t^e as an exact polynomial.
LaurentSeries binomial(cplx c, std::int64_t e, std::int64_t s)
{
    if (e == 0) {
        return LaurentSeries::constant(real(1) - c, s);
    }
    if (e > 0) {
        std::vector<cplx> v(static_cast<std::size_t>(e) + 1, cplx(0));
        v.front() = real(1);
        v.back() = -c;
        return LaurentSeries(s, 0, std::move(v), LaurentSeries::kExact);
    }
    std::vector<cplx> v(static_cast<std::size_t>(-e) + 1, cplx(0));
    v.front() = -c;
    v.back() = real(1);
    return LaurentSeries(s, e, std::move(v), LaurentSeries::kExact);
}

} // namespace

cplx root_of_unity(const Rat &x)
{
    const Rat f = mod1(x);
    if (f == Rat(0)) {
        return {real(1), real(0)};
    }
    if (f == Rat(1, 4)) {
        return {real(0), real(1)};
    }
    if (f == Rat(1, 2)) {
        return {-real(1), real(0)};
    }
    if (f == Rat(3, 4)) {
        return {real(0), -real(1)};
    }
    const real a = 2 * std::numbers::pi_v<real> * static_cast<real>(f.num()) / static_cast<real>(f.den());
    return {std::cos(a), std::sin(a)};
}

cplx UPoint::value(cplx q) const
{
    if (r.is_zero()) {
        return root_of_unity(theta);
    }
    return root_of_unity(theta) * std::exp(static_cast<real>(r.num()) / static_cast<real>(r.den()) * std::log(q));
}

std::int64_t default_scale(std::initializer_list<UPoint> us)
{
    std::int64_t l = 1;
    for (const auto &u : us) {
        l = checked::lcm(l, checked::lcm(u.theta.den(), u.r.den()));
    }
    return checked::mul(2, l);
}

LaurentSeries s_k_series(int k, int D, std::int64_t scale)
{
    if (k != 1 && k != 3 && k != 5) {
        throw std::invalid_argument("s_k is provided for k = 1, 3, 5");
    }
    const std::int64_t P = D * scale;
    std::vector<cplx> c(static_cast<std::size_t>(std::max<std::int64_t>(P, 0)), cplx(0));
    for (std::int64_t n = 1; n * scale < P; ++n) {
        const real nk = std::pow(static_cast<real>(n), k);
        for (std::int64_t m = 1; m * n * scale < P; ++m) {
            c[static_cast<std::size_t>(m * n * scale)] += nk;
        }
    }
    return LaurentSeries(scale, 0, std::move(c), P);
}

LaurentSeries a4_series(int D, std::int64_t scale)
{
    return cplx(-5) * s_k_series(3, D, scale);
}

LaurentSeries a6_series(int D, std::int64_t scale)
{
    LaurentSeries out = cplx(real(-1) / 12) * (cplx(5) * s_k_series(3, D, scale) +
                                                  cplx(7) * s_k_series(5, D, scale));
    for (const auto &c : out.coeffs()) {
        if (std::abs(c - std::round(c.real())) > real(1e-9) * std::max(real(1), std::abs(c))) {
            throw std::logic_error("a6 coefficient is not integral");
        }
    }
    return out;
}

LaurentSeries x_series(const UPoint &u, int D, std::int64_t scale)
{
    check_strip(u);
    const std::int64_t s = resolve_scale(u, scale);
    const std::int64_t P = D * s;
    const std::int64_t er = t_exponent(u.r, s);
    std::vector<cplx> c(static_cast<std::size_t>(P), cplx(0));
    auto put = [&](std::int64_t e, cplx v) {
        if (e < P) {
            c[static_cast<std::size_t>(e)] += v;
        }
    };
    // u / (1 - u)^2
    if (er == 0) {
        const cplx z = root_of_unity(u.theta);
        put(0, z / ((real(1) - z) * (real(1) - z)));
    } else {
        const std::int64_t e = er > 0 ? er : -er;
        const Rat th = er > 0 ? u.theta : -u.theta;
        for (std::int64_t m = 1; m * e < P; ++m) {
            put(m * e, static_cast<real>(m) * root_of_unity(th * Rat(m)));
        }
    }
    // sum_{n>=1} sum_{m>=1} m (q^n u)^m + m (q^n / u)^m - 2 m q^(nm)
    for (std::int64_t n = 1; n * s - (er > 0 ? er : -er) < P; ++n) {
        const std::int64_t ep = n * s + er;
        const std::int64_t em = n * s - er;
        for (std::int64_t m = 1; m * ep < P; ++m) {
            put(m * ep, static_cast<real>(m) * root_of_unity(u.theta * Rat(m)));
        }
        for (std::int64_t m = 1; m * em < P; ++m) {
            put(m * em, static_cast<real>(m) * root_of_unity(-u.theta * Rat(m)));
        }
        for (std::int64_t m = 1; m * n * s < P; ++m) {
            put(m * n * s, -real(2) * static_cast<real>(m));
        }
    }
    return LaurentSeries(s, 0, std::move(c), P);
}

LaurentSeries y_series(const UPoint &u, int D, std::int64_t scale)
{
    check_strip(u);
    const std::int64_t s = resolve_scale(u, scale);
    const std::int64_t P = D * s;
    const std::int64_t er = t_exponent(u.r, s);
    std::vector<cplx> c(static_cast<std::size_t>(P), cplx(0));
    // w^2/(1-w)^3 = sum m(m-1)/2 w^m for |w| < 1, -sum m(m+1)/2 w^-m for |w| > 1.
    auto small_w = [&](std::int64_t e, const Rat &th) {
        for (std::int64_t m = 2; m * e < P; ++m) {
            c[static_cast<std::size_t>(m * e)] +=
                static_cast<real>(m * (m - 1) / 2) * root_of_unity(th * Rat(m));
        }
    };
    auto large_w = [&](std::int64_t e, const Rat &th) {
        for (std::int64_t m = 1; m * e < P; ++m) {
            c[static_cast<std::size_t>(m * e)] -=
                static_cast<real>(m * (m + 1) / 2) * root_of_unity(-th * Rat(m));
        }
    };
    if (er > 0) {
        small_w(er, u.theta);
    } else if (er == 0) {
        const cplx z = root_of_unity(u.theta);
        c[0] += z * z / ((real(1) - z) * (real(1) - z) * (real(1) - z));
    } else {
        large_w(-er, u.theta);
    }
    for (std::int64_t n = 1; n * s - (er > 0 ? er : -er) < P; ++n) {
        small_w(n * s + er, u.theta);
        large_w(n * s - er, u.theta);
    }
    add_s1(c, s, real(1));
    return LaurentSeries(s, 0, std::move(c), P);
}

LaurentSeries tate_point_residual(const UPoint &u, int D)
{
    const std::int64_t s = default_scale({u});
    const LaurentSeries X = x_series(u, D, s);
    const LaurentSeries Y = y_series(u, D, s);
    const LaurentSeries a4 = a4_series(D, s);
    const LaurentSeries a6 = a6_series(D, s);
    return Y * Y + X * Y - X * X * X - a4 * X - a6;
}

LaurentSeries theta_series(const UPoint &u, int D, std::int64_t scale)
{
    if (u.is_trivial()) {
        throw DegenerateError("Theta(u) vanishes identically for u in q^Z");
    }
    const std::int64_t s = scale == 0 ? default_scale({u}) : scale;
    const std::int64_t P = D * s;
    const std::int64_t er = t_exponent(u.r, s);
    const cplx z = root_of_unity(u.theta);
    const cplx zi = root_of_unity(-u.theta);

    LaurentSeries acc = LaurentSeries::constant(real(1), s, P);
    auto factor = [&](cplx c, std::int64_t e) {
        if (e < P) {
            acc = acc * binomial(c, e, s);
        }
    };
    factor(z, er);
    for (std::int64_t n = 1; n * s - (er > 0 ? er : -er) < P; ++n) {
        factor(z, n * s + er);
        factor(zi, n * s - er);
    }
    LaurentSeries euler = LaurentSeries::constant(real(1), s, P);
    for (std::int64_t n = 1; n * s < P; ++n) {
        euler = euler * binomial(real(1), n * s, s);
    }
    return acc * (euler * euler).inverse();
}

double theta_functional_residual(const UPoint &u, int D)
{
    const UPoint qu{u.theta, u.r + Rat(1)};
    const std::int64_t s = default_scale({u});
    const LaurentSeries th = theta_series(u, D, s);
    const LaurentSeries uinv_th = LaurentSeries::monomial(root_of_unity(-u.theta), -t_exponent(u.r, s), s) * th;
    const double r1 = max_difference(theta_series(qu, D, s), -uinv_th);
    const double r2 = max_difference(theta_series(u.inverse(), D, s), -uinv_th);
    return std::max(r1, r2);
}

double x_diff_identity_residual(const UPoint &u1, const UPoint &u2, int D)
{
    const std::int64_t s = default_scale({u1, u2});
    const LaurentSeries lhs = x_series(u1, D, s) - x_series(u2, D, s);
    const LaurentSeries t1 = theta_series(u1, D, s);
    const LaurentSeries t2 = theta_series(u2, D, s);
    const LaurentSeries num = LaurentSeries::monomial(-root_of_unity(u2.theta), t_exponent(u2.r, s), s) *
                              theta_series(u1 * u2, D, s) * theta_series(u1 * u2.inverse(), D, s);
    const LaurentSeries rhs = num / (t1 * t1 * t2 * t2);
    return max_difference(lhs, rhs);
}

LaurentSeries cross_ratio_series(const std::array<std::optional<LaurentSeries>, 4> &z)
{
    int inf = -1;
    for (int i = 0; i < 4; ++i) {
        if (!z[static_cast<std::size_t>(i)]) {
            if (inf >= 0) {
                throw DegenerateError("cross ratio with two points at infinity");
            }
            inf = i;
        }
    }
    auto diff = [&](int i, int j) { return *z[static_cast<std::size_t>(i)] - *z[static_cast<std::size_t>(j)]; };
    auto ratio = [](const LaurentSeries &num, const LaurentSeries &den) {
        try {
            return num / den;
        } catch (const SeriesError &) {
            throw DegenerateError("cross ratio denominator vanishes: two points coincide");
        }
    };
    switch (inf) {
    case 0:
        return ratio(diff(2, 3), diff(2, 1));
    case 1:
        return ratio(diff(2, 3), diff(0, 3));
    case 2:
        return ratio(diff(0, 1), diff(0, 3));
    case 3:
        return ratio(diff(0, 1), diff(2, 1));
    default:
        return ratio(diff(0, 1) * diff(2, 3), diff(0, 3) * diff(2, 1));
    }
}

LaurentSeries j6_series(const LaurentSeries &z)
{
    const LaurentSeries one = LaurentSeries::constant(real(1), z.scale());
    const LaurentSeries z2 = z * z;
    const LaurentSeries zm1 = z - one;
    const LaurentSeries num = (z2 - z + one).pow(3);
    const LaurentSeries den = z2 * zm1 * zm1;
    try {
        return num / den;
    } catch (const SeriesError &) {
        throw DegenerateError("j6 undefined: cross ratio is identically 0 or 1");
    }
}

cplx j6_value(cplx z)
{
    const cplx den = z * z * (z - real(1)) * (z - real(1));
    if (std::abs(den) == real(0)) {
        throw DegenerateError("j6 undefined at z in {0, 1}");
    }
    const cplx w = z * z - z + real(1);
    return w * w * w / den;
}

std::array<std::optional<LaurentSeries>, 4> quad_x_series(const Quad &s, int D)
{
    const std::int64_t sc = 2 * s.common_order();
    std::array<std::optional<LaurentSeries>, 4> z;
    for (std::size_t i = 0; i < 4; ++i) {
        const UPoint u = UPoint::from(s[i]);
        if (!u.is_trivial()) {
            z[i] = x_series(u, D, sc);
        }
    }
    return z;
}

LaurentSeries quad_cross_ratio_series(const Quad &s, int D)
{
    return cross_ratio_series(quad_x_series(s, D));
}

LaurentSeries mu_series(const Quad &s, int D)
{
    return j6_series(quad_cross_ratio_series(s, D));
}

Constancy is_constant(const LaurentSeries &f, double tol)
{
    Constancy out;
    out.scale = f.scale();
    const auto &c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const std::int64_t e = f.lead() + static_cast<std::int64_t>(k);
        if (e == 0) {
            out.value = c[k];
        } else if (out.constant && std::abs(c[k]) >= tol) {
            out.constant = false;
            out.first_exponent = e;
            out.first_coeff = c[k];
        }
    }
    return out;
}

int default_numeric_terms(cplx q)
{
    const double a = std::abs(q);
    if (!(a < real(1))) {
        throw std::domain_error("numeric evaluation needs |q| < 1");
    }
    if (a == real(0)) {
        return 1;
    }
    return static_cast<int>(std::ceil(std::log(1e-18) / std::log(a))) + 2;
}

namespace
{

int resolve_terms(cplx q, int terms)
{
    const int t = default_numeric_terms(q);
    return terms > 0 ? terms : t;
}

cplx s1_value(cplx q, int terms)
{
    cplx sum(0);
    cplx qn = q;
    for (int n = 1; n <= terms; ++n) {
        sum += static_cast<real>(n) * qn / (real(1) - qn);
        qn *= q;
    }
    return sum;
}

} // namespace

cplx x_value(const UPoint &u, cplx q, int terms)
{
    if (u.is_trivial()) {
        throw DegenerateError("X(u) has a pole at u in q^Z");
    }
    terms = resolve_terms(q, terms);
    const cplx uv = u.value(q);
    cplx sum = uv / ((real(1) - uv) * (real(1) - uv));
    cplx qn = q;
    for (int n = 1; n <= terms; ++n) {
        const cplx a = qn * uv;
        const cplx b = qn / uv;
        sum += a / ((real(1) - a) * (real(1) - a)) + b / ((real(1) - b) * (real(1) - b));
        qn *= q;
    }
    return sum - real(2) * s1_value(q, terms);
}

cplx y_value(const UPoint &u, cplx q, int terms)
{
    if (u.is_trivial()) {
        throw DegenerateError("Y(u) has a pole at u in q^Z");
    }
    terms = resolve_terms(q, terms);
    const cplx uv = u.value(q);
    auto term = [](cplx w) { return w * w / ((real(1) - w) * (real(1) - w) * (real(1) - w)); };
    cplx sum = term(uv);
    cplx qn = q;
    for (int n = 1; n <= terms; ++n) {
        sum += term(qn * uv) + term(uv / qn);
        qn *= q;
    }
    return sum + s1_value(q, terms);
}

cplx theta_value(cplx u, cplx q, int terms)
{
    terms = resolve_terms(q, terms);
    cplx prod = real(1) - u;
    cplx qn = q;
    for (int n = 1; n <= terms; ++n) {
        prod *= (real(1) - qn * u) * (real(1) - qn / u) / ((real(1) - qn) * (real(1) - qn));
        qn *= q;
    }
    return prod;
}

cplx theta_value(const UPoint &u, cplx q, int terms)
{
    return theta_value(u.value(q), q, terms);
}

double theta_functional_residual_value(cplx u, cplx q, int terms)
{
    const cplx rhs = -theta_value(u, q, terms) / u;
    const cplx lhs = theta_value(q * u, q, terms);
    return static_cast<double>(std::abs(lhs - rhs) / std::max<real>(1, std::abs(rhs)));
}

cplx cross_ratio_value(const std::array<std::optional<cplx>, 4> &z)
{
    int inf = -1;
    for (int i = 0; i < 4; ++i) {
        if (!z[static_cast<std::size_t>(i)]) {
            if (inf >= 0) {
                throw DegenerateError("cross ratio with two points at infinity");
            }
            inf = i;
        }
    }
    auto d = [&](int i, int j) { return *z[static_cast<std::size_t>(i)] - *z[static_cast<std::size_t>(j)]; };
    cplx num;
    cplx den;
    switch (inf) {
    case 0:
        num = d(2, 3);
        den = d(2, 1);
        break;
    case 1:
        num = d(2, 3);
        den = d(0, 3);
        break;
    case 2:
        num = d(0, 1);
        den = d(0, 3);
        break;
    case 3:
        num = d(0, 1);
        den = d(2, 1);
        break;
    default:
        num = d(0, 1) * d(2, 3);
        den = d(0, 3) * d(2, 1);
    }
    if (std::abs(den) == real(0)) {
        throw DegenerateError("cross ratio denominator vanishes");
    }
    return num / den;
}

cplx quad_cross_ratio_value(const Quad &s, cplx q, int terms)
{
    std::array<std::optional<cplx>, 4> z;
    for (std::size_t i = 0; i < 4; ++i) {
        const UPoint u = UPoint::from(s[i]);
        if (!u.is_trivial()) {
            z[i] = x_value(u, q, terms);
        }
    }
    return cross_ratio_value(z);
}

cplx mu_value(const Quad &s, cplx q, int terms)
{
    return j6_value(quad_cross_ratio_value(s, q, terms));
}

ThetaRatio theta_cross_ratio(const std::array<UPoint, 4> &u, cplx q, int terms)
{
    const std::array<UPoint, 8> args = {u[0] * u[1],           u[0] * u[1].inverse(), u[2] * u[3],
                                        u[2] * u[3].inverse(), u[0] * u[3],           u[0] * u[3].inverse(),
                                        u[2] * u[1],           u[2] * u[1].inverse()};
    if (std::any_of(args.begin(), args.end(), [](const UPoint &a) { return a.is_trivial(); })) {
        std::array<std::optional<cplx>, 4> z;
        for (std::size_t i = 0; i < 4; ++i) {
            if (!u[i].is_trivial()) {
                z[i] = x_value(u[i], q, terms);
            }
        }
        return ThetaRatio{cross_ratio_value(z), true};
    }
    cplx num(1);
    cplx den(1);
    for (std::size_t i = 0; i < 4; ++i) {
        num *= theta_value(args[i], q, terms);
        den *= theta_value(args[i + 4], q, terms);
    }
    return ThetaRatio{num / den, false};
}

ThetaRatio theta_cross_ratio(const Quad &s, cplx q, int terms)
{
    return theta_cross_ratio(
        std::array<UPoint, 4>{UPoint::from(s[0]), UPoint::from(s[1]), UPoint::from(s[2]), UPoint::from(s[3])}, q,
        terms);
}

} // namespace torquad
