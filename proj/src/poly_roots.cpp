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

#include "torquad/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace torquad
{

cplx poly_eval(const std::vector<cplx> &coeffs, cplx x)
{
    cplx acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

namespace
{

std::vector<cplx> derivative(const std::vector<cplx> &c)
{
    std::vector<cplx> d;
    for (std::size_t k = 1; k < c.size(); ++k) {
        d.push_back(c[k] * real(k));
    }
    return d;
}

// Cauchy-type bound on the root moduli, for the starting circle.
real root_radius(const std::vector<cplx> &c)
{
    const real lead = std::abs(c.back());
    real m = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        m = std::max(m, std::abs(c[k]) / lead);
    }
    return std::min<real>(1 + m, 1e6);
}

bool aberth(const std::vector<cplx> &c, const std::vector<cplx> &dc, std::vector<cplx> &z, const RootOptions &opts)
{
    const std::size_t n = z.size();
    for (int it = 0; it < opts.max_iterations; ++it) {
        real worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx p = poly_eval(c, z[i]);
            if (p == cplx(0)) {
                continue;
            }
            const cplx ratio = p / poly_eval(dc, z[i]);
            cplx s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    s += real(1) / (z[i] - z[j]);
                }
            }
            const cplx step = ratio / (real(1) - ratio * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                return false;
            }
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max<real>(1, std::abs(z[i])));
        }
        if (worst < opts.tol) {
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<cplx> poly_roots(const std::vector<cplx> &coeffs, const RootOptions &opts)
{
    if (coeffs.size() < 2 || coeffs.back() == cplx(0)) {
        throw std::invalid_argument("poly_roots: need degree >= 1 with nonzero leading coefficient");
    }
    const std::size_t n = coeffs.size() - 1;
    const std::vector<cplx> dc = derivative(coeffs);
    const real rad = root_radius(coeffs);
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> jitter(-0.1, 0.1);

    for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
        std::vector<cplx> z(n);
        const real offset = attempt == 0 ? real(0.4) : real(0.4 + jitter(rng));
        for (std::size_t k = 0; k < n; ++k) {
            const real ang = 2 * std::numbers::pi_v<real> * (real(k) + offset) / real(n);
            const real r = rad * (attempt == 0 ? real(1) : real(1 + jitter(rng)));
            z[k] = std::polar(r, ang);
        }
        if (!aberth(coeffs, dc, z, opts)) {
            continue;
        }
        for (auto &x : z) {
            for (int k = 0; k < 3; ++k) {
                const cplx d = poly_eval(dc, x);
                if (d == cplx(0)) {
                    break;
                }
                x -= poly_eval(coeffs, x) / d;
            }
        }
        std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return z;
    }
    throw RootFindError("poly_roots: iteration did not converge");
}

} // namespace torquad
