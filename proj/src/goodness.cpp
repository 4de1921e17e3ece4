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

#include "torquad/goodness.hpp"

#include <algorithm>
#include <numeric>

namespace torquad
{

bool good_scalars(std::span<const Rat, 4> xs)
{
    std::array<Rat, 4> f;
    for (std::size_t i = 0; i < 4; ++i) {
        f[i] = f_scalar(xs[i]);
    }
    std::sort(f.begin(), f.end());
    return f[1] < f[2];
}

bool good_residues(std::span<const std::int64_t, 4> xs, std::int64_t n)
{
    std::array<std::int64_t, 4> f;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::int64_t v = mod_floor(xs[i], n);
        f[i] = std::min(v, n - v);
    }
    std::sort(f.begin(), f.end());
    return f[1] < f[2];
}

Mat2 Witness::matrix() const
{
    // Extended Euclid on (a, b): a d - b c = 1.
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return Mat2(a, b, -old_t, old_s);
}

bool good_for(const Quad &s, std::int64_t a, std::int64_t b)
{
    std::array<Rat, 4> xs;
    for (std::size_t i = 0; i < 4; ++i) {
        xs[i] = Rat(a) * s[i].r + Rat(b) * s[i].theta;
    }
    return good_scalars(xs);
}

std::optional<Witness> good_quad(const Quad &s)
{
    const std::int64_t n = s.common_order();
    std::array<std::int64_t, 4> rs;
    std::array<std::int64_t, 4> ts;
    for (std::size_t i = 0; i < 4; ++i) {
        rs[i] = (s[i].r * Rat(n)).num();
        ts[i] = (s[i].theta * Rat(n)).num();
    }
    std::array<std::int64_t, 4> vals;
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            if (std::gcd(std::gcd(a, b), n) != 1) {
                continue;
            }
            for (std::size_t i = 0; i < 4; ++i) {
                vals[i] = a * rs[i] + b * ts[i];
            }
            if (good_residues(vals, n)) {
                const auto [la, lb] = lift_coprime(a, b, n);
                return Witness{la, lb};
            }
        }
    }
    return std::nullopt;
}

Progression solve_linear_congruence(const Rat &alpha, const Rat &beta)
{
    const Rat a = mod1(alpha);
    const Rat b = mod1(beta);
    Progression out;
    if (a.is_zero()) {
        out.modulus = 1;
        out.empty = !b.is_zero();
        out.residue = 0;
        return out;
    }
    // alpha = p/q in lowest terms; c p / q = -beta mod 1 needs beta q in Z.
    const std::int64_t q = a.den();
    const std::int64_t p = a.num();
    out.modulus = q;
    const Rat bq = b * Rat(q);
    if (!bq.is_integer()) {
        out.empty = true;
        return out;
    }
    // c p = -bq (mod q), p invertible mod q.
    std::int64_t inv = 0;
    for (std::int64_t x = 1; x < q; ++x) {
        if (mod_floor(checked::mul(p, x), q) == 1) {
            inv = x;
            break;
        }
    }
    if (q == 1) {
        inv = 0;
    }
    out.empty = false;
    out.residue = mod_floor(checked::mul(mod_floor(-bq.num(), q), inv), q);
    return out;
}

bool has_progression_shape(const Quad &s)
{
    return s[0].r.is_zero() && s[1].r == s[2].r && !(s[1].theta == s[2].theta) && s[1].r <= s[3].r;
}

ProgressionData progression_data(const Quad &s)
{
    if (!has_progression_shape(s)) {
        throw ShapeError("quad " + format_quad(s) + " is not of the form {(0,t1),(r,t2),(r,t3),(r4,t4)}");
    }
    const Rat &r = s[1].r;
    const Rat &r4 = s[3].r;
    const Rat &t2 = s[1].theta;
    const Rat &t3 = s[2].theta;
    const Rat &t4 = s[3].theta;
    ProgressionData pd;
    pd.sets[0] = solve_linear_congruence(r, t2);
    pd.sets[1] = solve_linear_congruence(r, t3);
    pd.sets[2] = solve_linear_congruence(r4, t4);
    pd.sets[3] = solve_linear_congruence(Rat(2) * r, t2 + t3);
    pd.sets[4] = solve_linear_congruence(r4 + r, t4 + t2);
    pd.sets[5] = solve_linear_congruence(r4 + r, t4 + t3);
    pd.sets[6] = solve_linear_congruence(r4 - r, t4 - t2);
    pd.sets[7] = solve_linear_congruence(r4 - r, t4 - t3);
    return pd;
}

bool covers_Z(const ProgressionData &pd)
{
    std::int64_t l = 1;
    bool any = false;
    for (const auto &p : pd.sets) {
        if (!p.empty) {
            l = checked::lcm(l, p.modulus);
            any = true;
        }
    }
    if (!any) {
        return false;
    }
    for (std::int64_t c = 0; c < l; ++c) {
        const bool hit = std::any_of(pd.sets.begin(), pd.sets.end(), [c](const Progression &p) { return p.contains(c); });
        if (!hit) {
            return false;
        }
    }
    return true;
}

Rat harmonic_sum(const ProgressionData &pd)
{
    Rat sum(0);
    for (const auto &p : pd.sets) {
        if (!p.empty) {
            sum += Rat(1, p.modulus);
        }
    }
    return sum;
}

} // namespace torquad
