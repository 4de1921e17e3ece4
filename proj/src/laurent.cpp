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

#include "torquad/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "torquad/rational.hpp"

namespace torquad
{

namespace
{

constexpr std::int64_t kExactFloor = LaurentSeries::kExact / 2;

std::int64_t clamp_prec(std::int64_t p)
{
    return p >= kExactFloor ? LaurentSeries::kExact : p;
}

std::pair<LaurentSeries, LaurentSeries> common_scale(const LaurentSeries &a, const LaurentSeries &b)
{
    if (a.scale() == b.scale()) {
        return {a, b};
    }
    const std::int64_t s = checked::lcm(a.scale(), b.scale());
    return {a.rescaled(s), b.rescaled(s)};
}

bool is_exact_zero(const LaurentSeries &a)
{
    return a.is_exact() && a.coeffs().empty();
}

} // namespace

LaurentSeries::LaurentSeries(std::int64_t scale, std::int64_t lead, std::vector<cplx> coeffs, std::int64_t prec)
    : scale_(scale), lead_(lead), coeffs_(std::move(coeffs)), prec_(clamp_prec(prec))
{
    if (scale < 1) {
        throw std::invalid_argument("series scale must be positive");
    }
    trim();
}

LaurentSeries LaurentSeries::zero(std::int64_t scale, std::int64_t prec)
{
    return LaurentSeries(scale, 0, {}, prec);
}

LaurentSeries LaurentSeries::constant(cplx c, std::int64_t scale, std::int64_t prec)
{
    return LaurentSeries(scale, 0, {c}, prec);
}

LaurentSeries LaurentSeries::monomial(cplx c, std::int64_t e, std::int64_t scale, std::int64_t prec)
{
    return LaurentSeries(scale, e, {c}, prec);
}

void LaurentSeries::trim()
{
    if (!is_exact()) {
        const std::int64_t keep = std::max<std::int64_t>(0, prec_ - lead_);
        if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
            coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == cplx(0)) {
        ++first;
    }
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lead_ = is_exact() ? 0 : prec_;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
        lead_ += static_cast<std::int64_t>(first);
    }
    while (!coeffs_.empty() && coeffs_.back() == cplx(0)) {
        coeffs_.pop_back();
    }
}

cplx LaurentSeries::coeff(std::int64_t e) const
{
    if (e >= prec_) {
        throw std::out_of_range("coefficient t^" + std::to_string(e) + " lies beyond the known precision");
    }
    const std::int64_t k = e - lead_;
    if (k < 0 || k >= static_cast<std::int64_t>(coeffs_.size())) {
        return cplx(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

cplx LaurentSeries::coeff_q(std::int64_t num, std::int64_t den) const
{
    const Rat e = Rat(num, den) * Rat(scale_);
    if (!e.is_integer()) {
        return cplx(0);
    }
    return coeff(e.num());
}

LaurentSeries LaurentSeries::rescaled(std::int64_t new_scale) const
{
    if (new_scale % scale_ != 0) {
        throw std::invalid_argument("rescale target must be a multiple of the current scale");
    }
    const std::int64_t k = new_scale / scale_;
    if (k == 1) {
        return *this;
    }
    std::vector<cplx> c;
    if (!coeffs_.empty()) {
        c.assign((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, cplx(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            c[i * static_cast<std::size_t>(k)] = coeffs_[i];
        }
    }
    return LaurentSeries(new_scale, checked::mul(lead_, k), std::move(c),
                         is_exact() ? kExact : checked::mul(prec_, k));
}

LaurentSeries LaurentSeries::truncated(std::int64_t p) const
{
    LaurentSeries out = *this;
    out.prec_ = std::min(prec_, p);
    out.trim();
    return out;
}

double LaurentSeries::max_abs() const
{
    real m = 0;
    for (const auto &c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return static_cast<double>(m);
}

LaurentSeries LaurentSeries::stripped() const
{
    // Compare against the terms near the lead only: coefficients of q-series
    // can grow by many orders of magnitude further out, which says nothing
    // about rounding noise at the low end.
    const std::size_t window = std::min(coeffs_.size(), static_cast<std::size_t>(2 * scale_));
    real big = 1;
    for (std::size_t k = 0; k < window; ++k) {
        big = std::max(big, std::abs(coeffs_[k]));
    }
    const real thr = kZeroThreshold * big;
    std::size_t first = 0;
    while (first < coeffs_.size() && std::abs(coeffs_[first]) < thr) {
        ++first;
    }
    std::vector<cplx> c(coeffs_.begin() + static_cast<std::ptrdiff_t>(first), coeffs_.end());
    return LaurentSeries(scale_, lead_ + static_cast<std::int64_t>(first), std::move(c), prec_);
}

cplx LaurentSeries::evaluate(cplx q) const
{
    if (coeffs_.empty()) {
        return cplx(0);
    }
    const cplx lq = std::log(q);
    const cplx t = std::exp(lq / static_cast<real>(scale_));
    cplx p = std::exp(lq * (static_cast<real>(lead_) / static_cast<real>(scale_)));
    cplx sum(0);
    for (const auto &c : coeffs_) {
        sum += c * p;
        p *= t;
    }
    return sum;
}

LaurentSeries LaurentSeries::operator-() const
{
    std::vector<cplx> c(coeffs_);
    for (auto &x : c) {
        x = -x;
    }
    return LaurentSeries(scale_, lead_, std::move(c), prec_);
}

LaurentSeries operator+(const LaurentSeries &x, const LaurentSeries &y)
{
    const auto [a, b] = common_scale(x, y);
    const std::int64_t prec = std::min(a.prec(), b.prec());
    if (a.coeffs().empty() && b.coeffs().empty()) {
        return LaurentSeries::zero(a.scale(), prec);
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto *s : {&a, &b}) {
        if (!s->coeffs().empty()) {
            lo = std::min(lo, s->lead());
            hi = std::max(hi, s->lead() + static_cast<std::int64_t>(s->coeffs().size()));
        }
    }
    hi = std::min(hi, prec);
    if (hi <= lo) {
        return LaurentSeries::zero(a.scale(), prec);
    }
    std::vector<cplx> c(static_cast<std::size_t>(hi - lo), cplx(0));
    for (const auto *s : {&a, &b}) {
        for (std::size_t i = 0; i < s->coeffs().size(); ++i) {
            const std::int64_t e = s->lead() + static_cast<std::int64_t>(i);
            if (e < hi) {
                c[static_cast<std::size_t>(e - lo)] += s->coeffs()[i];
            }
        }
    }
    return LaurentSeries(a.scale(), lo, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b)
{
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries &x, const LaurentSeries &y)
{
    const auto [a, b] = common_scale(x, y);
    if (is_exact_zero(a) || is_exact_zero(b)) {
        return LaurentSeries::zero(a.scale());
    }
    // a = t^La (A + O(t^(Pa-La))), likewise b, so the product is known below
    // min(La + Pb, Lb + Pa).
    std::int64_t prec = LaurentSeries::kExact;
    if (!b.is_exact()) {
        prec = std::min(prec, a.lead() + b.prec());
    }
    if (!a.is_exact()) {
        prec = std::min(prec, b.lead() + a.prec());
    }
    if (a.coeffs().empty() || b.coeffs().empty()) {
        return LaurentSeries::zero(a.scale(), prec);
    }
    const std::int64_t lead = a.lead() + b.lead();
    std::int64_t len = static_cast<std::int64_t>(a.coeffs().size() + b.coeffs().size()) - 1;
    len = std::min(len, std::max<std::int64_t>(0, prec - lead));
    std::vector<cplx> c(static_cast<std::size_t>(len), cplx(0));
    const auto &ac = a.coeffs();
    const auto &bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size() && static_cast<std::int64_t>(i) < len; ++i) {
        const std::size_t jmax = std::min(bc.size(), static_cast<std::size_t>(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            c[i + j] += ac[i] * bc[j];
        }
    }
    return LaurentSeries(a.scale(), lead, std::move(c), prec);
}

LaurentSeries operator*(cplx k, const LaurentSeries &a)
{
    std::vector<cplx> c(a.coeffs());
    for (auto &x : c) {
        x *= k;
    }
    return LaurentSeries(a.scale(), a.lead(), std::move(c), a.prec());
}

LaurentSeries LaurentSeries::inverse() const
{
    const LaurentSeries a = stripped();
    if (a.coeffs_.empty()) {
        throw SeriesError("cannot invert a series that vanishes to working precision");
    }
    if (a.is_exact()) {
        if (a.coeffs_.size() != 1) {
            throw SeriesError("inverse of an exact polynomial needs a truncation first");
        }
        return monomial(real(1) / a.coeffs_[0], -a.lead_, scale_);
    }
    const std::int64_t out_prec = a.prec_ - 2 * a.lead_;
    const std::int64_t n = a.prec_ - a.lead_;
    std::vector<cplx> b(static_cast<std::size_t>(n), cplx(0));
    const cplx inv0 = real(1) / a.coeffs_[0];
    for (std::int64_t k = 0; k < n; ++k) {
        cplx acc = k == 0 ? cplx(1) : cplx(0);
        const std::int64_t jmax = std::min<std::int64_t>(k, static_cast<std::int64_t>(a.coeffs_.size()) - 1);
        for (std::int64_t j = 1; j <= jmax; ++j) {
            acc -= a.coeffs_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        }
        b[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return LaurentSeries(scale_, -a.lead_, std::move(b), out_prec);
}

LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b)
{
    return a * b.inverse();
}

LaurentSeries LaurentSeries::pow(unsigned k) const
{
    LaurentSeries out = constant(real(1), scale_);
    for (unsigned i = 0; i < k; ++i) {
        out = out * *this;
    }
    return out;
}

namespace
{

template <typename F>
void for_common_terms(const LaurentSeries &x, const LaurentSeries &y, F &&f)
{
    const auto [a, b] = common_scale(x, y);
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto *s : {&a, &b}) {
        if (!s->coeffs().empty()) {
            lo = std::min(lo, s->lead());
            hi = std::max(hi, s->lead() + static_cast<std::int64_t>(s->coeffs().size()));
        }
    }
    hi = std::min(hi, std::min(a.prec(), b.prec()));
    for (std::int64_t e = lo; e < hi; ++e) {
        f(a.coeff(e), b.coeff(e));
    }
}

} // namespace

bool approx_equal(const LaurentSeries &a, const LaurentSeries &b, double tol)
{
    bool ok = true;
    for_common_terms(a, b, [&](cplx x, cplx y) {
        if (std::abs(x - y) > tol * std::max({real(1), std::abs(x), std::abs(y)})) {
            ok = false;
        }
    });
    return ok;
}

double max_difference(const LaurentSeries &a, const LaurentSeries &b)
{
    real m = 0;
    for_common_terms(a, b, [&](cplx x, cplx y) { m = std::max(m, std::abs(x - y)); });
    return static_cast<double>(m);
}

} // namespace torquad
