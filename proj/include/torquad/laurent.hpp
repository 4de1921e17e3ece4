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

#ifndef TORQUAD_LAURENT_HPP
#define TORQUAD_LAURENT_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace torquad
{

using real = long double;
using cplx = std::complex<real>;

/// Raised when a series that must be invertible is zero to working accuracy.
class SeriesError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Truncated Laurent series in t = q^(1/s).
///
/// Coefficient k of coeffs() multiplies t^(lead + k). Every exponent below
/// prec() is known; nothing is known at or above it. Exact polynomials carry
/// prec() == kExact.
class LaurentSeries
{
public:
    static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

    /// Leading coefficients below this fraction of the largest one within
    /// q^2 of the lead (and of 1) count as zero when inverting.
    static constexpr double kZeroThreshold = 1e-13;

    /// Zero with scale 1, exact.
    LaurentSeries() = default;
    LaurentSeries(std::int64_t scale, std::int64_t lead, std::vector<cplx> coeffs, std::int64_t prec);

    static LaurentSeries zero(std::int64_t scale, std::int64_t prec = kExact);
    static LaurentSeries constant(cplx c, std::int64_t scale, std::int64_t prec = kExact);
    /// c t^e
    static LaurentSeries monomial(cplx c, std::int64_t e, std::int64_t scale, std::int64_t prec = kExact);

    std::int64_t scale() const noexcept { return scale_; }
    std::int64_t lead() const noexcept { return lead_; }
    std::int64_t prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return prec_ == kExact; }
    const std::vector<cplx> &coeffs() const noexcept { return coeffs_; }

    /// Coefficient of t^e (0 outside the stored range). Requires e < prec().
    cplx coeff(std::int64_t e) const;
    /// Coefficient of q^x for rational x = num/den; 0 unless x*s is integral.
    cplx coeff_q(std::int64_t num, std::int64_t den) const;

    /// Same series in t' = q^(1/new_scale); new_scale must be a multiple of scale().
    LaurentSeries rescaled(std::int64_t new_scale) const;
    /// Forget everything at exponents >= p.
    LaurentSeries truncated(std::int64_t p) const;
    /// Drops leading coefficients that are zero to working accuracy.
    LaurentSeries stripped() const;

    /// Largest |coefficient|, or 0.
    double max_abs() const;

    /// Sum of the known terms at q (principal branch of q^(1/s)).
    cplx evaluate(cplx q) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b);
    friend LaurentSeries operator*(cplx c, const LaurentSeries &a);
    friend LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b);

    /// Multiplicative inverse. Throws SeriesError if the series is zero to
    /// working accuracy, or if it is an exact polynomial with more than one
    /// term (its inverse would be infinite; truncate first).
    LaurentSeries inverse() const;

    LaurentSeries pow(unsigned k) const;

private:
    void trim();

    std::int64_t scale_ = 1;
    std::int64_t lead_ = 0;
    std::vector<cplx> coeffs_;
    std::int64_t prec_ = kExact;
};

/// Coefficientwise |a - b| <= tol * max(1, |a|, |b|) below the smaller precision.
bool approx_equal(const LaurentSeries &a, const LaurentSeries &b, double tol);

/// Largest |coefficient| of a - b below the smaller precision.
double max_difference(const LaurentSeries &a, const LaurentSeries &b);

} // namespace torquad

#endif
