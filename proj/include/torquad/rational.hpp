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

#ifndef TORQUAD_RATIONAL_HPP
#define TORQUAD_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torquad
{

/// Raised whenever a checked integer operation would leave the int64 range.
class OverflowError : public std::overflow_error
{
public:
    using std::overflow_error::overflow_error;
};

/// Raised on malformed textual input (rationals, points, quads, matrices).
class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace checked
{

inline std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition");
    }
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return r;
}

inline std::int64_t neg(std::int64_t a)
{
    return sub(0, a);
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    const std::int64_t g = std::gcd(a, b);
    return mul(a / g, b < 0 ? neg(b) : b);
}

} // namespace checked

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Exact reduced fraction num/den with den > 0. Every operation is
/// overflow-checked and throws OverflowError instead of wrapping.
class Rat
{
public:
    constexpr Rat() = default;

    Rat(std::int64_t num) : num_(num), den_(1) {}

    Rat(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw std::domain_error("zero denominator");
        }
        if (den < 0) {
            num = checked::neg(num);
            den = checked::neg(den);
        }
        const std::int64_t g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer not exceeding the value.
    std::int64_t floor() const noexcept
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) {
            --q;
        }
        return q;
    }

    double to_double() const noexcept
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rat operator-() const { return Rat(checked::neg(num_), den_, Reduced{}); }

    friend Rat operator+(const Rat &a, const Rat &b)
    {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t da = a.den_ / g;
        const std::int64_t db = b.den_ / g;
        const std::int64_t n = checked::add(checked::mul(a.num_, db), checked::mul(b.num_, da));
        return Rat(n, checked::mul(a.den_, db));
    }

    friend Rat operator-(const Rat &a, const Rat &b) { return a + (-b); }

    friend Rat operator*(const Rat &a, const Rat &b)
    {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const std::int64_t n = checked::mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1));
        const std::int64_t d = checked::mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1));
        return Rat(n, d);
    }

    friend Rat operator/(const Rat &a, const Rat &b)
    {
        if (b.num_ == 0) {
            throw std::domain_error("division by zero rational");
        }
        return a * Rat(b.den_, b.num_);
    }

    Rat &operator+=(const Rat &o) { return *this = *this + o; }
    Rat &operator-=(const Rat &o) { return *this = *this - o; }
    Rat &operator*=(const Rat &o) { return *this = *this * o; }

    friend bool operator==(const Rat &a, const Rat &b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) noexcept
    {
        // 128-bit cross multiplication cannot overflow for int64 operands.
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) {
            return std::strong_ordering::less;
        }
        if (lhs > rhs) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// "p/q", or "p" when the value is an integer.
    std::string to_string() const
    {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p", "p/q", with optional sign on p. Whitespace is not allowed.
    static Rat parse(std::string_view text);

private:
    struct Reduced {};
    Rat(std::int64_t n, std::int64_t d, Reduced) noexcept : num_(n), den_(d) {}

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace torquad

#endif
