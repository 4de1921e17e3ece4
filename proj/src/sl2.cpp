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

#include "torquad/sl2.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace torquad
{

namespace
{

// Returns (g, x, y) with a x + b y = g = gcd(a, b).
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, checked::sub(old_r, checked::mul(q, r)));
        std::tie(old_s, s) = std::make_pair(s, checked::sub(old_s, checked::mul(q, s)));
        std::tie(old_t, t) = std::make_pair(t, checked::sub(old_t, checked::mul(q, t)));
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

void require_divides(const Rat &x, std::int64_t n)
{
    if (n % mod1(x).den() != 0) {
        throw std::invalid_argument("coordinate " + x.to_string() + " is not in (1/" + std::to_string(n) +
                                    ")Z; the action mod n is undefined");
    }
}

} // namespace

Mat2::Mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : a_(a), b_(b), c_(c), d_(d)
{
    if (checked::sub(checked::mul(a, d), checked::mul(b, c)) != 1) {
        throw std::invalid_argument("matrix " + to_string() + " does not have determinant 1");
    }
}

Mat2 Mat2::inverse() const
{
    return Mat2(d_, checked::neg(b_), checked::neg(c_), a_);
}

Mat2 Mat2::transpose() const
{
    return Mat2(a_, c_, b_, d_);
}

Mat2 Mat2::operator-() const
{
    return Mat2(checked::neg(a_), checked::neg(b_), checked::neg(c_), checked::neg(d_));
}

Mat2 operator*(const Mat2 &x, const Mat2 &y)
{
    using namespace checked;
    return Mat2(add(mul(x.a_, y.a_), mul(x.b_, y.c_)), add(mul(x.a_, y.b_), mul(x.b_, y.d_)),
                add(mul(x.c_, y.a_), mul(x.d_, y.c_)), add(mul(x.c_, y.b_), mul(x.d_, y.d_)));
}

std::string Mat2::to_string() const
{
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]]";
}

Mat2 Mat2::parse(std::string_view text)
{
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compact.push_back(ch);
        }
    }
    static const std::regex re(R"(\[\[([+-]?\d+),([+-]?\d+)\],\[([+-]?\d+),([+-]?\d+)\]\])");
    std::smatch m;
    if (!std::regex_match(compact, m, re)) {
        throw ParseError("malformed matrix '" + std::string(text) + "', expected [[a,b],[c,d]]");
    }
    std::int64_t v[4];
    for (int i = 0; i < 4; ++i) {
        try {
            v[i] = std::stoll(m[i + 1].str());
        } catch (const std::out_of_range &) {
            throw OverflowError("matrix entry out of range in '" + std::string(text) + "'");
        }
    }
    return Mat2(v[0], v[1], v[2], v[3]);
}

Mat2ModN::Mat2ModN(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t n)
    : a_(0), b_(0), c_(0), d_(0), n_(n)
{
    if (n < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    a_ = mod_floor(a, n);
    b_ = mod_floor(b, n);
    c_ = mod_floor(c, n);
    d_ = mod_floor(d, n);
    const std::int64_t det = mod_floor(checked::sub(checked::mul(a_, d_), checked::mul(b_, c_)), n);
    if (det != mod_floor(1, n)) {
        throw std::invalid_argument("residue matrix " + to_string() + " does not have determinant 1");
    }
}

Mat2ModN::Mat2ModN(const Mat2 &m, std::int64_t n) : Mat2ModN(m.a(), m.b(), m.c(), m.d(), n) {}

Mat2ModN Mat2ModN::inverse() const
{
    return Mat2ModN(d_, n_ - b_, n_ - c_, a_, n_);
}

Mat2ModN Mat2ModN::transpose() const
{
    return Mat2ModN(a_, c_, b_, d_, n_);
}

Mat2ModN Mat2ModN::operator-() const
{
    return Mat2ModN(n_ - a_, n_ - b_, n_ - c_, n_ - d_, n_);
}

Mat2ModN operator*(const Mat2ModN &x, const Mat2ModN &y)
{
    if (x.n_ != y.n_) {
        throw std::invalid_argument("product of residue matrices with different moduli");
    }
    return Mat2ModN(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                    x.c_ * y.b_ + x.d_ * y.d_, x.n_);
}

std::string Mat2ModN::to_string() const
{
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]] mod " + std::to_string(n_);
}

std::pair<std::int64_t, std::int64_t> lift_coprime(std::int64_t a, std::int64_t b, std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (n == 1) {
        return {1, 0};
    }
    a = mod_floor(a, n);
    b = mod_floor(b, n);
    if (std::gcd(std::gcd(a, b), n) != 1) {
        throw std::invalid_argument("gcd(a, b, n) != 1; no coprime lift exists");
    }
    // b = 0 is replaced by n, so gcd(a + kn, n) = gcd(a, n) = 1 at k = 0.
    const std::int64_t bb = b == 0 ? n : b;
    // Every prime p | bb either divides n (and then not a) or admits a
    // class of k to avoid, so some k below bb works.
    for (std::int64_t k = 0; k <= bb; ++k) {
        const std::int64_t aa = checked::add(a, checked::mul(k, n));
        if (std::gcd(aa, bb) == 1) {
            return {aa, bb};
        }
    }
    throw std::logic_error("coprime lift search exhausted");
}

Mat2 Mat2ModN::lift() const
{
    if (n_ == 1) {
        return Mat2();
    }
    const auto [a1, b1] = lift_coprime(a_, b_, n_);
    const auto [g, x, y] = ext_gcd(a1, b1);
    (void)g;
    // a1 * x + b1 * y = 1, so [[a1, b1], [-y, x]] has determinant 1.
    const std::int64_t c0 = checked::neg(y);
    const std::int64_t d0 = x;
    const std::int64_t dc = mod_floor(checked::sub(c_, c0), n_);
    const std::int64_t dd = mod_floor(checked::sub(d_, d0), n_);
    const std::int64_t t = mod_floor(checked::add(checked::mul(x, dc), checked::mul(y, dd)), n_);
    Mat2 m(a1, b1, checked::add(c0, checked::mul(t, a1)), checked::add(d0, checked::mul(t, b1)));
    if (!(Mat2ModN(m, n_) == *this)) {
        throw std::logic_error("lift of " + to_string() + " failed");
    }
    return m;
}

TorsionCoord act(const Mat2 &g, const TorsionCoord &p)
{
    return TorsionCoord::reduce(Rat(g.a()) * p.r + Rat(g.b()) * p.theta, Rat(g.c()) * p.r + Rat(g.d()) * p.theta);
}

Quad act(const Mat2 &g, const Quad &s)
{
    std::array<TorsionCoord, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = act(g, s[i]);
    }
    // Quad's constructor rejects duplicates; the action is a bijection on R,
    // so a throw here would mean a bug in the reduction.
    return Quad(out);
}

Quad act(const Mat2ModN &g, const Quad &s)
{
    std::array<TorsionCoord, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
        require_divides(s[i].r, g.modulus());
        require_divides(s[i].theta, g.modulus());
        out[i] = TorsionCoord::reduce(Rat(g.a()) * s[i].r + Rat(g.b()) * s[i].theta,
                                      Rat(g.c()) * s[i].r + Rat(g.d()) * s[i].theta);
    }
    return Quad(out);
}

std::vector<Mat2ModN> enumerate_sl2_mod_n(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    std::vector<Mat2ModN> out;
    out.reserve(static_cast<std::size_t>(sl2_mod_n_order(n)));
    const std::int64_t one = mod_floor(1, n);
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            for (std::int64_t c = 0; c < n; ++c) {
                for (std::int64_t d = 0; d < n; ++d) {
                    if (mod_floor(a * d - b * c, n) == one) {
                        out.emplace_back(a, b, c, d, n);
                    }
                }
            }
        }
    }
    return out;
}

std::int64_t sl2_mod_n_order(std::int64_t n)
{
    // n^3 prod_{p | n} (1 - 1/p^2), assembled one prime power at a time.
    auto factor = [](std::int64_t p, std::int64_t pk) {
        return checked::mul(checked::mul(pk, pk) / p, checked::mul(pk, p * p - 1) / p);
    };
    std::int64_t result = 1;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) {
            continue;
        }
        std::int64_t pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        result = checked::mul(result, factor(p, pk));
    }
    if (m > 1) {
        result = checked::mul(result, factor(m, m));
    }
    return result;
}

std::vector<Quad> orbit(const Quad &s)
{
    const std::int64_t n = s.common_order();
    std::set<Quad> seen;
    for (const auto &g : enumerate_sl2_mod_n(n)) {
        seen.insert(act(g, s));
    }
    return {seen.begin(), seen.end()};
}

MinimalRepresentative minimal_representative(const Quad &s)
{
    const std::int64_t n = s.common_order();
    const auto group = enumerate_sl2_mod_n(n);
    const Mat2ModN *best_g = &group.front();
    Quad best = act(group.front(), s);
    for (const auto &g : group) {
        Quad img = act(g, s);
        if (img < best) {
            best = img;
            best_g = &g;
        }
    }
    return {best, best_g->lift()};
}

SubgroupModN::SubgroupModN(std::int64_t n, std::vector<Mat2ModN> elements) : n_(n), elems_(std::move(elements))
{
    for (const auto &g : elems_) {
        if (g.modulus() != n_) {
            throw std::invalid_argument("subgroup element with mismatched modulus");
        }
    }
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool SubgroupModN::contains(const Mat2ModN &g) const
{
    return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool SubgroupModN::is_subgroup() const
{
    if (!contains(Mat2ModN::identity(n_))) {
        return false;
    }
    for (const auto &g : elems_) {
        if (!contains(g.inverse())) {
            return false;
        }
        for (const auto &h : elems_) {
            if (!contains(g * h)) {
                return false;
            }
        }
    }
    return true;
}

bool SubgroupModN::is_subset_of(const SubgroupModN &other) const
{
    return other.n_ == n_ && std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

SubgroupModN stabilizer_gamma_S(const Quad &s)
{
    const std::int64_t n = s.common_order();
    std::vector<Mat2ModN> out;
    for (const auto &g : enumerate_sl2_mod_n(n)) {
        if (act(g, s) == s) {
            out.push_back(g.inverse().transpose());
        }
    }
    return SubgroupModN(n, std::move(out));
}

std::int64_t psl_quotient_order(const SubgroupModN &g)
{
    std::set<Mat2ModN> classes;
    for (const auto &x : g.elements()) {
        classes.insert(std::min(x, -x));
    }
    return static_cast<std::int64_t>(classes.size());
}

LevelAction::LevelAction(std::int64_t n) : n_(n), points_(points_of_order_dividing(n)), group_(enumerate_sl2_mod_n(n))
{
    if (points_.size() > 0xffff) {
        throw std::invalid_argument("level too large for the action table");
    }
    const auto np = points_.size();
    // Integer coordinates in units of 1/n.
    std::vector<std::pair<std::int64_t, std::int64_t>> ints(np);
    std::vector<std::int64_t> lookup(static_cast<std::size_t>(n * n), -1);
    orders_.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
        ints[i] = {(points_[i].r * Rat(n)).num(), (points_[i].theta * Rat(n)).num()};
        lookup[static_cast<std::size_t>(ints[i].first * n + ints[i].second)] = static_cast<std::int64_t>(i);
        orders_[i] = order(points_[i]);
    }
    auto reduce = [n](std::int64_t x, std::int64_t y) {
        x = mod_floor(x, n);
        y = mod_floor(y, n);
        if (2 * x > n) {
            x = n - x;
            y = mod_floor(-y, n);
        } else if ((x == 0 || 2 * x == n) && 2 * y > n) {
            y = n - y;
        }
        return std::make_pair(x, y);
    };
    table_.resize(group_.size() * np);
    for (std::size_t k = 0; k < group_.size(); ++k) {
        const auto &g = group_[k];
        for (std::size_t i = 0; i < np; ++i) {
            const auto [x, y] = ints[i];
            const auto [u, v] = reduce(g.a() * x + g.b() * y, g.c() * x + g.d() * y);
            const auto idx = lookup[static_cast<std::size_t>(u * n + v)];
            if (idx < 0) {
                throw std::logic_error("action table: image outside the point list");
            }
            table_[k * np + i] = static_cast<std::uint16_t>(idx);
        }
    }
}

std::size_t LevelAction::index_of(const TorsionCoord &p) const
{
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) {
        throw std::invalid_argument("point (" + p.to_string() + ") is not of order dividing " + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - points_.begin());
}

} // namespace torquad
