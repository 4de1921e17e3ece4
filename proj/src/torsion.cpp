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

#include "torquad/torsion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace torquad
{

namespace
{

const Rat kHalf(1, 2);

std::int64_t parse_int(std::string_view s, std::string_view whole)
{
    std::int64_t v = 0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) {
        throw OverflowError("integer literal out of range in '" + std::string(whole) + "'");
    }
    if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text, text));
    }
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rat(num, den);
}

Rat mod1(const Rat &x)
{
    return x - Rat(x.floor());
}

Rat f_scalar(const Rat &x)
{
    const Rat y = mod1(x);
    return y > kHalf ? Rat(1) - y : y;
}

bool TorsionCoord::in_domain(const Rat &r, const Rat &theta)
{
    if (r == Rat(0) || r == kHalf) {
        return theta >= Rat(0) && theta <= kHalf;
    }
    return r > Rat(0) && r < kHalf && theta >= Rat(0) && theta < Rat(1);
}

TorsionCoord TorsionCoord::reduce(const Rat &r, const Rat &theta)
{
    Rat rr = mod1(r);
    Rat tt = mod1(theta);
    if (rr > kHalf) {
        rr = Rat(1) - rr;
        tt = mod1(-tt);
    } else if ((rr.is_zero() || rr == kHalf) && tt > kHalf) {
        // On the two boundary strips -(r, theta) has the same r.
        tt = Rat(1) - tt;
    }
    return TorsionCoord{rr, tt};
}

std::string TorsionCoord::to_string() const
{
    return r.to_string() + "," + theta.to_string();
}

std::int64_t order(const TorsionCoord &p)
{
    return checked::lcm(order(mod1(p.r)), order(mod1(p.theta)));
}

Quad::Quad(const std::array<TorsionCoord, 4> &points)
{
    for (std::size_t i = 0; i < 4; ++i) {
        pts_[i] = TorsionCoord::reduce(points[i].r, points[i].theta);
    }
    std::sort(pts_.begin(), pts_.end());
    for (std::size_t i = 1; i < 4; ++i) {
        if (pts_[i] == pts_[i - 1]) {
            throw DuplicatePointError("duplicate point (" + pts_[i].to_string() + ") in quadruple");
        }
    }
}

std::int64_t Quad::common_order() const
{
    std::int64_t n = 1;
    for (const auto &p : pts_) {
        n = checked::lcm(n, order(p));
    }
    return n;
}

bool Quad::contains(const TorsionCoord &p) const noexcept
{
    return std::find(pts_.begin(), pts_.end(), p) != pts_.end();
}

Quad parse_quad(std::string_view text)
{
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            compact.push_back(ch);
        }
    }
    const auto pts = split(compact, ';');
    if (pts.size() != 4) {
        throw ParseError("expected 4 points separated by ';', got " + std::to_string(pts.size()));
    }
    std::array<TorsionCoord, 4> coords;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto parts = split(pts[i], ',');
        if (parts.size() != 2) {
            throw ParseError("point '" + std::string(pts[i]) + "' is not of the form r,theta");
        }
        coords[i] = TorsionCoord{Rat::parse(parts[0]), Rat::parse(parts[1])};
    }
    return Quad(coords);
}

std::string format_quad(const Quad &s)
{
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) {
            out += ';';
        }
        out += s[i].to_string();
    }
    return out;
}

std::vector<TorsionCoord> points_of_order_dividing(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("order bound must be positive");
    }
    std::set<TorsionCoord> pts;
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            pts.insert(TorsionCoord::reduce(Rat(a, n), Rat(b, n)));
        }
    }
    return {pts.begin(), pts.end()};
}

} // namespace torquad
