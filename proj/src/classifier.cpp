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

#include "torquad/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "torquad/sl2.hpp"

namespace torquad
{

namespace
{

Quad make_quad(std::initializer_list<std::pair<Rat, Rat>> pts)
{
    std::array<TorsionCoord, 4> arr;
    std::size_t i = 0;
    for (const auto &[r, t] : pts) {
        arr[i++] = TorsionCoord{r, t};
    }
    return Quad(arr);
}

Rat q(std::int64_t a, std::int64_t b)
{
    return Rat(a, b);
}

std::uint32_t pack(const std::array<std::uint16_t, 4> &idx)
{
    // Indices are < 256 for every level this packing is used with.
    return (std::uint32_t(idx[0]) << 24) | (std::uint32_t(idx[1]) << 16) | (std::uint32_t(idx[2]) << 8) |
           std::uint32_t(idx[3]);
}

} // namespace

Rat tag_value(ConstantTag tag)
{
    switch (tag) {
    case ConstantTag::TwentySevenQuarters:
        return Rat(27, 4);
    case ConstantTag::Zero:
        return Rat(0);
    case ConstantTag::OneHalf:
        return Rat(1, 2);
    case ConstantTag::EightThirds:
        return Rat(8, 3);
    }
    throw std::logic_error("unknown constant tag");
}

std::string tag_label(ConstantTag tag)
{
    return tag_value(tag).to_string();
}

std::optional<ConstantTag> match_tag(double re, double im, double tol)
{
    for (auto tag : {ConstantTag::TwentySevenQuarters, ConstantTag::Zero, ConstantTag::OneHalf,
                     ConstantTag::EightThirds}) {
        if (std::hypot(re - tag_value(tag).to_double(), im) < tol) {
            return tag;
        }
    }
    return std::nullopt;
}

std::vector<FamilyEntry> family_table(std::int64_t max_order)
{
    using T = ConstantTag;
    std::vector<FamilyEntry> all;
    auto add = [&](int c, std::optional<Rat> param, Quad s, T tag) {
        if (s.common_order() <= max_order) {
            all.push_back(FamilyEntry{c, param, s, tag});
        }
    };

    // (1) {(0,a),(0,1/4),(0,1/2-a),(1/2,1/4)}, a in {0} u {1/(2r) : r >= 3}.
    // Members have order lcm(2r, 4) >= 2r, so r <= max_order / 2 suffices.
    add(1, Rat(0), make_quad({{0, 0}, {0, q(1, 4)}, {0, q(1, 2)}, {q(1, 2), q(1, 4)}}), T::TwentySevenQuarters);
    for (std::int64_t r = 3; 2 * r <= max_order; ++r) {
        const Rat a(1, 2 * r);
        add(1, a, make_quad({{0, a}, {0, q(1, 4)}, {0, q(1, 2) - a}, {q(1, 2), q(1, 4)}}), T::TwentySevenQuarters);
    }
    // (2) {(0,b),(1/4,0),(1/4,1/2),(1/2,b)}, b in {1/(2r) : r >= 2}.
    for (std::int64_t r = 2; 2 * r <= max_order; ++r) {
        const Rat b(1, 2 * r);
        add(2, b, make_quad({{0, b}, {q(1, 4), 0}, {q(1, 4), q(1, 2)}, {q(1, 2), b}}), T::TwentySevenQuarters);
    }
    add(3, std::nullopt, make_quad({{0, q(1, 3)}, {q(1, 3), 0}, {q(1, 3), q(1, 3)}, {q(1, 3), q(2, 3)}}), T::Zero);
    add(4, std::nullopt, make_quad({{0, q(1, 4)}, {q(1, 4), 0}, {q(1, 4), q(1, 4)}, {q(1, 4), q(1, 2)}}), T::OneHalf);
    add(5, std::nullopt, make_quad({{0, q(1, 4)}, {q(1, 2), 0}, {q(1, 2), q(1, 4)}, {q(1, 2), q(1, 2)}}),
        T::TwentySevenQuarters);
    add(6, std::nullopt, make_quad({{0, q(1, 6)}, {q(1, 6), 0}, {q(1, 6), q(1, 6)}, {q(1, 3), q(2, 3)}}), T::Zero);
    add(7, std::nullopt, make_quad({{0, q(1, 6)}, {q(1, 6), 0}, {q(1, 6), q(1, 3)}, {q(1, 3), q(5, 6)}}),
        T::EightThirds);
    add(8, std::nullopt, make_quad({{0, q(1, 6)}, {q(1, 3), 0}, {q(1, 3), q(1, 6)}, {q(1, 3), q(1, 3)}}),
        T::EightThirds);
    add(9, std::nullopt, make_quad({{0, q(1, 6)}, {q(1, 3), q(1, 6)}, {q(1, 3), q(1, 2)}, {q(1, 3), q(5, 6)}}), T::Zero);
    add(10, std::nullopt, make_quad({{0, q(1, 8)}, {q(1, 4), q(1, 8)}, {q(1, 4), q(3, 8)}, {q(1, 2), q(1, 8)}}),
        T::OneHalf);
    add(11, std::nullopt,
        make_quad({{0, q(1, 12)}, {q(1, 3), q(1, 12)}, {q(1, 3), q(11, 12)}, {q(1, 2), q(1, 4)}}), T::Zero);

    std::sort(all.begin(), all.end(), [](const FamilyEntry &x, const FamilyEntry &y) { return x.quad < y.quad; });
    return all;
}

std::optional<FamilyEntry> lookup_family(const Quad &s)
{
    for (auto &e : family_table(s.common_order())) {
        if (e.quad == s) {
            return e;
        }
    }
    return std::nullopt;
}

namespace
{

// Visits the orbit minima of level n in increasing order. The 4-subsets are
// generated in lexicographic order, so the first member of an orbit reached
// is its minimum; its whole orbit is then marked as seen.
template <typename Visit>
void for_each_minimal_quad(const LevelAction &level, Visit &&visit)
{
    const auto np = level.points().size();
    const std::int64_t n = level.level();
    if (np > 255) {
        throw std::invalid_argument("order " + std::to_string(n) + " is beyond the supported search range");
    }
    std::unordered_set<std::uint32_t> seen;
    std::array<std::uint16_t, 4> idx;
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = i + 1; j < np; ++j) {
            for (std::size_t k = j + 1; k < np; ++k) {
                for (std::size_t l = k + 1; l < np; ++l) {
                    std::int64_t ord = std::lcm(std::lcm(level.point_order(i), level.point_order(j)),
                                                std::lcm(level.point_order(k), level.point_order(l)));
                    if (ord != n) {
                        continue;
                    }
                    idx = {std::uint16_t(i), std::uint16_t(j), std::uint16_t(k), std::uint16_t(l)};
                    if (seen.count(pack(idx))) {
                        continue;
                    }
                    for (std::size_t g = 0; g < level.group().size(); ++g) {
                        std::array<std::uint16_t, 4> img = {level.image(g, i), level.image(g, j), level.image(g, k),
                                                            level.image(g, l)};
                        std::sort(img.begin(), img.end());
                        seen.insert(pack(img));
                    }
                    const auto &pts = level.points();
                    visit(Quad({pts[i], pts[j], pts[k], pts[l]}));
                }
            }
        }
    }
}

// Probes used before the full residue scan.
bool quick_good(const Quad &s)
{
    return good_for(s, 0, 1) || good_for(s, 1, 0) || good_for(s, 1, 1);
}

} // namespace

std::vector<Quad> enumerate_minimal_quads(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("order must be positive");
    }
    std::vector<Quad> out;
    if (n == 1) {
        return out; // a single point of order 1
    }
    LevelAction level(n);
    for_each_minimal_quad(level, [&](const Quad &s) { out.push_back(s); });
    return out;
}

std::vector<ClassifiedQuad> classify(const ClassifyOptions &opts, ClassifyStats *stats)
{
    if (opts.max_order < 2) {
        throw std::invalid_argument("classify needs max order >= 2");
    }
    ClassifyStats local;
    std::vector<ClassifiedQuad> out;
    for (std::int64_t n = 2; n <= opts.max_order; ++n) {
        LevelAction level(n);
        for_each_minimal_quad(level, [&](const Quad &s) {
            ++local.minimal_quads;
            if (opts.prune) {
                if (quick_good(s)) {
                    ++local.quick_good;
                    return;
                }
                // A minimal quad that is not good has the progression shape
                // and its progressions cover Z; failing either proves it good.
                if (has_progression_shape(s)) {
                    const auto pd = progression_data(s);
                    if (harmonic_sum(pd) < Rat(1) || !covers_Z(pd)) {
                        ++local.progression_good;
                        return;
                    }
                }
            }
            ++local.full_scans;
            if (!good_quad(s)) {
                out.push_back(ClassifiedQuad{s, n});
            }
        });
    }
    if (stats) {
        *stats = local;
    }
    return out;
}

MatchReport match_families(const std::vector<ClassifiedQuad> &results, std::int64_t max_order)
{
    std::vector<Quad> expected;
    for (const auto &e : family_table(max_order)) {
        expected.push_back(e.quad);
    }
    std::vector<Quad> got;
    for (const auto &c : results) {
        got.push_back(c.quad);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    MatchReport rep;
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(rep.missing));
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(rep.extra));
    rep.pass = rep.missing.empty() && rep.extra.empty();
    return rep;
}

} // namespace torquad
