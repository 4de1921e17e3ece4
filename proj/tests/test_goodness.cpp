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

#include <doctest.h>

#include <array>

#include "test_util.hpp"
#include "torquad/goodness.hpp"

using namespace torquad;
using torquad::testing::random_mat2;
using torquad::testing::random_quad;
using torquad::testing::uniform;

namespace
{

bool good4(Rat a, Rat b, Rat c, Rat d)
{
    const std::array<Rat, 4> xs{a, b, c, d};
    return good_scalars(xs);
}

// Scan of every residue pair, independent of good_quad's ordering.
bool brute_good(const Quad &s)
{
    const std::int64_t n = s.common_order();
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            if (std::gcd(std::gcd(a, b), n) == 1 && good_for(s, a, b)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("good_scalars")
{
    CHECK(good4(0, 0, Rat(1, 2), Rat(1, 2)));
    CHECK_FALSE(good4(0, Rat(1, 4), Rat(1, 4), Rat(1, 2)));
    CHECK(good4(Rat(1, 5), Rat(2, 5), 0, 0));
    CHECK_FALSE(good4(Rat(1, 3), Rat(2, 3), Rat(1, 3), Rat(4, 3)));
}

TEST_CASE("good_quad examples")
{
    const Quad s5 = parse_quad("0,1/5;0,2/5;1/5,0;2/5,0");
    const auto w = good_quad(s5);
    REQUIRE(w.has_value());
    CHECK(std::gcd(w->a, w->b) == 1);
    CHECK(good_for(s5, w->a, w->b));
    CHECK_FALSE(good_quad(parse_quad("0,1/3;1/3,0;1/3,1/3;1/3,2/3")).has_value());
    const Quad two = parse_quad("0,0;0,1/2;1/2,0;1/2,1/2");
    CHECK(good_for(two, 0, 1));
    CHECK(good_quad(two).has_value());
}

TEST_CASE("witness completes to SL2")
{
    for (int i = 0; i < 300; ++i) {
        const Quad s = random_quad(12);
        if (const auto w = good_quad(s)) {
            const Mat2 m = w->matrix();
            REQUIRE(m.a() == w->a);
            REQUIRE(m.b() == w->b);
            // The first coordinates of the transformed quad are good.
            const Quad t = act(m, s);
            std::array<Rat, 4> rs{t[0].r, t[1].r, t[2].r, t[3].r};
            REQUIRE(good_scalars(rs));
        }
    }
}

TEST_CASE("progression data for the case-10 quad")
{
    const Quad c10 = parse_quad("0,1/8;1/4,1/8;1/4,3/8;1/2,1/8");
    REQUIRE(has_progression_shape(c10));
    const ProgressionData pd = progression_data(c10);
    const std::array<std::int64_t, 8> gaps{4, 4, 2, 2, 4, 4, 4, 4};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(pd.gap(i) == gaps[i]);
    }
    // A1: c/4 + 1/8 = 0 mod 1 has no integer solution.
    CHECK(pd.sets[0].empty);
    CHECK(pd.sets[1].empty);
    CHECK(covers_Z(pd));
    CHECK(harmonic_sum(pd) == Rat(3, 2));
}

TEST_CASE("non-good family quads satisfy the covering condition")
{
    for (const auto &s : {"0,1/3;1/3,0;1/3,1/3;1/3,2/3", "0,1/4;1/4,0;1/4,1/4;1/4,1/2", "0,1/4;1/2,0;1/2,1/4;1/2,1/2",
                          "0,1/6;1/6,0;1/6,1/6;1/3,2/3", "0,1/6;1/6,0;1/6,1/3;1/3,5/6", "0,1/6;1/3,0;1/3,1/6;1/3,1/3",
                          "0,1/6;1/3,1/6;1/3,1/2;1/3,5/6", "0,1/8;1/4,1/8;1/4,3/8;1/2,1/8",
                          "0,1/12;1/3,1/12;1/3,11/12;1/2,1/4"}) {
        const Quad q = parse_quad(s);
        REQUIRE(has_progression_shape(q));
        const ProgressionData pd = progression_data(q);
        CHECK(covers_Z(pd));
        CHECK(harmonic_sum(pd) >= Rat(1));
        CHECK_FALSE(good_quad(q).has_value());
    }
}

TEST_CASE("progression helpers")
{
    ProgressionData none;
    CHECK_FALSE(covers_Z(none));
    CHECK(harmonic_sum(none) == Rat(0));
    ProgressionData one;
    one.sets[0] = Progression{false, 0, 1};
    CHECK(covers_Z(one));
    ProgressionData third;
    third.sets[2] = Progression{false, 2, 3};
    CHECK(harmonic_sum(third) == Rat(1, 3));
    const Progression p = solve_linear_congruence(Rat(1, 4), Rat(1, 2));
    CHECK_FALSE(p.empty);
    CHECK(p.modulus == 4);
    CHECK(p.contains(2));
    CHECK(p.contains(-2));
    CHECK_FALSE(p.contains(1));
    CHECK(solve_linear_congruence(Rat(1, 4), Rat(1, 8)).empty);
    CHECK_THROWS_AS(progression_data(parse_quad("1/5,1/5;1/5,4/5;2/5,2/5;2/5,3/5")), ShapeError);
}

TEST_CASE("property: goodness is SL2-invariant (1500 instances)")
{
    for (int i = 0; i < 1500; ++i) {
        const Quad s = random_quad(12);
        const Mat2 g = random_mat2();
        REQUIRE(good_quad(s).has_value() == good_quad(act(g, s)).has_value());
    }
}

TEST_CASE("property: good_quad agrees with a full residue scan (1000 instances)")
{
    for (int i = 0; i < 1000; ++i) {
        const Quad s = random_quad(10);
        REQUIRE(good_quad(s).has_value() == brute_good(s));
    }
}

TEST_CASE("property: goodness of (a, b) depends only on residues (2000 instances)")
{
    for (int i = 0; i < 2000; ++i) {
        const Quad s = random_quad(12);
        const std::int64_t n = s.common_order();
        const std::int64_t a = uniform(-30, 30), b = uniform(-30, 30);
        REQUIRE(good_for(s, a, b) == good_for(s, a + n * uniform(-3, 3), b + n * uniform(-3, 3)));
    }
}

TEST_CASE("property: the progression filter never discards a non-good quad")
{
    int shaped = 0;
    for (int i = 0; i < 40000 && shaped < 1000; ++i) {
        const Quad s = random_quad(12);
        if (!has_progression_shape(s)) {
            continue;
        }
        ++shaped;
        const ProgressionData pd = progression_data(s);
        REQUIRE(pd.gap(0) == pd.gap(1));
        REQUIRE(pd.gap(4) == pd.gap(5));
        REQUIRE(pd.gap(6) == pd.gap(7));
        const std::int64_t d1 = pd.gap(0), d4 = pd.gap(3);
        REQUIRE(d1 == (d1 % 2 == 0 ? 2 * d4 : d4));
        if (harmonic_sum(pd) < Rat(1) || !covers_Z(pd)) {
            REQUIRE(good_quad(s).has_value());
        }
    }
    CHECK(shaped >= 1000);
}
