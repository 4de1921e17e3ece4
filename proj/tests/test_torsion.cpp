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

#include <set>

#include "test_util.hpp"
#include "torquad/torsion.hpp"

using namespace torquad;
using torquad::testing::random_rat;

TEST_CASE("mod1 reduces into [0,1)")
{
    CHECK(mod1(Rat(7, 4)) == Rat(3, 4));
    CHECK(mod1(Rat(-1, 3)) == Rat(2, 3));
    CHECK(mod1(Rat(0)) == Rat(0));
    CHECK(mod1(Rat(-2)) == Rat(0));
}

TEST_CASE("f_scalar folds onto [0,1/2]")
{
    CHECK(f_scalar(Rat(3, 4)) == Rat(1, 4));
    CHECK(f_scalar(Rat(1, 2)) == Rat(1, 2));
    CHECK(f_scalar(Rat(2, 5)) == Rat(2, 5));
    CHECK(f_scalar(Rat(-7, 3)) == Rat(1, 3));
}

TEST_CASE("f_pair reduces into R")
{
    CHECK(f_pair(Rat(3, 4), Rat(1, 3)) == TorsionCoord{Rat(1, 4), Rat(2, 3)});
    CHECK(f_pair(Rat(0), Rat(7, 8)) == TorsionCoord{Rat(0), Rat(1, 8)});
    CHECK(f_pair(Rat(1, 2), Rat(3, 4)) == TorsionCoord{Rat(1, 2), Rat(1, 4)});
    CHECK(f_pair(Rat(-1, 2), Rat(1, 4)) == TorsionCoord{Rat(1, 2), Rat(1, 4)});
}

TEST_CASE("point and quad orders")
{
    CHECK(order(TorsionCoord{Rat(0), Rat(1, 3)}) == 3);
    CHECK(order(TorsionCoord{Rat(1, 3), Rat(5, 6)}) == 6);
    CHECK(order(TorsionCoord{Rat(0), Rat(0)}) == 1);
    CHECK(parse_quad("0,1/3;1/3,0;1/3,1/3;1/3,2/3").common_order() == 3);
    CHECK(parse_quad("0,1/12;0,5/12;1/4,1/3;1/4,5/6").common_order() == 12);
    CHECK(parse_quad("0,0;0,1/2;1/2,0;1/2,1/2").common_order() == 2);
}

TEST_CASE("quad text round trip and reduction")
{
    const Quad a = parse_quad("0/1,1/3;1/3,0/1;1/3,1/3;1/3,2/3");
    CHECK(format_quad(a) == "0,1/3;1/3,0;1/3,1/3;1/3,2/3");
    CHECK(parse_quad(format_quad(a)) == a);
    CHECK(parse_quad(" 3/4 , 1/3 ; 0,1/2; 1/2,0 ;1/2,1/2") == parse_quad("1/4,2/3;0,1/2;1/2,0;1/2,1/2"));
    CHECK_THROWS_AS(parse_quad("0/1,0/1;0/1,0/1;0/1,1/2;1/2,0/1"), DuplicatePointError);
    CHECK_THROWS_AS(parse_quad("0,1/3;1/3,0;1/3,1/3"), ParseError);
    CHECK_THROWS_AS(parse_quad("0,1/3;1/3,x;1/3,1/3;1/3,2/3"), ParseError);
    CHECK_THROWS_AS(parse_quad("0,1/0;1/3,0;1/3,1/3;1/3,2/3"), std::exception);
}

TEST_CASE("checked arithmetic refuses to wrap")
{
    const Rat big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(Rat(1, 3037000507) * Rat(1, 3037000507), OverflowError);
    CHECK_THROWS_AS(-Rat(std::numeric_limits<std::int64_t>::min()), OverflowError);
}

TEST_CASE("property: F laws on 2000 random rationals")
{
    for (int i = 0; i < 2000; ++i) {
        const Rat x = random_rat();
        const Rat y = random_rat();
        const Rat f = f_scalar(x);
        REQUIRE(f_scalar(f) == f);
        REQUIRE(f_scalar(-x) == f);
        REQUIRE(f_scalar(x + Rat(1)) == f);
        REQUIRE(f >= Rat(0));
        REQUIRE(f <= Rat(1, 2));
        const TorsionCoord p = f_pair(x, y);
        REQUIRE(TorsionCoord::in_domain(p.r, p.theta));
        REQUIRE(f_pair(p.r, p.theta) == p);
        REQUIRE(f_pair(-x, -y) == p);
        REQUIRE(f_pair(x + Rat(1), y - Rat(2)) == p);
        REQUIRE(order(p) == std::lcm(x.den(), y.den()));
    }
}

TEST_CASE("exhaustive: points of R of order dividing n")
{
    for (std::int64_t n = 1; n <= 24; ++n) {
        // Direct enumeration of the classes {v, -v} in (Z/n)^2.
        std::set<std::pair<std::int64_t, std::int64_t>> classes;
        std::int64_t self_inverse = 0;
        for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = 0; b < n; ++b) {
                const auto v = std::make_pair(a, b);
                const auto w = std::make_pair((n - a) % n, (n - b) % n);
                if (v == w) {
                    ++self_inverse;
                }
                classes.insert(std::min(v, w));
            }
        }
        const auto pts = points_of_order_dividing(n);
        CHECK(static_cast<std::int64_t>(pts.size()) == (n * n + self_inverse) / 2);
        CHECK(pts.size() == classes.size());
        for (const auto &p : pts) {
            CHECK(n % order(p) == 0);
        }
    }
}
