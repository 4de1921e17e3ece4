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

#include <algorithm>
#include <set>

#include "torquad/classifier.hpp"
#include "torquad/sl2.hpp"

using namespace torquad;

namespace
{

std::vector<Quad> quads_of(const std::vector<ClassifiedQuad> &r)
{
    std::vector<Quad> out;
    for (const auto &c : r) {
        out.push_back(c.quad);
    }
    return out;
}

} // namespace

TEST_CASE("constant tags")
{
    CHECK(tag_value(ConstantTag::TwentySevenQuarters) == Rat(27, 4));
    CHECK(tag_value(ConstantTag::EightThirds) == Rat(8, 3));
    CHECK(tag_label(ConstantTag::OneHalf) == "1/2");
    CHECK(match_tag(6.75, 0.0, 1e-9) == ConstantTag::TwentySevenQuarters);
    CHECK(match_tag(1e-12, -1e-12, 1e-9) == ConstantTag::Zero);
    CHECK_FALSE(match_tag(1.0, 0.0, 1e-9).has_value());
}

TEST_CASE("family table at order 12")
{
    const auto t = family_table(12);
    CHECK(t.size() == 17);
    std::set<int> cases;
    std::set<Quad> seen;
    for (const auto &e : t) {
        cases.insert(e.case_number);
        CHECK(e.quad.common_order() <= 12);
        CHECK(minimal_representative(e.quad).quad == e.quad);
        CHECK_FALSE(good_quad(e.quad).has_value());
        CHECK(seen.insert(e.quad).second);
        const auto back = lookup_family(e.quad);
        REQUIRE(back.has_value());
        CHECK(back->case_number == e.case_number);
    }
    CHECK(cases.size() == 11);
    CHECK(std::is_sorted(t.begin(), t.end(), [](const auto &a, const auto &b) { return a.quad < b.quad; }));
    CHECK(family_table(5).size() == 5);
    CHECK(family_table(2).empty());
    CHECK_FALSE(lookup_family(parse_quad("0,1/5;0,2/5;1/5,0;2/5,0")).has_value());
}

TEST_CASE("minimal quad enumeration")
{
    CHECK(enumerate_minimal_quads(1).empty());
    CHECK(enumerate_minimal_quads(2) == std::vector<Quad>{parse_quad("0,0;0,1/2;1/2,0;1/2,1/2")});
    for (std::int64_t n = 3; n <= 6; ++n) {
        // Minimal representatives of every 4-subset of exact common order n.
        const auto pts = points_of_order_dividing(n);
        std::set<Quad> expect;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                for (std::size_t c = b + 1; c < pts.size(); ++c) {
                    for (std::size_t d = c + 1; d < pts.size(); ++d) {
                        const Quad s({pts[a], pts[b], pts[c], pts[d]});
                        if (s.common_order() == n) {
                            expect.insert(minimal_representative(s).quad);
                        }
                    }
                }
            }
        }
        const auto got = enumerate_minimal_quads(n);
        CHECK(std::set<Quad>(got.begin(), got.end()) == expect);
        CHECK(got.size() == expect.size());
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("classification up to order 12")
{
    ClassifyStats st;
    const auto r = classify({12, true}, &st);
    CHECK(r.size() == 17);
    const auto m = match_families(r, 12);
    CHECK(m.pass);
    CHECK(m.missing.empty());
    CHECK(m.extra.empty());
    CHECK(st.minimal_quads == st.quick_good + st.progression_good + st.full_scans);
    for (const auto &c : r) {
        CHECK(c.order == c.quad.common_order());
        CHECK_FALSE(good_quad(c.quad).has_value());
    }

    auto without10 = r;
    const Quad c10 = parse_quad("0,1/8;1/4,1/8;1/4,3/8;1/2,1/8");
    std::erase_if(without10, [&](const ClassifiedQuad &c) { return c.quad == c10; });
    const auto bad = match_families(without10, 12);
    CHECK_FALSE(bad.pass);
    CHECK(bad.missing == std::vector<Quad>{c10});
    CHECK(bad.extra.empty());

    auto with_extra = r;
    with_extra.push_back({parse_quad("0,1/5;0,2/5;1/5,0;2/5,0"), 5});
    const auto ex = match_families(with_extra, 12);
    CHECK_FALSE(ex.pass);
    CHECK(ex.extra.size() == 1);
}

TEST_CASE("small bounds")
{
    const auto r5 = classify({5, true});
    CHECK(r5.size() == 5);
    CHECK(match_families(r5, 5).pass);
    const auto r2 = classify({2, true});
    CHECK(r2.empty());
    CHECK(match_families(r2, 2).pass);
}

TEST_CASE("pruned and unpruned runs agree up to order 8")
{
    for (std::int64_t n = 2; n <= 8; ++n) {
        CHECK(quads_of(classify({n, true})) == quads_of(classify({n, false})));
    }
}

TEST_CASE("every other minimal quad up to order 12 is good")
{
    std::set<Quad> table;
    for (const auto &e : family_table(12)) {
        table.insert(e.quad);
    }
    std::size_t good = 0;
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (const auto &s : enumerate_minimal_quads(n)) {
            const bool in_table = table.count(s) > 0;
            REQUIRE(good_quad(s).has_value() == !in_table);
            good += in_table ? 0 : 1;
        }
    }
    CHECK(good > 1000);
}
