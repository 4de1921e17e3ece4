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

#include "torquad/modular_groups.hpp"

#include <set>
#include <stdexcept>

#include "torquad/qseries.hpp"

namespace torquad
{

const LaurentSeries &MuCache::get(const Quad &s)
{
    auto it = cache_.find(s);
    if (it == cache_.end()) {
        it = cache_.emplace(s, mu_series(s, D_)).first;
    }
    return it->second;
}

std::string convention_name(DeltaConvention c)
{
    return c == DeltaConvention::Transpose ? "transpose" : "direct";
}

namespace
{

SubgroupModN delta_with_cache(const Quad &s, double tol, DeltaConvention conv, MuCache &cache)
{
    const std::int64_t n = s.common_order();
    const LaurentSeries base = cache.get(s);
    std::vector<Mat2ModN> members;
    for (const auto &h : enumerate_sl2_mod_n(n)) {
        const Quad t = act(conv == DeltaConvention::Transpose ? h.transpose() : h, s);
        if (approx_equal(cache.get(t), base, tol)) {
            members.push_back(h);
        }
    }
    return SubgroupModN(n, std::move(members));
}

} // namespace

SubgroupModN delta_S(const Quad &s, int D, double tol, DeltaConvention conv)
{
    MuCache cache(D);
    return delta_with_cache(s, tol, conv, cache);
}

DeltaReport delta_report(const Quad &s, int D, double tol)
{
    MuCache cache(D);
    const SubgroupModN gamma = stabilizer_gamma_S(s);
    const SubgroupModN dt = delta_with_cache(s, tol, DeltaConvention::Transpose, cache);
    const SubgroupModN dd = delta_with_cache(s, tol, DeltaConvention::Direct, cache);
    const bool t_ok = gamma.is_subset_of(dt);
    const bool d_ok = gamma.is_subset_of(dd);
    if (!t_ok && !d_ok) {
        throw std::runtime_error("Gamma_S is not contained in Delta_S under either convention for " + format_quad(s) +
                                 "; increase the truncation or loosen the tolerance");
    }
    const bool use_t = t_ok;
    DeltaReport rep{s.common_order(), D, tol, use_t ? DeltaConvention::Transpose : DeltaConvention::Direct,
                    gamma, use_t ? dt : dd};
    rep.gamma_order_mod_pm = psl_quotient_order(gamma);
    rep.delta_order_mod_pm = psl_quotient_order(rep.delta);
    rep.delta_is_subgroup = rep.delta.is_subgroup();
    rep.gamma_in_delta = true;
    rep.alt_delta_order_mod_pm = psl_quotient_order(use_t ? dd : dt);
    rep.alt_gamma_in_delta = use_t ? d_ok : t_ok;
    return rep;
}

PartitionCheck delta_equivalence_classes(const std::vector<Quad> &quads, std::int64_t n, int D, double tol)
{
    PartitionCheck out;
    MuCache cache(D);
    out.mu_equal = true;
    for (std::size_t i = 0; i < quads.size(); ++i) {
        for (std::size_t j = i + 1; j < quads.size(); ++j) {
            if (!approx_equal(cache.get(quads[i]), cache.get(quads[j]), tol)) {
                out.mu_equal = false;
            }
        }
    }
    std::set<TorsionCoord> seen;
    std::size_t total = 0;
    for (const auto &s : quads) {
        for (const auto &p : s.points()) {
            seen.insert(p);
            ++total;
        }
    }
    out.disjoint = seen.size() == total;
    out.union_size = seen.size();
    std::set<TorsionCoord> expected;
    for (const auto &p : points_of_order_dividing(n)) {
        if (order(p) == n) {
            expected.insert(p);
        }
    }
    out.expected_size = expected.size();
    out.covers = seen == expected;
    return out;
}

std::vector<Quad> level5_example()
{
    const Quad s = parse_quad("0,1/5;0,2/5;1/5,0;2/5,0");
    return {s, act(Mat2(1, 2, 1, 3), s), act(Mat2(1, 1, 2, 3), s)};
}

} // namespace torquad
