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

#ifndef TORQUAD_MODULAR_GROUPS_HPP
#define TORQUAD_MODULAR_GROUPS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torquad/laurent.hpp"
#include "torquad/sl2.hpp"

namespace torquad
{

/// Memoized mu_series at a fixed truncation.
class MuCache
{
public:
    explicit MuCache(int D) : D_(D) {}
    const LaurentSeries &get(const Quad &s);
    int terms() const noexcept { return D_; }

private:
    int D_;
    std::map<Quad, LaurentSeries> cache_;
};

/// How a matrix h acting on tau is turned into an action on the quad.
enum class DeltaConvention
{
    Transpose, ///< mu_S(h tau) = mu_{h^T S}(tau)
    Direct,    ///< mu_S(h tau) = mu_{h S}(tau)
};

std::string convention_name(DeltaConvention c);

/// {h in SL2(Z/n) : mu series of the transformed quad equals mu_S}, with
/// coefficientwise relative tolerance tol below q^D.
SubgroupModN delta_S(const Quad &s, int D, double tol, DeltaConvention conv = DeltaConvention::Transpose);

struct DeltaReport
{
    std::int64_t n = 0;
    int terms = 0;
    double tol = 0.0;
    DeltaConvention convention = DeltaConvention::Transpose;
    SubgroupModN gamma;
    SubgroupModN delta;
    std::int64_t gamma_order_mod_pm = 0;
    std::int64_t delta_order_mod_pm = 0;
    bool delta_is_subgroup = false;
    bool gamma_in_delta = false;
    /// The other convention, for the record.
    std::int64_t alt_delta_order_mod_pm = 0;
    bool alt_gamma_in_delta = false;
};

/// Computes Gamma_S and Delta_S under both conventions and keeps the one
/// containing Gamma_S (Transpose when both do). Throws std::runtime_error
/// when neither does.
DeltaReport delta_report(const Quad &s, int D, double tol);

struct PartitionCheck
{
    bool mu_equal = false;     ///< pairwise mu series agree within tol
    bool disjoint = false;     ///< no point is shared
    bool covers = false;       ///< the union is every point of exact order n in R
    std::size_t union_size = 0;
    std::size_t expected_size = 0;
};

/// Checks that the quads are pairwise mu-equal and partition the points of
/// exact order n.
PartitionCheck delta_equivalence_classes(const std::vector<Quad> &quads, std::int64_t n, int D, double tol);

/// The level-5 quad S = {(0,1/5),(0,2/5),(1/5,0),(2/5,0)} and its images
/// under [[1,2],[1,3]] and [[1,1],[2,3]].
std::vector<Quad> level5_example();

} // namespace torquad

#endif
