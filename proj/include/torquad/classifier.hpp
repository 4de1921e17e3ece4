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

#ifndef TORQUAD_CLASSIFIER_HPP
#define TORQUAD_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torquad/goodness.hpp"
#include "torquad/torsion.hpp"

namespace torquad
{

/// The four values the sextic invariant takes on quads with constant image.
enum class ConstantTag
{
    TwentySevenQuarters, // 27/4
    Zero,                // 0
    OneHalf,             // 1/2
    EightThirds,         // 8/3
};

Rat tag_value(ConstantTag tag);
std::string tag_label(ConstantTag tag); // "27/4", "0", "1/2", "8/3"

/// Nearest tag within tol of a (complex) constant, if any.
std::optional<ConstantTag> match_tag(double re, double im, double tol);

/// One instantiated member of the classification list.
struct FamilyEntry
{
    int case_number;          ///< 1..11
    std::optional<Rat> param; ///< a for case 1, b for case 2
    Quad quad;
    ConstantTag tag;
};

/// The eleven cases, with the two infinite families instantiated at every
/// member of common order <= max_order. Sorted by quad.
std::vector<FamilyEntry> family_table(std::int64_t max_order);

/// The family entry whose quad equals s, searching members up to s's order.
std::optional<FamilyEntry> lookup_family(const Quad &s);

/// All orbit minima among quads with coordinates in (1/n)Z and common
/// order exactly n, in increasing order.
std::vector<Quad> enumerate_minimal_quads(std::int64_t n);

struct ClassifiedQuad
{
    Quad quad;
    std::int64_t order;
};

struct ClassifyStats
{
    std::int64_t minimal_quads = 0;   ///< orbit minima examined
    std::int64_t quick_good = 0;      ///< settled by the (0,1), (1,0), (1,1) probes
    std::int64_t progression_good = 0; ///< settled by the harmonic-sum / coverage filter
    std::int64_t full_scans = 0;      ///< needed the complete residue scan
};

struct ClassifyOptions
{
    std::int64_t max_order = 12;
    bool prune = true;
};

/// Every minimal representative of common order <= max_order that is not
/// good, sorted by (order, quad). Pruning only ever skips quads that are
/// proved good.
std::vector<ClassifiedQuad> classify(const ClassifyOptions &opts, ClassifyStats *stats = nullptr);

struct MatchReport
{
    bool pass = false;
    std::vector<Quad> missing; ///< in the table, not in the results
    std::vector<Quad> extra;   ///< in the results, not in the table
};

/// Compares classification results with family_table(max_order) as sets
/// of minimal representatives.
MatchReport match_families(const std::vector<ClassifiedQuad> &results, std::int64_t max_order);

} // namespace torquad

#endif
