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

#ifndef TORQUAD_POLY_ROOTS_HPP
#define TORQUAD_POLY_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "torquad/laurent.hpp"

namespace torquad
{

class RootFindError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RootOptions
{
    double tol = 1e-12;
    int max_iterations = 200;
    int max_restarts = 8;
};

/// All complex roots of sum_k coeffs[k] x^k (coeffs.back() != 0) by Aberth
/// iteration, polished with Newton steps. Restarts from perturbed starting
/// points when the iteration stagnates; throws RootFindError if every
/// attempt fails.
std::vector<cplx> poly_roots(const std::vector<cplx> &coeffs, const RootOptions &opts = {});

/// Horner evaluation of sum_k coeffs[k] x^k.
cplx poly_eval(const std::vector<cplx> &coeffs, cplx x);

} // namespace torquad

#endif
