// Copyright 2026 The dct14 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Butterfly evaluation of the proposed kernel through the sparse
// factorization T = P * A3 * A2 * A1.
//
// Each factor is an ordered list of primitive steps operating on an 8-entry
// register file. The interpreter tallies every executed step, so the
// reported OpCount is measured rather than declared. Counting rule: a
// two-input add or subtract is one addition; negation and routing (copy,
// permutation) are free.

#ifndef DCT14_FAST_TRANSFORM_H_
#define DCT14_FAST_TRANSFORM_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dct14/types.h"

namespace dct14 {

enum class StepKind {
  kAdd,       // dst = in[lhs] + in[rhs]
  kSubtract,  // dst = in[lhs] - in[rhs]
  kNegate,    // dst = -in[lhs]
  kCopy,      // dst = in[lhs]
};

struct Step {
  StepKind kind;
  int dst;
  int lhs;
  int rhs = -1;
};

// One factor of the factorization. Steps read the stage input and write the
// stage output; every output register is written exactly once.
struct FactorStage {
  std::string name;
  std::vector<Step> steps;
};

// A1, A2, A3, P in application order.
const std::vector<FactorStage>& ProposedStages();

// Matrix realized by a stage's step list (built by running basis vectors).
IntMatrix8 StageMatrix(const FactorStage& stage);

// Tally of one pass through the stages. Data-independent.
OpCount CountOperations(std::span<const FactorStage> stages);

// The factor matrices as printed alongside the kernel.
struct StageMatrices {
  IntMatrix8 a1;
  IntMatrix8 a2;
  IntMatrix8 a3;
  IntMatrix8 p;
};
StageMatrices PrintedStageMatrices();

template <typename T>
struct FastResult {
  std::array<T, kN> values{};
  OpCount cost;
  // Largest magnitude held by any register after the input stage.
  T peak{};
};

// T * x through the flow graph. Integer inputs give integer-exact outputs.
FastResult<std::int64_t> FastForward(const IntVec8& x);
FastResult<double> FastForward(const Vec8& x);

}  // namespace dct14

#endif  // DCT14_FAST_TRANSFORM_H_
