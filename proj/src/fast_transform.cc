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

#include "dct14/fast_transform.h"

namespace dct14 {
namespace {

using K = StepKind;

std::vector<FactorStage> BuildStages() {
  return {
      // Input butterflies: sums on the top half, differences on the bottom.
      {"A1",
       {{K::kAdd, 0, 0, 7},
        {K::kAdd, 1, 1, 6},
        {K::kAdd, 2, 2, 5},
        {K::kAdd, 3, 3, 4},
        {K::kSubtract, 4, 3, 4},
        {K::kSubtract, 5, 2, 5},
        {K::kSubtract, 6, 1, 6},
        {K::kSubtract, 7, 0, 7}}},
      {"A2",
       {{K::kAdd, 0, 0, 3},
        {K::kAdd, 1, 1, 2},
        {K::kSubtract, 2, 1, 2},
        {K::kSubtract, 3, 0, 3},
        {K::kNegate, 4, 4},
        {K::kNegate, 5, 5},
        {K::kNegate, 6, 6},
        {K::kCopy, 7, 7}}},
      {"A3",
       {{K::kAdd, 0, 0, 1},
        {K::kSubtract, 1, 0, 1},
        {K::kNegate, 2, 2},
        {K::kCopy, 3, 3},
        {K::kCopy, 4, 4},
        {K::kCopy, 5, 5},
        {K::kCopy, 6, 6},
        {K::kCopy, 7, 7}}},
      // Output ordering: X[k] = w[sigma(k)].
      {"P",
       {{K::kCopy, 0, 0},
        {K::kCopy, 1, 7},
        {K::kCopy, 2, 3},
        {K::kCopy, 3, 5},
        {K::kCopy, 4, 1},
        {K::kCopy, 5, 6},
        {K::kCopy, 6, 2},
        {K::kCopy, 7, 4}}},
  };
}

template <typename T>
void RunStage(const FactorStage& stage, std::array<T, kN>& regs,
              OpCount& cost) {
  std::array<T, kN> next{};
  for (const Step& s : stage.steps) {
    switch (s.kind) {
      case K::kAdd:
        next[s.dst] = regs[s.lhs] + regs[s.rhs];
        ++cost.additions;
        break;
      case K::kSubtract:
        next[s.dst] = regs[s.lhs] - regs[s.rhs];
        ++cost.additions;
        break;
      case K::kNegate:
        next[s.dst] = -regs[s.lhs];
        break;
      case K::kCopy:
        next[s.dst] = regs[s.lhs];
        break;
    }
  }
  regs = next;
}

template <typename T>
FastResult<T> Run(const std::array<T, kN>& x) {
  FastResult<T> result;
  result.values = x;
  for (const FactorStage& stage : ProposedStages()) {
    RunStage(stage, result.values, result.cost);
    for (T v : result.values) {
      const T mag = v < T{} ? -v : v;
      if (mag > result.peak) result.peak = mag;
    }
  }
  return result;
}

}  // namespace

const std::vector<FactorStage>& ProposedStages() {
  static const std::vector<FactorStage> kStages = BuildStages();
  return kStages;
}

IntMatrix8 StageMatrix(const FactorStage& stage) {
  IntMatrix8 m{};
  OpCount unused;
  for (int col = 0; col < kN; ++col) {
    std::array<int, kN> basis{};
    basis[col] = 1;
    RunStage(stage, basis, unused);
    for (int row = 0; row < kN; ++row) m[row][col] = basis[row];
  }
  return m;
}

OpCount CountOperations(std::span<const FactorStage> stages) {
  OpCount cost;
  for (const FactorStage& stage : stages) {
    for (const Step& s : stage.steps) {
      if (s.kind == K::kAdd || s.kind == K::kSubtract) ++cost.additions;
    }
  }
  return cost;
}

StageMatrices PrintedStageMatrices() {
  StageMatrices m;
  m.a1 = {{
      {1, 0, 0, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 1, 0, 0},
      {0, 0, 0, 1, 1, 0, 0, 0},
      {0, 0, 0, 1, -1, 0, 0, 0},
      {0, 0, 1, 0, 0, -1, 0, 0},
      {0, 1, 0, 0, 0, 0, -1, 0},
      {1, 0, 0, 0, 0, 0, 0, -1},
  }};
  m.a2 = {{
      {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 1, 1, 0, 0, 0, 0, 0},
      {0, 1, -1, 0, 0, 0, 0, 0},
      {1, 0, 0, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 0},
      {0, 0, 0, 0, 0, 0, 0, 1},
  }};
  m.a3 = {{
      {1, 1, 0, 0, 0, 0, 0, 0},
      {1, -1, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 1},
  }};
  m.p = {{
      {1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0},
      {0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0},
  }};
  return m;
}

FastResult<std::int64_t> FastForward(const IntVec8& x) { return Run(x); }

FastResult<double> FastForward(const Vec8& x) { return Run(x); }

}  // namespace dct14
