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

#include "dct14/types.h"

namespace dct14 {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEntry: return "InvalidEntry";
    case ErrorCode::kNonOrthogonalKernel: return "NonOrthogonalKernel";
    case ErrorCode::kZeroRow: return "ZeroRow";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kUnknownTransform: return "UnknownTransform";
    case ErrorCode::kInvalidRetention: return "InvalidRetention";
    case ErrorCode::kNonPositiveQuantizer: return "NonPositiveQuantizer";
    case ErrorCode::kBadDimensions: return "BadDimensions";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kUnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::kTruncatedData: return "TruncatedData";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kMissingImage: return "MissingImage";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMalformedKernelFile: return "MalformedKernelFile";
  }
  return "Unknown";
}

RealMatrix8 Multiply(const RealMatrix8& a, const RealMatrix8& b) {
  RealMatrix8 out{};
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      double sum = 0.0;
      for (int k = 0; k < kN; ++k) sum += a[i][k] * b[k][j];
      out[i][j] = sum;
    }
  }
  return out;
}

RealMatrix8 Transpose(const RealMatrix8& m) {
  RealMatrix8 out{};
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) out[j][i] = m[i][j];
  return out;
}

IntMatrix8 Multiply(const IntMatrix8& a, const IntMatrix8& b) {
  IntMatrix8 out{};
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      int sum = 0;
      for (int k = 0; k < kN; ++k) sum += a[i][k] * b[k][j];
      out[i][j] = sum;
    }
  }
  return out;
}

IntMatrix8 Transpose(const IntMatrix8& m) {
  IntMatrix8 out{};
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) out[j][i] = m[i][j];
  return out;
}

RealMatrix8 Identity8() {
  RealMatrix8 out{};
  for (int i = 0; i < kN; ++i) out[i][i] = 1.0;
  return out;
}

}  // namespace dct14
