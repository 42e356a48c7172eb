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

#ifndef DCT14_TYPES_H_
#define DCT14_TYPES_H_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dct14 {

inline constexpr int kN = 8;

using Vec8 = std::array<double, kN>;
using IntVec8 = std::array<std::int64_t, kN>;
using IntMatrix8 = std::array<std::array<int, kN>, kN>;
using RealMatrix8 = std::array<std::array<double, kN>, kN>;

enum class ErrorCode {
  kInvalidEntry,
  kNonOrthogonalKernel,
  kZeroRow,
  kDuplicateName,
  kUnknownTransform,
  kInvalidRetention,
  kNonPositiveQuantizer,
  kBadDimensions,
  kDimensionMismatch,
  kDivisionByZero,
  kEmptyGroup,
  kMalformedHeader,
  kUnsupportedMaxval,
  kTruncatedData,
  kIoFailure,
  kMissingImage,
  kInvalidConfig,
  kMalformedKernelFile,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; callers
// that care about the cause switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr int kBlockSamples = kN * kN;

// 8x8 tile of samples or coefficients, row-major.
struct Block {
  std::array<double, kBlockSamples> v{};

  double& operator()(int row, int col) { return v[row * kN + col]; }
  double operator()(int row, int col) const { return v[row * kN + col]; }
  bool operator==(const Block&) const = default;
};

// Arithmetic cost of one 8-point transform execution.
struct OpCount {
  int additions = 0;
  int multiplications = 0;
  int shifts = 0;

  int total() const { return additions + multiplications + shifts; }
  bool operator==(const OpCount&) const = default;
};

RealMatrix8 Multiply(const RealMatrix8& a, const RealMatrix8& b);
RealMatrix8 Transpose(const RealMatrix8& m);
IntMatrix8 Multiply(const IntMatrix8& a, const IntMatrix8& b);
IntMatrix8 Transpose(const IntMatrix8& m);
RealMatrix8 Identity8();

}  // namespace dct14

#endif  // DCT14_TYPES_H_
