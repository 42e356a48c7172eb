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

// Integer transform kernels, their orthogonalizing diagonal scalings, the
// exact DCT-II reference, and a registry of comparison kernels.
//
// An approximate DCT is the pair (T, D) with C_hat = D * T. The kernel T has
// small integer entries so T * x needs additions only; D is applied
// afterwards (or folded into quantization, see codec.h).

#ifndef DCT14_TRANSFORM_KERNELS_H_
#define DCT14_TRANSFORM_KERNELS_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dct14/types.h"

namespace dct14 {

inline constexpr double kOrthogonalityTolerance = 1e-12;

// 8x8 integer kernel. Entries are restricted to {-2, ..., 2} and every row
// must have a nonzero entry.
class TransformMatrix {
 public:
  TransformMatrix(std::string name, const IntMatrix8& entries);

  const std::string& name() const { return name_; }
  const IntMatrix8& entries() const { return entries_; }
  int operator()(int row, int col) const { return entries_[row][col]; }

  // T * T^T, exact.
  IntMatrix8 Gram() const;
  int NonzeroCount() const;

 private:
  std::string name_;
  IntMatrix8 entries_;
};

// diag holds the factors d_i; squared holds d_i^2 as 1 / ||row i||^2, kept
// separately because sqrt(1/8) squared is not exactly 1/8 in binary64.
struct DiagonalScaling {
  std::array<double, kN> diag{};
  std::array<double, kN> squared{};

  static DiagonalScaling FromSquares(const std::array<double, kN>& squared);
};

// The 14-addition kernel.
TransformMatrix ProposedKernel();

// diag(1/sqrt8, 1/sqrt2, 1/2, 1/sqrt2, 1/sqrt8, 1/sqrt2, 1/2, 1/sqrt2).
DiagonalScaling ProposedScaling();

// D = (T T^T)^(-1/2) for a kernel with pairwise orthogonal rows.
// Throws kNonOrthogonalKernel or kZeroRow.
DiagonalScaling DeriveScaling(const TransformMatrix& kernel);

// Orthonormal DCT-II: c[k][n] = g_k sqrt(2/8) cos(pi k (2n+1) / 16).
RealMatrix8 ExactDctMatrix();

// A real 8-point transform given by its forward and inverse matrices. This
// is what the block codec consumes; both the exact DCT and every
// ApproximateTransform can be viewed as one.
struct LinearTransform {
  std::string name;
  RealMatrix8 forward{};
  RealMatrix8 inverse{};
};

LinearTransform ExactDctTransform();

class ApproximateTransform {
 public:
  // Scaling must orthogonalize the kernel to kOrthogonalityTolerance,
  // otherwise kNonOrthogonalKernel.
  static ApproximateTransform Orthogonal(TransformMatrix kernel,
                                         DiagonalScaling scaling,
                                         OpCount declared_cost);

  // Kernel rows are normalized to unit length and the inverse is the exact
  // matrix inverse of D * T. Throws kNonOrthogonalKernel if D * T is
  // singular.
  static ApproximateTransform NonOrthogonal(TransformMatrix kernel,
                                            OpCount declared_cost);

  const std::string& name() const { return kernel_.name(); }
  const TransformMatrix& kernel() const { return kernel_; }
  const DiagonalScaling& scaling() const { return scaling_; }
  const OpCount& declared_cost() const { return declared_cost_; }
  bool is_orthogonal() const { return orthogonal_; }

  // D * T and its inverse.
  const RealMatrix8& forward_matrix() const { return forward_; }
  const RealMatrix8& inverse_matrix() const { return inverse_; }

  // Unscaled T * x.
  Vec8 KernelProduct(const Vec8& x) const;
  IntVec8 KernelProduct(const IntVec8& x) const;

  LinearTransform AsLinear() const { return {name(), forward_, inverse_}; }

 private:
  ApproximateTransform(TransformMatrix kernel, DiagonalScaling scaling,
                       OpCount declared_cost, bool orthogonal);

  TransformMatrix kernel_;
  DiagonalScaling scaling_;
  OpCount declared_cost_;
  bool orthogonal_;
  RealMatrix8 forward_{};
  RealMatrix8 inverse_{};
};

// (T, D) with declared cost {14, 0, 0}.
ApproximateTransform ProposedTransform();

// Slow path: D * (T * x).
Vec8 ApplyForward(const ApproximateTransform& t, const Vec8& x);
// T^T * D * X for orthogonal transforms, (D T)^-1 * X otherwise.
Vec8 ApplyInverse(const ApproximateTransform& t, const Vec8& coeffs);

// One record of the kernel data file:
//
//   name [non-orthogonal]
//   <8 lines of 8 whitespace-separated signed integers>
//   add mult shift
//
// Blank lines and lines starting with '#' are ignored.
struct KernelRecord {
  std::string name;
  IntMatrix8 entries{};
  OpCount declared_cost;
  bool non_orthogonal = false;
};

std::vector<KernelRecord> ParseKernelFile(std::istream& in);
std::vector<KernelRecord> ReadKernelFile(const std::filesystem::path& path);

// Published costs of the methods the proposed transform is compared with,
// whether or not their kernels are available.
struct PublishedCost {
  std::string name;
  std::string label;
  OpCount cost;
};
const std::vector<PublishedCost>& PublishedCosts();

// Name -> transform. Built once at startup, read-only afterwards. The
// proposed transform is always present; "dct" resolves to the exact DCT in
// Linear().
class KernelRegistry {
 public:
  static constexpr std::string_view kExactDctName = "dct";
  static constexpr std::string_view kProposedName = "proposed";

  KernelRegistry();

  const ApproximateTransform& Register(const std::string& name,
                                       const IntMatrix8& entries,
                                       OpCount declared_cost,
                                       bool allow_non_orthogonal = false);
  void Load(const std::vector<KernelRecord>& records);

  bool Contains(std::string_view name) const;
  const ApproximateTransform& Get(std::string_view name) const;
  LinearTransform Linear(std::string_view name) const;
  // Registration order, "proposed" first.
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::map<std::string, ApproximateTransform, std::less<>> entries_;
  std::vector<std::string> order_;
};

}  // namespace dct14

#endif  // DCT14_TRANSFORM_KERNELS_H_
