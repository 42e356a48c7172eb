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

#include "dct14/transform_kernels.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

namespace dct14 {
namespace {

constexpr IntMatrix8 kProposedEntries = {{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, -1},
    {1, 0, 0, -1, -1, 0, 0, 1},
    {0, 0, -1, 0, 0, 1, 0, 0},
    {1, -1, -1, 1, 1, -1, -1, 1},
    {0, -1, 0, 0, 0, 0, 1, 0},
    {0, -1, 1, 0, 0, 1, -1, 0},
    {0, 0, 0, -1, 1, 0, 0, 0},
}};

RealMatrix8 ScaledKernel(const TransformMatrix& kernel,
                         const DiagonalScaling& scaling) {
  RealMatrix8 out{};
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) out[i][j] = scaling.diag[i] * kernel(i, j);
  return out;
}

double MaxDeviationFromIdentity(const RealMatrix8& m) {
  const RealMatrix8 gram = Multiply(m, Transpose(m));
  double worst = 0.0;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j)
      worst = std::max(worst, std::abs(gram[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace

TransformMatrix::TransformMatrix(std::string name, const IntMatrix8& entries)
    : name_(std::move(name)), entries_(entries) {
  for (int i = 0; i < kN; ++i) {
    bool any = false;
    for (int j = 0; j < kN; ++j) {
      const int v = entries_[i][j];
      if (v < -2 || v > 2) {
        throw Error(ErrorCode::kInvalidEntry,
                    name_ + ": entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ") = " + std::to_string(v) +
                        " outside [-2, 2]");
      }
      any = any || v != 0;
    }
    if (!any) {
      throw Error(ErrorCode::kZeroRow,
                  name_ + ": row " + std::to_string(i) + " is all zeros");
    }
  }
}

IntMatrix8 TransformMatrix::Gram() const {
  return Multiply(entries_, Transpose(entries_));
}

int TransformMatrix::NonzeroCount() const {
  int count = 0;
  for (const auto& row : entries_)
    for (int v : row) count += v != 0;
  return count;
}

TransformMatrix ProposedKernel() {
  return TransformMatrix(std::string(KernelRegistry::kProposedName),
                         kProposedEntries);
}

DiagonalScaling DiagonalScaling::FromSquares(const std::array<double, kN>& squared) {
  DiagonalScaling out;
  out.squared = squared;
  for (int i = 0; i < kN; ++i) out.diag[i] = std::sqrt(squared[i]);
  return out;
}

DiagonalScaling ProposedScaling() {
  return DiagonalScaling::FromSquares(
      {0.125, 0.5, 0.25, 0.5, 0.125, 0.5, 0.25, 0.5});
}

DiagonalScaling DeriveScaling(const TransformMatrix& kernel) {
  const IntMatrix8 gram = kernel.Gram();
  std::array<double, kN> squared{};
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      if (i != j && gram[i][j] != 0) {
        throw Error(ErrorCode::kNonOrthogonalKernel,
                    kernel.name() + ": rows " + std::to_string(i) + " and " +
                        std::to_string(j) + " have inner product " +
                        std::to_string(gram[i][j]));
      }
    }
    if (gram[i][i] == 0) {
      throw Error(ErrorCode::kZeroRow,
                  kernel.name() + ": row " + std::to_string(i));
    }
    squared[i] = 1.0 / static_cast<double>(gram[i][i]);
  }
  return DiagonalScaling::FromSquares(squared);
}

RealMatrix8 ExactDctMatrix() {
  RealMatrix8 c{};
  const double base = std::sqrt(2.0 / kN);
  for (int k = 0; k < kN; ++k) {
    const double gamma = k == 0 ? 1.0 / std::sqrt(2.0) : 1.0;
    for (int n = 0; n < kN; ++n) {
      c[k][n] = gamma * base *
                std::cos(std::numbers::pi * k * (2 * n + 1) / (2.0 * kN));
    }
  }
  return c;
}

LinearTransform ExactDctTransform() {
  const RealMatrix8 c = ExactDctMatrix();
  return {std::string(KernelRegistry::kExactDctName), c, Transpose(c)};
}

ApproximateTransform::ApproximateTransform(TransformMatrix kernel,
                                           DiagonalScaling scaling,
                                           OpCount declared_cost,
                                           bool orthogonal)
    : kernel_(std::move(kernel)),
      scaling_(scaling),
      declared_cost_(declared_cost),
      orthogonal_(orthogonal),
      forward_(ScaledKernel(kernel_, scaling_)) {}

ApproximateTransform ApproximateTransform::Orthogonal(TransformMatrix kernel,
                                                      DiagonalScaling scaling,
                                                      OpCount declared_cost) {
  ApproximateTransform t(std::move(kernel), scaling, declared_cost, true);
  const double deviation = MaxDeviationFromIdentity(t.forward_);
  if (!(deviation < kOrthogonalityTolerance)) {
    throw Error(ErrorCode::kNonOrthogonalKernel,
                t.name() + ": |(DT)(DT)^T - I| = " + std::to_string(deviation));
  }
  t.inverse_ = Transpose(t.forward_);
  return t;
}

ApproximateTransform ApproximateTransform::NonOrthogonal(
    TransformMatrix kernel, OpCount declared_cost) {
  const IntMatrix8 gram = kernel.Gram();
  std::array<double, kN> squared{};
  for (int i = 0; i < kN; ++i) squared[i] = 1.0 / static_cast<double>(gram[i][i]);
  const DiagonalScaling scaling = DiagonalScaling::FromSquares(squared);
  ApproximateTransform t(std::move(kernel), scaling, declared_cost, false);

  Eigen::Matrix<double, kN, kN> m;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) m(i, j) = t.forward_[i][j];
  const Eigen::FullPivLU<Eigen::Matrix<double, kN, kN>> lu(m);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kNonOrthogonalKernel,
                t.name() + ": kernel is singular");
  }
  const Eigen::Matrix<double, kN, kN> inv = lu.inverse();
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) t.inverse_[i][j] = inv(i, j);
  return t;
}

Vec8 ApproximateTransform::KernelProduct(const Vec8& x) const {
  Vec8 out{};
  for (int i = 0; i < kN; ++i) {
    double sum = 0.0;
    for (int j = 0; j < kN; ++j) sum += kernel_(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

IntVec8 ApproximateTransform::KernelProduct(const IntVec8& x) const {
  IntVec8 out{};
  for (int i = 0; i < kN; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < kN; ++j) sum += kernel_(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

ApproximateTransform ProposedTransform() {
  return ApproximateTransform::Orthogonal(ProposedKernel(), ProposedScaling(),
                                          {14, 0, 0});
}

Vec8 ApplyForward(const ApproximateTransform& t, const Vec8& x) {
  Vec8 out = t.KernelProduct(x);
  for (int i = 0; i < kN; ++i) out[i] *= t.scaling().diag[i];
  return out;
}

Vec8 ApplyInverse(const ApproximateTransform& t, const Vec8& coeffs) {
  Vec8 out{};
  if (t.is_orthogonal()) {
    Vec8 scaled{};
    for (int i = 0; i < kN; ++i) scaled[i] = t.scaling().diag[i] * coeffs[i];
    for (int n = 0; n < kN; ++n) {
      double sum = 0.0;
      for (int k = 0; k < kN; ++k) sum += t.kernel()(k, n) * scaled[k];
      out[n] = sum;
    }
    return out;
  }
  const RealMatrix8& inv = t.inverse_matrix();
  for (int n = 0; n < kN; ++n) {
    double sum = 0.0;
    for (int k = 0; k < kN; ++k) sum += inv[n][k] * coeffs[k];
    out[n] = sum;
  }
  return out;
}

std::vector<KernelRecord> ParseKernelFile(std::istream& in) {
  std::vector<KernelRecord> records;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::kMalformedKernelFile,
                "line " + std::to_string(line_no) + ": " + msg);
  };
  // Next line that is neither blank nor a comment; false at end of input.
  auto next = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  while (next()) {
    KernelRecord rec;
    std::istringstream header(line);
    header >> rec.name;
    std::string flag;
    if (header >> flag) {
      if (flag != "non-orthogonal") fail("unknown flag '" + flag + "'");
      rec.non_orthogonal = true;
    }
    if (header >> flag) fail("trailing tokens after kernel name");

    for (int i = 0; i < kN; ++i) {
      if (!next()) fail("kernel '" + rec.name + "' has fewer than 8 rows");
      std::istringstream row(line);
      for (int j = 0; j < kN; ++j) {
        if (!(row >> rec.entries[i][j])) fail("row needs 8 integers");
      }
      std::string extra;
      if (row >> extra) fail("row has more than 8 entries");
    }
    if (!next()) fail("kernel '" + rec.name + "' is missing its cost line");
    std::istringstream costs(line);
    OpCount& c = rec.declared_cost;
    if (!(costs >> c.additions >> c.multiplications >> c.shifts)) {
      fail("cost line must be 'add mult shift'");
    }
    if (c.additions < 0 || c.multiplications < 0 || c.shifts < 0) {
      fail("negative operation count");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<KernelRecord> ReadKernelFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return ParseKernelFile(in);
}

const std::vector<PublishedCost>& PublishedCosts() {
  static const std::vector<PublishedCost> kCosts = {
      {"proposed", "Proposed transform", {14, 0, 0}},
      {"sdct", "SDCT", {24, 0, 0}},
      {"level1", "Level 1 approximation", {24, 0, 2}},
      {"bas2008", "BAS-2008 transform", {18, 0, 2}},
      {"bas2009", "BAS-2009 transform", {18, 0, 0}},
      {"bas2011", "BAS-2011 transform", {18, 0, 2}},
      {"cb2011", "CB-2011 transform", {22, 0, 0}},
  };
  return kCosts;
}

KernelRegistry::KernelRegistry() {
  const std::string name(kProposedName);
  entries_.emplace(name, ProposedTransform());
  order_.push_back(name);
}

const ApproximateTransform& KernelRegistry::Register(
    const std::string& name, const IntMatrix8& entries, OpCount declared_cost,
    bool allow_non_orthogonal) {
  if (name == kExactDctName || entries_.contains(name)) {
    throw Error(ErrorCode::kDuplicateName, name);
  }
  TransformMatrix kernel(name, entries);
  auto transform =
      allow_non_orthogonal
          ? ApproximateTransform::NonOrthogonal(std::move(kernel),
                                                declared_cost)
          : [&] {
              const DiagonalScaling scaling = DeriveScaling(kernel);
              return ApproximateTransform::Orthogonal(std::move(kernel),
                                                      scaling, declared_cost);
            }();
  order_.push_back(name);
  return entries_.emplace(name, std::move(transform)).first->second;
}

void KernelRegistry::Load(const std::vector<KernelRecord>& records) {
  for (const KernelRecord& rec : records)
    Register(rec.name, rec.entries, rec.declared_cost, rec.non_orthogonal);
}

bool KernelRegistry::Contains(std::string_view name) const {
  return name == kExactDctName || entries_.contains(name);
}

const ApproximateTransform& KernelRegistry::Get(std::string_view name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kUnknownTransform, std::string(name));
  }
  return it->second;
}

LinearTransform KernelRegistry::Linear(std::string_view name) const {
  if (name == kExactDctName) return ExactDctTransform();
  return Get(name).AsLinear();
}

}  // namespace dct14
