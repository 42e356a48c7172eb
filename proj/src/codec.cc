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

#include "dct14/codec.h"

#include <cmath>
#include <string>

#include "dct14/fast_transform.h"

namespace dct14 {
namespace {

constexpr std::array<int, kBlockSamples> kZigzagIndex = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
};

// left * b * right^T
Block Sandwich(const RealMatrix8& left, const Block& b,
               const RealMatrix8& right) {
  Block tmp;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      double sum = 0.0;
      for (int k = 0; k < kN; ++k) sum += left[i][k] * b(k, j);
      tmp(i, j) = sum;
    }
  }
  Block out;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      double sum = 0.0;
      for (int k = 0; k < kN; ++k) sum += tmp(i, k) * right[j][k];
      out(i, j) = sum;
    }
  }
  return out;
}

void CheckRetention(int r) {
  if (r < 1 || r > kBlockSamples) {
    throw Error(ErrorCode::kInvalidRetention,
                "r = " + std::to_string(r) + " outside [1, 64]");
  }
}

}  // namespace

const std::array<std::pair<int, int>, kBlockSamples>& ZigzagOrder() {
  static const auto kOrder = [] {
    std::array<std::pair<int, int>, kBlockSamples> order;
    for (int i = 0; i < kBlockSamples; ++i)
      order[i] = {kZigzagIndex[i] / kN, kZigzagIndex[i] % kN};
    return order;
  }();
  return kOrder;
}

Block Forward2D(const LinearTransform& t, const Block& samples) {
  return Sandwich(t.forward, samples, t.forward);
}

Block Inverse2D(const LinearTransform& t, const Block& coeffs) {
  return Sandwich(t.inverse, coeffs, t.inverse);
}

Block Forward2DFast(const Block& samples) {
  Block cols;
  for (int c = 0; c < kN; ++c) {
    Vec8 x;
    for (int r = 0; r < kN; ++r) x[r] = samples(r, c);
    const auto y = FastForward(x).values;
    for (int r = 0; r < kN; ++r) cols(r, c) = y[r];
  }
  const DiagonalScaling d = ProposedScaling();
  Block out;
  for (int r = 0; r < kN; ++r) {
    Vec8 x;
    for (int c = 0; c < kN; ++c) x[c] = cols(r, c);
    const auto y = FastForward(x).values;
    for (int c = 0; c < kN; ++c) out(r, c) = d.diag[r] * d.diag[c] * y[c];
  }
  return out;
}

Block RetainCoefficients(const Block& coeffs, int r) {
  CheckRetention(r);
  Block out;
  for (int i = 0; i < r; ++i) {
    const int idx = kZigzagIndex[i];
    out.v[idx] = coeffs.v[idx];
  }
  return out;
}

double CompressionRatio(int r) {
  CheckRetention(r);
  return 100.0 * (kBlockSamples - r) / kBlockSamples;
}

RealMatrix8 FoldScalingIntoQuantization(const DiagonalScaling& scaling,
                                        const RealMatrix8& quantizer) {
  RealMatrix8 out{};
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      if (!(quantizer[i][j] > 0.0)) {
        throw Error(ErrorCode::kNonPositiveQuantizer,
                    "Q(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      out[i][j] = quantizer[i][j] / (scaling.diag[i] * scaling.diag[j]);
    }
  }
  return out;
}

RealMatrix8 FoldScalingIntoQuantization(const ApproximateTransform& t,
                                        const RealMatrix8& quantizer) {
  return FoldScalingIntoQuantization(t.scaling(), quantizer);
}

Block Quantize(const Block& coeffs, const RealMatrix8& quantizer) {
  Block out;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j)
      out(i, j) = std::round(coeffs(i, j) / quantizer[i][j]);
  return out;
}

GrayImage CompressImage(const LinearTransform& t, const GrayImage& image,
                        int r) {
  CheckRetention(r);
  std::vector<Block> blocks = TileBlocks(image);
  for (Block& b : blocks)
    b = Inverse2D(t, RetainCoefficients(Forward2D(t, b), r));
  return UntileBlocks(image.width(), image.height(), blocks);
}

}  // namespace dct14
