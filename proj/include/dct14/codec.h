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

// JPEG-style block coding without entropy coding: separable 8x8 transform,
// keep the first r coefficients in zigzag order, inverse transform.

#ifndef DCT14_CODEC_H_
#define DCT14_CODEC_H_

#include <array>
#include <utility>

#include "dct14/corpus_io.h"
#include "dct14/transform_kernels.h"
#include "dct14/types.h"

namespace dct14 {

// Standard JPEG zigzag scan as (row, col) pairs.
const std::array<std::pair<int, int>, kBlockSamples>& ZigzagOrder();

// C * A * C^T with C the forward matrix.
Block Forward2D(const LinearTransform& t, const Block& samples);
// Cinv * B * Cinv^T.
Block Inverse2D(const LinearTransform& t, const Block& coeffs);

// Forward2D of the proposed transform computed with the 14-addition flow
// graph on rows and columns, followed by the d_i * d_j scaling.
Block Forward2DFast(const Block& samples);

// Zeroes every coefficient past the first r in zigzag order.
// kInvalidRetention unless 1 <= r <= 64.
Block RetainCoefficients(const Block& coeffs, int r);

// Percentage of discarded coefficients, 100 * (64 - r) / 64.
double CompressionRatio(int r);

// Q'[i][j] = Q[i][j] / (d_i d_j): quantizing the unscaled T A T^T by Q'
// equals quantizing D T A T^T D by Q. kNonPositiveQuantizer if any Q entry
// is not strictly positive.
RealMatrix8 FoldScalingIntoQuantization(const DiagonalScaling& scaling,
                                        const RealMatrix8& quantizer);
RealMatrix8 FoldScalingIntoQuantization(const ApproximateTransform& t,
                                        const RealMatrix8& quantizer);

// Elementwise round(coeffs / quantizer), half away from zero.
Block Quantize(const Block& coeffs, const RealMatrix8& quantizer);

// Tile, transform, retain r coefficients, invert, clamp to [0, 255].
// Reconstructed samples stay in floating point.
GrayImage CompressImage(const LinearTransform& t, const GrayImage& image,
                        int r);

}  // namespace dct14

#endif  // DCT14_CODEC_H_
