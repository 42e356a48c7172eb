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

#ifndef DCT14_CORPUS_IO_H_
#define DCT14_CORPUS_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dct14/types.h"

namespace dct14 {

// Greyscale image with real-valued samples in [0, 255], row-major.
class GrayImage {
 public:
  // Throws kBadDimensions for empty or inconsistent sizes and kInvalidEntry
  // for samples outside [0, 255] or non-finite.
  GrayImage(int width, int height, std::vector<double> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<double>& samples() const { return samples_; }
  double at(int x, int y) const { return samples_[y * width_ + x]; }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<double> samples_;
};

// P2 and P5 with maxval <= 255. Sample values are kept as stored.
GrayImage ReadPgm(std::istream& in);
GrayImage ReadPgm(const std::filesystem::path& path);

// Binary P5, maxval 255, samples rounded half away from zero.
void WritePgm(const GrayImage& image, std::ostream& out);
void WritePgm(const GrayImage& image, const std::filesystem::path& path);

// Non-overlapping 8x8 tiles in raster order. kBadDimensions unless both
// sides are multiples of 8.
std::vector<Block> TileBlocks(const GrayImage& image);

// Inverse of TileBlocks. Samples are clamped to [0, 255].
GrayImage UntileBlocks(int width, int height, std::span<const Block> blocks);

// All *.pgm files of a flat directory, sorted by file name.
std::vector<std::filesystem::path> ListCorpus(
    const std::filesystem::path& dir);

// Deterministic 512x512 stand-ins for natural images: smooth gradients,
// low-frequency sinusoidal texture, step edges and a little grain.
std::vector<GrayImage> SynthesizeCorpus(std::uint64_t seed, int count,
                                        int size = 512);

}  // namespace dct14

#endif  // DCT14_CORPUS_IO_H_
