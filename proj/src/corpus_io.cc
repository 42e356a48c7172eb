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

#include "dct14/corpus_io.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>

namespace dct14 {
namespace {

void CheckTileable(int width, int height) {
  if (width % kN != 0 || height % kN != 0) {
    throw Error(ErrorCode::kBadDimensions,
                std::to_string(width) + "x" + std::to_string(height) +
                    " is not a multiple of 8");
  }
}

// Reads the next header token, skipping whitespace and '#' comments.
std::string HeaderToken(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  return token;
}

int HeaderInt(std::istream& in, const char* field) {
  const std::string token = HeaderToken(in);
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(),
                   [](unsigned char ch) { return std::isdigit(ch); })) {
    throw Error(ErrorCode::kMalformedHeader,
                std::string("bad ") + field + " '" + token + "'");
  }
  try {
    return std::stoi(token);
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kMalformedHeader,
                std::string(field) + " out of range");
  }
}

// Uniform double in [0, 1) from the top 53 bits; unlike the standard
// distributions this is identical across library implementations.
double Unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * Unit(rng);
}

GrayImage SynthesizeOne(std::mt19937_64& rng, int size) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double s = size;

  const double base = Uniform(rng, 70.0, 170.0);
  const double grad_angle = Uniform(rng, 0.0, kTwoPi);
  const double grad_amp = Uniform(rng, 20.0, 70.0);

  struct Wave {
    double fx, fy, phase, amp;
  };
  std::vector<Wave> waves(2 + rng() % 3);
  for (Wave& w : waves) {
    const double period = Uniform(rng, 24.0, 256.0);
    const double dir = Uniform(rng, 0.0, kTwoPi);
    w = {std::cos(dir) / period, std::sin(dir) / period,
         Uniform(rng, 0.0, kTwoPi), Uniform(rng, 5.0, 25.0)};
  }

  // Half-plane steps with a slightly softened edge.
  struct Edge {
    double nx, ny, offset, height;
  };
  std::vector<Edge> edges(1 + rng() % 4);
  for (Edge& e : edges) {
    const double dir = Uniform(rng, 0.0, kTwoPi);
    e = {std::cos(dir), std::sin(dir), Uniform(rng, -0.35, 0.35) * s,
         Uniform(rng, -45.0, 45.0)};
  }

  struct Blob {
    double cx, cy, radius, amp;
  };
  std::vector<Blob> blobs(1 + rng() % 3);
  for (Blob& b : blobs) {
    b = {Uniform(rng, 0.0, s), Uniform(rng, 0.0, s),
         Uniform(rng, 0.05, 0.25) * s, Uniform(rng, -50.0, 50.0)};
  }

  const double grain = Uniform(rng, 0.5, 3.0);

  std::vector<double> samples(static_cast<std::size_t>(size) * size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double u = (x - s / 2) / s;
      const double v = (y - s / 2) / s;
      double value =
          base + grad_amp * (std::cos(grad_angle) * u + std::sin(grad_angle) * v);
      for (const Wave& w : waves) {
        value += w.amp * std::sin(kTwoPi * (w.fx * x + w.fy * y) + w.phase);
      }
      for (const Edge& e : edges) {
        const double d = e.nx * (x - s / 2) + e.ny * (y - s / 2) - e.offset;
        value += e.height * (0.5 + 0.5 * std::tanh(d / 1.5));
      }
      for (const Blob& b : blobs) {
        const double dx = x - b.cx;
        const double dy = y - b.cy;
        value += b.amp * std::exp(-(dx * dx + dy * dy) / (2 * b.radius * b.radius));
      }
      value += grain * (Unit(rng) - 0.5) * 2.0;
      samples[static_cast<std::size_t>(y) * size + x] =
          std::round(std::clamp(value, 0.0, 255.0));
    }
  }
  return GrayImage(size, size, std::move(samples));
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width_ <= 0 || height_ <= 0) {
    throw Error(ErrorCode::kBadDimensions, "image sides must be positive");
  }
  if (samples_.size() != static_cast<std::size_t>(width_) * height_) {
    throw Error(ErrorCode::kBadDimensions,
                "sample count does not match width * height");
  }
  for (double v : samples_) {
    if (!(v >= 0.0 && v <= 255.0)) {
      throw Error(ErrorCode::kInvalidEntry,
                  "sample " + std::to_string(v) + " outside [0, 255]");
    }
  }
}

GrayImage ReadPgm(std::istream& in) {
  const std::string magic = HeaderToken(in);
  if (magic != "P2" && magic != "P5") {
    throw Error(ErrorCode::kMalformedHeader, "bad magic '" + magic + "'");
  }
  const int width = HeaderInt(in, "width");
  const int height = HeaderInt(in, "height");
  const int maxval = HeaderInt(in, "maxval");
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kMalformedHeader, "zero image size");
  }
  if (maxval == 0) throw Error(ErrorCode::kMalformedHeader, "maxval 0");
  if (maxval > 255) {
    throw Error(ErrorCode::kUnsupportedMaxval,
                "maxval " + std::to_string(maxval) + " > 255");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<double> samples(count);
  if (magic == "P5") {
    // HeaderToken consumed exactly one whitespace byte after maxval.
    std::vector<unsigned char> raw(count);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw Error(ErrorCode::kTruncatedData,
                  "expected " + std::to_string(count) + " bytes, got " +
                      std::to_string(in.gcount()));
    }
    std::copy(raw.begin(), raw.end(), samples.begin());
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::string token = HeaderToken(in);
      if (token.empty()) {
        throw Error(ErrorCode::kTruncatedData,
                    "expected " + std::to_string(count) + " samples, got " +
                        std::to_string(i));
      }
      int value = 0;
      try {
        std::size_t used = 0;
        value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kTruncatedData, "bad sample '" + token + "'");
      }
      samples[i] = value;
    }
  }
  for (double v : samples) {
    if (v < 0 || v > maxval) {
      throw Error(ErrorCode::kInvalidEntry, "sample exceeds maxval");
    }
  }
  return GrayImage(width, height, std::move(samples));
}

GrayImage ReadPgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  return ReadPgm(in);
}

void WritePgm(const GrayImage& image, std::ostream& out) {
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  std::vector<unsigned char> raw(image.samples().size());
  std::transform(image.samples().begin(), image.samples().end(), raw.begin(),
                 [](double v) {
                   return static_cast<unsigned char>(
                       std::clamp(std::round(v), 0.0, 255.0));
                 });
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed");
}

void WritePgm(const GrayImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot create " + path.string());
  }
  WritePgm(image, out);
}

std::vector<Block> TileBlocks(const GrayImage& image) {
  CheckTileable(image.width(), image.height());
  const int bw = image.width() / kN;
  const int bh = image.height() / kN;
  std::vector<Block> blocks(static_cast<std::size_t>(bw) * bh);
  for (int by = 0; by < bh; ++by) {
    for (int bx = 0; bx < bw; ++bx) {
      Block& b = blocks[by * bw + bx];
      for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) b(r, c) = image.at(bx * kN + c, by * kN + r);
    }
  }
  return blocks;
}

GrayImage UntileBlocks(int width, int height, std::span<const Block> blocks) {
  CheckTileable(width, height);
  const int bw = width / kN;
  const int bh = height / kN;
  if (blocks.size() != static_cast<std::size_t>(bw) * bh) {
    throw Error(ErrorCode::kBadDimensions, "block count does not match size");
  }
  std::vector<double> samples(static_cast<std::size_t>(width) * height);
  for (int by = 0; by < bh; ++by) {
    for (int bx = 0; bx < bw; ++bx) {
      const Block& b = blocks[by * bw + bx];
      for (int r = 0; r < kN; ++r) {
        for (int c = 0; c < kN; ++c) {
          samples[static_cast<std::size_t>(by * kN + r) * width + bx * kN + c] =
              std::clamp(b(r, c), 0.0, 255.0);
        }
      }
    }
  }
  return GrayImage(width, height, std::move(samples));
}

std::vector<std::filesystem::path> ListCorpus(
    const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoFailure, dir.string() + " is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<GrayImage> SynthesizeCorpus(std::uint64_t seed, int count,
                                        int size) {
  if (count < 1) throw Error(ErrorCode::kInvalidConfig, "count must be >= 1");
  CheckTileable(size, size);
  std::vector<GrayImage> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    // Independent stream per image so image i does not depend on count.
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    corpus.push_back(SynthesizeOne(rng, size));
  }
  return corpus;
}

}  // namespace dct14
