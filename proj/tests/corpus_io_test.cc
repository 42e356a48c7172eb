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

#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace dct14 {
namespace {

ErrorCode CodeOf(const std::string& pgm) {
  std::istringstream in(pgm);
  try {
    ReadPgm(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << pgm;
  return ErrorCode::kInvalidConfig;
}

GrayImage RandomIntegerImage(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<double> px(static_cast<std::size_t>(w) * h);
  for (double& v : px) v = dist(rng);
  return GrayImage(w, h, std::move(px));
}

TEST(GrayImageTest, Invariants) {
  EXPECT_THROW(GrayImage(0, 4, {}), Error);
  EXPECT_THROW(GrayImage(2, 2, {1, 2, 3}), Error);
  try {
    GrayImage(1, 1, {256.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEntry);
  }
}

TEST(PgmTest, MinimalAsciiFile) {
  std::istringstream in("P2\n1 1\n255\n0\n");
  const GrayImage img = ReadPgm(in);
  EXPECT_EQ(img.width(), 1);
  EXPECT_EQ(img.height(), 1);
  EXPECT_EQ(img.samples(), std::vector<double>{0.0});
}

TEST(PgmTest, CommentsAndSmallMaxval) {
  std::istringstream in("P2\n# made by hand\n3 1 # width height\n15\n0 7 15\n");
  EXPECT_EQ(ReadPgm(in).samples(), (std::vector<double>{0, 7, 15}));
}

TEST(PgmTest, Errors) {
  EXPECT_EQ(CodeOf(std::string("P5\n2 2\n65535\n") + std::string(8, '\0')),
            ErrorCode::kUnsupportedMaxval);
  EXPECT_EQ(CodeOf("P6\n1 1\n255\n\x01\x02\x03"), ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf("P2\nx 1\n255\n0"), ErrorCode::kMalformedHeader);
  EXPECT_EQ(CodeOf("P5\n4 4\n255\nabc"), ErrorCode::kTruncatedData);
  EXPECT_EQ(CodeOf("P2\n2 2\n255\n1 2 3"), ErrorCode::kTruncatedData);
}

TEST(PgmTest, RoundTripIntegerImage) {
  const GrayImage img = RandomIntegerImage(24, 16, 1);
  std::stringstream buf;
  WritePgm(img, buf);
  EXPECT_EQ(ReadPgm(buf), img);
}

TEST(PgmTest, WriteRoundsHalfAwayFromZero) {
  std::stringstream buf;
  WritePgm(GrayImage(1, 1, {127.5}), buf);
  EXPECT_EQ(ReadPgm(buf).samples()[0], 128.0);
}

TEST(PgmTest, GradientRereadWithinHalfLevel) {
  std::vector<double> px(64);
  for (int k = 0; k < 64; ++k) px[k] = k * 3.97;
  std::stringstream buf;
  WritePgm(GrayImage(8, 8, px), buf);
  const GrayImage back = ReadPgm(buf);
  for (int k = 0; k < 64; ++k) EXPECT_LE(std::abs(back.samples()[k] - px[k]), 0.5);
}

TEST(PgmTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "dct14_pgm_test.pgm";
  const GrayImage img = RandomIntegerImage(8, 8, 2);
  WritePgm(img, path);
  EXPECT_EQ(ReadPgm(path), img);
  std::filesystem::remove(path);
  try {
    ReadPgm(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoFailure);
  }
}

TEST(TileTest, CountsAndOrder) {
  std::vector<double> px(256);
  for (int k = 0; k < 256; ++k) px[k] = k % 256;
  const GrayImage img(16, 16, px);
  const auto blocks = TileBlocks(img);
  ASSERT_EQ(blocks.size(), 4u);
  // Block 1 is the top-right tile.
  EXPECT_EQ(blocks[1](0, 0), img.at(8, 0));
  EXPECT_EQ(blocks[2](0, 0), img.at(0, 8));
  EXPECT_EQ(blocks[3](7, 7), img.at(15, 15));
  EXPECT_EQ(TileBlocks(GrayImage(512, 512, std::vector<double>(512 * 512))).size(),
            4096u);
  try {
    TileBlocks(GrayImage(9, 8, std::vector<double>(72)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadDimensions);
  }
}

TEST(TileTest, UntileInvertsTile) {
  for (auto [w, h] : {std::pair{8, 8}, {16, 40}, {64, 24}}) {
    const GrayImage img = RandomIntegerImage(w, h, w * 100 + h);
    EXPECT_EQ(UntileBlocks(w, h, TileBlocks(img)), img);
  }
}

TEST(SynthesizeTest, DeterministicAndInRange) {
  const auto a = SynthesizeCorpus(42, 3);
  const auto b = SynthesizeCorpus(42, 3);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a[0], SynthesizeCorpus(43, 1)[0]);
  // Image i does not depend on the corpus size.
  EXPECT_EQ(SynthesizeCorpus(42, 1)[0], a[0]);
  for (const GrayImage& img : a) {
    EXPECT_EQ(img.width(), 512);
    EXPECT_EQ(img.height(), 512);
    for (double v : img.samples()) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 255.0);
    }
  }
  EXPECT_NE(a[0], a[1]);
}

TEST(SynthesizeTest, FullCorpusSize) {
  EXPECT_EQ(SynthesizeCorpus(1, 45, 16).size(), 45u);
}

}  // namespace
}  // namespace dct14
