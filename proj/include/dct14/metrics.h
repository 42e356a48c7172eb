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

#ifndef DCT14_METRICS_H_
#define DCT14_METRICS_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dct14/corpus_io.h"

namespace dct14 {

inline constexpr double kPeak = 255.0;

// PSNR in dB, or the distinguished infinite value of a lossless
// reconstruction.
class Psnr {
 public:
  static Psnr Finite(double db) { return Psnr(db, false); }
  static Psnr Infinite() { return Psnr(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Only meaningful when !is_infinite().
  double db() const { return db_; }

  bool operator==(const Psnr&) const = default;

 private:
  Psnr(double db, bool infinite) : db_(db), infinite_(infinite) {}

  double db_;
  bool infinite_;
};

// Mean squared sample difference. kDimensionMismatch on size mismatch.
double Mse(const GrayImage& original, const GrayImage& reconstructed);

// 10 log10(255^2 / mse); Psnr::Infinite() for mse == 0.
Psnr PsnrFromMse(double mse);

// 100 |approx - dct| / dct. kDivisionByZero unless dct > 0.
double ApeVsDct(double avg_mse_approx, double avg_mse_dct);

struct QualityRecord {
  std::string image_id;
  std::string transform;
  int r = 0;
  double mse = 0.0;
  Psnr psnr = Psnr::Infinite();
};

QualityRecord MakeRecord(std::string image_id, std::string transform, int r,
                         double mse);

// How avg_psnr is formed from a group of records.
enum class PsnrAveraging {
  kPerImage,        // mean of per-image PSNR values
  kFromAverageMse,  // PSNR of the mean MSE
};

std::string_view PsnrAveragingName(PsnrAveraging mode);

struct CorpusSummary {
  std::string transform;
  int r = 0;
  double avg_mse = 0.0;
  Psnr avg_psnr = Psnr::Infinite();
  int n_images = 0;
  // Filled by AttachApe; empty when no usable reference row exists.
  std::optional<double> ape_vs_dct;
};

// Groups by (transform, r) and averages. Output is sorted by transform name
// then r, independent of input order. kEmptyGroup for empty input. A group
// containing an infinite PSNR averages to infinite under kPerImage.
std::vector<CorpusSummary> Summarize(
    std::span<const QualityRecord> records,
    PsnrAveraging mode = PsnrAveraging::kPerImage);

// Sets ape_vs_dct on every summary whose r also has a `reference` row with
// positive avg_mse.
void AttachApe(std::vector<CorpusSummary>& summaries,
               std::string_view reference = "dct");

// Floats are printed with 6 significant digits; infinite PSNR as "inf" and
// a missing APE as "NA".
std::string FormatNumber(double value);
std::string FormatPsnr(const Psnr& psnr);

void WriteRecordsCsv(std::ostream& out,
                     std::span<const QualityRecord> records);
// Columns: transform,r,compression_ratio,avg_mse,avg_psnr,ape_vs_dct,n_images
void WriteSummaryCsv(std::ostream& out,
                     std::span<const CorpusSummary> summaries);

}  // namespace dct14

#endif  // DCT14_METRICS_H_
