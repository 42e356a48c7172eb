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

#include "dct14/metrics.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include "dct14/codec.h"

namespace dct14 {

double Mse(const GrayImage& original, const GrayImage& reconstructed) {
  if (original.width() != reconstructed.width() ||
      original.height() != reconstructed.height()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(original.width()) + "x" +
                    std::to_string(original.height()) + " vs " +
                    std::to_string(reconstructed.width()) + "x" +
                    std::to_string(reconstructed.height()));
  }
  const auto& a = original.samples();
  const auto& b = reconstructed.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

Psnr PsnrFromMse(double mse) {
  if (!(mse >= 0.0)) {
    throw Error(ErrorCode::kInvalidEntry, "negative or NaN MSE");
  }
  if (mse == 0.0) return Psnr::Infinite();
  return Psnr::Finite(10.0 * std::log10(kPeak * kPeak / mse));
}

double ApeVsDct(double avg_mse_approx, double avg_mse_dct) {
  if (!(avg_mse_dct > 0.0)) {
    throw Error(ErrorCode::kDivisionByZero, "reference MSE is zero");
  }
  return 100.0 * std::abs(avg_mse_approx - avg_mse_dct) / avg_mse_dct;
}

QualityRecord MakeRecord(std::string image_id, std::string transform, int r,
                         double mse) {
  return {std::move(image_id), std::move(transform), r, mse,
          PsnrFromMse(mse)};
}

std::string_view PsnrAveragingName(PsnrAveraging mode) {
  return mode == PsnrAveraging::kPerImage ? "per-image" : "from-mse";
}

std::vector<CorpusSummary> Summarize(std::span<const QualityRecord> records,
                                     PsnrAveraging mode) {
  if (records.empty()) throw Error(ErrorCode::kEmptyGroup, "no records");

  struct Acc {
    double mse_sum = 0.0;
    double psnr_sum = 0.0;
    bool any_infinite = false;
    int n = 0;
  };
  std::map<std::pair<std::string, int>, Acc> groups;
  for (const QualityRecord& rec : records) {
    Acc& acc = groups[{rec.transform, rec.r}];
    acc.mse_sum += rec.mse;
    if (rec.psnr.is_infinite()) {
      acc.any_infinite = true;
    } else {
      acc.psnr_sum += rec.psnr.db();
    }
    ++acc.n;
  }

  std::vector<CorpusSummary> out;
  out.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    CorpusSummary s;
    s.transform = key.first;
    s.r = key.second;
    s.n_images = acc.n;
    s.avg_mse = acc.mse_sum / acc.n;
    if (mode == PsnrAveraging::kFromAverageMse) {
      s.avg_psnr = PsnrFromMse(s.avg_mse);
    } else if (acc.any_infinite) {
      s.avg_psnr = Psnr::Infinite();
    } else {
      s.avg_psnr = Psnr::Finite(acc.psnr_sum / acc.n);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void AttachApe(std::vector<CorpusSummary>& summaries,
               std::string_view reference) {
  std::map<int, double> ref_mse;
  for (const CorpusSummary& s : summaries)
    if (s.transform == reference) ref_mse[s.r] = s.avg_mse;
  for (CorpusSummary& s : summaries) {
    const auto it = ref_mse.find(s.r);
    if (it != ref_mse.end() && it->second > 0.0) {
      s.ape_vs_dct = ApeVsDct(s.avg_mse, it->second);
    } else {
      s.ape_vs_dct.reset();
    }
  }
}

std::string FormatNumber(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string FormatPsnr(const Psnr& psnr) {
  return psnr.is_infinite() ? "inf" : FormatNumber(psnr.db());
}

void WriteRecordsCsv(std::ostream& out,
                     std::span<const QualityRecord> records) {
  out << "image_id,transform,r,mse,psnr\n";
  for (const QualityRecord& rec : records) {
    out << rec.image_id << ',' << rec.transform << ',' << rec.r << ','
        << FormatNumber(rec.mse) << ',' << FormatPsnr(rec.psnr) << '\n';
  }
}

void WriteSummaryCsv(std::ostream& out,
                     std::span<const CorpusSummary> summaries) {
  out << "transform,r,compression_ratio,avg_mse,avg_psnr,ape_vs_dct,"
         "n_images\n";
  for (const CorpusSummary& s : summaries) {
    out << s.transform << ',' << s.r << ','
        << FormatNumber(CompressionRatio(s.r)) << ','
        << FormatNumber(s.avg_mse) << ',' << FormatPsnr(s.avg_psnr) << ','
        << (s.ape_vs_dct ? FormatNumber(*s.ape_vs_dct) : "NA") << ','
        << s.n_images << '\n';
  }
}

}  // namespace dct14
