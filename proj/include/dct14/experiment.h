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

// Batch experiments behind the command-line tool: the complexity table,
// the corpus sweep over retention counts, and the single-image report.

#ifndef DCT14_EXPERIMENT_H_
#define DCT14_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dct14/corpus_io.h"
#include "dct14/metrics.h"
#include "dct14/transform_kernels.h"

namespace dct14 {

struct ExperimentConfig {
  std::vector<std::string> transforms;
  int r_min = 2;
  int r_max = 45;
  // Directory of .pgm files; the synthetic corpus is used when empty.
  std::optional<std::filesystem::path> corpus;
  std::uint64_t seed = 1;
  int n_images = 45;
  std::filesystem::path out = ".";
  PsnrAveraging averaging = PsnrAveraging::kPerImage;
  // 0 picks the hardware concurrency.
  int threads = 0;
};

// kInvalidConfig for an empty transform list, duplicates, or an r range
// outside [1, 64]; kUnknownTransform for names the registry lacks.
void ValidateConfig(const ExperimentConfig& config,
                    const KernelRegistry& registry);

struct NamedImage {
  std::string id;
  GrayImage image;
};

// Reads the corpus directory, or synthesizes n_images from seed.
std::vector<NamedImage> LoadCorpus(const ExperimentConfig& config);

struct SweepResult {
  // Ordered by image, then transform (config order), then r.
  std::vector<QualityRecord> records;
  // Ordered by transform name, then r; APE attached against "dct".
  std::vector<CorpusSummary> summaries;
};

// Compresses every image with every transform at every r in
// [r_min, r_max]. Output is identical for any thread count.
SweepResult RunSweep(const KernelRegistry& registry,
                     std::span<const std::string> transforms, int r_min,
                     int r_max, std::span<const NamedImage> images,
                     PsnrAveraging averaging = PsnrAveraging::kPerImage,
                     int threads = 0);

// Writes records.csv, summary.csv and sweep_meta.json under config.out.
void WriteSweepOutputs(const SweepResult& result,
                       const ExperimentConfig& config,
                       std::span<const NamedImage> images);

struct ImageReport {
  std::string transform;
  double mse = 0.0;
  Psnr psnr = Psnr::Infinite();
  GrayImage reconstruction;
};

// "dct" followed by every registered transform, in registry order.
std::vector<std::string> ReportTransforms(const KernelRegistry& registry);

std::vector<ImageReport> RunImageReport(const KernelRegistry& registry,
                                        std::span<const std::string> transforms,
                                        const GrayImage& image, int r);

struct ComplexityRow {
  std::string name;
  std::string label;
  OpCount cost;
  // Tallied by running the flow graph rather than taken from the literature.
  bool measured = false;
  bool kernel_available = false;
};

std::vector<ComplexityRow> ComplexityRows(const KernelRegistry& registry);

}  // namespace dct14

#endif  // DCT14_EXPERIMENT_H_
