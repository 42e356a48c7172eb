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

#include "dct14/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include "json.hpp"

#include "dct14/codec.h"
#include "dct14/fast_transform.h"

namespace dct14 {
namespace {

// Per-r MSE of one image under one transform for r in [r_min, r_max].
//
// Reconstructions for increasing r are built incrementally: keeping the
// next zigzag coefficient adds coeff * (column p of Cinv)(column q of
// Cinv)^T to the block.
std::vector<double> MsePerRetention(const LinearTransform& t,
                                    const GrayImage& image, int r_min,
                                    int r_max) {
  const auto& zigzag = ZigzagOrder();
  std::vector<double> sse(r_max - r_min + 1, 0.0);
  for (const Block& block : TileBlocks(image)) {
    const Block coeffs = Forward2D(t, block);
    Block recon;
    for (int i = 0; i < r_max; ++i) {
      const auto [p, q] = zigzag[i];
      const double c = coeffs(p, q);
      if (c != 0.0) {
        for (int m = 0; m < kN; ++m) {
          const double a = c * t.inverse[m][p];
          for (int n = 0; n < kN; ++n) recon(m, n) += a * t.inverse[n][q];
        }
      }
      if (i + 1 < r_min) continue;
      double s = 0.0;
      for (int k = 0; k < kBlockSamples; ++k) {
        const double d = std::clamp(recon.v[k], 0.0, 255.0) - block.v[k];
        s += d * d;
      }
      sse[i + 1 - r_min] += s;
    }
  }
  const double n = static_cast<double>(image.samples().size());
  for (double& v : sse) v /= n;
  return sse;
}

int ResolveThreads(int requested, std::size_t work) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(n, 1);
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot create " + path.string());
  return out;
}

}  // namespace

void ValidateConfig(const ExperimentConfig& config,
                    const KernelRegistry& registry) {
  if (config.transforms.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "no transforms requested");
  }
  std::set<std::string> seen;
  for (const std::string& name : config.transforms) {
    if (!registry.Contains(name)) {
      throw Error(ErrorCode::kUnknownTransform, name);
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kInvalidConfig, "duplicate transform " + name);
    }
  }
  if (config.r_min < 1 || config.r_max > kBlockSamples ||
      config.r_min > config.r_max) {
    throw Error(ErrorCode::kInvalidConfig,
                "r range [" + std::to_string(config.r_min) + ", " +
                    std::to_string(config.r_max) + "] not within [1, 64]");
  }
  if (!config.corpus && config.n_images < 1) {
    throw Error(ErrorCode::kInvalidConfig, "n_images must be >= 1");
  }
}

std::vector<NamedImage> LoadCorpus(const ExperimentConfig& config) {
  std::vector<NamedImage> images;
  if (config.corpus) {
    for (const auto& path : ListCorpus(*config.corpus))
      images.push_back({path.stem().string(), ReadPgm(path)});
    if (images.empty()) {
      throw Error(ErrorCode::kIoFailure,
                  "no .pgm files in " + config.corpus->string());
    }
    return images;
  }
  auto synth = SynthesizeCorpus(config.seed, config.n_images);
  for (std::size_t i = 0; i < synth.size(); ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "synth_%03zu", i);
    images.push_back({id, std::move(synth[i])});
  }
  return images;
}

SweepResult RunSweep(const KernelRegistry& registry,
                     std::span<const std::string> transforms, int r_min,
                     int r_max, std::span<const NamedImage> images,
                     PsnrAveraging averaging, int threads) {
  std::vector<LinearTransform> linear;
  for (const std::string& name : transforms)
    linear.push_back(registry.Linear(name));

  const std::size_t work = images.size() * linear.size();
  std::vector<std::vector<double>> mse(work);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w; (w = next.fetch_add(1)) < work;) {
      mse[w] = MsePerRetention(linear[w % linear.size()],
                               images[w / linear.size()].image, r_min, r_max);
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = ResolveThreads(threads, work);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }

  SweepResult result;
  for (std::size_t w = 0; w < work; ++w) {
    const NamedImage& img = images[w / linear.size()];
    const std::string& name = linear[w % linear.size()].name;
    for (int r = r_min; r <= r_max; ++r)
      result.records.push_back(MakeRecord(img.id, name, r, mse[w][r - r_min]));
  }
  result.summaries = Summarize(result.records, averaging);
  AttachApe(result.summaries);
  return result;
}

void WriteSweepOutputs(const SweepResult& result,
                       const ExperimentConfig& config,
                       std::span<const NamedImage> images) {
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot create " + config.out.string() + ": " + ec.message());
  }
  {
    auto out = OpenOutput(config.out / "records.csv");
    WriteRecordsCsv(out, result.records);
  }
  {
    auto out = OpenOutput(config.out / "summary.csv");
    WriteSummaryCsv(out, result.summaries);
  }
  nlohmann::ordered_json meta;
  meta["transforms"] = config.transforms;
  meta["r_min"] = config.r_min;
  meta["r_max"] = config.r_max;
  if (config.corpus) {
    meta["corpus"] = config.corpus->string();
  } else {
    meta["corpus"] = "synthetic";
    meta["seed"] = config.seed;
  }
  std::vector<std::string> ids;
  for (const NamedImage& img : images) ids.push_back(img.id);
  meta["images"] = ids;
  meta["psnr_averaging"] = PsnrAveragingName(config.averaging);
  meta["ape_averaging"] = "mean-mse";
  meta["reconstruction"] = "clamped to [0,255], not rounded";
  auto out = OpenOutput(config.out / "sweep_meta.json");
  out << meta.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed");
}

std::vector<std::string> ReportTransforms(const KernelRegistry& registry) {
  std::vector<std::string> names = {std::string(KernelRegistry::kExactDctName)};
  names.insert(names.end(), registry.names().begin(), registry.names().end());
  return names;
}

std::vector<ImageReport> RunImageReport(const KernelRegistry& registry,
                                        std::span<const std::string> transforms,
                                        const GrayImage& image, int r) {
  std::vector<ImageReport> reports;
  for (const std::string& name : transforms) {
    GrayImage recon = CompressImage(registry.Linear(name), image, r);
    const double mse = Mse(image, recon);
    reports.push_back({name, mse, PsnrFromMse(mse), std::move(recon)});
  }
  return reports;
}

std::vector<ComplexityRow> ComplexityRows(const KernelRegistry& registry) {
  std::vector<ComplexityRow> rows;
  std::set<std::string> listed;
  for (const PublishedCost& pc : PublishedCosts()) {
    ComplexityRow row{pc.name, pc.label, pc.cost, false,
                      registry.Contains(pc.name)};
    if (pc.name == KernelRegistry::kProposedName) {
      row.cost = FastForward(IntVec8{}).cost;
      row.measured = true;
    }
    rows.push_back(row);
    listed.insert(pc.name);
  }
  for (const std::string& name : registry.names()) {
    if (listed.contains(name)) continue;
    rows.push_back({name, name, registry.Get(name).declared_cost(), false, true});
  }
  return rows;
}

}  // namespace dct14
