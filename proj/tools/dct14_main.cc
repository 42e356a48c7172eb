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

// dct14: experiment driver.
//
//   dct14 complexity
//   dct14 sweep --transforms dct,proposed,sdct --r-min 2 --r-max 45 --out out/
//   dct14 lena path/to/lena.pgm --r 25
//   dct14 transform --transform proposed --input 1,2,3,4,5,6,7,8
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 internal invariant
// violation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dct14/codec.h"
#include "dct14/experiment.h"
#include "dct14/fast_transform.h"

#ifndef DCT14_DEFAULT_KERNELS
#define DCT14_DEFAULT_KERNELS "data/kernels.txt"
#endif

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

namespace fs = std::filesystem;
using namespace dct14;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kUnknownTransform:
    case ErrorCode::kInvalidRetention:
    case ErrorCode::kDuplicateName:
      return kExitUsage;
    case ErrorCode::kIoFailure:
    case ErrorCode::kMissingImage:
    case ErrorCode::kMalformedHeader:
    case ErrorCode::kUnsupportedMaxval:
    case ErrorCode::kTruncatedData:
    case ErrorCode::kMalformedKernelFile:
    case ErrorCode::kBadDimensions:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

KernelRegistry LoadRegistry(const std::string& kernels_path) {
  KernelRegistry registry;
  if (!kernels_path.empty()) registry.Load(ReadKernelFile(kernels_path));
  return registry;
}

int RunComplexity(const KernelRegistry& registry) {
  std::printf("%-24s %5s %5s %6s %5s  %s\n", "method", "add", "mult",
              "shifts", "total", "source");
  for (const ComplexityRow& row : ComplexityRows(registry)) {
    const char* source = row.measured           ? "measured"
                         : row.kernel_available ? "declared"
                                                : "declared, no kernel";
    std::printf("%-24s %5d %5d %6d %5d  %s\n", row.name.c_str(),
                row.cost.additions, row.cost.multiplications, row.cost.shifts,
                row.cost.total(), source);
    if (row.measured && row.cost != OpCount{14, 0, 0}) {
      std::fprintf(stderr, "measured cost of %s is not 14/0/0\n",
                   row.name.c_str());
      return kExitInternal;
    }
  }
  return kExitOk;
}

int RunSweepCommand(const KernelRegistry& registry,
                    const ExperimentConfig& config) {
  ValidateConfig(config, registry);
  const auto images = LoadCorpus(config);
  const SweepResult result =
      RunSweep(registry, config.transforms, config.r_min, config.r_max, images,
               config.averaging, config.threads);
  WriteSweepOutputs(result, config, images);
  std::printf("%zu images, %zu records, %zu summary rows -> %s\n",
              images.size(), result.records.size(), result.summaries.size(),
              config.out.string().c_str());
  return kExitOk;
}

int RunLenaCommand(const KernelRegistry& registry, const fs::path& image_path,
                   int r, std::vector<std::string> transforms,
                   fs::path out_dir) {
  if (!fs::is_regular_file(image_path)) {
    throw Error(ErrorCode::kMissingImage, image_path.string());
  }
  const GrayImage image = ReadPgm(image_path);
  if (transforms.empty()) transforms = ReportTransforms(registry);
  for (const std::string& name : transforms) {
    if (!registry.Contains(name)) throw Error(ErrorCode::kUnknownTransform, name);
  }
  if (out_dir.empty()) out_dir = image_path.parent_path();
  if (!out_dir.empty()) fs::create_directories(out_dir);

  std::printf("r = %d (compression %.4f%%)\n", r, CompressionRatio(r));
  for (const ImageReport& rep : RunImageReport(registry, transforms, image, r)) {
    const fs::path out = out_dir / (image_path.stem().string() + "_" +
                                    rep.transform + "_r" + std::to_string(r) +
                                    ".pgm");
    WritePgm(rep.reconstruction, out);
    std::printf("%-10s PSNR %s dB  MSE %s  -> %s\n", rep.transform.c_str(),
                FormatPsnr(rep.psnr).c_str(), FormatNumber(rep.mse).c_str(),
                out.string().c_str());
  }
  return kExitOk;
}

int RunTransformCommand(const KernelRegistry& registry, const std::string& name,
                        const std::vector<double>& input) {
  if (input.size() != kN) {
    throw Error(ErrorCode::kInvalidConfig, "--input needs exactly 8 values");
  }
  Vec8 x;
  std::copy(input.begin(), input.end(), x.begin());
  const ApproximateTransform& t = registry.Get(name);
  auto print = [](const char* label, const Vec8& v) {
    std::printf("%-10s", label);
    for (double e : v) std::printf(" %10.6g", e + 0.0);  // no "-0"
    std::printf("\n");
  };
  print("x", x);
  print("T*x", t.KernelProduct(x));
  if (name == KernelRegistry::kProposedName) {
    const auto fast = FastForward(x);
    print("fast T*x", fast.values);
    std::printf("cost: %d additions, %d multiplications, %d shifts\n",
                fast.cost.additions, fast.cost.multiplications,
                fast.cost.shifts);
  }
  const Vec8 coeffs = ApplyForward(t, x);
  print("D*T*x", coeffs);
  print("inverse", ApplyInverse(t, coeffs));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate 8-point DCT toolkit and block-compression harness"};
  app.require_subcommand(1);
  std::string kernels_path = DCT14_DEFAULT_KERNELS;
  app.add_option("--kernels", kernels_path,
                 "Comparison kernel file (empty to load none)");

  app.add_subcommand("complexity", "Arithmetic cost per transform");

  ExperimentConfig config;
  config.transforms = {"dct", "proposed"};
  std::string corpus;
  std::string averaging = "per-image";
  auto* sweep = app.add_subcommand("sweep", "Corpus sweep over r");
  sweep->add_option("--transforms", config.transforms)->delimiter(',');
  sweep->add_option("--r-min", config.r_min)->capture_default_str();
  sweep->add_option("--r-max", config.r_max)->capture_default_str();
  sweep->add_option("--corpus", corpus, "Directory of .pgm images");
  sweep->add_option("--seed", config.seed)->capture_default_str();
  sweep->add_option("--n-images", config.n_images)->capture_default_str();
  sweep->add_option("--out", config.out)->capture_default_str();
  sweep->add_option("--threads", config.threads, "0 = all cores");
  sweep->add_option("--psnr-average", averaging)
      ->check(CLI::IsMember({"per-image", "from-mse"}))
      ->capture_default_str();

  std::string lena_path;
  int lena_r = 25;
  std::vector<std::string> lena_transforms;
  std::string lena_out;
  auto* lena = app.add_subcommand("lena", "Single-image report at one r");
  lena->add_option("image", lena_path, "512x512 8-bit PGM")->required();
  lena->add_option("--r", lena_r)->capture_default_str();
  lena->add_option("--transforms", lena_transforms)->delimiter(',');
  lena->add_option("--out", lena_out, "Directory for reconstructions");

  std::string single_name = "proposed";
  std::vector<double> single_input;
  auto* single = app.add_subcommand("transform", "Apply one 8-point transform");
  single->add_option("--transform", single_name)->capture_default_str();
  single->add_option("--input", single_input)->delimiter(',')->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const KernelRegistry registry = LoadRegistry(kernels_path);
    if (app.got_subcommand("complexity")) return RunComplexity(registry);
    if (app.got_subcommand(sweep)) {
      if (!corpus.empty()) config.corpus = corpus;
      config.averaging = averaging == "from-mse" ? PsnrAveraging::kFromAverageMse
                                                 : PsnrAveraging::kPerImage;
      return RunSweepCommand(registry, config);
    }
    if (app.got_subcommand(lena)) {
      return RunLenaCommand(registry, lena_path, lena_r, lena_transforms,
                            lena_out);
    }
    return RunTransformCommand(registry, single_name, single_input);
  } catch (const Error& e) {
    std::fprintf(stderr, "dct14: %s\n", e.what());
    return ExitCodeFor(e.code());
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "dct14: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dct14: internal error: %s\n", e.what());
    return kExitInternal;
  }
}
