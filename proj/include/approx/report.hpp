// Copyright 2026 The approx-adders Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment drivers behind the approx-adder command-line tool. Each cmd_*
// function is a complete subcommand: it writes its data artifacts plus a
// manifest and returns a process exit code.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "approx/adders.hpp"
#include "approx/cost_model.hpp"
#include "approx/error_metrics.hpp"
#include "approx/simulate.hpp"
#include "json.hpp"

namespace approx::report {

enum class ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kConfigError = 2,
  kGuardViolation = 3,
  kClaimFailure = 4,
};

enum class Format : std::uint8_t { kCsv, kJson };

struct ExperimentConfig {
  unsigned width = 32;
  std::vector<Architecture> archs{Architecture::kRca, Architecture::kCla};
  std::vector<unsigned> k_list{0};
  std::vector<ApproxStyle> styles{ApproxStyle::kOr};
  VectorStream stream = VectorStream::exhaustive();
  std::optional<std::string> cells_path;
  std::optional<std::string> table2_path;
  std::filesystem::path out_dir = ".";
  std::vector<Format> formats{Format::kCsv, Format::kJson};
  simd::Isa isa = simd::Isa::kScalar;

  /// Every (arch, style, k) combination, deduplicated and sorted by arch,
  /// style, k. Throws SpecError if any combination is invalid.
  std::vector<AdderSpec> specs() const;
  /// Validates specs() and the stream against the width guard.
  void validate() const;
  bool wants(Format f) const;

  nlohmann::json to_json() const;
  /// Reads the keys produced by to_json; absent keys keep their defaults.
  static ExperimentConfig from_json(const nlohmann::json& j, ExperimentConfig base);
};

std::string sha256_hex(std::string_view data);

struct ManifestEntry {
  std::string path;
  std::string sha256;
  std::uintmax_t bytes = 0;
};

/// Records one command run and the files it emitted.
class RunManifest {
 public:
  RunManifest(std::string command, nlohmann::json config);

  /// Writes `content` to out_dir/name and records its checksum.
  void emit(const std::filesystem::path& out_dir, const std::string& name,
            const std::string& content);
  void add_seed(std::uint64_t seed) { seeds_.push_back(seed); }
  const std::vector<ManifestEntry>& files() const { return files_; }

  /// Includes a UTC timestamp, so manifests differ between runs while the
  /// data files they list do not.
  nlohmann::json to_json() const;
  /// Writes manifest_<command>.json into out_dir.
  std::filesystem::path write(const std::filesystem::path& out_dir) const;

 private:
  std::string command_;
  nlohmann::json config_;
  std::vector<std::uint64_t> seeds_;
  std::vector<ManifestEntry> files_;
};

// ---- serialisation used by the commands -----------------------------------

nlohmann::json errors_json(const std::vector<SweepRow>& rows, const VectorStream& stream);
std::string costs_csv(const std::vector<CostReport>& reports);
nlohmann::json costs_json(const std::vector<CostReport>& reports);
std::string table2_repro_csv(const std::vector<ReproRow>& rows);
nlohmann::json table2_repro_json(const std::vector<ReproRow>& rows);
/// Two-column "legend pdp" text, one row per table entry.
std::string fig3_data(const std::vector<ReproRow>& rows);
std::string table1_csv();
nlohmann::json table1_json();

// ---- commands -------------------------------------------------------------

struct BuildOptions {
  AdderSpec spec;
  std::optional<std::filesystem::path> out;
};
int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  AdderSpec spec;
  VectorStream stream = VectorStream::monte_carlo(1000, 42);
  std::optional<InputVector> single;
  std::filesystem::path out_dir = ".";
  simd::Isa isa = simd::Isa::kScalar;
};
int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);

int cmd_errors(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_costs(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
int cmd_table1(Format format, std::ostream& out);

struct ReproduceOptions {
  std::optional<std::string> table2_path;
  std::optional<std::string> cells_path;
  std::optional<std::filesystem::path> out_dir;
  simd::Isa isa = simd::Isa::kScalar;
};
int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace approx::report
