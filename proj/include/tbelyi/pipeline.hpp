/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TBELYI_PIPELINE_HPP
#define TBELYI_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tbelyi/corpus.hpp"

namespace tbelyi {

struct RunConfig {
  int torsion_bound = 24;
  int closure_bound = 64;
  int series_precision = kDefaultPrecision;
  double timeout_seconds = 60.0;
  int threads = 0;  // 0: hardware concurrency

  /// Throws InvalidArgument unless every bound is >= 1 and the timeout is >= 0.
  void validate() const;
};

enum class EntryStatus { Ok, Mismatch, Unresolved, Timeout };
const char* status_name(EntryStatus s);

struct DecompositionResult {
  std::string kind;  // "dynamical" or "isogeny"
  bool verified = false;
  std::string detail;
};

struct EntryResult {
  std::string label;
  EntryStatus status = EntryStatus::Ok;
  std::vector<std::string> mismatches;
  std::optional<QuasiCriticalReport> report;
  std::optional<Tri> belyi;
  std::optional<DecompositionResult> decomposition;
};

struct RunSummary {
  int total = 0;
  int ok = 0;
  int mismatch = 0;
  int unresolved = 0;
  int timeout = 0;
  int all_torsion = 0;
};

struct RunResult {
  RunConfig config;
  std::vector<EntryResult> entries;  // sorted by label
  RunSummary summary() const;
};

/// Runs one entry; cooperative checkpoints between stages enforce the timeout.
EntryResult run_entry(const CorpusEntry& entry, const RunConfig& config);

/// Runs every entry on a worker pool; results are ordered by label.
RunResult run_pipeline(const std::vector<CorpusEntry>& entries, const RunConfig& config);

}  // namespace tbelyi

#endif
