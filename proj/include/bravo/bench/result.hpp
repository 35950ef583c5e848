/*
 * Copyright 2026 The bravo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bravo/bench/config.hpp"
#include "bravo/stats.hpp"

namespace bravo::bench {

// The mutual-exclusion oracle tripped: a reader observed a torn guarded
// counter or a writer increment was lost.  Every benchmark run doubles as
// a correctness run; this aborts it.
struct SafetyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BenchResult {
  BenchConfig config;
  // Canonical lock name; the interference benchmark's idealized comparison
  // variant is labeled "<lock>-private".
  std::string lock_label;
  std::uint32_t run_index = 0;
  std::uint64_t total_ops = 0;
  double elapsed_s = 0.0;
  double ops_per_sec = 0.0;
  std::vector<std::uint64_t> per_thread_ops;
  LockStats stats;
  std::vector<RevocationRecord> revocations;  // when config.log_revocations
  bool is_median = false;  // marks the median-of-R row for this config
};

// Interference emits a shared-table and a private-table series plus the
// ratio of their medians (shared / private).
struct InterferenceOutcome {
  std::vector<BenchResult> shared_runs;
  std::vector<BenchResult> private_runs;
  double median_shared_ops_per_sec = 0.0;
  double median_private_ops_per_sec = 0.0;
  double ratio = 0.0;
};

}  // namespace bravo::bench
