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
#include <vector>

#include "bravo/bench/config.hpp"
#include "bravo/bench/result.hpp"

namespace bravo::bench {

// One measured run with a fresh readers table and stats domain.  Throws
// SafetyViolation if the embedded oracle trips, std::invalid_argument on a
// bad config.  Not for interference (which runs in pairs; see below).
BenchResult run_single(const BenchConfig& cfg, std::uint32_t run_index);

// R repetitions of the same config; the median-throughput row is flagged.
std::vector<BenchResult> run_repeated(const BenchConfig& cfg,
                                      std::uint32_t reps);

// Shared-table vs private-tables pair, R repetitions each, with the ratio
// of median throughputs.
InterferenceOutcome run_interference(const BenchConfig& cfg,
                                     std::uint32_t reps);

// Index of the median-throughput element (lower median for even sizes).
std::size_t median_index(const std::vector<BenchResult>& results);

}  // namespace bravo::bench
