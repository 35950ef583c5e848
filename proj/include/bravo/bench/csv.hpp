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

#include <string>
#include <vector>

#include "bravo/bench/result.hpp"

namespace bravo::bench {

// Column order of the emitted file; one header row, then one row per run.
// UTF-8, comma separated, newline terminated.
inline constexpr const char* kCsvHeader =
    "benchmark,lock_impl,threads,write_prob,lock_pool,table_size,n,seed,"
    "run_index,total_ops,ops_per_sec,fast_reads,slow_reads,revocations,"
    "total_revocation_ns";

struct CsvRow {
  std::string benchmark;
  std::string lock_impl;
  std::uint64_t threads = 0;
  double write_prob = 0.0;
  std::uint64_t lock_pool = 0;
  std::uint64_t table_size = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t run_index = 0;
  std::uint64_t total_ops = 0;
  double ops_per_sec = 0.0;
  std::uint64_t fast_reads = 0;
  std::uint64_t slow_reads = 0;
  std::uint64_t revocations = 0;
  std::uint64_t total_revocation_ns = 0;
};

// Throws std::runtime_error naming the path on I/O failure.  Doubles are
// written with max_digits10 precision so a parse-back recovers them
// exactly.
void emit_csv(const std::vector<BenchResult>& results, const std::string& path);

std::vector<CsvRow> read_csv(const std::string& path);

}  // namespace bravo::bench
