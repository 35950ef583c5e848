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
#include <optional>
#include <string>
#include <string_view>

#include "bravo/readers_table.hpp"

namespace bravo::bench {

enum class Benchmark {
  kAlternator,    // ring of readers handing off a shared lock
  kTestRwlock,    // 1 fixed writer + (threads-1) fixed readers
  kRwBench,       // Bernoulli read/write mix with probability P
  kInterference,  // random lock from a pool, shared vs private tables
};

enum class LockImpl {
  kCentralized,
  kDistributed,
  kBravoCentralized,
  kBravoDistributed,
};

const char* to_string(Benchmark b);
const char* to_string(LockImpl l);
std::optional<Benchmark> parse_benchmark(std::string_view name);
std::optional<LockImpl> parse_lock_impl(std::string_view name);
bool is_bravo(LockImpl l);

struct BenchConfig {
  Benchmark benchmark = Benchmark::kRwBench;
  LockImpl lock_impl = LockImpl::kBravoCentralized;
  std::uint32_t threads = 8;
  double duration_s = 3.0;
  double write_prob = 0.1;   // rwbench only
  std::uint32_t lock_pool = 64;  // interference only; power of two
  std::size_t table_size = ReadersTable::kDefaultSize;
  std::uint32_t n_multiplier = 9;
  std::uint64_t seed = 42;
  bool pin_threads = false;
  // Capture per-revocation records in the run's stats domain (policy
  // verification; not a CLI knob).
  bool log_revocations = false;

  // Throws std::invalid_argument on a bad combination.
  void validate() const;
};

}  // namespace bravo::bench
