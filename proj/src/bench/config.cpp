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

#include "bravo/bench/config.hpp"

#include <stdexcept>
#include <string>

namespace bravo::bench {

const char* to_string(Benchmark b) {
  switch (b) {
    case Benchmark::kAlternator: return "alternator";
    case Benchmark::kTestRwlock: return "testrwlock";
    case Benchmark::kRwBench: return "rwbench";
    case Benchmark::kInterference: return "interference";
  }
  return "?";
}

const char* to_string(LockImpl l) {
  switch (l) {
    case LockImpl::kCentralized: return "centralized";
    case LockImpl::kDistributed: return "distributed";
    case LockImpl::kBravoCentralized: return "bravo-centralized";
    case LockImpl::kBravoDistributed: return "bravo-distributed";
  }
  return "?";
}

std::optional<Benchmark> parse_benchmark(std::string_view name) {
  if (name == "alternator") return Benchmark::kAlternator;
  if (name == "testrwlock") return Benchmark::kTestRwlock;
  if (name == "rwbench") return Benchmark::kRwBench;
  if (name == "interference") return Benchmark::kInterference;
  return std::nullopt;
}

std::optional<LockImpl> parse_lock_impl(std::string_view name) {
  if (name == "centralized") return LockImpl::kCentralized;
  if (name == "distributed") return LockImpl::kDistributed;
  if (name == "bravo-centralized") return LockImpl::kBravoCentralized;
  if (name == "bravo-distributed") return LockImpl::kBravoDistributed;
  return std::nullopt;
}

bool is_bravo(LockImpl l) {
  return l == LockImpl::kBravoCentralized || l == LockImpl::kBravoDistributed;
}

void BenchConfig::validate() const {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (duration_s < 1.0) {
    throw std::invalid_argument("duration must be >= 1 second");
  }
  if (!(write_prob >= 0.0 && write_prob <= 1.0)) {
    throw std::invalid_argument("write probability must be in [0,1]");
  }
  if (table_size == 0 || (table_size & (table_size - 1)) != 0) {
    throw std::invalid_argument("table size must be a power of two");
  }
  if (benchmark == Benchmark::kInterference) {
    if (lock_pool == 0 || (lock_pool & (lock_pool - 1)) != 0) {
      throw std::invalid_argument(
          "interference lock pool must be a power of two");
    }
    if (!is_bravo(lock_impl)) {
      throw std::invalid_argument(
          "interference requires a bravo-* lock (it compares readers-table "
          "layouts)");
    }
  }
}

}  // namespace bravo::bench
