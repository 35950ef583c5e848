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

#include "bravo/bench/runner.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bravo/bench/workloads.hpp"

namespace bravo::bench {

namespace {

struct RunState {
  std::unique_ptr<ReadersTable> table;
  std::unique_ptr<StatsDomain> stats;
  LockSetup setup;
};

RunState fresh_state(const BenchConfig& cfg) {
  RunState s;
  s.table = std::make_unique<ReadersTable>(cfg.table_size);
  s.stats = std::make_unique<StatsDomain>();
  s.stats->set_revocation_log(cfg.log_revocations);
  s.setup = LockSetup{s.table.get(), PolicyParams{cfg.n_multiplier},
                      s.stats.get()};
  return s;
}

template <typename L>
BenchResult run_one(const BenchConfig& cfg) {
  RunState state = fresh_state(cfg);
  const std::string label = to_string(cfg.lock_impl);
  switch (cfg.benchmark) {
    case Benchmark::kAlternator:
      return run_alternator_kernel<L>(cfg, state.setup, label);
    case Benchmark::kTestRwlock:
      return run_testrwlock_kernel<L>(cfg, state.setup, label);
    case Benchmark::kRwBench:
      return run_rwbench_kernel<L>(cfg, state.setup, label);
    case Benchmark::kInterference:
      break;
  }
  throw std::invalid_argument("interference runs in pairs; use run_interference");
}

template <typename L>
BenchResult run_one_interference(const BenchConfig& cfg, bool private_tables) {
  RunState state = fresh_state(cfg);
  std::string label = to_string(cfg.lock_impl);
  if (private_tables) label += "-private";
  return run_interference_kernel<L>(cfg, state.setup, std::move(label),
                                    private_tables);
}

void mark_median(std::vector<BenchResult>& runs) {
  if (!runs.empty()) runs[median_index(runs)].is_median = true;
}

}  // namespace

std::size_t median_index(const std::vector<BenchResult>& results) {
  std::vector<std::size_t> order(results.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return results[a].ops_per_sec < results[b].ops_per_sec;
  });
  return order[(order.size() - 1) / 2];
}

BenchResult run_single(const BenchConfig& cfg, std::uint32_t run_index) {
  cfg.validate();
  BenchResult r;
  switch (cfg.lock_impl) {
    case LockImpl::kCentralized:
      r = run_one<CentralizedLock>(cfg);
      break;
    case LockImpl::kDistributed:
      r = run_one<DistributedLock>(cfg);
      break;
    case LockImpl::kBravoCentralized:
      r = run_one<BravoCentralized>(cfg);
      break;
    case LockImpl::kBravoDistributed:
      r = run_one<BravoDistributed>(cfg);
      break;
  }
  r.run_index = run_index;
  return r;
}

std::vector<BenchResult> run_repeated(const BenchConfig& cfg,
                                      std::uint32_t reps) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  std::vector<BenchResult> runs;
  runs.reserve(reps);
  for (std::uint32_t i = 0; i < reps; ++i) runs.push_back(run_single(cfg, i));
  mark_median(runs);
  return runs;
}

InterferenceOutcome run_interference(const BenchConfig& cfg,
                                     std::uint32_t reps) {
  cfg.validate();
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  if (cfg.benchmark != Benchmark::kInterference) {
    throw std::invalid_argument("config is not an interference benchmark");
  }

  InterferenceOutcome out;
  for (std::uint32_t i = 0; i < reps; ++i) {
    BenchResult shared;
    BenchResult priv;
    switch (cfg.lock_impl) {
      case LockImpl::kBravoCentralized:
        shared = run_one_interference<BravoCentralized>(cfg, false);
        priv = run_one_interference<BravoCentralized>(cfg, true);
        break;
      case LockImpl::kBravoDistributed:
        shared = run_one_interference<BravoDistributed>(cfg, false);
        priv = run_one_interference<BravoDistributed>(cfg, true);
        break;
      default:
        throw std::invalid_argument(
            "interference requires a bravo-* lock implementation");
    }
    shared.run_index = i;
    priv.run_index = i;
    out.shared_runs.push_back(std::move(shared));
    out.private_runs.push_back(std::move(priv));
  }
  mark_median(out.shared_runs);
  mark_median(out.private_runs);
  out.median_shared_ops_per_sec =
      out.shared_runs[median_index(out.shared_runs)].ops_per_sec;
  out.median_private_ops_per_sec =
      out.private_runs[median_index(out.private_runs)].ops_per_sec;
  out.ratio = out.median_private_ops_per_sec > 0
                  ? out.median_shared_ops_per_sec / out.median_private_ops_per_sec
                  : 0.0;
  return out;
}

}  // namespace bravo::bench
