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

#include <doctest.h>

#include <cstdio>
#include <optional>
#include <string>

#include "bravo/bench/csv.hpp"
#include "bravo/bench/runner.hpp"
#include "bravo/bench/workloads.hpp"

using namespace bravo::bench;

namespace {

BenchConfig quick_config(Benchmark b, LockImpl l, std::uint32_t threads,
                         double duration_s) {
  BenchConfig cfg;
  cfg.benchmark = b;
  cfg.lock_impl = l;
  cfg.threads = threads;
  cfg.duration_s = duration_s;
  return cfg;
}

// Deliberately broken "lock" that grants every request unconditionally.
// The oracle must catch it.
struct BrokenLock {
  struct ReadToken {};
  ReadToken read_lock() { return {}; }
  void read_unlock(ReadToken) {}
  void write_lock() {}
  void write_unlock() {}
  std::optional<ReadToken> try_read_lock() { return ReadToken{}; }
  bool try_write_lock() { return true; }
};
static_assert(bravo::RwLockType<BrokenLock>);

}  // namespace

TEST_CASE("config validation rejects the documented bad shapes") {
  BenchConfig cfg;
  cfg.threads = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  cfg.duration_s = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  cfg.write_prob = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  cfg.table_size = 3000;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  cfg.benchmark = Benchmark::kInterference;
  cfg.lock_pool = 48;  // not a power of two
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  cfg.benchmark = Benchmark::kInterference;
  cfg.lock_impl = LockImpl::kCentralized;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = BenchConfig{};
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("per-thread streams are reproducible and distinct") {
  SplitMix64 a(stream_seed(42, 3));
  SplitMix64 b(stream_seed(42, 3));
  SplitMix64 c(stream_seed(42, 4));
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a.next();
    CHECK(va == b.next());
    differs |= (va != c.next());
  }
  CHECK(differs);
}

TEST_CASE("csv emission writes one header plus one row per run") {
  BenchConfig cfg = quick_config(Benchmark::kRwBench,
                                 LockImpl::kBravoCentralized, 2, 3.0);
  std::vector<BenchResult> rows;
  for (std::uint32_t i = 0; i < 7; ++i) {
    BenchResult r;
    r.config = cfg;
    r.lock_label = to_string(cfg.lock_impl);
    r.run_index = i;
    r.total_ops = 1000 + i;
    r.elapsed_s = 3.0;
    r.ops_per_sec = static_cast<double>(r.total_ops) / 3.0;
    r.stats.fast_reads = 10 * i;
    r.stats.slow_reads = 3;
    r.stats.revocations = i;
    r.stats.total_revocation_ns = 100 * i;
    rows.push_back(r);
  }

  const std::string path = "/tmp/bravo_csv_roundtrip.csv";
  emit_csv(rows, path);

  std::FILE* fp = std::fopen(path.c_str(), "r");
  REQUIRE(fp != nullptr);
  int lines = 0;
  for (int ch = std::fgetc(fp); ch != EOF; ch = std::fgetc(fp)) {
    if (ch == '\n') ++lines;
  }
  std::fclose(fp);
  CHECK(lines == 8);  // header + 7 runs, newline-terminated

  const auto parsed = read_csv(path);
  REQUIRE(parsed.size() == 7);
  for (std::uint32_t i = 0; i < 7; ++i) {
    const auto& row = parsed[i];
    CHECK(row.benchmark == "rwbench");
    CHECK(row.lock_impl == "bravo-centralized");
    CHECK(row.threads == 2);
    CHECK(row.write_prob == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(row.table_size == 4096);
    CHECK(row.n == 9);
    CHECK(row.seed == 42);
    CHECK(row.run_index == i);
    CHECK(row.total_ops == 1000 + i);
    CHECK(row.ops_per_sec ==
          static_cast<double>(1000 + i) / 3.0);  // exact round-trip
    CHECK(row.fast_reads == 10 * i);
    CHECK(row.slow_reads == 3);
    CHECK(row.revocations == i);
    CHECK(row.total_revocation_ns == 100 * i);
  }
  std::remove(path.c_str());
}

TEST_CASE("csv failures surface the path") {
  std::vector<BenchResult> rows(1);
  rows[0].lock_label = "x";
  try {
    emit_csv(rows, "/nonexistent-dir/out.csv");
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") !=
          std::string::npos);
  }
}

TEST_CASE("median marking picks the middle throughput") {
  std::vector<BenchResult> rs(5);
  const double speeds[] = {5.0, 1.0, 3.0, 2.0, 4.0};
  for (int i = 0; i < 5; ++i) rs[static_cast<std::size_t>(i)].ops_per_sec = speeds[i];
  CHECK(median_index(rs) == 2);  // 3.0 is the middle value
}

TEST_CASE("the guarded-counter oracle catches a broken lock") {
  BenchConfig cfg = quick_config(Benchmark::kTestRwlock,
                                 LockImpl::kCentralized, 4, 1.0);
  LockSetup setup;  // no table, no stats: plain lock
  CHECK_THROWS_AS(
      run_testrwlock_kernel<BrokenLock>(cfg, setup, "broken"),
      SafetyViolation);
}

TEST_CASE("a well-formed run reports per-thread counts summing to total") {
  BenchConfig cfg = quick_config(Benchmark::kRwBench,
                                 LockImpl::kBravoCentralized, 4, 1.0);
  cfg.write_prob = 0.2;
  const auto r = run_single(cfg, 0);
  CHECK(r.per_thread_ops.size() == 4);
  std::uint64_t sum = 0;
  for (auto v : r.per_thread_ops) sum += v;
  CHECK(sum == r.total_ops);
  CHECK(r.total_ops > 0);
  CHECK(r.ops_per_sec > 0);
  // Every read was counted on exactly one path.
  CHECK(r.stats.fast_reads + r.stats.slow_reads > 0);
}

TEST_CASE("alternator throughput drops sharply from one thread to two") {
  BenchConfig cfg = quick_config(Benchmark::kAlternator,
                                 LockImpl::kCentralized, 1, 1.0);
  const auto one = run_single(cfg, 0);
  cfg.threads = 2;
  const auto two = run_single(cfg, 0);
  CHECK(one.total_ops > 0);
  CHECK(two.total_ops > 0);
  // Cross-thread notification costs dwarf the self-notification case.
  CHECK(two.ops_per_sec < 0.9 * one.ops_per_sec);
}

TEST_CASE("alternator on a bravo lock goes fast-path and stays biased") {
  BenchConfig cfg = quick_config(Benchmark::kAlternator,
                                 LockImpl::kBravoCentralized, 2, 1.0);
  const auto r = run_single(cfg, 0);
  CHECK(r.stats.revocations == 0);
  // Warm-up slow reads only; everything after runs on the table.
  CHECK(r.stats.slow_reads <= cfg.threads + 2);
  CHECK(r.stats.fast_reads >
        9 * (r.stats.slow_reads + 1));  // >90% of reads were fast
}

TEST_CASE("write-heavy rwbench keeps the fast-read share negligible") {
  BenchConfig cfg = quick_config(Benchmark::kRwBench,
                                 LockImpl::kBravoCentralized, 4, 1.0);
  cfg.write_prob = 0.9;
  cfg.log_revocations = true;
  const auto r = run_single(cfg, 0);
  const auto reads = r.stats.fast_reads + r.stats.slow_reads;
  CHECK(reads > 0);
  CHECK(r.stats.fast_reads * 10 <= reads);  // fast share under 10%
  CHECK(r.stats.revocations <= r.stats.write_acquires);
  CHECK(r.stats.total_inhibit_ns ==
        cfg.n_multiplier * r.stats.total_revocation_ns);
}

TEST_CASE("writer-only testrwlock never enables bias") {
  BenchConfig cfg = quick_config(Benchmark::kTestRwlock,
                                 LockImpl::kBravoCentralized, 1, 1.0);
  const auto r = run_single(cfg, 0);
  CHECK(r.total_ops > 0);
  CHECK(r.stats.fast_reads == 0);
  CHECK(r.stats.slow_reads == 0);
  CHECK(r.stats.revocations == 0);
}

TEST_CASE("interference with a single lock shows no meaningful penalty") {
  BenchConfig cfg = quick_config(Benchmark::kInterference,
                                 LockImpl::kBravoCentralized, 2, 1.0);
  cfg.lock_pool = 1;
  const auto outcome = run_interference(cfg, 1);
  CHECK(outcome.shared_runs.size() == 1);
  CHECK(outcome.private_runs.size() == 1);
  CHECK(outcome.shared_runs[0].lock_label == "bravo-centralized");
  CHECK(outcome.private_runs[0].lock_label == "bravo-centralized-private");
  // Identical table geometry on both sides; only noise separates them.
  CHECK(outcome.ratio > 0.6);
  CHECK(outcome.ratio < 1.7);
}

TEST_CASE("repeat protocol flags exactly one median row") {
  BenchConfig cfg = quick_config(Benchmark::kRwBench,
                                 LockImpl::kCentralized, 2, 1.0);
  const auto runs = run_repeated(cfg, 3);
  REQUIRE(runs.size() == 3);
  int medians = 0;
  for (const auto& r : runs) medians += r.is_median ? 1 : 0;
  CHECK(medians == 1);
}
