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

#include <pthread.h>
#include <sched.h>

#include <atomic>
#include <barrier>
#include <chrono>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "bravo/bench/config.hpp"
#include "bravo/bench/result.hpp"
#include "bravo/bravo.hpp"
#include "bravo/clock.hpp"
#include "bravo/hash.hpp"
#include "bravo/spin.hpp"
#include "bravo/stats.hpp"

namespace bravo::bench {

inline void compiler_fence() { asm volatile("" ::: "memory"); }

// One work unit = one decrement of a local counter.
inline void work_units(std::uint32_t n) {
  volatile std::uint32_t c = n;
  while (c != 0) c = c - 1;
}

// Small splittable 64-bit generator; one next() call is one "step" of
// critical-section or think-time work in the workloads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Burns `steps` generator steps; the xor accumulator keeps the work from
  // being optimized away (callers fold it into a sink).
  std::uint64_t advance(std::uint32_t steps) {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < steps; ++i) acc ^= next();
    return acc;
  }

 private:
  std::uint64_t state_;
};

// Per-thread stream seeds: pure function of (config seed, thread index),
// so operation sequences are reproducible run to run.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x9e3779b97f4a7c15ULL));
}

// The mutual-exclusion oracle: writers increment this plain (non-atomic)
// counter by one inside their critical section; readers snapshot it twice
// inside theirs.  Unequal snapshots or a final value different from the
// number of writer critical sections prove a broken lock.
struct alignas(kCacheSector) GuardedCounter {
  std::uint64_t value = 0;
};

struct alignas(kCacheSector) PaddedCell {
  std::atomic<std::uint64_t> v{0};
};

struct RunShared {
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> violations{0};
  std::atomic<std::uint64_t> sink{0};

  void note_violation() { violations.fetch_add(1, std::memory_order_relaxed); }
};

inline void pin_to_cpu(std::uint32_t index) {
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(index % detected_logical_cpus(), &set);
  pthread_setaffinity_np(pthread_self(), sizeof(set), &set);
}

template <typename L>
struct LockTraits {
  static constexpr bool is_bravo = false;
};
template <typename U, typename H>
struct LockTraits<BravoLock<U, H>> {
  static constexpr bool is_bravo = true;
};

struct LockSetup {
  ReadersTable* table = nullptr;
  PolicyParams policy{};
  StatsDomain* stats = nullptr;
};

template <typename L>
std::unique_ptr<L> make_lock(const LockSetup& setup) {
  if constexpr (LockTraits<L>::is_bravo) {
    return std::make_unique<L>(setup.table, setup.policy, setup.stats);
  } else {
    return std::make_unique<L>();
  }
}

namespace detail {

// Main-thread side of a timed run: release the start barrier, sleep the
// measurement interval, raise stop.  Returns elapsed seconds.
inline double time_run(std::barrier<>& start, RunShared& shared,
                       double duration_s) {
  start.arrive_and_wait();
  const std::uint64_t t0 = monotonic_now_ns();
  std::this_thread::sleep_for(std::chrono::duration<double>(duration_s));
  shared.stop.store(true, std::memory_order_release);
  const std::uint64_t t1 = monotonic_now_ns();
  return static_cast<double>(t1 - t0) * 1e-9;
}

inline BenchResult assemble(const BenchConfig& cfg, std::string label,
                            std::vector<std::uint64_t> per_thread,
                            double elapsed_s, const LockSetup& setup) {
  BenchResult r;
  r.config = cfg;
  r.lock_label = std::move(label);
  r.per_thread_ops = std::move(per_thread);
  for (std::uint64_t ops : r.per_thread_ops) r.total_ops += ops;
  r.elapsed_s = elapsed_s;
  r.ops_per_sec = elapsed_s > 0 ? static_cast<double>(r.total_ops) / elapsed_s : 0.0;
  if (setup.stats != nullptr) {
    r.stats = setup.stats->snapshot();
    if (cfg.log_revocations) r.revocations = setup.stats->revocation_log();
  }
  return r;
}

[[noreturn]] inline void raise_violation(const BenchConfig& cfg,
                                         const char* what,
                                         std::uint64_t count) {
  throw SafetyViolation(std::string("safety oracle violated (") + what +
                        ", count=" + std::to_string(count) + ") in " +
                        to_string(cfg.benchmark) + "/" +
                        to_string(cfg.lock_impl) +
                        " threads=" + std::to_string(cfg.threads));
}

inline void check_run(const BenchConfig& cfg, const RunShared& shared) {
  const std::uint64_t v = shared.violations.load(std::memory_order_relaxed);
  if (v != 0) raise_violation(cfg, "torn or lost guarded-counter update", v);
}

// A run must drain the table: a non-empty slot after all threads joined is
// a leaked fast-path token.
inline void check_table_drained(const BenchConfig& cfg,
                                const ReadersTable& table) {
  if (!table.empty()) raise_violation(cfg, "leaked visible-readers slot", 1);
}

}  // namespace detail

// Ring hand-off: each thread busy-waits on its own padded flag, takes and
// drops read permission on the shared lock, then notifies its right
// neighbor.  No writers; at most one reader is active at a time, which is
// the worst case for a centralized reader indicator.
template <typename L>
BenchResult run_alternator_kernel(const BenchConfig& cfg,
                                  const LockSetup& setup, std::string label) {
  const std::uint32_t n = cfg.threads;
  auto lock = make_lock<L>(setup);
  std::vector<PaddedCell> flags(n);
  GuardedCounter guarded;
  RunShared shared;
  std::barrier<> start(static_cast<std::ptrdiff_t>(n) + 1);
  std::vector<std::uint64_t> ops(n, 0);
  std::vector<std::thread> workers;
  workers.reserve(n);

  for (std::uint32_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i] {
      if (cfg.pin_threads) pin_to_cpu(i);
      start.arrive_and_wait();
      std::uint64_t seen = 0;
      std::uint64_t count = 0;
      for (;;) {
        SpinWait spin;
        while (flags[i].v.load(std::memory_order_acquire) == seen) {
          if (shared.stop.load(std::memory_order_acquire)) goto done;
          spin.wait();
        }
        ++seen;
        {
          auto token = lock->read_lock();
          const std::uint64_t a = guarded.value;
          compiler_fence();
          const std::uint64_t b = guarded.value;
          if (a != b) shared.note_violation();
          lock->read_unlock(token);
        }
        ++count;
        flags[(i + 1) % n].v.fetch_add(1, std::memory_order_release);
      }
    done:
      ops[i] = count;
    });
  }

  const double elapsed = [&] {
    start.arrive_and_wait();
    const std::uint64_t t0 = monotonic_now_ns();
    flags[0].v.fetch_add(1, std::memory_order_release);  // kick the ring
    std::this_thread::sleep_for(std::chrono::duration<double>(cfg.duration_s));
    shared.stop.store(true, std::memory_order_release);
    return static_cast<double>(monotonic_now_ns() - t0) * 1e-9;
  }();
  for (auto& w : workers) w.join();

  detail::check_run(cfg, shared);
  if (setup.table != nullptr) detail::check_table_drained(cfg, *setup.table);
  return detail::assemble(cfg, std::move(label), std::move(ops), elapsed, setup);
}

// One fixed-role writer (10 work units held, 1000 outside) plus
// cfg.threads-1 fixed-role readers (10 units held, nothing outside);
// reports the sum of iterations across all threads.
template <typename L>
BenchResult run_testrwlock_kernel(const BenchConfig& cfg,
                                  const LockSetup& setup, std::string label) {
  const std::uint32_t n = cfg.threads;
  auto lock = make_lock<L>(setup);
  GuardedCounter guarded;
  RunShared shared;
  std::barrier<> start(static_cast<std::ptrdiff_t>(n) + 1);
  std::vector<std::uint64_t> ops(n, 0);
  std::vector<std::thread> workers;
  workers.reserve(n);

  // Thread 0 is the writer.
  workers.emplace_back([&] {
    if (cfg.pin_threads) pin_to_cpu(0);
    start.arrive_and_wait();
    std::uint64_t count = 0;
    while (!shared.stop.load(std::memory_order_acquire)) {
      lock->write_lock();
      compiler_fence();
      guarded.value = guarded.value + 1;
      compiler_fence();
      work_units(10);
      lock->write_unlock();
      work_units(1000);
      ++count;
    }
    ops[0] = count;
  });
  for (std::uint32_t i = 1; i < n; ++i) {
    workers.emplace_back([&, i] {
      if (cfg.pin_threads) pin_to_cpu(i);
      start.arrive_and_wait();
      std::uint64_t count = 0;
      while (!shared.stop.load(std::memory_order_acquire)) {
        auto token = lock->read_lock();
        const std::uint64_t a = guarded.value;
        compiler_fence();
        work_units(10);
        compiler_fence();
        const std::uint64_t b = guarded.value;
        if (a != b) shared.note_violation();
        lock->read_unlock(token);
        ++count;
      }
      ops[i] = count;
    });
  }

  const double elapsed = detail::time_run(start, shared, cfg.duration_s);
  for (auto& w : workers) w.join();

  if (guarded.value != ops[0]) shared.note_violation();
  detail::check_run(cfg, shared);
  if (setup.table != nullptr) detail::check_table_drained(cfg, *setup.table);
  return detail::assemble(cfg, std::move(label), std::move(ops), elapsed, setup);
}

// Bernoulli mix: with probability P an iteration writes, otherwise it
// reads; the critical section is 10 generator steps and the non-critical
// section is a uniform [0,200) number of steps.  Reports top-level loops.
template <typename L>
BenchResult run_rwbench_kernel(const BenchConfig& cfg, const LockSetup& setup,
                               std::string label) {
  const std::uint32_t n = cfg.threads;
  auto lock = make_lock<L>(setup);
  GuardedCounter guarded;
  RunShared shared;
  std::barrier<> start(static_cast<std::ptrdiff_t>(n) + 1);
  std::vector<std::uint64_t> ops(n, 0);
  std::vector<std::uint64_t> writes(n, 0);
  std::vector<std::thread> workers;
  workers.reserve(n);

  for (std::uint32_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i] {
      if (cfg.pin_threads) pin_to_cpu(i);
      SplitMix64 rng(stream_seed(cfg.seed, i));
      start.arrive_and_wait();
      std::uint64_t count = 0;
      std::uint64_t wcount = 0;
      std::uint64_t sink = 0;
      while (!shared.stop.load(std::memory_order_acquire)) {
        if (rng.next_unit() < cfg.write_prob) {
          lock->write_lock();
          compiler_fence();
          guarded.value = guarded.value + 1;
          compiler_fence();
          sink ^= rng.advance(10);
          lock->write_unlock();
          ++wcount;
        } else {
          auto token = lock->read_lock();
          const std::uint64_t a = guarded.value;
          compiler_fence();
          sink ^= rng.advance(10);
          compiler_fence();
          const std::uint64_t b = guarded.value;
          if (a != b) shared.note_violation();
          lock->read_unlock(token);
        }
        const std::uint32_t think = static_cast<std::uint32_t>(rng.next() % 200);
        sink ^= rng.advance(think);
        ++count;
      }
      shared.sink.fetch_xor(sink, std::memory_order_relaxed);
      ops[i] = count;
      writes[i] = wcount;
    });
  }

  const double elapsed = detail::time_run(start, shared, cfg.duration_s);
  for (auto& w : workers) w.join();

  std::uint64_t total_writes = 0;
  for (std::uint64_t w : writes) total_writes += w;
  if (guarded.value != total_writes) shared.note_violation();
  detail::check_run(cfg, shared);
  if (setup.table != nullptr) detail::check_table_drained(cfg, *setup.table);
  return detail::assemble(cfg, std::move(label), std::move(ops), elapsed, setup);
}

// Inter-lock interference probe: threads pick a random lock from a pool,
// hold read permission for 20 generator steps, then think for 100.  With
// private_tables each lock gets its own full-size table, the idealized
// interference-free construction the shared table is measured against.
template <typename L>
BenchResult run_interference_kernel(const BenchConfig& cfg,
                                    const LockSetup& setup, std::string label,
                                    bool private_tables) {
  static_assert(LockTraits<L>::is_bravo,
                "interference compares readers-table layouts; the lock must "
                "carry one");
  const std::uint32_t n = cfg.threads;
  const std::uint32_t pool = cfg.lock_pool;

  std::vector<std::unique_ptr<ReadersTable>> tables;
  std::vector<std::unique_ptr<L>> locks;
  std::vector<GuardedCounter> guarded(pool);
  locks.reserve(pool);
  for (std::uint32_t k = 0; k < pool; ++k) {
    LockSetup s = setup;
    if (private_tables) {
      tables.push_back(std::make_unique<ReadersTable>(cfg.table_size));
      s.table = tables.back().get();
    }
    locks.push_back(make_lock<L>(s));
  }

  RunShared shared;
  std::barrier<> start(static_cast<std::ptrdiff_t>(n) + 1);
  std::vector<std::uint64_t> ops(n, 0);
  std::vector<std::thread> workers;
  workers.reserve(n);

  for (std::uint32_t i = 0; i < n; ++i) {
    workers.emplace_back([&, i] {
      if (cfg.pin_threads) pin_to_cpu(i);
      SplitMix64 rng(stream_seed(cfg.seed, i));
      start.arrive_and_wait();
      std::uint64_t count = 0;
      std::uint64_t sink = 0;
      while (!shared.stop.load(std::memory_order_acquire)) {
        const std::uint32_t k =
            static_cast<std::uint32_t>(rng.next() & (pool - 1));
        auto token = locks[k]->read_lock();
        const std::uint64_t a = guarded[k].value;
        compiler_fence();
        sink ^= rng.advance(20);
        compiler_fence();
        const std::uint64_t b = guarded[k].value;
        if (a != b) shared.note_violation();
        locks[k]->read_unlock(token);
        sink ^= rng.advance(100);
        ++count;
      }
      shared.sink.fetch_xor(sink, std::memory_order_relaxed);
      ops[i] = count;
    });
  }

  const double elapsed = detail::time_run(start, shared, cfg.duration_s);
  for (auto& w : workers) w.join();

  detail::check_run(cfg, shared);
  if (setup.table != nullptr) detail::check_table_drained(cfg, *setup.table);
  for (const auto& t : tables) detail::check_table_drained(cfg, *t);
  return detail::assemble(cfg, std::move(label), std::move(ops), elapsed, setup);
}

}  // namespace bravo::bench
