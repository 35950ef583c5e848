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

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "bravo/spin.hpp"
#include "bravo/thread_id.hpp"

namespace bravo {

// Merged counter totals.  fast_reads + slow_reads is the number of
// successful read acquisitions; revocations never exceeds write_acquires;
// with a fixed N, total_inhibit_ns == N * total_revocation_ns.
struct LockStats {
  std::uint64_t fast_reads = 0;
  std::uint64_t slow_reads = 0;
  std::uint64_t write_acquires = 0;
  std::uint64_t revocations = 0;
  std::uint64_t cas_failures = 0;
  std::uint64_t total_revocation_ns = 0;
  std::uint64_t total_inhibit_ns = 0;

  LockStats& operator+=(const LockStats& o) {
    fast_reads += o.fast_reads;
    slow_reads += o.slow_reads;
    write_acquires += o.write_acquires;
    revocations += o.revocations;
    cas_failures += o.cas_failures;
    total_revocation_ns += o.total_revocation_ns;
    total_inhibit_ns += o.total_inhibit_ns;
    return *this;
  }
};

// One revocation event: scan begins at start_ns (before the bias-clear
// store), ends at end_ns (after the last conflicting slot drained), and
// bias re-enabling is inhibited until inhibit_until_ns == end_ns + N*(end-start).
struct RevocationRecord {
  std::uintptr_t lock_id = 0;
  std::uint64_t start_ns = 0;
  std::uint64_t end_ns = 0;
  std::uint64_t inhibit_until_ns = 0;
};

// Event counters sharded per thread so that recording on the lock hot path
// never write-shares a cache line; shards are merged on snapshot.  Totals
// are exact only at quiescence.  Recording can be switched off at runtime;
// when off the cost is one predictable branch.
class StatsDomain {
 public:
  StatsDomain() : shards_(std::make_unique<Shard[]>(kShards)) {}

  StatsDomain(const StatsDomain&) = delete;
  StatsDomain& operator=(const StatsDomain&) = delete;

  void set_enabled(bool on) { enabled_.store(on, std::memory_order_relaxed); }
  bool enabled() const { return enabled_.load(std::memory_order_relaxed); }

  // The revocation log is heavier (mutex + vector) and exists for policy
  // verification; off unless asked for.
  void set_revocation_log(bool on) {
    log_enabled_.store(on, std::memory_order_relaxed);
  }

  void count_fast_read() { bump(kFastReads); }
  void count_slow_read() { bump(kSlowReads); }
  void count_write_acquire() { bump(kWriteAcquires); }
  void count_cas_failure() { bump(kCasFailures); }

  void count_revocation(std::uintptr_t lock_id, std::uint64_t start_ns,
                        std::uint64_t end_ns, std::uint64_t inhibit_until_ns) {
    if (!enabled()) return;
    Shard& s = my_shard();
    s.c[kRevocations].fetch_add(1, std::memory_order_relaxed);
    s.c[kRevocationNs].fetch_add(end_ns - start_ns, std::memory_order_relaxed);
    s.c[kInhibitNs].fetch_add(inhibit_until_ns - end_ns,
                              std::memory_order_relaxed);
    if (log_enabled_.load(std::memory_order_relaxed)) {
      std::lock_guard<std::mutex> g(log_mu_);
      log_.push_back({lock_id, start_ns, end_ns, inhibit_until_ns});
    }
  }

  LockStats snapshot() const {
    LockStats out;
    for (std::size_t i = 0; i < kShards; ++i) {
      const Shard& s = shards_[i];
      out.fast_reads += s.c[kFastReads].load(std::memory_order_relaxed);
      out.slow_reads += s.c[kSlowReads].load(std::memory_order_relaxed);
      out.write_acquires += s.c[kWriteAcquires].load(std::memory_order_relaxed);
      out.revocations += s.c[kRevocations].load(std::memory_order_relaxed);
      out.cas_failures += s.c[kCasFailures].load(std::memory_order_relaxed);
      out.total_revocation_ns += s.c[kRevocationNs].load(std::memory_order_relaxed);
      out.total_inhibit_ns += s.c[kInhibitNs].load(std::memory_order_relaxed);
    }
    return out;
  }

  void reset() {
    for (std::size_t i = 0; i < kShards; ++i) {
      for (auto& counter : shards_[i].c) {
        counter.store(0, std::memory_order_relaxed);
      }
    }
    std::lock_guard<std::mutex> g(log_mu_);
    log_.clear();
  }

  std::vector<RevocationRecord> revocation_log() const {
    std::lock_guard<std::mutex> g(log_mu_);
    return log_;
  }

 private:
  enum Counter {
    kFastReads,
    kSlowReads,
    kWriteAcquires,
    kRevocations,
    kCasFailures,
    kRevocationNs,
    kInhibitNs,
    kCounterCount,
  };

  struct alignas(kCacheSector) Shard {
    std::atomic<std::uint64_t> c[kCounterCount] = {};
  };
  static constexpr std::size_t kShards = 64;

  Shard& my_shard() { return shards_[current_thread_id() & (kShards - 1)]; }

  void bump(Counter which) {
    if (!enabled()) return;
    my_shard().c[which].fetch_add(1, std::memory_order_relaxed);
  }

  std::unique_ptr<Shard[]> shards_;
  std::atomic<bool> enabled_{true};
  std::atomic<bool> log_enabled_{false};
  mutable std::mutex log_mu_;
  std::vector<RevocationRecord> log_;
};

// Default domain for locks constructed without an explicit one.
StatsDomain& global_stats_domain();

}  // namespace bravo
