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
#include <optional>

#include "bravo/check.hpp"
#include "bravo/clock.hpp"
#include "bravo/hash.hpp"
#include "bravo/readers_table.hpp"
#include "bravo/rw_contract.hpp"
#include "bravo/stats.hpp"
#include "bravo/thread_id.hpp"

namespace bravo {

// Policy knobs for the reader-bias wrapper.  After a revocation that took
// D ns, re-enabling bias is inhibited for n_multiplier * D, bounding the
// worst-case writer slowdown to 1/(n_multiplier + 1).
struct PolicyParams {
  std::uint32_t n_multiplier = 9;

  // Reads BRAVO_N; invalid or unset keeps the default.
  static PolicyParams from_env();
};

// Instrumentation points used by interleaving tests; compiled to nothing
// by default.
struct NoHooks {
  static void after_fast_path_publish() {}
  static void after_bias_clear() {}
};

// Reader-biased wrapper around any RwLockType.
//
// While the per-lock rbias flag is set, an arriving reader hashes its
// thread id with the lock id into the shared visible-readers table and
// CASes the lock id into that slot.  If the install succeeds and rbias is
// *still* set, the reader owns read permission without having touched the
// underlying lock; its unlock is a single store clearing the slot.  Any
// failure (bias off, slot occupied, bias lost on recheck) diverts to the
// underlying lock's ordinary read path.
//
// Writers always acquire the underlying lock.  If rbias was set they
// revoke it: clear the flag, then sweep the table, waiting out every slot
// that names this lock.  The store-load protocol between readers
// (install slot, then load rbias) and writers (store rbias, then scan
// slots) is the safety hinge and runs with sequentially consistent
// ordering on those four accesses; everything weaker rides on the
// underlying lock's acquire/release.
//
// A revocation that took D ns forbids re-enabling bias until N*D past its
// completion.  Only slow-path readers re-enable bias, and only while they
// hold read permission, so the flag never flips under a writer.
template <RwLockType Underlying, typename Hooks = NoHooks>
class BravoLock {
 public:
  using UnderlyingToken = typename Underlying::ReadToken;

  // Fast-path tokens carry the table index they occupy; slow-path tokens
  // carry the underlying lock's token.  Values are freely transferable
  // across threads (releasing on another thread just forfeits slot
  // locality for the next acquisition).
  struct ReadToken {
    static constexpr std::uint32_t kSlowPath = 0xffffffffu;

    std::uint32_t slot = kSlowPath;
    UnderlyingToken underlying{};

    bool fast_path() const { return slot != kSlowPath; }
  };

  BravoLock()
      : BravoLock(&global_readers_table(), PolicyParams::from_env(),
                  &global_stats_domain()) {}

  explicit BravoLock(ReadersTable* table,
                     PolicyParams policy = PolicyParams::from_env(),
                     StatsDomain* stats = nullptr)
      : table_(table), stats_(stats), policy_(policy) {}

  // The table keys fast-path readers by this object's address; moving it
  // would orphan published slots.
  BravoLock(const BravoLock&) = delete;
  BravoLock& operator=(const BravoLock&) = delete;

  ReadToken read_lock() {
    if (auto fast = try_fast_read()) return *fast;
    auto under = underlying_.read_lock();
    maybe_enable_bias();
    if (stats_) stats_->count_slow_read();
    return slow_token(under);
  }

  void read_unlock(ReadToken token) {
    if (token.fast_path()) {
      table_->clear(token.slot, lock_id());
    } else {
      underlying_.read_unlock(token.underlying);
    }
  }

  void write_lock() {
    underlying_.write_lock();
    // Exclusive here: bias setters hold read permission, other clearers
    // hold write permission, so this relaxed load is exact.
    if (rbias_.load(std::memory_order_relaxed)) revoke_bias();
    if (stats_) stats_->count_write_acquire();
  }

  void write_unlock() {
    // Bias stays off; only a slow-path reader past the inhibit deadline
    // switches it back on.
    underlying_.write_unlock();
  }

  std::optional<ReadToken> try_read_lock() {
    if (auto fast = try_fast_read()) return *fast;
    auto under = underlying_.try_read_lock();
    if (!under) return std::nullopt;
    maybe_enable_bias();
    if (stats_) stats_->count_slow_read();
    return slow_token(*under);
  }

  bool try_write_lock() {
    if (!underlying_.try_write_lock()) return false;
    if (rbias_.load(std::memory_order_relaxed)) revoke_bias();
    if (stats_) stats_->count_write_acquire();
    return true;
  }

  std::uintptr_t lock_id() const {
    return reinterpret_cast<std::uintptr_t>(this);
  }

  // Racy observers for tests and diagnostics.
  bool reader_biased() const { return rbias_.load(std::memory_order_relaxed); }
  std::uint64_t inhibit_until_ns() const {
    return inhibit_until_.load(std::memory_order_relaxed);
  }

  Underlying& underlying() { return underlying_; }
  const Underlying& underlying() const { return underlying_; }
  ReadersTable& table() { return *table_; }

 private:
  static ReadToken slow_token(UnderlyingToken u) {
    ReadToken t;
    t.underlying = u;
    return t;
  }

  // Constant-time fast-path attempt: one bias check, one CAS, one recheck.
  std::optional<ReadToken> try_fast_read() {
    if (!rbias_.load(std::memory_order_relaxed)) return std::nullopt;
    const std::uintptr_t id = lock_id();
    const std::uint32_t slot =
        hash_slot(current_thread_id(), id, table_->slot_mask());
    if (!table_->try_publish(slot, id)) {
      // Collision; benign, take the slow path.
      if (stats_) stats_->count_cas_failure();
      return std::nullopt;
    }
    Hooks::after_fast_path_publish();
    if (rbias_.load(std::memory_order_seq_cst)) {
      if (stats_) stats_->count_fast_read();
      ReadToken t;
      t.slot = slot;
      return t;
    }
    // A writer cleared the bias between install and recheck; back out and
    // let the underlying lock arbitrate.
    table_->clear(slot, id);
    return std::nullopt;
  }

  // Caller holds read permission on the underlying lock, which is what
  // makes the store race-free against writers.
  void maybe_enable_bias() {
    if (monotonic_now_ns() > inhibit_until_.load(std::memory_order_relaxed)) {
      rbias_.store(true, std::memory_order_release);
    }
  }

  // Caller holds underlying write permission and saw rbias set.  Timing
  // brackets the whole revocation, clear store included and waiting
  // included, deliberately over-estimating the scan cost.
  void revoke_bias() {
    const std::uint64_t start = monotonic_now_ns();
    rbias_.store(false, std::memory_order_seq_cst);
    Hooks::after_bias_clear();
    table_->wait_until_vacated(lock_id());
    const std::uint64_t end = monotonic_now_ns();
    const std::uint64_t window = policy_.n_multiplier * (end - start);
    // Plain-store safe: we are the only writer, and reader staleness only
    // delays bias, never breaks safety.
    inhibit_until_.store(end + window, std::memory_order_relaxed);
    if (stats_) stats_->count_revocation(lock_id(), start, end, end + window);
  }

  std::atomic<bool> rbias_{false};
  std::atomic<std::uint64_t> inhibit_until_{0};
  Underlying underlying_{};
  ReadersTable* table_;
  StatsDomain* stats_;
  PolicyParams policy_;
};

}  // namespace bravo
