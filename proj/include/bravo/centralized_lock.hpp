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
#include "bravo/spin.hpp"

namespace bravo {

// Compact writer-preferring reader-writer lock: the whole state lives in
// one atomic word.
//
//   bits  0..31  active reader count
//   bit   32     writer present
//   bit   33     writer waiting
//
// Readers increment the count only while both writer bits are clear, so an
// announced writer drains readers instead of starving.  Waiting is bounded
// spin with backoff, then yield.  Scales fine for writers; reader arrivals
// all hit the same line, which is exactly the behavior the BRAVO wrapper
// exists to avoid.
class CentralizedLock {
 public:
  struct ReadToken {};

  CentralizedLock() = default;
  CentralizedLock(const CentralizedLock&) = delete;
  CentralizedLock& operator=(const CentralizedLock&) = delete;

  ReadToken read_lock() {
    SpinWait spin;
    std::uint64_t s = state_.load(std::memory_order_relaxed);
    for (;;) {
      if ((s & (kWriterPresent | kWriterWaiting)) == 0) {
        if (state_.compare_exchange_weak(s, s + kReaderUnit,
                                         std::memory_order_acquire,
                                         std::memory_order_relaxed)) {
          return {};
        }
        // CAS failure reloaded s; contention among readers, retry at once.
      } else {
        spin.wait();
        s = state_.load(std::memory_order_relaxed);
      }
    }
  }

  void read_unlock(ReadToken) {
    const std::uint64_t prev = state_.fetch_sub(kReaderUnit, std::memory_order_release);
    bravo_check((prev & kReaderMask) != 0, "read_unlock without read permission");
  }

  void write_lock() {
    SpinWait spin;
    state_.fetch_or(kWriterWaiting, std::memory_order_relaxed);
    std::uint64_t s = state_.load(std::memory_order_relaxed);
    for (;;) {
      if ((s & (kReaderMask | kWriterPresent)) == 0) {
        const std::uint64_t granted = (s & ~kWriterWaiting) | kWriterPresent;
        if (state_.compare_exchange_weak(s, granted, std::memory_order_acquire,
                                         std::memory_order_relaxed)) {
          return;
        }
      } else {
        spin.wait();
        // The waiting bit travels with whichever writer enters first;
        // re-assert it so readers stay excluded while we still wait.
        s = state_.fetch_or(kWriterWaiting, std::memory_order_relaxed) |
            kWriterWaiting;
      }
    }
  }

  void write_unlock() {
    const std::uint64_t prev = state_.fetch_and(~kWriterPresent, std::memory_order_release);
    bravo_check((prev & kWriterPresent) != 0, "write_unlock without write permission");
  }

  std::optional<ReadToken> try_read_lock() {
    std::uint64_t s = state_.load(std::memory_order_relaxed);
    for (int attempt = 0; attempt < kTryAttempts; ++attempt) {
      if ((s & (kWriterPresent | kWriterWaiting)) != 0) return std::nullopt;
      if (state_.compare_exchange_weak(s, s + kReaderUnit,
                                       std::memory_order_acquire,
                                       std::memory_order_relaxed)) {
        return ReadToken{};
      }
    }
    return std::nullopt;
  }

  bool try_write_lock() {
    std::uint64_t s = state_.load(std::memory_order_relaxed);
    for (int attempt = 0; attempt < kTryAttempts; ++attempt) {
      if ((s & (kReaderMask | kWriterPresent)) != 0) return false;
      // Keep a concurrent waiter's bit intact; try-lock leaves no trace of
      // its own on failure.
      if (state_.compare_exchange_weak(s, s | kWriterPresent,
                                       std::memory_order_acquire,
                                       std::memory_order_relaxed)) {
        return true;
      }
    }
    return false;
  }

  // Racy snapshots for tests and diagnostics.
  std::uint64_t reader_count() const {
    return state_.load(std::memory_order_relaxed) & kReaderMask;
  }
  bool writer_present() const {
    return (state_.load(std::memory_order_relaxed) & kWriterPresent) != 0;
  }
  bool writer_waiting() const {
    return (state_.load(std::memory_order_relaxed) & kWriterWaiting) != 0;
  }

 private:
  static constexpr std::uint64_t kReaderUnit = 1;
  static constexpr std::uint64_t kReaderMask = 0xffffffffULL;
  static constexpr std::uint64_t kWriterPresent = 1ULL << 32;
  static constexpr std::uint64_t kWriterWaiting = 1ULL << 33;
  // try_* retry only against reader-count churn; constant bound keeps them
  // non-blocking.
  static constexpr int kTryAttempts = 64;

  std::atomic<std::uint64_t> state_{0};
};

}  // namespace bravo
