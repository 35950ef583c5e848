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
#include <new>

#include "bravo/check.hpp"
#include "bravo/clock.hpp"
#include "bravo/spin.hpp"

namespace bravo {

// Visible readers table: a fixed power-of-two array of word-sized slots,
// each empty (zero) or holding the id of a lock whose fast-path reader
// published itself there.  One table is normally shared by every lock and
// thread in the process; per-instance tables exist as a construction hook.
//
// Slots are deliberately unpadded machine words: near-collision false
// sharing is an accepted, measured cost, and padding would multiply the
// footprint by the sector size.
class ReadersTable {
 public:
  static constexpr std::size_t kDefaultSize = 4096;

  explicit ReadersTable(std::size_t size = kDefaultSize) : size_(size) {
    bravo_check(size_ > 0 && (size_ & (size_ - 1)) == 0,
                "table size must be a power of two");
    slots_ = static_cast<std::atomic<std::uintptr_t>*>(::operator new[](
        size_ * sizeof(std::atomic<std::uintptr_t>), std::align_val_t{kAlign}));
    for (std::size_t i = 0; i < size_; ++i) {
      ::new (&slots_[i]) std::atomic<std::uintptr_t>(0);
    }
  }

  ~ReadersTable() {
    ::operator delete[](slots_, std::align_val_t{kAlign});
  }

  ReadersTable(const ReadersTable&) = delete;
  ReadersTable& operator=(const ReadersTable&) = delete;

  std::size_t size() const { return size_; }
  std::uint64_t slot_mask() const { return size_ - 1; }

  // Fast-path publication: install `id` into an empty slot.  Failure means
  // a collision (any occupant, including this lock); the caller diverts to
  // the slow path.  Sequentially consistent so the publication is ordered
  // against the subsequent bias recheck.
  bool try_publish(std::uint32_t slot, std::uintptr_t id) {
    std::uintptr_t expected = 0;
    return slots_[slot].compare_exchange_strong(expected, id,
                                                std::memory_order_seq_cst);
  }

  // Departure (and the losing side of the publish/recheck race).  Release
  // ordering: a revoking writer that observes the cleared slot must also
  // observe the reader's critical section.
  void clear(std::uint32_t slot, std::uintptr_t expected_id) {
    bravo_check(slots_[slot].load(std::memory_order_relaxed) == expected_id,
                "slot does not hold this lock (double release?)");
    slots_[slot].store(0, std::memory_order_release);
  }

  // Revocation scan: sweep every slot and busy-wait until none holds `id`.
  // Loads are sequentially consistent so the scan is ordered against the
  // writer's preceding bias clear.  Returns elapsed monotonic nanoseconds.
  std::uint64_t wait_until_vacated(std::uintptr_t id) {
    const std::uint64_t begin = monotonic_now_ns();
    for (std::size_t i = 0; i < size_; ++i) {
      SpinWait spin;
      while (slots_[i].load(std::memory_order_seq_cst) == id) {
        spin.wait();
      }
    }
    return monotonic_now_ns() - begin;
  }

  std::uintptr_t peek(std::uint32_t slot) const {
    return slots_[slot].load(std::memory_order_relaxed);
  }

  bool contains(std::uintptr_t id) const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (slots_[i].load(std::memory_order_relaxed) == id) return true;
    }
    return false;
  }

  bool empty() const {
    for (std::size_t i = 0; i < size_; ++i) {
      if (slots_[i].load(std::memory_order_relaxed) != 0) return false;
    }
    return true;
  }

 private:
  // Page-aligned: keeps the default 32KB table on few TLB entries and away
  // from false sharing with neighboring globals.
  static constexpr std::size_t kAlign = 4096;

  std::size_t size_;
  std::atomic<std::uintptr_t>* slots_;
};

// The process-wide table shared by all locks constructed without an
// explicit one.  Sized from BRAVO_TABLE_SIZE (power of two) on first use,
// 4096 otherwise.
ReadersTable& global_readers_table();

namespace detail {
// Parses a table-size override; returns fallback unless `text` is a valid
// power of two in [1, 2^26].
std::size_t parse_table_size(const char* text, std::size_t fallback);
}  // namespace detail

}  // namespace bravo
