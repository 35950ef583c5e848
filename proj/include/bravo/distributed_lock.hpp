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
#include <memory>
#include <optional>
#include <thread>

#include "bravo/centralized_lock.hpp"
#include "bravo/check.hpp"
#include "bravo/thread_id.hpp"

namespace bravo {

inline std::uint32_t detected_logical_cpus() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1u : static_cast<std::uint32_t>(n);
}

// Per-CPU style lock: an array of sub-locks, one per logical CPU by
// default, each on its own cache sector.  A reader takes read permission
// on the sub-lock picked by its thread id mod K; a writer takes write
// permission on all K, in ascending index order (released descending), so
// two writers cannot deadlock.  Big footprint, great reader scaling,
// writers pay K times.
class DistributedLock {
 public:
  struct ReadToken {
    std::uint32_t sublock = 0;
  };

  explicit DistributedLock(std::uint32_t sublocks = detected_logical_cpus())
      : count_(sublocks == 0 ? 1 : sublocks),
        sublocks_(std::make_unique<Padded[]>(count_)) {}

  DistributedLock(const DistributedLock&) = delete;
  DistributedLock& operator=(const DistributedLock&) = delete;

  ReadToken read_lock() {
    const std::uint32_t i =
        static_cast<std::uint32_t>(current_thread_id() % count_);
    sublocks_[i].lock.read_lock();
    return {i};
  }

  void read_unlock(ReadToken t) {
    bravo_check(t.sublock < count_, "read token for a foreign lock");
    sublocks_[t.sublock].lock.read_unlock({});
  }

  void write_lock() {
    for (std::uint32_t i = 0; i < count_; ++i) sublocks_[i].lock.write_lock();
  }

  void write_unlock() {
    for (std::uint32_t i = count_; i-- > 0;) sublocks_[i].lock.write_unlock();
  }

  std::optional<ReadToken> try_read_lock() {
    const std::uint32_t i =
        static_cast<std::uint32_t>(current_thread_id() % count_);
    if (sublocks_[i].lock.try_read_lock()) return ReadToken{i};
    return std::nullopt;
  }

  bool try_write_lock() {
    for (std::uint32_t i = 0; i < count_; ++i) {
      if (!sublocks_[i].lock.try_write_lock()) {
        while (i-- > 0) sublocks_[i].lock.write_unlock();
        return false;
      }
    }
    return true;
  }

  std::uint32_t sublock_count() const { return count_; }
  const CentralizedLock& sublock(std::uint32_t i) const {
    return sublocks_[i].lock;
  }

 private:
  struct alignas(kCacheSector) Padded {
    CentralizedLock lock;
  };

  std::uint32_t count_;
  std::unique_ptr<Padded[]> sublocks_;
};

}  // namespace bravo
