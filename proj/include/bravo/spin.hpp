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

#include <cstddef>
#include <cstdint>
#include <thread>

namespace bravo {

// Alignment unit for contended state: two 64-byte lines, because the
// adjacent-line prefetcher pulls lines in pairs.
inline constexpr std::size_t kCacheSector = 128;

inline void cpu_relax() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_ia32_pause();
#elif defined(__aarch64__)
  asm volatile("yield");
#else
  std::this_thread::yield();
#endif
}

// Bounded exponential backoff (1, 2, 4, ... pause iterations, capped at
// 1024), then cooperative yield on every further wait.  Yielding keeps
// waiters live even when the machine has fewer cores than threads.
class SpinWait {
 public:
  void wait() {
    if (spins_ <= kSpinCap) {
      for (std::uint32_t i = 0; i < spins_; ++i) cpu_relax();
      spins_ <<= 1;
    } else {
      std::this_thread::yield();
    }
  }

  void reset() { spins_ = 1; }

 private:
  static constexpr std::uint32_t kSpinCap = 1024;
  std::uint32_t spins_ = 1;
};

}  // namespace bravo
