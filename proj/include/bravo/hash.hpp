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

#include <bit>
#include <cstdint>

namespace bravo {

// 64-bit avalanche finalizer (the splitmix64 multiply-xorshift mixer).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Slot index for a (thread, lock) pair.  Lock ids are addresses, so their
// low bits are dead; rotating before the xor keeps the thread id from
// landing on zeros.  Pure function: repeated acquisitions by one thread
// reuse the same slot.
constexpr std::uint32_t hash_slot(std::uint64_t thread_id,
                                  std::uint64_t lock_id,
                                  std::uint64_t slot_mask) {
  return static_cast<std::uint32_t>(mix64(thread_id ^ std::rotr(lock_id, 16)) &
                                    slot_mask);
}

}  // namespace bravo
