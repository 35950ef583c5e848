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

namespace bravo {

// Small dense per-thread integer, assigned from a global counter on first
// use and cached in a thread_local.  Used as the thread component of the
// readers-table hash and for sub-lock selection; pthread handles are
// neither small nor dense.
inline std::uint64_t current_thread_id() {
  static std::atomic<std::uint64_t> next_id{0};
  thread_local const std::uint64_t id =
      next_id.fetch_add(1, std::memory_order_relaxed);
  return id;
}

}  // namespace bravo
