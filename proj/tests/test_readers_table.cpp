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

#include <atomic>
#include <thread>

#include "bravo/readers_table.hpp"
#include "support/fork_death.hpp"

using bravo::ReadersTable;

TEST_CASE("publish, peek and clear round-trip a slot") {
  ReadersTable table(16);
  CHECK(table.empty());
  CHECK(table.try_publish(3, 0x1000));
  CHECK(table.peek(3) == 0x1000);
  CHECK_FALSE(table.empty());
  CHECK(table.contains(0x1000));
  CHECK_FALSE(table.try_publish(3, 0x2000));  // occupied: collision
  table.clear(3, 0x1000);
  CHECK(table.empty());
}

TEST_CASE("vacate scan returns immediately when the lock is absent") {
  ReadersTable table(4096);
  CHECK(table.try_publish(7, 0xbeef0));
  // A full sweep over other ids must not wait on them.
  const std::uint64_t ns = table.wait_until_vacated(0xfeed0);
  CHECK(ns < 1'000'000'000ull);
  CHECK(table.peek(7) == 0xbeef0);
  table.clear(7, 0xbeef0);
}

TEST_CASE("vacate scan waits for a mid-scan release") {
  ReadersTable table(4096);
  CHECK(table.try_publish(7, 0xbeef0));

  std::atomic<bool> scan_done{false};
  std::atomic<std::uint64_t> scan_ns{0};
  std::thread scanner([&] {
    scan_ns.store(table.wait_until_vacated(0xbeef0), std::memory_order_relaxed);
    scan_done.store(true, std::memory_order_release);
  });

  std::this_thread::sleep_for(std::chrono::milliseconds(20));
  CHECK_FALSE(scan_done.load(std::memory_order_acquire));
  table.clear(7, 0xbeef0);
  scanner.join();
  CHECK(scan_done.load());
  CHECK(scan_ns.load() >= 10'000'000ull);  // it really did wait
}

TEST_CASE("global table is a shared singleton with the default size") {
  auto& a = bravo::global_readers_table();
  auto& b = bravo::global_readers_table();
  CHECK(&a == &b);
  CHECK(a.size() == ReadersTable::kDefaultSize);
}

TEST_CASE("table sizes must be powers of two") {
#if BRAVO_CHECKED
  CHECK(bravo_test::dies_with_abort([] { ReadersTable t(3000); }));
  CHECK(bravo_test::dies_with_abort([] { ReadersTable t(0); }));
#endif
  ReadersTable one(1);
  CHECK(one.size() == 1);
  CHECK(one.slot_mask() == 0);
}

TEST_CASE("clearing a slot that holds another id traps in checked builds") {
#if BRAVO_CHECKED
  CHECK(bravo_test::dies_with_abort([] {
    ReadersTable table(16);
    table.try_publish(5, 0xaa0);
    table.clear(5, 0xbb0);
  }));
#endif
}
