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

#include "support/interleaving_scenarios.hpp"

// Shortened iteration counts here; the acceptance suite runs the full
// 10,000-iteration protocol.

TEST_CASE("recheck failure clears the slot and defers to the writer") {
  const auto r = bravo_test::scenario_recheck_failure(500);
  INFO(r.first_failure);
  CHECK(r.passed());
  CHECK(r.iterations == 500);
}

TEST_CASE("a revoking writer waits on an occupied matching slot") {
  const auto r = bravo_test::scenario_writer_waits_for_slot(500);
  INFO(r.first_failure);
  CHECK(r.passed());
}

TEST_CASE("no fast-path admission once a writer cleared the bias") {
  const auto r = bravo_test::scenario_no_fast_admission_after_clear(500);
  INFO(r.first_failure);
  CHECK(r.passed());
}

TEST_CASE("install/recheck vs clear/scan is safe in every SC interleaving") {
  const auto r = bravo_test::dekker_model_exhaustive();
  INFO(r.first_failure);
  CHECK(r.passed());
  // Two two-step threads interleave in C(4,2) = 6 ways.
  CHECK(r.iterations == 6);
}
