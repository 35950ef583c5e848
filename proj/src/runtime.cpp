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

#include <cerrno>
#include <cstdio>
#include <cstdlib>

#include "bravo/bravo_lock.hpp"
#include "bravo/check.hpp"
#include "bravo/readers_table.hpp"
#include "bravo/stats.hpp"

namespace bravo {

void check_failed(const char* what) noexcept {
  std::fprintf(stderr, "bravo: invariant violated: %s\n", what);
  std::abort();
}

namespace detail {

std::size_t parse_table_size(const char* text, std::size_t fallback) {
  if (text == nullptr || *text == '\0') return fallback;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (errno != 0 || end == text || *end != '\0') return fallback;
  if (v == 0 || v > (1ull << 26) || (v & (v - 1)) != 0) return fallback;
  return static_cast<std::size_t>(v);
}

namespace {
std::uint32_t parse_n_multiplier(const char* text, std::uint32_t fallback) {
  if (text == nullptr || *text == '\0') return fallback;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text, &end, 10);
  if (errno != 0 || end == text || *end != '\0') return fallback;
  if (v > 0xffffffffull) return fallback;
  return static_cast<std::uint32_t>(v);
}
}  // namespace

}  // namespace detail

ReadersTable& global_readers_table() {
  static ReadersTable table(detail::parse_table_size(
      std::getenv("BRAVO_TABLE_SIZE"), ReadersTable::kDefaultSize));
  return table;
}

StatsDomain& global_stats_domain() {
  static StatsDomain domain;
  return domain;
}

PolicyParams PolicyParams::from_env() {
  PolicyParams p;
  p.n_multiplier =
      detail::parse_n_multiplier(std::getenv("BRAVO_N"), p.n_multiplier);
  return p;
}

}  // namespace bravo
