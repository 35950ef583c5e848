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

#include <concepts>
#include <optional>

namespace bravo {

// The reader-writer lock contract.  Read acquisition returns a token that
// must be handed back to read_unlock; locks whose readers carry no state
// use an empty token type.  Tokens are plain values and may be released
// from a different thread than the acquirer.
//
// Semantics every model must provide:
//   - mutual exclusion: write permission excludes all other permissions;
//   - read concurrency: any number of threads may hold read permission;
//   - try_* never block and have no effect when they return failure.
template <typename L>
concept RwLockType = requires(L& l, typename L::ReadToken t) {
  typename L::ReadToken;
  { l.read_lock() } -> std::same_as<typename L::ReadToken>;
  { l.read_unlock(t) };
  { l.write_lock() };
  { l.write_unlock() };
  { l.try_read_lock() } -> std::same_as<std::optional<typename L::ReadToken>>;
  { l.try_write_lock() } -> std::same_as<bool>;
};

}  // namespace bravo
