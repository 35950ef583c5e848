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

// Lock-usage traps (releasing a permission that is not held, double token
// release, ...).  On by default; the cost is a relaxed load plus a
// predictable branch per check.  Build with -DBRAVO_CHECKED=0 to compile
// them out.
#ifndef BRAVO_CHECKED
#define BRAVO_CHECKED 1
#endif

namespace bravo {

[[noreturn]] void check_failed(const char* what) noexcept;

inline void bravo_check([[maybe_unused]] bool ok,
                        [[maybe_unused]] const char* what) {
#if BRAVO_CHECKED
  if (!ok) [[unlikely]]
    check_failed(what);
#endif
}

}  // namespace bravo
