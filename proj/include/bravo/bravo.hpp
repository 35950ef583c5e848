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

#include "bravo/bravo_lock.hpp"
#include "bravo/centralized_lock.hpp"
#include "bravo/distributed_lock.hpp"
#include "bravo/rw_contract.hpp"

namespace bravo {

using BravoCentralized = BravoLock<CentralizedLock>;
using BravoDistributed = BravoLock<DistributedLock>;

static_assert(RwLockType<CentralizedLock>);
static_assert(RwLockType<DistributedLock>);
static_assert(RwLockType<BravoCentralized>);
static_assert(RwLockType<BravoDistributed>);

}  // namespace bravo
