// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace rydgate {

/// Worker count for `requested` threads: 0 means hardware concurrency.
int resolve_threads(int requested);

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
/// Iterations must write to disjoint outputs; the first exception thrown by
/// any iteration is rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace rydgate
