// Copyright 2026 The liom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace liom {

/// Runs fn(k) for k in [0, count) on up to `threads` workers. Each index is
/// an independent job; results must be written into per-index slots so the
/// outcome does not depend on scheduling. threads <= 1 runs inline.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

/// Pairwise summation; deterministic and independent of chunking.
double pairwise_sum(std::span<const double> values);

/// Mean via pairwise summation.
double pairwise_mean(std::span<const double> values);

/// Unbiased sample variance via pairwise summation of squared deviations.
double pairwise_variance(std::span<const double> values);

}  // namespace liom
