// Copyright 2026 The Ducut Authors
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

#include <functional>
#include <optional>
#include <vector>

#include "ducut/errors.hpp"

namespace ducut {

template <typename T>
using SubsetTest = std::function<bool(const std::vector<T>&)>;

/// Probes candidate kept-lists and returns the index of the first one that
/// passes. Implementations may evaluate eagerly (batched) or lazily, but the
/// returned index must be the first passing candidate in list order.
template <typename T>
using FirstPassingProbe =
    std::function<std::optional<std::size_t>(const std::vector<std::vector<T>>&)>;

namespace detail {

template <typename T>
std::vector<std::vector<T>> split_parts(const std::vector<T>& items,
                                        std::size_t n) {
  std::vector<std::vector<T>> parts;
  parts.reserve(n);
  std::size_t size = items.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = i * size / n;
    std::size_t hi = (i + 1) * size / n;
    parts.emplace_back(items.begin() + static_cast<std::ptrdiff_t>(lo),
                       items.begin() + static_cast<std::ptrdiff_t>(hi));
  }
  return parts;
}

}  // namespace detail

/// Core delta-debugging minimization over a list whose full contents pass.
/// Alternates reduce-to-subset and reduce-to-complement, doubling the
/// granularity on failure; at singleton granularity a full complement sweep
/// certifies 1-minimality. The caller guarantees the full list passes.
template <typename T>
std::vector<T> ddmin_probe(std::vector<T> current,
                           const FirstPassingProbe<T>& first_passing) {
  std::size_t n = 2;
  while (current.size() >= 2) {
    std::vector<std::vector<T>> parts = detail::split_parts(current, n);

    // Reduce to subset.
    std::optional<std::size_t> hit = first_passing(parts);
    if (hit) {
      current = parts[*hit];
      n = 2;
      continue;
    }

    // Reduce to complement.
    std::vector<std::vector<T>> complements;
    complements.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<T> complement;
      complement.reserve(current.size() - parts[i].size());
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j == i) continue;
        complement.insert(complement.end(), parts[j].begin(), parts[j].end());
      }
      complements.push_back(std::move(complement));
    }
    hit = first_passing(complements);
    if (hit) {
      current = complements[*hit];
      n = std::max<std::size_t>(n - 1, 2);
      continue;
    }

    // Refine granularity.
    if (n < current.size()) {
      n = std::min(current.size(), 2 * n);
      continue;
    }
    break;  // singleton granularity, nothing removable: 1-minimal
  }

  if (current.size() == 1) {
    std::vector<std::vector<T>> empty_keep{{}};
    if (first_passing(empty_keep)) current.clear();
  }
  return current;
}

/// Classic ddmin: returns a 1-minimal sublist S of `units` with test(S)
/// true and test(S minus any single element) false. Evaluates candidates
/// sequentially with short-circuiting. Throws PreconditionFailed unless the
/// full list passes.
template <typename T>
std::vector<T> ddmin(const std::vector<T>& units, const SubsetTest<T>& test) {
  if (!test(units)) {
    throw PreconditionFailed("ddmin: keeping every unit does not pass");
  }
  FirstPassingProbe<T> sequential =
      [&test](const std::vector<std::vector<T>>& candidates)
      -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (test(candidates[i])) return i;
    }
    return std::nullopt;
  };
  return ddmin_probe(units, sequential);
}

}  // namespace ducut
