// Copyright 2026 The committee-rules Authors
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

#include "committee/combinatorics.hpp"

#include <limits>

namespace committee {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::uint32_t> first_combination(std::size_t r) {
  std::vector<std::uint32_t> combo(r);
  for (std::size_t i = 0; i < r; ++i) combo[i] = static_cast<std::uint32_t>(i);
  return combo;
}

bool next_combination(std::span<std::uint32_t> combo, std::size_t n) {
  const std::size_t r = combo.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (combo[i] < n - r + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < r; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t combination_rank(std::span<const std::uint32_t> combo,
                               std::size_t n) {
  // Count the combinations that precede `combo` position by position.
  const std::size_t r = combo.size();
  std::uint64_t rank = 0;
  std::uint32_t prev = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t start = i == 0 ? 0 : prev + 1;
    for (std::uint32_t v = start; v < combo[i]; ++v) {
      rank += binomial(n - v - 1, r - i - 1);
    }
    prev = combo[i];
  }
  return rank;
}

std::vector<std::uint32_t> combination_unrank(std::uint64_t rank,
                                              std::size_t n, std::size_t r) {
  std::vector<std::uint32_t> combo(r);
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - v - 1, r - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    combo[i] = v++;
  }
  return combo;
}

}  // namespace committee
