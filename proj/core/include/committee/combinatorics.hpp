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

#ifndef COMMITTEE_COMBINATORICS_HPP_
#define COMMITTEE_COMBINATORICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace committee {

// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// First r-combination of {0..n-1} in lexicographic order: (0, 1, ..., r-1).
std::vector<std::uint32_t> first_combination(std::size_t r);

// Advances `combo` (strictly increasing, values < n) to its lexicographic
// successor. Returns false after the last combination.
bool next_combination(std::span<std::uint32_t> combo, std::size_t n);

// Lexicographic rank of `combo` among r-subsets of {0..n-1}.
std::uint64_t combination_rank(std::span<const std::uint32_t> combo,
                               std::size_t n);

// Inverse of combination_rank.
std::vector<std::uint32_t> combination_unrank(std::uint64_t rank,
                                              std::size_t n, std::size_t r);

}  // namespace committee

#endif  // COMMITTEE_COMBINATORICS_HPP_
