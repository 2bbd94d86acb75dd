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

// Election text format:
//
//   m n k
//   <m candidate labels, one per line>
//   <n rankings, comma-separated labels, most-preferred first>
//
// Lines starting with '#' and blank lines are ignored. Labels may not contain
// whitespace or commas.

#ifndef COMMITTEE_ELECTION_IO_HPP_
#define COMMITTEE_ELECTION_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "committee/election.hpp"

namespace committee {

struct ElectionFile {
  Election election;
  std::size_t k = 0;

  bool operator==(const ElectionFile&) const = default;
};

// Throws ParseError carrying the offending physical line number.
ElectionFile parse_election(std::string_view text);

std::string serialize_election(const Election& election, std::size_t k);

ElectionFile read_election_file(const std::string& path);
void write_election_file(const std::string& path, const Election& election,
                         std::size_t k);

}  // namespace committee

#endif  // COMMITTEE_ELECTION_IO_HPP_
