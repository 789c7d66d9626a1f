// Copyright 2026 The kpkit Authors.
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

#ifndef KPKIT_CSV_HPP_
#define KPKIT_CSV_HPP_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpkit::csv {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line where the record starts
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line
// breaks; CRLF and LF both end a record. Blank lines are skipped.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Throws Error(kParseError) on an unterminated quote or stray characters
  // after a closing quote.
  std::optional<Record> next();

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

// Reads the header and checks it matches `expected` exactly (a UTF-8 BOM is
// tolerated). Throws kParseError.
void expect_header(Reader& reader, const std::vector<std::string_view>& expected);

std::string escape_field(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);  // no newline

}  // namespace kpkit::csv

#endif  // KPKIT_CSV_HPP_
