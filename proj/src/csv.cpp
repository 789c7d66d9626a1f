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

#include "kpkit/csv.hpp"

#include "kpkit/error.hpp"

namespace kpkit::csv {

std::optional<Record> Reader::next() {
  while (true) {
    if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;

    Record record;
    record.line = line_;
    std::string field;
    bool quoted = false;      // inside quotes
    bool was_quoted = false;  // current field was quoted and has closed
    bool any_content = false;

    auto end_field = [&] {
      record.fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    };

    while (true) {
      int c = in_.get();
      if (c == std::char_traits<char>::eof()) {
        if (quoted) {
          throw Error(ErrorCode::kParseError, "unterminated quoted field", record.line);
        }
        break;
      }
      char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            in_.get();
            field.push_back('"');
          } else {
            quoted = false;
            was_quoted = true;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        continue;
      }
      if (ch == '\r' && in_.peek() == '\n') continue;
      if (ch == '\n') {
        ++line_;
        break;
      }
      any_content = true;
      if (ch == ',') {
        end_field();
      } else if (ch == '"') {
        if (!field.empty() || was_quoted) {
          throw Error(ErrorCode::kParseError, "unexpected quote inside a field", record.line);
        }
        quoted = true;
      } else {
        if (was_quoted) {
          throw Error(ErrorCode::kParseError, "characters after a closing quote", record.line);
        }
        field.push_back(ch);
      }
    }
    if (!any_content) continue;
    end_field();
    return record;
  }
}

void expect_header(Reader& reader, const std::vector<std::string_view>& expected) {
  auto header = reader.next();
  std::string want;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) want += ',';
    want += expected[i];
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing header '" + want + "'", 1);
  auto& fields = header->fields;
  if (!fields.empty() && fields[0].starts_with("\xEF\xBB\xBF")) fields[0].erase(0, 3);
  bool ok = fields.size() == expected.size();
  for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = fields[i] == expected[i];
  if (!ok) {
    throw Error(ErrorCode::kParseError, "expected header '" + want + "'", header->line);
  }
}

std::string escape_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += escape_field(fields[i]);
  }
  return out;
}

}  // namespace kpkit::csv
