//
// Copyright 2026 The tclose Authors
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
//

#include "tclose/csv.hpp"

#include <string>

#include "tclose/error.hpp"

namespace tclose {

std::vector<CsvRecord> ReadCsvRecords(std::string_view bytes) {
  // Skip a UTF-8 byte order mark.
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  bool record_has_content = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    // A record consisting of one empty unquoted field is a blank line.
    if (record_has_content) records.push_back(std::move(current));
    current = CsvRecord{};
    record_has_content = false;
  };

  while (i < n) {
    if (!record_has_content && current.fields.empty() && field.empty()) {
      current.line = line;
    }
    const char c = bytes[i];
    if (c == '"' && field.find_first_not_of(" \t") == std::string::npos) {
      // Quoted field; leading blanks before the quote are dropped.
      field.clear();
      record_has_content = true;
      const std::size_t open_line = line;
      ++i;
      for (;;) {
        if (i >= n) {
          throw Error(ErrorCode::kMalformedCsv,
                      "unterminated quoted field starting on line " +
                          std::to_string(open_line));
        }
        if (bytes[i] == '"') {
          if (i + 1 < n && bytes[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        if (bytes[i] == '\n') ++line;
        field.push_back(bytes[i++]);
      }
      // After the closing quote only a separator or line end may follow;
      // surrounding spaces are tolerated.
      while (i < n && (bytes[i] == ' ' || bytes[i] == '\t')) ++i;
      if (i < n && bytes[i] != ',' && bytes[i] != '\n' && bytes[i] != '\r') {
        throw Error(ErrorCode::kMalformedCsv,
                    "unexpected character after closing quote on line " +
                        std::to_string(line));
      }
      if (i < n && bytes[i] == ',') {
        end_field();
        ++i;
      } else if (i < n) {
        if (bytes[i] == '\r') ++i;
        if (i < n && bytes[i] == '\n') ++i;
        end_record();
        ++line;
      }
      continue;
    }
    if (c == ',') {
      record_has_content = true;
      end_field();
      ++i;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r') ++i;
      if (i < n && bytes[i] == '\n') ++i;
      end_record();
      ++line;
    } else {
      if (c != ' ' && c != '\t') record_has_content = true;
      field.push_back(c);
      ++i;
    }
  }
  if (record_has_content || !current.fields.empty()) end_record();
  return records;
}

}  // namespace tclose
