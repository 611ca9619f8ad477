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

#ifndef TCLOSE_CSV_HPP_
#define TCLOSE_CSV_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tclose {

struct CsvRecord {
  std::vector<std::string> fields;
  // 1-based physical line on which the record starts.
  std::size_t line = 0;
};

// RFC-4180 reader: comma separator, optional double-quote quoting with ""
// as an escaped quote, CRLF or LF line endings. Quoted fields may span
// lines. Blank lines are skipped. Fields are returned verbatim (no trim).
// Throws Error(kMalformedCsv) on an unterminated quote or stray characters
// after a closing quote.
std::vector<CsvRecord> ReadCsvRecords(std::string_view bytes);

}  // namespace tclose

#endif  // TCLOSE_CSV_HPP_
