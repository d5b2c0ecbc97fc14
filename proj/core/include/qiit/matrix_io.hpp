// Copyright 2026 The qiit authors
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

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "qiit/operators.hpp"

namespace qiit {

// Binary matrix record: a 16-byte header (8-byte magic "QIITMAT\0",
// uint32 rows, uint32 cols, little-endian) followed by row-major
// (real, imag) double pairs. A file may hold several records back to back.

void write_matrix_record(std::ostream& out, const ComplexMatrix& m);
ComplexMatrix read_matrix_record(std::istream& in);

void save_matrix(const std::string& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::string& path);

/// CSV matrix: one row per line, cells "re+imj" or plain reals.
ComplexMatrix load_matrix_csv(const std::string& path);

/// Load either format, chosen by the file's leading bytes.
ComplexMatrix load_matrix_any(const std::string& path);

/// Formats a double with full 17-significant-digit precision.
std::string format_double(double v);

/// Line-oriented CSV emitter: optional '#' comment lines, one header row,
/// then data rows at full double precision.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();

  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

  static std::string cell(double v) { return format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> out_;
};

}  // namespace qiit
