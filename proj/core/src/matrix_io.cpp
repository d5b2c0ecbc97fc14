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

#include "qiit/matrix_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qiit {

namespace {
constexpr char kMagic[8] = {'Q', 'I', 'I', 'T', 'M', 'A', 'T', '\0'};
}

void write_matrix_record(std::ostream& out, const ComplexMatrix& m) {
  const std::uint32_t rows = static_cast<std::uint32_t>(m.rows());
  const std::uint32_t cols = static_cast<std::uint32_t>(m.cols());
  out.write(kMagic, 8);
  out.write(reinterpret_cast<const char*>(&rows), 4);
  out.write(reinterpret_cast<const char*>(&cols), 4);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      const double re = m(r, c).real();
      const double im = m(r, c).imag();
      out.write(reinterpret_cast<const char*>(&re), 8);
      out.write(reinterpret_cast<const char*>(&im), 8);
    }
}

ComplexMatrix read_matrix_record(std::istream& in) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("matrix record: bad magic");
  std::uint32_t rows = 0, cols = 0;
  in.read(reinterpret_cast<char*>(&rows), 4);
  in.read(reinterpret_cast<char*>(&cols), 4);
  ComplexMatrix m(rows, cols);
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      double re = 0, im = 0;
      in.read(reinterpret_cast<char*>(&re), 8);
      in.read(reinterpret_cast<char*>(&im), 8);
      m(r, c) = Complex(re, im);
    }
  if (!in) throw std::runtime_error("matrix record: truncated data");
  return m;
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_matrix_record(out, m);
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_matrix_record(in);
}

namespace {

Complex parse_complex_cell(std::string cell) {
  // Accepts "1.5", "1.5+0.25j", "1.5-2j", "2j".
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.erase(0, 1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) cell.pop_back();
  if (cell.empty()) throw std::runtime_error("empty matrix cell");
  if (cell.back() != 'j' && cell.back() != 'i') return Complex(std::stod(cell), 0.0);
  cell.pop_back();
  // Split at the last +/- that is not an exponent sign.
  for (std::size_t k = cell.size(); k-- > 1;) {
    const char c = cell[k];
    if ((c == '+' || c == '-') && cell[k - 1] != 'e' && cell[k - 1] != 'E') {
      const double re = std::stod(cell.substr(0, k));
      std::string im_text = cell.substr(k);
      if (im_text == "+") im_text = "1";
      if (im_text == "-") im_text = "-1";
      return Complex(re, std::stod(im_text));
    }
  }
  return Complex(0.0, std::stod(cell.empty() ? "1" : cell));
}

}  // namespace

ComplexMatrix load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<Complex> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_complex_cell(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty matrix file " + path);
  ComplexMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw std::runtime_error("ragged matrix rows in " + path);
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ComplexMatrix load_matrix_any(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[8] = {};
  in.read(magic, 8);
  if (in && std::memcmp(magic, kMagic, 8) == 0) return load_matrix(path);
  return load_matrix_csv(path);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path)
    : path_(path), out_(std::make_unique<std::ofstream>(path)) {
  if (!*out_) throw std::runtime_error("cannot open " + path + " for writing");
}

CsvWriter::~CsvWriter() = default;

void CsvWriter::comment(const std::string& text) { *out_ << "# " << text << "\n"; }

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) *out_ << ",";
    *out_ << cells[i];
  }
  *out_ << "\n";
}

}  // namespace qiit
