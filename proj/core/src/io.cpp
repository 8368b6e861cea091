// Copyright 2026 The liom Authors
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

#include "liom/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace liom {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  std::string line;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) line += ',';
    line += header[i];
  }
  lines_.push_back(std::move(line));
}

std::string CsvWriter::format(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void CsvWriter::add_row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CsvWriter: column count mismatch");
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) line += ',';
    line += format(values[i]);
  }
  lines_.push_back(std::move(line));
}

void CsvWriter::add_row(long index, const std::vector<double>& values) {
  if (values.size() + 1 != columns_)
    throw std::invalid_argument("CsvWriter: column count mismatch");
  std::string line = std::to_string(index);
  for (const double v : values) {
    line += ',';
    line += format(v);
  }
  lines_.push_back(std::move(line));
}

std::string CsvWriter::str() const {
  std::string out;
  for (const std::string& line : lines_) {
    out += line;
    out += '\n';
  }
  return out;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("CsvWriter: cannot open " + path);
  f << str();
}

}  // namespace liom
