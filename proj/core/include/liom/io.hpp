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

#pragma once

#include <string>
#include <vector>

namespace liom {

/// CSV writer with fixed 17-significant-digit float formatting so that
/// identical runs produce byte-identical files.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  /// Integral first column variant (layer / depth indices).
  void add_row(long index, const std::vector<double>& values);

  std::string str() const;
  void write_file(const std::string& path) const;

  static std::string format(double value);

 private:
  std::vector<std::string> lines_;
  std::size_t columns_;
};

}  // namespace liom
