// Copyright 2026 The waveqls authors
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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace waveqls::report {

/// Flat key-value run manifest. Unknown keys are rejected against the
/// per-subcommand schema; every run writes its fully resolved manifest next
/// to the results.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key, double dflt) const;
  long get_long(const std::string& key, long dflt) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }
  std::vector<std::string> keys() const;

  static Manifest load(const std::string& path);
  void save(const std::string& path) const;

  /// FNV-1a over the sorted key=value lines; stamped into output headers.
  std::uint64_t hash() const;

 private:
  std::map<std::string, std::string> kv_;
};

/// Locale-independent numeric formatting (%.17g / fixed decimal point).
std::string format_double(double v);

/// CSV writer: one header comment line with the manifest hash, then a
/// header row and data rows. Deterministic byte output.
class CsvWriter {
 public:
  CsvWriter(std::string path, std::vector<std::string> columns,
            std::uint64_t manifest_hash);
  void row(const std::vector<std::string>& cells);
  void close();
  ~CsvWriter();

 private:
  std::string path_;
  std::string buf_;
  size_t ncols_;
  bool closed_ = false;
};

/// One series of a log-log plot.
struct Series {
  std::string label;
  std::vector<double> x, y;
};

/// Self-contained SVG log-log plot (CSV stays the normative artifact).
void write_loglog_svg(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<Series>& series);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace waveqls::report
