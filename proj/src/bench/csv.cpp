/*
 * Copyright 2026 The bravo authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bravo/bench/csv.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bravo::bench {

void emit_csv(const std::vector<BenchResult>& results,
              const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("csv: cannot open for writing: " + path);
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  out << kCsvHeader << "\n";
  for (const BenchResult& r : results) {
    const BenchConfig& c = r.config;
    out << to_string(c.benchmark) << ',' << r.lock_label << ',' << c.threads
        << ',' << c.write_prob << ',' << c.lock_pool << ',' << c.table_size
        << ',' << c.n_multiplier << ',' << c.seed << ',' << r.run_index << ','
        << r.total_ops << ',' << r.ops_per_sec << ',' << r.stats.fast_reads
        << ',' << r.stats.slow_reads << ',' << r.stats.revocations << ','
        << r.stats.total_revocation_ns << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("csv: write failed: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

std::uint64_t to_u64(const std::string& s) { return std::stoull(s); }

}  // namespace

std::vector<CsvRow> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("csv: bad or missing header in " + path);
  }
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 15) {
      throw std::runtime_error("csv: malformed row in " + path);
    }
    CsvRow row;
    row.benchmark = f[0];
    row.lock_impl = f[1];
    row.threads = to_u64(f[2]);
    row.write_prob = std::stod(f[3]);
    row.lock_pool = to_u64(f[4]);
    row.table_size = to_u64(f[5]);
    row.n = to_u64(f[6]);
    row.seed = to_u64(f[7]);
    row.run_index = to_u64(f[8]);
    row.total_ops = to_u64(f[9]);
    row.ops_per_sec = std::stod(f[10]);
    row.fast_reads = to_u64(f[11]);
    row.slow_reads = to_u64(f[12]);
    row.revocations = to_u64(f[13]);
    row.total_revocation_ns = to_u64(f[14]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bravo::bench
