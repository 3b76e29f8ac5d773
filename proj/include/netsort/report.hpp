#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "netsort/bench.hpp"

namespace netsort {

// CSV schema v1; the header line is byte-exact, rows use '.' decimals and
// LF newlines. Classic rows carry speedup 1.0000.
inline constexpr std::string_view kCsvHeader =
    "algorithm,config,distribution,size,iterations,mean_ns,total_ns,speedup";

void emit_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records,
              const std::vector<SpeedupRecord>& speedups);

// Writes the CSV to `path`; unwritable paths raise an error naming the path.
void emit_csv(const std::string& path,
              const std::vector<BenchmarkRecord>& records,
              const std::vector<SpeedupRecord>& speedups);

// One speedup table per (algorithm, distribution): size rows, config
// columns, cells to two decimals, missing cells as "-". Follows with
// reference-band notes for the cells that have published expectations.
void emit_summary(std::ostream& out, const std::vector<SpeedupRecord>& speedups);

}  // namespace netsort
