#include "netsort/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

namespace netsort {

namespace {

std::string format_fixed(double value, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t value) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

struct ReferenceBand {
  Algorithm algorithm;
  std::string_view config;
  Dist distribution;
  std::size_t size;
  std::string_view band;
};

// Speedup expectations for typical x86-64 desktops; reported next to the
// measurement whenever the campaign covers the cell.
constexpr ReferenceBand kReferenceBands[] = {
    {Algorithm::merge_sort, "6To8", Dist::random, 100000, "1.5x to 2.0x"},
    {Algorithm::merge_sort, "3To8", Dist::sorted, 25000, "about 2.4x"},
    {Algorithm::quick_sort, "3To5", Dist::sorted, 10000, "about 1.5x"},
};

}  // namespace

void emit_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records,
              const std::vector<SpeedupRecord>& speedups) {
  std::map<std::tuple<Algorithm, std::string, Dist, std::size_t>, double>
      speedup_by_key;
  for (const SpeedupRecord& s : speedups) {
    speedup_by_key.emplace(
        std::make_tuple(s.algorithm, s.config_name, s.distribution, s.size),
        s.speedup);
  }

  out << kCsvHeader << '\n';
  for (const BenchmarkRecord& rec : records) {
    double speedup = 1.0;
    if (rec.config_name != "Classic") {
      const auto it = speedup_by_key.find(std::make_tuple(
          rec.algorithm, rec.config_name, rec.distribution, rec.size));
      if (it == speedup_by_key.end()) {
        throw std::invalid_argument("no speedup pairing for record " +
                                    rec.config_name);
      }
      speedup = it->second;
    }
    out << algorithm_name(rec.algorithm) << ',' << rec.config_name << ','
        << dist_name(rec.distribution) << ',' << format_u64(rec.size) << ','
        << format_u64(rec.iterations) << ',' << format_fixed(rec.mean_ns, 3)
        << ','
        << format_u64(static_cast<std::uint64_t>(std::llround(rec.total_ns)))
        << ',' << format_fixed(speedup, 4) << '\n';
  }
}

void emit_csv(const std::string& path,
              const std::vector<BenchmarkRecord>& records,
              const std::vector<SpeedupRecord>& speedups) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  emit_csv(out, records, speedups);
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for output file: " + path);
  }
}

void emit_summary(std::ostream& out,
                  const std::vector<SpeedupRecord>& speedups) {
  // cells keyed by (algorithm, distribution) then (size, config)
  std::map<std::pair<Algorithm, Dist>,
           std::map<std::pair<std::size_t, std::string>, double>>
      groups;
  for (const SpeedupRecord& s : speedups) {
    groups[{s.algorithm, s.distribution}][{s.size, s.config_name}] = s.speedup;
  }

  for (const Algorithm alg : {Algorithm::merge_sort, Algorithm::quick_sort}) {
    for (const Dist dist :
         {Dist::random, Dist::sorted, Dist::nearly_sorted}) {
      const auto git = groups.find({alg, dist});
      if (git == groups.end()) continue;
      const auto& cells = git->second;

      std::set<std::size_t> sizes;
      std::set<std::string> present;
      for (const auto& [key, value] : cells) {
        sizes.insert(key.first);
        present.insert(key.second);
      }
      // config columns in registry order, then any user-defined names
      std::vector<std::string> configs;
      for (const NetworkConfig& cfg : config_registry()) {
        if (present.count(cfg.name)) configs.push_back(cfg.name);
      }
      for (const std::string& name : present) {
        if (std::find(configs.begin(), configs.end(), name) == configs.end()) {
          configs.push_back(name);
        }
      }

      out << "speedup vs Classic: " << algorithm_name(alg) << ", "
          << dist_name(dist) << " input\n";

      constexpr int size_col = 9;
      std::vector<int> widths;
      out << std::string(size_col - 4, ' ') << "size";
      for (const std::string& name : configs) {
        const int w = std::max<int>(6, static_cast<int>(name.size()) + 2);
        widths.push_back(w);
        out << std::string(static_cast<std::size_t>(w) - name.size(), ' ')
            << name;
      }
      out << '\n';

      for (std::size_t size : sizes) {
        const std::string size_str = format_u64(size);
        out << std::string(size_col - static_cast<int>(size_str.size()), ' ')
            << size_str;
        for (std::size_t c = 0; c < configs.size(); ++c) {
          const auto it = cells.find({size, configs[c]});
          const std::string cell =
              it == cells.end() ? "-" : format_fixed(it->second, 2);
          out << std::string(
                     static_cast<std::size_t>(widths[c]) - cell.size(), ' ')
              << cell;
        }
        out << '\n';
      }
      out << '\n';
    }
  }

  bool first_note = true;
  for (const ReferenceBand& band : kReferenceBands) {
    const auto git = groups.find({band.algorithm, band.distribution});
    if (git == groups.end()) continue;
    const auto it = git->second.find({band.size, std::string(band.config)});
    if (it == git->second.end()) continue;
    if (first_note) {
      out << "reference cells (typical x86-64 desktop bands):\n";
      first_note = false;
    }
    out << "  " << algorithm_name(band.algorithm) << ' ' << band.config << ' '
        << dist_name(band.distribution) << ' ' << format_u64(band.size)
        << ": measured " << format_fixed(it->second, 2) << "x, reference "
        << band.band << '\n';
  }
}

}  // namespace netsort
