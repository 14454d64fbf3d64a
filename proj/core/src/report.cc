// Copyright 2026 The CSM Authors.
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

#include "csm/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <utility>

namespace csm {
namespace {

struct Moments {
  int n = 0;
  double sum = 0.0;
  double sum_sq_dev = 0.0;
  double mean = 0.0;

  // Welford update.
  void Add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / n;
    sum_sq_dev += delta * (x - mean);
    sum += x;
  }
  double SampleStd() const { return n > 1 ? std::sqrt(sum_sq_dev / (n - 1)) : 0.0; }
};

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

Summary Summarize(std::span<const ResultRow> rows) {
  if (rows.empty()) throw std::invalid_argument("cannot summarize an empty result");

  using Key = std::pair<std::string, std::string>;
  std::vector<Key> order;
  std::map<Key, std::map<int, Moments>> by_epoch;
  struct Totals {
    Moments observed, deviation, objective;
    int connected = 0;
  };
  std::map<Key, Totals> totals;
  for (const ResultRow& r : rows) {
    const Key key{r.algorithm, r.weight_scheme};
    if (!totals.contains(key)) order.push_back(key);
    by_epoch[key][r.epoch].Add(r.observed);
    Totals& t = totals[key];
    t.observed.Add(r.observed);
    t.deviation.Add(r.deviation);
    t.objective.Add(r.objective);
    t.connected += r.connected ? 1 : 0;
  }

  Summary s;
  for (const Key& key : order) {
    for (const auto& [epoch, m] : by_epoch[key]) {
      s.per_epoch.push_back({key.first, key.second, epoch, m.n, m.mean, m.SampleStd()});
    }
    const Totals& t = totals[key];
    AlgorithmStat a;
    a.algorithm = key.first;
    a.weight_scheme = key.second;
    a.count = t.observed.n;
    a.mean_observed = t.observed.mean;
    a.stddev_observed = t.observed.SampleStd();
    a.connectivity_rate = static_cast<double>(t.connected) / t.observed.n;
    a.mean_deviation = t.deviation.mean;
    a.mean_objective = t.objective.mean;
    s.per_algorithm.push_back(std::move(a));
  }
  return s;
}

void WriteSummaryTable(std::ostream& out, const Summary& s) {
  char buf[256];
  out << "algorithm  scheme   rows  mean_observed  std_observed  connected  "
         "mean_deviation_m\n";
  for (const AlgorithmStat& a : s.per_algorithm) {
    std::snprintf(buf, sizeof buf, "%-10s %-8s %5d  %13.3f  %12.3f  %8.1f%%  %16.3f\n",
                  a.algorithm.c_str(), a.weight_scheme.c_str(), a.count, a.mean_observed,
                  a.stddev_observed, 100.0 * a.connectivity_rate, a.mean_deviation);
    out << buf;
  }
  out << "\nper-epoch targets observed (mean +- std)\n";
  for (const EpochStat& e : s.per_epoch) {
    std::snprintf(buf, sizeof buf, "%-10s epoch %3d  %8.3f +- %.3f  (n=%d)\n",
                  e.algorithm.c_str(), e.epoch, e.mean, e.stddev, e.count);
    out << buf;
  }
}

void WriteSnapshots(std::ostream& out, std::span<const NetworkSnapshot> snapshots) {
  out << "# csm network snapshots v1\n";
  char buf[128];
  for (const NetworkSnapshot& s : snapshots) {
    out << "snapshot " << s.round << ' ' << s.epoch << ' ' << s.algorithm << ' '
        << s.positions.size() << ' ' << s.edges.size() << '\n';
    for (std::size_t i = 0; i < s.positions.size(); ++i) {
      std::snprintf(buf, sizeof buf, "robot %zu %.17g %.17g\n", i, s.positions[i].x(),
                    s.positions[i].y());
      out << buf;
    }
    for (const Edge& e : s.edges) out << "edge " << e.u << ' ' << e.v << '\n';
  }
}

std::vector<NetworkSnapshot> ReadSnapshots(std::istream& in) {
  std::vector<NetworkSnapshot> out;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("snapshot line " + std::to_string(line_no) + ": " + what);
  };
  auto next_line = [&]() -> std::istringstream {
    if (!std::getline(in, line)) fail("unexpected end of file");
    ++line_no;
    return std::istringstream(line);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream head(line);
    std::string tag;
    NetworkSnapshot s;
    std::size_t robots = 0, edges = 0;
    if (!(head >> tag >> s.round >> s.epoch >> s.algorithm >> robots >> edges) ||
        tag != "snapshot") {
      fail("expected a snapshot header");
    }
    for (std::size_t i = 0; i < robots; ++i) {
      auto row = next_line();
      std::size_t index = 0;
      double x = 0.0, y = 0.0;
      if (!(row >> tag >> index >> x >> y) || tag != "robot" || index != i) {
        fail("expected robot " + std::to_string(i));
      }
      s.positions.emplace_back(x, y);
    }
    for (std::size_t k = 0; k < edges; ++k) {
      auto row = next_line();
      Edge e;
      if (!(row >> tag >> e.u >> e.v) || tag != "edge") fail("expected an edge");
      s.edges.push_back(e);
    }
    out.push_back(std::move(s));
  }
  return out;
}

PlotFiles EmitPlotData(const Summary& summary,
                       std::span<const NetworkSnapshot> snapshots,
                       const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());

  PlotFiles files{dir / "bars.csv", dir / "network.txt"};
  {
    std::ofstream bars = OpenForWrite(files.bars);
    bars << kBarsHeader << '\n';
    char buf[256];
    for (const EpochStat& e : summary.per_epoch) {
      std::snprintf(buf, sizeof buf, "%d,%s,%s,%.6f,%.6f,%d\n", e.epoch, e.algorithm.c_str(),
                    e.weight_scheme.c_str(), e.mean, e.stddev, e.count);
      bars << buf;
    }
    if (!bars) throw std::runtime_error("failed writing '" + files.bars.string() + "'");
  }
  {
    std::ofstream network = OpenForWrite(files.network);
    WriteSnapshots(network, snapshots);
    if (!network) throw std::runtime_error("failed writing '" + files.network.string() + "'");
  }
  return files;
}

}  // namespace csm
