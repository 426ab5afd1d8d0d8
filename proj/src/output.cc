// Copyright 2026 The fpbudget Authors.
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

#include "fpbudget/output.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <system_error>

namespace fpbudget {

namespace {

std::string Num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

void WriteTraceCsv(std::ostream& out, const Trace& trace,
                   double value_grid_step) {
  out << "t,value,lambda,bid,won,reward,cost,budget";
  if (trace.one_sided) out << ",m,N,w";
  out << "\r\n";
  for (const RoundRecord& r : trace.sampled) {
    out << r.t << ',' << Num(r.value) << ',' << Num(r.lambda) << ','
        << Num(r.bid) << ',' << (r.won ? 1 : 0) << ',' << Num(r.reward) << ','
        << Num(r.cost) << ',' << Num(r.budget);
    if (trace.one_sided) {
      if (r.value_index >= 0) {
        out << ',' << Num(r.value_index * value_grid_step) << ','
            << r.set_count << ',' << Num(r.set_width);
      } else {
        out << ",,,";
      }
    }
    out << "\r\n";
  }
}

void WriteAggregateCsv(std::ostream& out, const AggregateResult& result) {
  out << "t,mean_rpr,std_rpr,mean_budget,mean_lambda\r\n";
  for (std::size_t j = 0; j < result.t.size(); ++j) {
    out << result.t[j] << ',' << Num(result.mean_rpr[j]) << ','
        << Num(result.std_rpr[j]) << ',' << Num(result.mean_budget[j]) << ','
        << Num(result.mean_lambda[j]) << "\r\n";
  }
}

void WriteFigure2Csv(std::ostream& out, std::span<const Figure2Row> rows) {
  out << "T,mean_sum,threshold,pass\r\n";
  for (const Figure2Row& row : rows) {
    out << row.horizon << ',' << Num(row.mean_sum) << ','
        << Num(row.threshold) << ',' << (row.pass ? "true" : "false")
        << "\r\n";
  }
}

void WriteBenchmarkCsv(std::ostream& out,
                       std::span<const BenchmarkResult> results) {
  out << "rho,lambda_star,per_round_value,expected_cost,binding\r\n";
  for (const BenchmarkResult& r : results) {
    out << Num(r.rho) << ',' << Num(r.lambda_star) << ','
        << Num(r.per_round_value) << ',' << Num(r.expected_cost) << ','
        << (r.binding ? "true" : "false") << "\r\n";
  }
}

void WriteSvgChart(std::ostream& out, const std::string& title,
                   const std::string& x_label, const std::string& y_label,
                   std::span<const Series> series) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 50.0;

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  auto extend = [](double v, double& lo, double& hi) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (const Series& s : series) {
    for (double x : s.x) extend(x, x_min, x_max);
    for (double y : s.y) extend(y, y_min, y_max);
    for (double y : s.lower) extend(y, y_min, y_max);
    for (double y : s.upper) extend(y, y_min, y_max);
  }
  if (!(x_min <= x_max)) x_min = 0.0, x_max = 1.0;
  if (!(y_min <= y_max)) y_min = 0.0, y_max = 1.0;
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  y_min = std::min(y_min, 0.0);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"500\" viewBox=\"0 0 800 500\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << Escape(title) << "</text>\n";

  // Axes with five ticks each.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << Num(kLeft) << "\" y1=\"" << Num(kTop + plot_h)
      << "\" x2=\"" << Num(kLeft + plot_w) << "\" y2=\"" << Num(kTop + plot_h)
      << "\"/>\n"
      << "<line x1=\"" << Num(kLeft) << "\" y1=\"" << Num(kTop) << "\" x2=\""
      << Num(kLeft) << "\" y2=\"" << Num(kTop + plot_h) << "\"/>\n"
      << "</g>\n<g font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x_min + (x_max - x_min) * i / 4.0;
    const double yv = y_min + (y_max - y_min) * i / 4.0;
    out << "<text x=\"" << Num(px(xv)) << "\" y=\"" << Num(kTop + plot_h + 16)
        << "\" text-anchor=\"middle\">" << Num(xv) << "</text>\n"
        << "<text x=\"" << Num(kLeft - 6) << "\" y=\"" << Num(py(yv) + 4)
        << "\" text-anchor=\"end\">" << Num(yv) << "</text>\n";
  }
  out << "</g>\n"
      << "<text x=\"" << Num(kLeft + plot_w / 2) << "\" y=\"" << Num(kHeight - 10)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << Escape(x_label)
      << "</text>\n"
      << "<text x=\"16\" y=\"" << Num(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << Num(kTop + plot_h / 2) << ")\">" << Escape(y_label) << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    const std::size_t n = std::min(s.x.size(), s.y.size());
    if (s.lower.size() >= n && s.upper.size() >= n && n > 0) {
      out << "<polygon fill=\"" << color
          << "\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
      for (std::size_t j = 0; j < n; ++j) {
        out << Num(px(s.x[j])) << ',' << Num(py(s.upper[j])) << ' ';
      }
      for (std::size_t j = n; j-- > 0;) {
        out << Num(px(s.x[j])) << ',' << Num(py(s.lower[j])) << ' ';
      }
      out << "\"/>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < n; ++j) {
      out << Num(px(s.x[j])) << ',' << Num(py(s.y[j])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << Num(kLeft + plot_w - 10) << "\" y=\""
        << Num(kTop + 16 + 16 * static_cast<double>(i))
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
        << Escape(s.name) << "</text>\n";
  }
  out << "</svg>\n";
}

std::filesystem::path WriteFile(const std::filesystem::path& dir,
                                const std::string& name,
                                const std::string& contents) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw OutputError("cannot create directory " + dir.string() + ": " +
                      ec.message());
  }
  const std::filesystem::path path = dir / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open " + path.string() + " for writing");
  file << contents;
  file.close();
  if (!file) throw OutputError("failed writing " + path.string());
  return path;
}

std::string OutputName(const std::string& stem, const ExperimentConfig& config,
                       uint64_t seed, const std::string& extension) {
  return stem + "_" + ConfigHash(config) + "_s" + std::to_string(seed) + "." +
         extension;
}

}  // namespace fpbudget
