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

// CSV and SVG writers.
//
//   trace      t,value,lambda,bid,won,reward,cost,budget[,m,N,w]
//   aggregate  t,mean_rpr,std_rpr,mean_budget,mean_lambda
//   figure 2   T,mean_sum,threshold,pass
//   benchmark  rho,lambda_star,per_round_value,expected_cost,binding
//
// Grid quantities are written as values, never as indices, except m in
// one-sided traces, which is the value grid point v^{m(t)}.

#ifndef FPBUDGET_OUTPUT_H_
#define FPBUDGET_OUTPUT_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpbudget/benchmark.h"
#include "fpbudget/config.h"
#include "fpbudget/harness.h"
#include "fpbudget/trace.h"

namespace fpbudget {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `value_grid_step` converts the stored value index back to v^m.
void WriteTraceCsv(std::ostream& out, const Trace& trace,
                   double value_grid_step);
void WriteAggregateCsv(std::ostream& out, const AggregateResult& result);
void WriteFigure2Csv(std::ostream& out, std::span<const Figure2Row> rows);
void WriteBenchmarkCsv(std::ostream& out,
                       std::span<const BenchmarkResult> results);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  // Optional band drawn as a translucent polygon (e.g. mean +- 1 std).
  std::vector<double> lower;
  std::vector<double> upper;
};

// Static 800x500 line chart with linear axes, one polyline per series.
void WriteSvgChart(std::ostream& out, const std::string& title,
                   const std::string& x_label, const std::string& y_label,
                   std::span<const Series> series);

// Writes `contents` to dir/name, creating dir. Throws OutputError naming the
// path on failure.
std::filesystem::path WriteFile(const std::filesystem::path& dir,
                                const std::string& name,
                                const std::string& contents);

// <stem>_<config hash>_s<seed>.<ext>
std::string OutputName(const std::string& stem, const ExperimentConfig& config,
                       uint64_t seed, const std::string& extension);

}  // namespace fpbudget

#endif  // FPBUDGET_OUTPUT_H_
