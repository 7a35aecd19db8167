#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primtower/tower.hpp"

namespace primtower {

/// Generator profile for one benchmark suite.
///   1: p in Q(x,t1,t2)[t3], deg_t3 p = size, coefficients sparse/sparse of
///      total degree coefficient_degree in x, t1, t2.
///   2: as 1, coefficients quotients of linear polynomials.
///   3: p in Q(x)[t1,t2,t3] dense of total degree size, coefficients
///      quotients of polynomials in x of degree coefficient_degree.
///   4: p in Q[x,t1,t2,t3] dense of total degree size.
struct BenchSuite {
  int suite = 1;
  int size = 1;
  std::uint64_t seed = 1;
  int coefficient_degree = 5;
  int count = 3;
};

struct BenchItem {
  FieldElement antiderivative;
  FieldElement integrand;
};

/// t1 = log x, t2 = log(x+1), t3 = log t1.
Tower bench_tower();

std::vector<BenchItem> generate_suite(const BenchSuite& spec, const Tower& tower);

struct BenchRow {
  int suite = 0;
  int size = 0;
  std::uint64_t seed = 0;
  int index = 0;
  bool verified = false;
  bool remainder_zero = false;
  double millis = 0;
  BasisMode mode = BasisMode::kRecurrence;
};

/// Reduces every item in both basis modes; `jobs` > 1 runs items in
/// parallel over the shared tower.
std::vector<BenchRow> run_bench(const BenchSuite& spec, const Tower& tower, int jobs = 1);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);
/// Per (suite, size, mode) averages.
std::string bench_markdown(const std::vector<BenchRow>& rows);

std::string mode_name(BasisMode mode);

}  // namespace primtower
