#include "primtower/bench.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "primtower/errors.hpp"
#include "primtower/reduction.hpp"

namespace primtower {

namespace {

class Generator {
 public:
  Generator(const BenchSuite& spec, const Tower& tower)
      : rng_(spec.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(spec.suite) * 1000003ULL +
             static_cast<std::uint64_t>(spec.size)),
        tower_(tower) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

  long nonzero() {
    long c = below(9) + 1;
    return below(2) == 0 ? c : -c;
  }

  FieldElement monomial(const std::vector<int>& levels, const std::vector<int>& exps) {
    FieldElement m(1);
    for (std::size_t i = 0; i < levels.size(); ++i) m *= pow(tower_.t(levels[i]), exps[i]);
    return m;
  }

  // Sparse polynomial in the given levels with a term of total degree exactly deg.
  FieldElement sparse(const std::vector<int>& levels, int deg, int terms) {
    FieldElement out;
    while (out.is_zero()) {
      for (int k = 0; k < terms; ++k) {
        int total = k == 0 ? deg : below(deg + 1);
        std::vector<int> exps(levels.size());
        for (int e = 0; e < total; ++e) ++exps[static_cast<std::size_t>(below(static_cast<int>(levels.size())))];
        out += FieldElement(nonzero()) * monomial(levels, exps);
      }
    }
    return out;
  }

  FieldElement linear(const std::vector<int>& levels) {
    FieldElement out;
    while (tower_.is_constant(out)) {
      out = FieldElement(below(7) - 3);
      for (int l : levels) out += FieldElement(below(7) - 3) * tower_.t(l);
    }
    return out;
  }

  FieldElement dense_x(int deg) {
    FieldElement out;
    for (int k = 0; k < deg; ++k) out += FieldElement(below(19) - 9) * pow(tower_.t(0), k);
    return out + FieldElement(nonzero()) * pow(tower_.t(0), deg);
  }

 private:
  std::mt19937_64 rng_;
  const Tower& tower_;
};

void exponents(int vars, int max_total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= max_total; ++e) {
    cur.push_back(e);
    exponents(vars, max_total - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> dense_support(int vars, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponents(vars, total, cur, out);
  return out;
}

FieldElement generate_one(Generator& gen, const BenchSuite& spec, const Tower& tower) {
  const std::vector<int> lower{0, 1, 2};
  FieldElement p;
  switch (spec.suite) {
    case 1:
      for (int k = 0; k <= spec.size; ++k) {
        FieldElement c = gen.sparse(lower, spec.coefficient_degree, 3) / gen.sparse(lower, spec.coefficient_degree, 3);
        p += c * pow(tower.t(3), k);
      }
      break;
    case 2:
      for (int k = 0; k <= spec.size; ++k) p += gen.linear(lower) / gen.linear(lower) * pow(tower.t(3), k);
      break;
    case 3:
      for (const auto& e : dense_support(3, spec.size)) {
        FieldElement c = gen.dense_x(spec.coefficient_degree) / gen.dense_x(spec.coefficient_degree);
        p += c * gen.monomial({1, 2, 3}, e);
      }
      break;
    case 4:
      for (const auto& e : dense_support(4, spec.size)) p += FieldElement(gen.nonzero()) * gen.monomial({0, 1, 2, 3}, e);
      break;
    default:
      raise(ErrorCode::kInvalidArgument, "suite must be 1, 2, 3 or 4");
  }
  return p;
}

}  // namespace

Tower bench_tower() {
  TowerSpec spec;
  spec.levels = {{"t1", "1/x", std::nullopt}, {"t2", "1/(x+1)", std::nullopt}, {"t3", "1/(x*t1)", std::nullopt}};
  return Tower::build(spec);
}

std::vector<BenchItem> generate_suite(const BenchSuite& spec, const Tower& tower) {
  if (spec.suite < 1 || spec.suite > 4) raise(ErrorCode::kInvalidArgument, "suite must be 1, 2, 3 or 4");
  if (spec.size < 0 || spec.count < 0) raise(ErrorCode::kInvalidArgument, "size and count must be non-negative");
  if (tower.height() < 3) raise(ErrorCode::kInvalidTower, "bench suites need three tower levels");
  Generator gen(spec, tower);
  std::vector<BenchItem> items;
  for (int i = 0; i < spec.count; ++i) {
    FieldElement p = generate_one(gen, spec, tower);
    items.push_back(BenchItem{p, tower.derivative(p)});
  }
  return items;
}

std::vector<BenchRow> run_bench(const BenchSuite& spec, const Tower& tower, int jobs) {
  std::vector<BenchItem> items = generate_suite(spec, tower);
  const BasisMode modes[] = {BasisMode::kRecurrence, BasisMode::kNaive};
  std::vector<BenchRow> rows(items.size() * 2);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      for (std::size_t m = 0; m < 2; ++m) {
        auto start = std::chrono::steady_clock::now();
        RPair rp = complete_reduce(items[i].integrand, tower, modes[m]);
        auto stop = std::chrono::steady_clock::now();
        BenchRow& row = rows[i * 2 + m];
        row.suite = spec.suite;
        row.size = spec.size;
        row.seed = spec.seed;
        row.index = static_cast<int>(i);
        row.mode = modes[m];
        row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        row.remainder_zero = rp.r.is_zero();
        row.verified = tower.derivative(rp.g) + rp.r == items[i].integrand;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return rows;
}

std::string mode_name(BasisMode mode) { return mode == BasisMode::kNaive ? "naive" : "recurrence"; }

std::string bench_csv_header() { return "suite,size,seed,index,verified,remainder_zero,millis,mode"; }

std::string bench_csv_row(const BenchRow& row) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << row.suite << ',' << row.size << ',' << row.seed << ',' << row.index << ','
     << (row.verified ? "true" : "false") << ',' << (row.remainder_zero ? "true" : "false") << ',' << row.millis
     << ',' << mode_name(row.mode);
  return os.str();
}

std::string bench_markdown(const std::vector<BenchRow>& rows) {
  struct Acc {
    int items = 0;
    int verified = 0;
    double millis = 0;
  };
  std::map<std::tuple<int, int, std::string>, Acc> groups;
  for (const auto& r : rows) {
    Acc& a = groups[{r.suite, r.size, mode_name(r.mode)}];
    ++a.items;
    a.verified += r.verified && r.remainder_zero ? 1 : 0;
    a.millis += r.millis;
  }
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "| suite | size | mode | items | verified | mean ms |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& [key, a] : groups) {
    os << "| " << std::get<0>(key) << " | " << std::get<1>(key) << " | " << std::get<2>(key) << " | " << a.items
       << " | " << a.verified << "/" << a.items << " | " << (a.items ? a.millis / a.items : 0.0) << " |\n";
  }
  return os.str();
}

}  // namespace primtower
