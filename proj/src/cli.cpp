#include "primtower/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primtower/bench.hpp"
#include "primtower/elementary.hpp"
#include "primtower/errors.hpp"
#include "primtower/expr.hpp"
#include "primtower/reduction.hpp"
#include "primtower/telescoper.hpp"

namespace primtower {

namespace {

struct Options {
  std::string tower_file;
  std::string format = "plain";
  std::string mode = "recurrence";
  int m_max = 6;
  std::uint64_t seed = 1;
  std::string expr;
  int suite = 1;
  int size = 1;
  int count = 3;
  int coefficient_degree = 5;
  int jobs = 1;
  std::string csv_file;
  std::string markdown_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::kIo, "cannot write " + path);
  out << text;
}

Tower load_tower(const Options& o) {
  if (o.tower_file.empty()) raise(ErrorCode::kInvalidArgument, "--tower is required");
  return Tower::build(TowerSpec::from_json(read_file(o.tower_file)));
}

Format format_of(const Options& o) {
  auto f = format_from_string(o.format);
  if (!f) raise(ErrorCode::kInvalidArgument, "unknown format '" + o.format + "'");
  return *f;
}

BasisMode mode_of(const Options& o) {
  if (o.mode == "recurrence") return BasisMode::kRecurrence;
  if (o.mode == "naive") return BasisMode::kNaive;
  raise(ErrorCode::kInvalidArgument, "unknown mode '" + o.mode + "'");
}

FieldElement parse_expr(const Tower& tower, const Options& o) {
  if (o.expr.empty()) raise(ErrorCode::kInvalidArgument, "missing expression");
  return parse_element(o.expr, symbol_table(tower.variable_names()));
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  FieldElement f = parse_expr(tower, o);
  RPair rp = complete_reduce(f, tower, mode_of(o));
  auto names = tower.variable_names();
  switch (format_of(o)) {
    case Format::kJson:
      out << nlohmann::json{{"g", render(rp.g, names)},
                            {"remainder", render(rp.r, names)},
                            {"integrable", rp.r.is_zero()}}
                 .dump()
          << "\n";
      break;
    case Format::kLatex:
      out << "g = " << render(rp.g, names, Format::kLatex) << "\n";
      out << "r = " << render(rp.r, names, Format::kLatex) << "\n";
      break;
    case Format::kPlain:
      out << "g: " << render(rp.g, names) << "\n";
      out << "remainder: " << render(rp.r, names) << "\n";
      out << "integrable: " << (rp.r.is_zero() ? "true" : "false") << "\n";
      break;
  }
  return 0;
}

int cmd_integrate(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  FieldElement f = parse_expr(tower, o);
  RPair rp = complete_reduce(f, tower, mode_of(o));
  auto names = tower.variable_names();
  const bool ok = rp.r.is_zero();
  FieldElement g = drop_constant_term(rp.g, tower);
  switch (format_of(o)) {
    case Format::kJson:
      out << nlohmann::json{{"integrable", ok},
                            {"integral", ok ? nlohmann::json(render(g, names)) : nlohmann::json(nullptr)},
                            {"remainder", render(rp.r, names)}}
                 .dump()
          << "\n";
      break;
    case Format::kLatex:
      out << (ok ? render(g, names, Format::kLatex) : "\\text{not integrable in the tower}") << "\n";
      break;
    case Format::kPlain:
      if (ok) {
        out << render(g, names) << "\n";
      } else {
        out << "not integrable in the tower (remainder: " << render(rp.r, names) << ")\n";
      }
      break;
  }
  return ok ? 0 : 1;
}

int cmd_is_integrable(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  const bool ok = complete_reduce(parse_expr(tower, o), tower, mode_of(o)).r.is_zero();
  if (format_of(o) == Format::kJson) {
    out << nlohmann::json{{"integrable", ok}}.dump() << "\n";
  } else {
    out << (ok ? "true" : "false") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_elementary(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  ElementaryResult res = elementary_integrate(parse_expr(tower, o), tower);
  Format fmt = format_of(o);
  if (fmt == Format::kJson) {
    out << res.to_json(tower) << "\n";
  } else if (res.integral) {
    out << res.integral->render(tower, fmt) << "\n";
  } else {
    out << "not elementary\n";
  }
  return 0;
}

int cmd_telescope(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  TelescopeResult res = telescope(parse_expr(tower, o), tower, o.m_max);
  Format fmt = format_of(o);
  auto names = tower.variable_names();
  if (fmt == Format::kJson) {
    out << res.to_json(tower) << "\n";
  } else if (res.telescoper) {
    out << "L: " << res.telescoper->render_operator(tower, fmt) << "\n";
    out << "certificate: " << render(res.telescoper->certificate, names, fmt) << "\n";
  } else {
    out << "no telescoper up to order " << res.m_max << "\n";
  }
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  Tower tower = load_tower(o);
  auto names = tower.variable_names();
  nlohmann::json doc;
  doc["valid"] = true;
  doc["levels"] = nlohmann::json::array();
  for (int i = 1; i <= tower.height(); ++i) {
    const auto& a = tower.associated(i);
    doc["levels"].push_back({{"name", tower.name_of_var(tower.var_of_level(i))},
                             {"derivative", render(tower.t_derivative(i), names)},
                             {"lambda", render(a.lambda, names)},
                             {"phi", render(a.phi_tp, names)},
                             {"theta", render(a.theta.value(tower), names)},
                             {"c", render(a.c, names)}});
  }
  if (!o.expr.empty()) {
    FieldElement f = parse_expr(tower, o);
    doc["expression"] = {{"value", render(f, names)}, {"level", tower.level_of(f)}};
  }
  if (format_of(o) == Format::kJson) {
    out << doc.dump() << "\n";
    return 0;
  }
  out << "valid tower over " << tower.base_name() << " with " << tower.height() << " level(s)\n";
  for (const auto& l : doc["levels"]) {
    out << l["name"].get<std::string>() << "' = " << l["derivative"].get<std::string>()
        << "  (lambda: " << l["lambda"].get<std::string>() << ", phi: " << l["phi"].get<std::string>() << ")\n";
  }
  if (doc.contains("expression")) {
    out << "expression: " << doc["expression"]["value"].get<std::string>() << " (level "
        << doc["expression"]["level"].get<int>() << ")\n";
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  BenchSuite spec;
  spec.suite = o.suite;
  spec.size = o.size;
  spec.seed = o.seed;
  spec.count = o.count;
  spec.coefficient_degree = o.coefficient_degree;
  Tower tower = bench_tower();
  std::vector<BenchRow> rows = run_bench(spec, tower, o.jobs);
  std::string csv = bench_csv_header() + "\n";
  for (const auto& r : rows) csv += bench_csv_row(r) + "\n";
  if (o.csv_file.empty()) {
    out << csv;
  } else {
    write_file(o.csv_file, csv);
  }
  std::string md = bench_markdown(rows);
  if (o.markdown_file.empty()) {
    out << "\n" << md;
  } else {
    write_file(o.markdown_file, md);
  }
  for (const auto& r : rows) {
    if (!r.verified || !r.remainder_zero) return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complete reduction and integration in primitive towers"};
  app.require_subcommand(1);
  auto common = [&o](CLI::App* sub, bool expr) {
    sub->add_option("--tower", o.tower_file, "tower spec JSON file");
    sub->add_option("--format", o.format, "plain, json or latex");
    sub->add_option("--mode", o.mode, "recurrence or naive basis");
    if (expr) sub->add_option("expr", o.expr, "expression");
  };
  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Command commands[] = {
      {"reduce", "complete reduction f = g' + r", cmd_reduce},
      {"integrate", "integral in the tower, if any", cmd_integrate},
      {"is-integrable", "exit 0 iff f has an integral in the tower", cmd_is_integrable},
      {"elementary", "elementary integral or a non-elementarity certificate", cmd_elementary},
      {"telescope", "telescoper in D_x", cmd_telescope},
      {"validate", "check a tower spec", cmd_validate},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub, true);
    if (std::string(c.name) == "telescope") sub->add_option("--m-max", o.m_max, "largest order tried");
    subs.emplace_back(sub, c.fn);
  }
  CLI::App* bench = app.add_subcommand("bench", "generate and reduce a benchmark suite");
  bench->add_option("--suite", o.suite, "suite 1-4");
  bench->add_option("--size", o.size, "size parameter");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--count", o.count, "integrands per suite");
  bench->add_option("--coefficient-degree", o.coefficient_degree, "degree of random coefficients");
  bench->add_option("--jobs", o.jobs, "worker threads");
  bench->add_option("--csv", o.csv_file, "write CSV here instead of stdout");
  bench->add_option("--markdown", o.markdown_file, "write the markdown table here");
  subs.emplace_back(bench, cmd_bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) return fn(o, out);
    }
  } catch (const Error& e) {
    if (o.format == "json") {
      out << nlohmann::json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    }
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace primtower
