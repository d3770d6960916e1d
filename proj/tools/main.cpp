// chowlaff: batch front-end for the F_q[x] Moebius autocorrelation library.
//
// Subcommands:
//   corr      one autocorrelation value, both computation routes
//   sweep     CSV of correlation values and bounds across a q list
//   badset    JSON bad-set classification report for one spec
//   verify    field-parameterized identity suite (pass/fail table)
//   selftest  the curated acceptance matrix
//
// Exit codes: 0 ok, 1 failed verification, 2 bad configuration, 3 budget.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chowlaff/badset.hpp"
#include "chowlaff/chowla.hpp"
#include "chowlaff/mobius.hpp"
#include "chowlaff/selftest.hpp"
#include "json.hpp"

using namespace chowlaff;
using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string output;  // empty = stdout
  std::string format;  // per-command default when empty
  std::uint32_t p = 3;
  std::uint32_t k = 1;
  int n = 2;
  int r = 2;
  std::vector<std::string> alpha;  // coefficient index lists, e.g. "1,0,2"
  std::string eps;                 // e.g. "1,2"
  std::vector<std::uint32_t> q_list;
  int chosen_i = -1;  // default: smallest index with odd eps
  bool timings = false;
  std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> alpha_by_q;
};

std::vector<std::uint32_t> parse_u32_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) fail(errc::invalid_spec, "empty entry in list '" + s + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

std::vector<int> parse_eps(const std::string& s) {
  std::vector<int> out;
  for (std::uint32_t v : parse_u32_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

void load_config(const std::string& path, Options& o) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_spec, "cannot open config file " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    fail(errc::invalid_spec, std::string("config parse error: ") + e.what());
  }
  if (cfg.contains("seed")) o.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("workers")) o.workers = cfg["workers"].get<int>();
  if (cfg.contains("budget")) o.budget = cfg["budget"].get<std::uint64_t>();
  if (cfg.contains("output")) o.output = cfg["output"].get<std::string>();
  if (cfg.contains("format")) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("p")) o.p = cfg["p"].get<std::uint32_t>();
  if (cfg.contains("k")) o.k = cfg["k"].get<std::uint32_t>();
  if (cfg.contains("n")) o.n = cfg["n"].get<int>();
  if (cfg.contains("r")) o.r = cfg["r"].get<int>();
  if (cfg.contains("eps")) {
    std::string s;
    for (const auto& v : cfg["eps"]) s += (s.empty() ? "" : ",") + std::to_string(v.get<int>());
    o.eps = s;
  }
  if (cfg.contains("alpha")) {
    o.alpha.clear();
    for (const auto& a : cfg["alpha"]) {
      std::string s;
      for (const auto& v : a) s += (s.empty() ? "" : ",") + std::to_string(v.get<std::uint32_t>());
      o.alpha.push_back(s.empty() ? "0" : s);
    }
  }
  if (cfg.contains("q")) o.q_list = cfg["q"].get<std::vector<std::uint32_t>>();
  if (cfg.contains("chosen_i")) o.chosen_i = cfg["chosen_i"].get<int>();
  if (cfg.contains("timings")) o.timings = cfg["timings"].get<bool>();
  if (cfg.contains("alpha_by_q"))
    for (const auto& [qs, lists] : cfg["alpha_by_q"].items()) {
      std::vector<std::vector<std::uint32_t>> shifts;
      for (const auto& a : lists) shifts.push_back(a.get<std::vector<std::uint32_t>>());
      o.alpha_by_q[static_cast<std::uint32_t>(std::stoul(qs))] = std::move(shifts);
    }
}

std::vector<Shift> build_shifts(const FieldPtr& field, const Options& o) {
  if (o.alpha.empty()) fail(errc::invalid_spec, "at least one --alpha required");
  std::vector<int> eps = o.eps.empty() ? std::vector<int>(o.alpha.size(), 1) : parse_eps(o.eps);
  if (eps.size() != o.alpha.size())
    fail(errc::invalid_spec, "need one eps per alpha (got " + std::to_string(eps.size()) +
                                 " for " + std::to_string(o.alpha.size()) + ")");
  std::vector<Shift> shifts;
  for (std::size_t j = 0; j < o.alpha.size(); ++j)
    shifts.push_back({Poly::from_indices(field, parse_u32_list(o.alpha[j])), eps[j]});
  return shifts;
}

std::size_t pick_chosen_i(const CorrelationSpec& spec, int override_i) {
  if (override_i >= 0) {
    if (override_i >= spec.r() || spec.shifts()[override_i].eps % 2 == 0)
      fail(errc::invalid_spec, "chosen_i must name a shift with odd eps");
    return static_cast<std::size_t>(override_i);
  }
  for (std::size_t i = 0; i < spec.shifts().size(); ++i)
    if (spec.shifts()[i].eps % 2 == 1) return i;
  fail(errc::invalid_spec, "no shift with odd eps");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) fail(errc::invalid_spec, "cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_corr(const Options& o) {
  FieldPtr field = Field::make(o.p, o.k);
  CorrelationSpec spec = CorrelationSpec::make(field, o.n, build_shifts(field, o));
  CorrelationResult direct = correlation_direct(spec, o.budget, o.workers);
  CorrelationResult charsum = correlation_charsum(spec, o.budget, o.workers);
  if (direct.value != charsum.value)
    fail(errc::consistency_failure,
         "methods disagree: " + spec.str() + " direct=" + std::to_string(direct.value) +
             " charsum=" + std::to_string(charsum.value));
  Output out(o.output);
  if (o.format == "json") {
    json j{{"q", spec.q()},
           {"n", spec.n()},
           {"r", spec.r()},
           {"value", direct.value},
           {"normalized_num", direct.num},
           {"normalized_den", direct.den},
           {"bound", static_cast<double>(direct.bound)},
           {"bound_trivial", direct.bound_trivial},
           {"summands", direct.summands},
           {"skipped", direct.skipped}};
    out.stream() << j.dump(2) << "\n";
  } else {
    char buf[64];
    out.stream() << spec.str() << "\n";
    out.stream() << "C          = " << direct.value << " (both methods)\n";
    std::snprintf(buf, sizeof buf, "%.6Lf", static_cast<long double>(direct.num) / direct.den);
    out.stream() << "C/q^n      = " << buf << " (" << direct.num << "/" << direct.den << ")\n";
    std::snprintf(buf, sizeof buf, "%.6Lf", direct.bound);
    out.stream() << "bound      = " << buf << (direct.bound_trivial ? " (trivial q^n)" : "")
                 << "\n";
    out.stream() << "summands   = " << direct.summands << ", skipped " << direct.skipped
                 << " with mu = 0\n";
  }
  return 0;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "q,n,r,C_direct,C_charsum,bound,normalized,normalized_bound,wall_ms,status\n";
  char buf[160];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%" PRIu32 ",%d,%d,%" PRId64 ",%" PRId64 ",%.6Lf,%.6Lf,%.6Lf,%" PRId64 ",%s\n",
                  r.q, r.n, r.r, r.c_direct, r.c_charsum, r.bound, r.normalized,
                  r.normalized_bound, r.wall_ms, r.status.c_str());
    os << buf;
  }
}

int cmd_sweep(const Options& o) {
  if (o.q_list.empty()) fail(errc::invalid_spec, "--q list required");
  SweepTemplate tmpl;
  tmpl.n = o.n;
  tmpl.r = o.r;
  tmpl.eps = o.eps.empty() ? std::vector<int>(o.r, 1) : parse_eps(o.eps);
  tmpl.alpha_by_q = o.alpha_by_q;
  auto rows = sweep(tmpl, o.q_list, o.budget, o.workers, o.timings);
  Output out(o.output);
  if (o.format == "json") {
    json arr = json::array();
    for (const SweepRow& r : rows)
      arr.push_back({{"q", r.q},
                     {"n", r.n},
                     {"r", r.r},
                     {"C_direct", r.c_direct},
                     {"C_charsum", r.c_charsum},
                     {"bound", static_cast<double>(r.bound)},
                     {"normalized", static_cast<double>(r.normalized)},
                     {"normalized_bound", static_cast<double>(r.normalized_bound)},
                     {"wall_ms", r.wall_ms},
                     {"status", r.status}});
    out.stream() << arr.dump(2) << "\n";
  } else {
    write_csv(out.stream(), rows);
  }
  for (const SweepRow& r : rows)
    if (r.status.rfind("error:", 0) == 0) return 1;
  return 0;
}

int cmd_badset(const Options& o) {
  FieldPtr field = Field::make(o.p, o.k);
  CorrelationSpec spec = CorrelationSpec::make(field, o.n, build_shifts(field, o));
  std::size_t i = pick_chosen_i(spec, o.chosen_i);
  BadSetReport rep = badset_scan(spec, i, o.budget, o.workers);
  json wb = json::array();
  for (const auto& [j, a] : rep.witnesses_B) wb.push_back({{"j", j}, {"a", a}});
  json per_j(json::object());
  for (std::size_t j = 0; j < rep.count_B_per_j.size(); ++j)
    if (j != rep.chosen_i) per_j[std::to_string(j)] = rep.count_B_per_j[j];
  json j{{"q", rep.q},
         {"p", field->p()},
         {"k", field->k()},
         {"n", rep.n},
         {"r", rep.r},
         {"chosen_i", rep.chosen_i},
         {"count_A", rep.count_A},
         {"count_B", rep.count_B},
         {"count_B_per_j", per_j},
         {"count_good", rep.count_good},
         {"edge_count", rep.edge_count},
         {"edge_excluded", rep.edge_excluded},
         {"bound_A", rep.bound_A},
         {"bound_B", rep.bound_B},
         {"bounds_hold", rep.bounds_hold},
         {"cover_holds", rep.cover_holds},
         {"witnesses_A", rep.witnesses_A},
         {"witnesses_B", wb}};
  Output out(o.output);
  out.stream() << j.dump(2) << "\n";
  return rep.bounds_hold && rep.cover_holds ? 0 : 1;
}

int cmd_verify(const Options& o) {
  FieldPtr field = Field::make(o.p, o.k);
  Output out(o.output);
  auto results = run_verify(out.stream(), field, o.n, o.seed, o.workers, o.budget);
  for (const CheckResult& r : results)
    if (!r.pass) return 1;
  return 0;
}

int cmd_selftest(const Options& o, const std::string& self) {
  Output out(o.output);
  auto results = run_acceptance(out.stream(), o.workers, o.budget, self);
  for (const CheckResult& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("CHOWLA_FF_BUDGET")) o.budget = std::strtoull(env, nullptr, 10);

  // The config file seeds the defaults; command-line flags win.
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") {
      try {
        load_config(argv[i + 1], o);
      } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
    }

  CLI::App app{"autocorrelation of the Moebius function over F_q[x], computed two ways"};
  app.require_subcommand(1);
  std::string config_path, q_csv;
  app.add_option("--config", config_path, "JSON config file (flags win on conflict)");
  app.add_option("--seed", o.seed, "seed for the deterministic random source");
  app.add_option("--workers", o.workers, "worker thread count");
  app.add_option("--budget", o.budget, "max summands per enumeration");
  app.add_option("--output", o.output, "output path (default stdout)");
  app.add_option("--format", o.format, "csv or json where applicable");

  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "field characteristic (odd prime)");
    cmd->add_option("--k", o.k, "extension degree");
    cmd->add_option("--n", o.n, "polynomial degree n");
  };
  auto add_shift_opts = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha,
                    "shift polynomial as comma-separated coefficient indices, lowest degree "
                    "first (repeatable)");
    cmd->add_option("--eps", o.eps, "comma-separated eps list, entries 1 or 2");
  };

  CLI::App* corr = app.add_subcommand("corr", "compute one correlation value, both routes");
  corr->fallthrough();
  add_field_opts(corr);
  add_shift_opts(corr);

  CLI::App* sw = app.add_subcommand("sweep", "CSV of correlations across a q list");
  sw->fallthrough();
  sw->add_option("--q", q_csv, "comma-separated odd prime powers");
  sw->add_option("--n", o.n, "polynomial degree n");
  sw->add_option("--r", o.r, "number of shifts (default constants 0..r-1)");
  sw->add_option("--eps", o.eps, "comma-separated eps list");
  sw->add_flag("--timings", o.timings, "fill the wall_ms column (breaks byte-determinism)");

  CLI::App* bs = app.add_subcommand("badset", "bad-set classification report (JSON)");
  bs->fallthrough();
  add_field_opts(bs);
  add_shift_opts(bs);
  bs->add_option("--chosen-i", o.chosen_i, "index with odd eps (default: smallest)");

  CLI::App* vf = app.add_subcommand("verify", "field-parameterized identity suite");
  vf->fallthrough();
  add_field_opts(vf);

  app.add_subcommand("selftest", "run the curated acceptance matrix")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (!q_csv.empty()) o.q_list = parse_u32_list(q_csv);
    if (app.got_subcommand("corr")) return cmd_corr(o);
    if (app.got_subcommand("sweep")) return cmd_sweep(o);
    if (app.got_subcommand("badset")) return cmd_badset(o);
    if (app.got_subcommand("verify")) return cmd_verify(o);
    if (app.got_subcommand("selftest")) return cmd_selftest(o, argv[0]);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case errc::budget_exceeded:
        return 3;
      case errc::consistency_failure:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
