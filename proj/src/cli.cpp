#include "qcx/cli.hpp"

#include "qcx/errors.hpp"
#include "qcx/explorer.hpp"
#include "qcx/pipeline.hpp"
#include "qcx/reference.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qcx {

namespace {

using nlohmann::json;

struct Common {
  std::string json_path;
  unsigned threads = 0;
  bool allow_long = false;
  std::string budget;
};

void add_common(CLI::App* cmd, Common& c, bool with_eval = true) {
  cmd->add_option("--json", c.json_path, "Write the JSON document to PATH ('-' for stdout)");
  if (!with_eval) return;
  cmd->add_option("--threads", c.threads, "Worker threads for enumeration (0 = all cores)");
  cmd->add_flag("--allow-long", c.allow_long, "Run enumerations above the long-run threshold");
  cmd->add_option("--budget", c.budget, "Message budget for exhaustive enumeration");
}

BigInt parse_budget(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw SpecError("bad-budget", "--budget must be a nonnegative decimal integer");
  return BigInt(s);
}

EvalOptions eval_options(const Common& c) {
  EvalOptions o;
  if (!c.budget.empty()) o.budget = parse_budget(c.budget);
  o.allow_long = c.allow_long;
  o.threads = c.threads;
  return o;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("io", "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("bad-json", path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  f << j.dump(2) << "\n";
  if (!f) throw SpecError("io", "cannot write " + path);
}

json error_object(const std::string& kind, const Error& e) {
  json j{{"error", {{"kind", kind}, {"code", e.code()}, {"message", e.what()}}}};
  if (auto* b = dynamic_cast<const BudgetExceeded*>(&e)) j["error"]["required"] = b->required();
  return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

int cmd_verify(const std::string& path, const Common& c, bool find_x, std::ostream& out) {
  const CodeSpec spec = CodeSpec::from_json(read_json_file(path));
  EvalOptions o = eval_options(c);
  o.find_missing_x = find_x;
  const Report r = evaluate(spec, o);
  if (c.json_path != "-") out << r.to_text();
  if (!c.json_path.empty()) write_json(r.to_json(), c.json_path, out);
  return kExitOk;
}

int cmd_extend(const std::string& path, const Common& c, unsigned columns, const std::string& emit, std::ostream& out) {
  CodeSpec spec = CodeSpec::from_json(read_json_file(path));
  if (columns == 0) columns = spec.x2 || spec.mode == SpecMode::ExtendTwo ? 2 : 1;
  spec.mode = columns == 2 ? SpecMode::ExtendTwo : SpecMode::ExtendOne;
  if (columns == 1) spec.x2.reset();
  EvalOptions o = eval_options(c);
  o.find_missing_x = true;
  const Report r = evaluate(spec, o);
  if (!emit.empty()) {
    json done = r.to_json(false)["spec"];
    done["x1"] = r.to_json(false)["extension"]["x1"];
    if (columns == 2) done["x2"] = r.to_json(false)["extension"]["x2"];
    write_json(done, emit, out);
  }
  if (c.json_path != "-") out << r.to_text();
  if (!c.json_path.empty()) write_json(r.to_json(), c.json_path, out);
  return kExitOk;
}

int cmd_gv(std::size_t n, std::size_t k, std::size_t d, unsigned q, const std::string& json_path, std::ostream& out) {
  if (q < 2) throw SpecError("bad-q", "q must be at least 2");
  const GvVerdict v = gv_bound(n, k, d, q);
  if (json_path != "-") {
    out << v.describe() << "\n";
    if (v.applicable) out << "lhs " << v.lhs << ", rhs " << v.rhs << "\n";
  }
  if (!json_path.empty()) {
    json j{{"schema", 1}, {"n", n}, {"k", k}, {"d", d}, {"q", q}, {"verdict", v.describe()}};
    j.update(v.to_json());
    write_json(j, json_path, out);
  }
  return kExitOk;
}

int cmd_factor(unsigned q, std::size_t n, bool self_orth, const std::string& json_path, std::ostream& out) {
  if (q != 2 && q != 3 && q != 9) throw SpecError("bad-q", "q must be 2, 3 or 9");
  if (n == 0) throw SpecError("bad-n", "n must be positive");
  const FieldPtr F = field_make(q);
  const auto factors = factor_xn_minus_1(F, n);
  json j{{"schema", 1}, {"q", q}, {"Q", F->order()}, {"n", n}, {"factors", json::array()}};
  const bool text = json_path != "-";
  if (text) out << "x^" << n << "-1 over GF(" << F->order() << "): " << factors.size() << " irreducible factors\n";
  for (const auto& f : factors) {
    if (text) {
      out << "  " << f.poly.to_string() << "  (degree " << f.poly.degree() << ", coset {";
      for (std::size_t i = 0; i < f.coset.size(); ++i) out << (i ? "," : "") << f.coset[i];
      out << "})\n";
    }
    j["factors"].push_back({{"poly", f.poly.to_string()}, {"compact", render_compact(f.poly)}, {"coset", f.coset}});
  }
  if (self_orth) {
    const auto gs = enumerate_self_orthogonal_g(F, n);
    if (text) out << gs.size() << " divisors g with dual_gen(g) | g:\n";
    j["self_orthogonal_g"] = json::array();
    for (const auto& g : gs) {
      if (text) out << "  deg " << g.degree() << "  " << render_compact(g) << "\n";
      j["self_orthogonal_g"].push_back({{"degree", g.degree()}, {"compact", render_compact(g)}});
    }
  }
  if (!json_path.empty()) write_json(j, json_path, out);
  return kExitOk;
}

std::string row_line(const ReferenceRow& row, const RowCheck& c) {
  std::ostringstream o;
  o << std::left << std::setw(16) << c.id << std::setw(20) << c.status << std::right << std::fixed << std::setprecision(2)
    << std::setw(8) << c.seconds << "s  " << join(row.printed);
  if (c.status == "skipped (long-run)" && c.report) {
    o << "\n    cost " << c.report->cost.messages << " messages x " << c.report->code.n << " = " << c.report->cost.symbols
      << " symbol updates; --allow-long runs it";
  } else if (!c.missing.empty()) {
    o << "\n    not derived: " << join(c.missing) << "\n    " << c.detail;
  } else if (c.status != "reproduced" && !c.detail.empty()) {
    o << "\n    " << c.detail;
  }
  return o.str();
}

int cmd_table(int id, const Common& c, std::ostream& out) {
  const auto rows = reference_table(id);
  const EvalOptions o = eval_options(c);
  json j{{"schema", 1}, {"table", id}, {"rows", json::array()}};
  std::map<std::string, int> tally;
  bool all_ok = true;
  const bool text = c.json_path != "-";
  for (const auto& row : rows) {
    const RowCheck rc = check_row(row, o);
    ++tally[rc.status];
    const bool desk = is_desk_scale(row);
    if (rc.status != "reproduced" && (desk || rc.status == "mismatch" || rc.status == "error")) all_ok = false;
    if (text) out << row_line(row, rc) << "\n";
    json e{{"id", rc.id},
           {"status", rc.status},
           {"desk_scale", desk},
           {"printed", row.printed},
           {"missing", rc.missing},
           {"detail", rc.detail},
           {"seconds", rc.seconds}};
    e["derived"] = rc.report ? json(rc.report->parameter_strings()) : json::array();
    if (rc.report) e["cost"] = {{"messages", rc.report->cost.messages.str()}, {"symbols", rc.report->cost.symbols.str()}};
    j["rows"].push_back(e);
  }
  std::vector<std::string> parts;
  for (const auto& [status, n] : tally) parts.push_back(std::to_string(n) + " " + status);
  if (text) out << "table " << id << ": " << rows.size() << " rows, " << join(parts, ", ") << "\n";
  j["reproduced_all_desk_scale"] = all_ok;
  if (!c.json_path.empty()) write_json(j, c.json_path, out);
  return all_ok ? kExitOk : kExitFailed;
}

struct SearchArgs {
  std::string config, report, output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
};

int cmd_search(const SearchArgs& a, const Common& c, std::ostream& out) {
  const bool text = c.json_path != "-";
  if (!a.report.empty()) {
    const RecordSummary s = report_records(a.report);
    if (text) out << s.to_text();
    if (!c.json_path.empty()) write_json(s.to_json(), c.json_path, out);
    return kExitOk;
  }
  if (a.config.empty()) throw SpecError("missing-field", "search needs --config PATH or --report PATH");
  SearchConfig cfg = SearchConfig::from_json(read_json_file(a.config));
  if (a.seed) cfg.rng_seed = *a.seed;
  if (a.samples) cfg.max_f_samples = *a.samples;
  if (!a.output.empty()) cfg.output_path = a.output;
  if (!c.budget.empty()) cfg.enum_budget = parse_budget(c.budget);
  if (c.threads) cfg.threads = c.threads;
  json records = json::array();
  const SearchStats st = search(cfg, [&](const CodeRecord& r) {
    if (text) {
      out << (r.status == "ok" ? "" : "skipped ") << r.summary() << "  f " << r.f << "  g " << r.g;
      if (r.status != "ok") out << "  (" << r.required << " messages)";
      out << "\n";
    }
    records.push_back(r.to_json());
  });
  if (text)
    out << "search q=" << cfg.q << " n=" << cfg.n << " " << search_mode_name(cfg.mode) << ": " << st.g_count << " g, "
        << st.candidates << " candidates, " << st.evaluated << " evaluated, " << st.emitted << " emitted, " << st.skipped
        << " skipped, " << st.resumed << " resumed\n";
  if (!c.json_path.empty()) {
    json j{{"schema", 1}, {"config", cfg.to_json()}, {"records", records}};
    j["stats"] = {{"g_count", st.g_count}, {"candidates", st.candidates}, {"evaluated", st.evaluated},
                  {"emitted", st.emitted}, {"skipped", st.skipped},       {"resumed", st.resumed}};
    write_json(j, c.json_path, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-cyclic codes over GF(q^2): enumeration, duals and quantum code parameters", "qcx"};
  app.require_subcommand(1);

  Common common;
  std::string spec_path;
  bool find_x = false;
  auto* verify = app.add_subcommand("verify", "Evaluate a code spec and report its parameters");
  verify->add_option("spec", spec_path, "Spec JSON file")->required();
  verify->add_flag("--find-x", find_x, "Search for extension rows the spec leaves out");
  add_common(verify, common);

  unsigned columns = 0;
  std::string emit;
  auto* extend = app.add_subcommand("extend", "Find extension rows for a spec and evaluate the extended code");
  extend->add_option("spec", spec_path, "Spec JSON file")->required();
  extend->add_option("--columns", columns, "Extension columns (1 or 2)")->check(CLI::Range(1, 2));
  extend->add_option("--emit-spec", emit, "Write the completed spec to PATH");
  add_common(extend, common);

  std::size_t n = 0, k = 0, d = 0;
  unsigned q = 2;
  auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov existence test for [[n,k,d]]_q");
  gv->add_option("--q", q, "Quantum alphabet size")->required();
  gv->add_option("--n", n, "Length")->required();
  gv->add_option("--k", k, "Dimension")->required();
  gv->add_option("--d", d, "Minimum distance")->required();
  add_common(gv, common, false);

  bool self_orth = false;
  auto* factor = app.add_subcommand("factor", "Factor x^n - 1 over GF(q^2)");
  factor->add_option("--q", q, "q in {2, 3, 9}")->required();
  factor->add_option("--n", n, "n coprime to q")->required();
  factor->add_flag("--self-orthogonal", self_orth, "Also list the divisors g with dual_gen(g) | g");
  add_common(factor, common, false);

  SearchArgs sa;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  auto* search_cmd = app.add_subcommand("search", "Random search over f for every qualifying g");
  search_cmd->add_option("--config", sa.config, "Search config JSON");
  search_cmd->add_option("--report", sa.report, "Summarize a records file instead of searching");
  search_cmd->add_option("--output", sa.output, "Records file (JSONL, appended)");
  auto* seed_opt = search_cmd->add_option("--seed", seed, "RNG seed");
  auto* samples_opt = search_cmd->add_option("--samples", samples, "f samples per g");
  add_common(search_cmd, common);

  int table_id = 0;
  auto* table = app.add_subcommand("table", "Re-derive the built-in reference rows of one table");
  table->add_option("--id", table_id, "Table 1..6")->required();
  add_common(table, common);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSpec;
  }

  try {
    if (*verify) return cmd_verify(spec_path, common, find_x, out);
    if (*extend) return cmd_extend(spec_path, common, columns, emit, out);
    if (*gv) return cmd_gv(n, k, d, q, common.json_path, out);
    if (*factor) return cmd_factor(q, n, self_orth, common.json_path, out);
    if (*search_cmd) {
      if (*seed_opt) sa.seed = seed;
      if (*samples_opt) sa.samples = samples;
      return cmd_search(sa, common, out);
    }
    if (*table) return cmd_table(table_id, common, out);
  } catch (const SpecError& e) {
    err << error_object("spec", e).dump() << "\n";
    return kExitSpec;
  } catch (const BudgetExceeded& e) {
    err << error_object("budget", e).dump() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    err << error_object("precondition", e).dump() << "\n";
    return kExitPrecondition;
  }
  return kExitSpec;
}

}  // namespace qcx
