#include "qcx/explorer.hpp"

#include "qcx/errors.hpp"
#include "qcx/reference.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace qcx {

namespace {

struct Factorization {
  std::vector<IrreducibleFactor> factors;
  std::vector<std::size_t> partner;  // factor holding -q * (coset of i)
};

Factorization factorize(const FieldPtr& field, std::size_t n, std::uint64_t max_combinations) {
  Factorization fz{factor_xn_minus_1(field, n), {}};
  const std::size_t r = fz.factors.size();
  if (r >= 63 || (std::uint64_t(1) << r) > max_combinations)
    throw BudgetExceeded("x^" + std::to_string(n) + "-1 has " + std::to_string(r) + " irreducible factors",
                         (BigInt(1) << r).str());
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t s : fz.factors[i].coset) owner[s] = i;
  const std::size_t q = field->q();
  for (const auto& f : fz.factors) {
    const std::size_t s = f.coset.front();
    fz.partner.push_back(owner[(n - (q * s) % n) % n]);
  }
  return fz;
}

Poly product(const Factorization& fz, std::uint64_t mask, const FieldPtr& field) {
  Poly g = Poly::monomial(field, 0);
  for (std::size_t i = 0; i < fz.factors.size(); ++i)
    if (mask >> i & 1) g = g * fz.factors[i].poly;
  return g;
}

void sort_polys(std::vector<Poly>& gs) {
  std::stable_sort(gs.begin(), gs.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return render_compact(a) < render_compact(b);
  });
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream o;
  o << std::hex;
  o.width(16);
  o.fill('0');
  o << v;
  return o.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// every entry, no trimming, so the spec parser sees exactly n of them
std::string vector_text(const Field& F, const std::vector<Elem>& v) {
  std::string s;
  for (Elem e : v) {
    if (F.order() > 9 && !s.empty()) s += ',';
    s += F.order() > 9 ? F.to_string(e) : std::string(1, char('0' + e.digit));
  }
  return s;
}

// "[[47,23,6]]_2" -> "[[47,23,"
std::string shape_prefix(const std::string& s) {
  const auto a = s.find(',');
  if (a == std::string::npos) return s;
  const auto b = s.find(',', a + 1);
  return b == std::string::npos ? s : s.substr(0, b + 1);
}

}  // namespace

std::vector<Poly> enumerate_self_orthogonal_g(const FieldPtr& field, std::size_t n, std::uint64_t max_combinations) {
  const Factorization fz = factorize(field, n, max_combinations);
  const std::size_t r = fz.factors.size();
  std::vector<std::size_t> deg(r);
  for (std::size_t i = 0; i < r; ++i) deg[i] = fz.factors[i].coset.size();
  std::vector<Poly> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << r); ++mask) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) d += deg[i];
    if (2 * d < n) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i)
      if (!(mask >> i & 1) && !(mask >> fz.partner[i] & 1)) ok = false;
    if (!ok) continue;
    Poly g = product(fz, mask, field);
    if (!divides(dual_gen(g, n), g)) throw std::logic_error("coset test and dual_gen divisibility disagree");
    out.push_back(std::move(g));
  }
  sort_polys(out);
  return out;
}

std::vector<Poly> enumerate_divisors(const FieldPtr& field, std::size_t n, std::uint64_t max_combinations) {
  const Factorization fz = factorize(field, n, max_combinations);
  const std::uint64_t full = (std::uint64_t(1) << fz.factors.size()) - 1;
  std::vector<Poly> out;
  for (std::uint64_t mask = 1; mask < full; ++mask) out.push_back(product(fz, mask, field));
  sort_polys(out);
  return out;
}

std::string search_mode_name(SearchMode m) { return m == SearchMode::Qecc ? "qecc" : "eaqecc"; }

SearchMode parse_search_mode(const std::string& s) {
  if (s == "qecc") return SearchMode::Qecc;
  if (s == "eaqecc") return SearchMode::Eaqecc;
  throw SpecError("bad-mode", "search mode must be qecc or eaqecc, got \"" + s + "\"");
}

SearchConfig SearchConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("bad-config", "search config must be a JSON object");
  auto count = [&](const char* key, auto& dst) {
    if (!j.contains(key)) return;
    const auto& v = j[key];
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw SpecError(std::string("bad-") + key, std::string(key) + " must be a nonnegative integer");
    dst = v.get<std::remove_reference_t<decltype(dst)>>();
  };
  SearchConfig c;
  if (!j.contains("q") || !j.contains("n")) throw SpecError("missing-field", "search config needs q and n");
  count("q", c.q);
  if (c.q != 2 && c.q != 3 && c.q != 9) throw SpecError("bad-q", "q must be 2, 3 or 9");
  count("n", c.n);
  if (c.n < 2 || c.n > 4096) throw SpecError("bad-n", "n must be in 2..4096");
  count("max_f_samples", c.max_f_samples);
  if (j.contains("rng_seed")) {
    if (!j["rng_seed"].is_number_unsigned()) throw SpecError("bad-rng_seed", "rng_seed must be a 64-bit unsigned integer");
    c.rng_seed = j["rng_seed"].get<std::uint64_t>();
  }
  if (j.contains("enum_budget")) {
    const auto& v = j["enum_budget"];
    std::string s = v.is_number_unsigned() ? std::to_string(v.get<std::uint64_t>()) : v.is_string() ? v.get<std::string>() : "";
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("bad-enum_budget", "enum_budget must be a nonnegative decimal integer");
    c.enum_budget = BigInt(s);
  }
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw SpecError("bad-mode", "mode must be a string");
    c.mode = parse_search_mode(j["mode"].get<std::string>());
  }
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) throw SpecError("bad-output_path", "output_path must be a string");
    c.output_path = j["output_path"].get<std::string>();
  }
  if (j.contains("f_max_degree")) {
    std::size_t d = 0;
    count("f_max_degree", d);
    c.f_max_degree = d;
  }
  if (j.contains("g_degrees")) {
    if (!j["g_degrees"].is_array()) throw SpecError("bad-g_degrees", "g_degrees must be an array of integers");
    for (const auto& v : j["g_degrees"]) {
      if (!v.is_number_unsigned()) throw SpecError("bad-g_degrees", "g_degrees must be an array of integers");
      c.g_degrees.push_back(v.get<std::size_t>());
    }
  }
  count("max_combinations", c.max_combinations);
  count("threads", c.threads);
  return c;
}

nlohmann::json SearchConfig::to_json() const {
  nlohmann::json j{{"q", q},
                   {"n", n},
                   {"max_f_samples", max_f_samples},
                   {"rng_seed", rng_seed},
                   {"enum_budget", enum_budget.str()},
                   {"mode", search_mode_name(mode)},
                   {"output_path", output_path},
                   {"g_degrees", g_degrees},
                   {"max_combinations", max_combinations},
                   {"threads", threads}};
  if (f_max_degree) j["f_max_degree"] = *f_max_degree;
  return j;
}

CodeSpec CodeRecord::spec() const {
  CodeSpec s;
  s.name = "search-" + search_mode_name(mode);
  s.q = q;
  s.n = n;
  s.f = f;
  s.g = g;
  if (x1) s.x1 = *x1;
  s.mode = mode == SearchMode::Qecc ? SpecMode::ExtendOne : SpecMode::Base;
  return s;
}

std::string CodeRecord::candidate_key() const {
  return std::to_string(q) + "|" + std::to_string(n) + "|" + search_mode_name(mode) + "|" + f + "|" + g;
}

nlohmann::json CodeRecord::to_json() const {
  const bool ok = status == "ok";
  nlohmann::json j{{"schema", 1},
                   {"status", status},
                   {"q", q},
                   {"n", n},
                   {"mode", search_mode_name(mode)},
                   {"f", f},
                   {"g", g},
                   {"x1", x1 ? nlohmann::json(*x1) : nlohmann::json(nullptr)},
                   {"length", length},
                   {"k", k},
                   {"d", ok ? nlohmann::json(d) : nlohmann::json(nullptr)},
                   {"d_dual", ok ? nlohmann::json(d_dual) : nlohmann::json(nullptr)},
                   {"code", code},
                   {"dual", dual},
                   {"qecc", qecc},
                   {"eaqecc", eaqecc},
                   {"flags", {{"self_orthogonal", self_orthogonal}, {"theorem7", theorem7_ok}}},
                   {"seed", seed}};
  if (!ok) j["required"] = required;
  const std::uint64_t h = fnv1a(j.dump());
  j["timestamp"] = timestamp;
  j["hash"] = hex64(h);
  return j;
}

std::uint64_t CodeRecord::content_hash() const {
  auto j = to_json();
  j.erase("timestamp");
  j.erase("hash");
  return fnv1a(j.dump());
}

CodeRecord CodeRecord::from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& what) { return SpecError("bad-record", what); };
  if (!j.is_object()) throw bad("record is not a JSON object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw bad(std::string("missing \"") + key + "\"");
    return j[key];
  };
  auto str = [&](const char* key) {
    const auto& v = need(key);
    if (!v.is_string()) throw bad(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
  };
  auto num = [&](const char* key) {
    const auto& v = need(key);
    if (!v.is_number_unsigned()) throw bad(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::uint64_t>();
  };
  auto strings = [&](const char* key) {
    const auto& v = need(key);
    if (!v.is_array()) throw bad(std::string("\"") + key + "\" must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
      if (!e.is_string()) throw bad(std::string("\"") + key + "\" must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  };
  CodeRecord r;
  r.status = str("status");
  if (r.status != "ok" && r.status != "skipped") throw bad("status must be ok or skipped");
  r.q = static_cast<unsigned>(num("q"));
  r.n = num("n");
  try {
    r.mode = parse_search_mode(str("mode"));
  } catch (const SpecError& e) {
    throw bad(e.what());
  }
  r.f = str("f");
  r.g = str("g");
  if (!need("x1").is_null()) r.x1 = str("x1");
  r.length = num("length");
  r.k = num("k");
  if (r.status == "ok") {
    r.d = num("d");
    r.d_dual = num("d_dual");
  } else {
    r.required = str("required");
  }
  r.code = str("code");
  r.dual = str("dual");
  r.qecc = strings("qecc");
  r.eaqecc = strings("eaqecc");
  const auto& flags = need("flags");
  if (!flags.is_object() || !flags.contains("self_orthogonal") || !flags.contains("theorem7") ||
      !flags["self_orthogonal"].is_boolean() || !flags["theorem7"].is_boolean())
    throw bad("flags must hold booleans self_orthogonal and theorem7");
  r.self_orthogonal = flags["self_orthogonal"].get<bool>();
  r.theorem7_ok = flags["theorem7"].get<bool>();
  r.seed = num("seed");
  r.timestamp = str("timestamp");
  if (str("hash") != hex64(r.content_hash())) throw bad("hash does not match the record content");
  return r;
}

std::string CodeRecord::summary() const {
  std::string s = code;
  if (!qecc.empty()) s += " / " + qecc.front();
  else if (!eaqecc.empty()) s += " / " + eaqecc.front();
  return s;
}

CodeRecord make_record(const CodeSpec& spec, const Report& report, SearchMode mode, std::uint64_t seed) {
  const ParsedSpec ps = parse_spec(spec);
  const Field& F = *ps.field;
  CodeRecord r;
  r.q = spec.q;
  r.n = spec.n;
  r.mode = mode;
  r.f = render_compact(ps.f);
  r.g = render_compact(ps.g);
  if (report.extension) r.x1 = vector_text(F, report.extension->x1);
  r.length = report.code.n;
  r.k = report.code.k;
  r.self_orthogonal = report.self_orth.by_gram;
  r.theorem7_ok = report.theorem7 && report.theorem7->holds();
  r.seed = seed;
  r.timestamp = utc_now();
  if (report.status != "ok" || !report.distances_known) {
    r.status = "skipped";
    r.required = report.cost.messages.str();
    r.code = "[" + std::to_string(r.length) + "," + std::to_string(r.k) + ",?]_" + std::to_string(F.order());
    r.dual = "[" + std::to_string(r.length) + "," + std::to_string(r.length - r.k) + ",?]_" + std::to_string(F.order());
    return r;
  }
  r.d = report.code.d;
  r.d_dual = report.dual.d;
  r.code = report.code.to_string();
  r.dual = report.dual.to_string();
  for (const auto& p : report.qecc) r.qecc.push_back(p.to_string());
  for (const auto& p : report.eaqecc) r.eaqecc.push_back(p.to_string());
  return r;
}

namespace {

struct Candidate {
  CodeSpec spec;
  std::optional<CodeRecord> record;
  bool failed = false;
};

struct Frontier {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> best;  // k -> (d_dual, d)

  bool improves(const CodeRecord& r) const {
    auto it = best.find(r.k);
    if (it == best.end()) return true;
    return std::pair(r.d_dual, r.d) > it->second;
  }
  void add(const CodeRecord& r) {
    auto [it, fresh] = best.emplace(r.k, std::pair(r.d_dual, r.d));
    if (!fresh && std::pair(r.d_dual, r.d) > it->second) it->second = {r.d_dual, r.d};
  }
};

std::optional<RingPoly> sample_f(std::mt19937_64& rng, const FieldPtr& field, std::size_t n, std::size_t max_deg,
                                 const Poly& xn1) {
  std::uniform_int_distribution<unsigned> digit(0, field->order() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Elem> c(n);
    for (std::size_t i = 0; i <= max_deg && i < n; ++i) c[i] = Elem{static_cast<std::uint8_t>(digit(rng))};
    RingPoly f(field, n, c);
    if (f.is_zero()) continue;
    if (gcd(f.to_poly(), xn1).degree() == 0) return f;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> sample_x1(std::mt19937_64& rng, const QcCode& base) {
  const Field& F = *base.field();
  const auto rule = ExtensionRule::equal_p_minus_1();
  const Mat basis = base.dual_basis(1);
  std::uniform_int_distribution<unsigned> digit(0, F.order() - 1);
  for (int attempt = 0; attempt < 256 && basis.rows() > 0; ++attempt) {
    std::vector<Elem> v(basis.cols());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      const Elem m{static_cast<std::uint8_t>(digit(rng))};
      if (m.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(m, basis.at(i, j)));
    }
    if (std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_zero(); })) continue;
    if (rule_accepts(F, rule, v)) return v;
  }
  try {
    return find_extension_vector(base, 1, rule);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

SearchStats search(const SearchConfig& config, const std::function<void(const CodeRecord&)>& sink) {
  const FieldPtr field = field_make(config.q);
  const std::size_t n = config.n;
  const Poly xn1 = Poly::xn_minus_1(field, n);
  std::vector<Poly> gs = config.mode == SearchMode::Qecc ? enumerate_self_orthogonal_g(field, n, config.max_combinations)
                                                         : enumerate_divisors(field, n, config.max_combinations);
  std::erase_if(gs, [&](const Poly& g) {
    if (static_cast<std::size_t>(g.degree()) >= n) return true;
    if (config.mode == SearchMode::Qecc && g.degree() < 1) return true;
    return !config.g_degrees.empty() &&
           std::find(config.g_degrees.begin(), config.g_degrees.end(), std::size_t(g.degree())) == config.g_degrees.end();
  });

  SearchStats stats;
  stats.g_count = gs.size();
  Frontier frontier;
  std::set<std::string> done;

  if (!config.output_path.empty()) {
    std::ifstream in(config.output_path);
    std::string line;
    std::size_t lineno = 0;
    while (in && std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      CodeRecord r;
      try {
        r = CodeRecord::from_json(nlohmann::json::parse(line));
      } catch (const nlohmann::json::exception& e) {
        throw SpecError("bad-record", config.output_path + " line " + std::to_string(lineno) + ": " + e.what());
      } catch (const SpecError& e) {
        throw SpecError("bad-record", config.output_path + " line " + std::to_string(lineno) + ": " + e.what());
      }
      if (r.q != config.q || r.n != n || r.mode != config.mode) continue;
      done.insert(r.candidate_key());
      if (r.status == "ok") frontier.add(r);
      ++stats.resumed;
    }
  }
  std::ofstream out;
  if (!config.output_path.empty()) {
    out.open(config.output_path, std::ios::app);
    if (!out) throw SpecError("io", "cannot open " + config.output_path + " for appending");
  }

  // candidate list in a fixed order; each (g, sample) pair draws from its own stream
  std::vector<Candidate> cands;
  const std::size_t max_deg = std::min(config.f_max_degree.value_or(n - 1), n - 1);
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    std::set<std::string> seen;
    for (std::size_t j = 0; j < config.max_f_samples; ++j) {
      std::mt19937_64 rng(splitmix(config.rng_seed ^ splitmix(gi * 0x10000 + j)));
      auto f = sample_f(rng, field, n, max_deg, xn1);
      if (!f) continue;
      const std::string fk = render_compact(*f);
      if (!seen.insert(fk).second) continue;
      ++stats.candidates;
      Candidate c;
      c.spec.name = "search-" + search_mode_name(config.mode);
      c.spec.q = config.q;
      c.spec.n = n;
      c.spec.f = fk;
      c.spec.g = render_compact(gs[gi]);
      c.spec.mode = config.mode == SearchMode::Qecc ? SpecMode::ExtendOne : SpecMode::Base;
      CodeRecord probe;
      probe.q = config.q;
      probe.n = n;
      probe.mode = config.mode;
      probe.f = fk;
      probe.g = c.spec.g;
      if (done.count(probe.candidate_key())) continue;
      if (config.mode == SearchMode::Qecc) {
        const QcCode base = QcCode::build(*f, gs[gi]);
        auto x1 = sample_x1(rng, base);
        if (!x1) {
          ++stats.no_extension;
          continue;
        }
        c.spec.x1 = vector_text(*field, *x1);
      }
      cands.push_back(std::move(c));
    }
  }

  const unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = 4 * static_cast<std::size_t>(workers);
  for (std::size_t lo = 0; lo < cands.size(); lo += chunk) {
    const std::size_t hi = std::min(cands.size(), lo + chunk);
    std::atomic<std::size_t> next{lo};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < hi;) {
        Candidate& c = cands[i];
        try {
          EvalOptions eo;
          eo.budget = config.enum_budget;
          eo.skip_gated = true;
          eo.threads = 1;
          const Report rep = evaluate(c.spec, eo);
          c.record = make_record(c.spec, rep, config.mode, config.rng_seed);
        } catch (const Error&) {
          c.failed = true;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers && t < hi - lo; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (std::size_t i = lo; i < hi; ++i) {
      Candidate& c = cands[i];
      if (c.failed || !c.record) continue;
      ++stats.evaluated;
      const CodeRecord& r = *c.record;
      if (r.status == "ok") {
        if (!frontier.improves(r)) continue;
        frontier.add(r);
        ++stats.emitted;
      } else {
        ++stats.skipped;
      }
      if (out.is_open()) {
        out << r.to_json().dump() << '\n';
        out.flush();
        if (!out) throw SpecError("io", "write to " + config.output_path + " failed");
      }
      if (sink) sink(r);
    }
  }
  return stats;
}

RecordSummary report_records(const std::string& records_path) {
  std::ifstream in(records_path);
  if (!in) throw SpecError("io", "cannot read " + records_path);
  RecordSummary sum;
  std::set<std::string> keys;
  std::vector<CodeRecord> recs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      CodeRecord r = CodeRecord::from_json(nlohmann::json::parse(line));
      if (!keys.insert(r.candidate_key()).second) {
        ++sum.duplicates;
        continue;
      }
      if (r.status != "ok") {
        ++sum.skipped;
        continue;
      }
      recs.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      sum.rejected.push_back("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const SpecError& e) {
      sum.rejected.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  using Key = std::tuple<unsigned, std::size_t, int, std::size_t>;
  std::map<Key, CodeRecord> best;
  for (auto& r : recs) {
    const Key key{r.q, r.n, static_cast<int>(r.mode), r.k};
    auto it = best.find(key);
    if (it == best.end()) best.emplace(key, r);
    else if (std::pair(r.d_dual, r.d) > std::pair(it->second.d_dual, it->second.d)) it->second = r;
  }
  for (auto& [key, r] : best) {
    SummaryRow row{r, std::nullopt, {}};
    std::vector<std::string> mine{r.code};
    mine.insert(mine.end(), r.qecc.begin(), r.qecc.end());
    mine.insert(mine.end(), r.eaqecc.begin(), r.eaqecc.end());
    const SpecMode want = r.mode == SearchMode::Qecc ? SpecMode::ExtendOne : SpecMode::Base;
    for (const auto& ref : reference_rows()) {
      if (ref.spec.q != r.q || ref.spec.n != r.n || ref.spec.mode != want) continue;
      const bool match = std::any_of(ref.printed.begin(), ref.printed.end(), [&](const std::string& p) {
        return std::any_of(mine.begin(), mine.end(), [&](const std::string& m) { return shape_prefix(m) == shape_prefix(p); });
      });
      if (!match) continue;
      row.reference_id = ref.id;
      row.reference_printed = ref.printed;
      break;
    }
    sum.rows.push_back(std::move(row));
  }
  return sum;
}

std::string RecordSummary::to_text() const {
  std::ostringstream o;
  for (const auto& row : rows) {
    const auto& r = row.best;
    o << "q=" << r.q << " n=" << r.n << " " << search_mode_name(r.mode) << " k=" << r.k << ": " << r.summary()
      << "  (f " << r.f << ", g " << r.g << ")";
    if (row.reference_id) {
      o << "  | " << *row.reference_id << ":";
      for (const auto& p : row.reference_printed) o << " " << p;
    }
    o << "\n";
  }
  for (const auto& e : rejected) o << "rejected " << e << "\n";
  if (duplicates) o << duplicates << " duplicate record(s) ignored\n";
  if (skipped) o << skipped << " skipped candidate(s) over budget\n";
  return o.str();
}

nlohmann::json RecordSummary::to_json() const {
  nlohmann::json j{{"schema", 1}, {"rows", nlohmann::json::array()}, {"rejected", rejected},
                   {"duplicates", duplicates}, {"skipped", skipped}};
  for (const auto& row : rows) {
    nlohmann::json e{{"record", row.best.to_json()}, {"summary", row.best.summary()}};
    e["reference"] = row.reference_id ? nlohmann::json{{"id", *row.reference_id}, {"printed", row.reference_printed}}
                                      : nlohmann::json(nullptr);
    j["rows"].push_back(e);
  }
  return j;
}

}  // namespace qcx
