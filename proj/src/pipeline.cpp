#include "qcx/pipeline.hpp"

#include "qcx/errors.hpp"

#include <chrono>
#include <sstream>

namespace qcx {

std::string mode_name(SpecMode m) {
  switch (m) {
    case SpecMode::Base: return "base";
    case SpecMode::ExtendOne: return "extend-one";
    case SpecMode::ExtendTwo: return "extend-two";
  }
  return "?";
}

namespace {

SpecMode parse_mode(const std::string& s) {
  if (s == "base") return SpecMode::Base;
  if (s == "extend-one") return SpecMode::ExtendOne;
  if (s == "extend-two") return SpecMode::ExtendTwo;
  throw SpecError("bad-mode", "mode must be base, extend-one or extend-two, got \"" + s + "\"");
}

bool is_count(const nlohmann::json& v) { return v.is_number_integer() && v.get<long long>() >= 0; }

BigInt parse_count(const nlohmann::json& v, const std::string& what) {
  std::string s;
  if (is_count(v)) s = std::to_string(v.get<std::uint64_t>());
  else if (v.is_string()) s = v.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw SpecError("bad-" + what, what + " must be a nonnegative decimal integer");
  return BigInt(s);
}

bool is_vector_like(const nlohmann::json& v) { return v.is_string() || v.is_array(); }

}  // namespace

CodeSpec CodeSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecError("bad-spec", "spec must be a JSON object");
  if (j.contains("schema") && j["schema"] != 1) throw SpecError("bad-schema", "unsupported spec schema");
  CodeSpec s;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SpecError("bad-name", "name must be a string");
    s.name = j["name"].get<std::string>();
  }
  if (!j.contains("q") || !is_count(j["q"])) throw SpecError("bad-q", "q must be 2, 3 or 9");
  s.q = j["q"].get<unsigned>();
  if (s.q != 2 && s.q != 3 && s.q != 9) throw SpecError("bad-q", "q must be 2, 3 or 9");
  if (!j.contains("n") || !is_count(j["n"]) || j["n"].get<std::size_t>() == 0 ||
      j["n"].get<std::size_t>() > 4096)
    throw SpecError("bad-n", "n must be an integer in 1..4096");
  s.n = j["n"].get<std::size_t>();
  for (const char* key : {"f", "g"}) {
    if (!j.contains(key)) throw SpecError("missing-field", std::string("spec has no \"") + key + "\"");
    if (!is_vector_like(j[key]))
      throw SpecError("bad-compact", std::string("\"") + key + "\" must be compact text or an array");
  }
  s.f = j["f"];
  s.g = j["g"];
  for (const char* key : {"x1", "x2"})
    if (j.contains(key) && !j[key].is_null()) {
      if (!is_vector_like(j[key]))
        throw SpecError("bad-vector", std::string("\"") + key + "\" must be compact text or an array");
      (key[1] == '1' ? s.x1 : s.x2) = j[key];
    }
  if (j.contains("alpha1")) s.alpha1 = j["alpha1"];
  if (j.contains("alpha2")) s.alpha2 = j["alpha2"];
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw SpecError("bad-mode", "mode must be a string");
    s.mode = parse_mode(j["mode"].get<std::string>());
  } else if (s.x2) {
    s.mode = SpecMode::ExtendTwo;
  } else if (s.x1) {
    s.mode = SpecMode::ExtendOne;
  }
  if (j.contains("enum_budget")) s.enum_budget = parse_count(j["enum_budget"], "enum_budget");
  return s;
}

nlohmann::json CodeSpec::to_json() const {
  nlohmann::json j{{"schema", 1}, {"q", q}, {"n", n}, {"f", f}, {"g", g}, {"mode", mode_name(mode)}};
  if (!name.empty()) j["name"] = name;
  if (x1) j["x1"] = *x1;
  if (x2) j["x2"] = *x2;
  if (mode != SpecMode::Base) {
    j["alpha1"] = alpha1;
    if (mode == SpecMode::ExtendTwo) j["alpha2"] = alpha2;
  }
  if (enum_budget) j["enum_budget"] = enum_budget->str();
  return j;
}

Elem parse_elem(const nlohmann::json& v, const FieldPtr& field, const std::string& what) {
  if (is_count(v)) {
    const auto d = v.get<std::uint64_t>();
    if (d >= field->order()) throw SpecError("bad-" + what, what + " digit is not below Q");
    return Elem{static_cast<std::uint8_t>(d)};
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const auto e = expand_compact(s, field);
    if (e.size() != 1) throw SpecError("bad-" + what, what + " must be a single field element");
    return e[0];
  }
  throw SpecError("bad-" + what, what + " must be a digit or a \"z^k\" token");
}

std::vector<Elem> parse_elems(const nlohmann::json& v, const FieldPtr& field, const std::string& what) {
  if (v.is_string()) return expand_compact(v.get<std::string>(), field);
  if (!v.is_array()) throw SpecError("bad-compact", what + " must be compact text or an array");
  std::vector<Elem> out;
  for (const auto& e : v) out.push_back(parse_elem(e, field, what));
  return out;
}

ParsedSpec parse_spec(const CodeSpec& spec) {
  const FieldPtr F = field_make(spec.q);
  auto poly = [&](const nlohmann::json& v, const char* what) {
    auto c = parse_elems(v, F, what);
    if (c.size() > spec.n + 1)
      throw SpecError("bad-compact", std::string(what) + " has more than n+1 coefficients");
    return c;
  };
  auto fc = poly(spec.f, "f");
  if (fc.size() > spec.n) throw SpecError("bad-compact", "f has more than n coefficients");
  ParsedSpec p{F, RingPoly(F, spec.n, fc), Poly(F, poly(spec.g, "g")), std::nullopt, std::nullopt, kOne, kOne};
  auto vec = [&](const std::optional<nlohmann::json>& v, const char* what) -> std::optional<std::vector<Elem>> {
    if (!v) return std::nullopt;
    auto x = parse_elems(*v, F, what);
    if (x.size() != spec.n)
      throw SpecError("bad-vector", std::string(what) + " has " + std::to_string(x.size()) + " entries, expected n=" +
                                        std::to_string(spec.n));
    return x;
  };
  p.x1 = vec(spec.x1, "x1");
  p.x2 = vec(spec.x2, "x2");
  p.alpha1 = parse_elem(spec.alpha1, F, "alpha");
  p.alpha2 = parse_elem(spec.alpha2, F, "alpha");
  if (p.alpha1.is_zero() || p.alpha2.is_zero()) throw SpecError("bad-alpha", "alpha must be nonzero");
  return p;
}

BigInt long_run_threshold() { return BigInt(1) << 34; }

Cost enumeration_cost(unsigned Q, std::size_t k, std::size_t length) {
  Cost c;
  c.messages = message_count(Q, k);
  c.symbols = c.messages * length;
  c.long_run = c.symbols > long_run_threshold();
  return c;
}

std::vector<std::string> Report::parameter_strings() const {
  std::vector<std::string> out;
  if (!distances_known) return out;
  out.push_back(code.to_string());
  out.push_back(dual.to_string());
  for (const auto& p : qecc) out.push_back(p.to_string());
  for (const auto& p : eaqecc) out.push_back(p.to_string());
  return out;
}

namespace {

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string elems_text(const Field& F, const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += F.to_string(v[i]);
  }
  return s;
}

nlohmann::json elems_json(const Field& F, const std::vector<Elem>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Elem e : v) a.push_back(F.order() > 9 ? nlohmann::json(F.to_string(e)) : nlohmann::json(e.digit));
  return a;
}

std::string proposition_name(Proposition p) {
  switch (p) {
    case Proposition::Auto: return "auto";
    case Proposition::SelfOrthogonal: return "self-orthogonal";
    case Proposition::Entanglement: return "entanglement";
  }
  return "?";
}

std::string params_or_unknown(const LinearParams& p, bool known) {
  if (known) return p.to_string();
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",?]_" + std::to_string(p.Q);
}

}  // namespace

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j{{"schema", 1}, {"spec", spec}, {"status", status}};
  j["cost"] = {{"messages", cost.messages.str()}, {"symbols", cost.symbols.str()}, {"long_run", cost.long_run}};
  j["base"] = {{"n", n},
               {"length", 2 * n},
               {"k", k},
               {"deg_g", deg_g},
               {"f_coprime", f_coprime},
               {"self_orthogonal", {{"gram", self_orth.by_gram}, {"lemma2", self_orth.by_lemma2}}},
               {"gram_rank", gram_rank},
               {"hull_dim", hull_dim},
               {"rank_hh", ebits},
               {"psi_closed", psi_closed}};
  if (theorem7) {
    j["theorem7"] = {{"h1h1_nonsingular", theorem7->h1h1_nonsingular},
                     {"one_not_eigenvalue", theorem7->one_not_eigenvalue},
                     {"holds", theorem7->holds()}};
    if (theorem7->char_poly_P) j["theorem7"]["char_poly_P"] = theorem7->char_poly_P->to_string();
  } else {
    j["theorem7"] = nullptr;
  }
  if (extension) {
    const Field& F = *extension->G.field();
    nlohmann::json e{{"proposition", proposition_name(extension->applied)},
                     {"columns", extension->columns},
                     {"x1", elems_json(F, extension->x1)},
                     {"alpha1", F.to_string(extension->alpha1)},
                     {"gram_rank", extension->gram_rank}};
    if (extension->columns == 2) {
      e["x2"] = elems_json(F, extension->x2);
      e["alpha2"] = F.to_string(extension->alpha2);
    }
    j["extension"] = e;
  } else {
    j["extension"] = nullptr;
  }
  auto linear = [&](const LinearParams& p, const std::optional<WeightEnumerator>& w) {
    nlohmann::json o{{"params", params_or_unknown(p, distances_known)}, {"n", p.n}, {"k", p.k}};
    o["d"] = distances_known ? nlohmann::json(p.d) : nlohmann::json(nullptr);
    o["enumerator"] = w ? w->to_json() : nlohmann::json(nullptr);
    return o;
  };
  j["code"] = linear(code, enumerator);
  j["dual"] = linear(dual, dual_enumerator);
  j["qecc"] = nlohmann::json::array();
  for (std::size_t i = 0; i < qecc.size(); ++i) {
    auto o = qecc[i].to_json();
    if (!distances_known) {
      o["d"] = nullptr;
      o.erase("text");
      o.erase("pure");
    }
    if (i < gv.size()) o["gv"] = gv[i].to_json();
    j["qecc"].push_back(o);
  }
  j["eaqecc"] = nlohmann::json::array();
  for (const auto& p : eaqecc) {
    auto o = p.to_json();
    if (!distances_known) {
      o["d"] = nullptr;
      o.erase("text");
    }
    j["eaqecc"].push_back(o);
  }
  if (with_timing) j["timing_seconds"] = seconds;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream o;
  const std::string name = spec.contains("name") ? spec["name"].get<std::string>() : std::string("(unnamed)");
  o << "spec: " << name << " (q=" << spec["q"] << ", n=" << n << ", mode=" << spec["mode"].get<std::string>() << ")\n";
  o << "base: [" << 2 * n << "," << k << "] deg g=" << deg_g << ", f coprime: " << yes(f_coprime)
    << ", self-orthogonal: " << yes(self_orth.by_gram) << " (lemma 2: " << yes(self_orth.by_lemma2) << ")\n";
  o << "  rank(GG^dag)=" << gram_rank << ", hull dim=" << hull_dim << ", rank(HH^dag)=" << ebits
    << ", psi-closed: " << yes(psi_closed) << "\n";
  if (theorem7) {
    o << "theorem7: H1H1^dag nonsingular: " << yes(theorem7->h1h1_nonsingular)
      << ", 1 not an eigenvalue of P: " << yes(theorem7->one_not_eigenvalue);
    if (theorem7->char_poly_P) o << ", char poly of P: " << theorem7->char_poly_P->to_string();
    o << "\n";
  }
  if (extension) {
    const Field& F = *extension->G.field();
    o << "extension: " << proposition_name(extension->applied) << ", " << extension->columns
      << " column(s), rank(G'G'^dag)=" << extension->gram_rank << "\n";
    o << "  x1 = " << elems_text(F, extension->x1) << ", alpha1 = " << F.to_string(extension->alpha1) << "\n";
    if (extension->columns == 2)
      o << "  x2 = " << elems_text(F, extension->x2) << ", alpha2 = " << F.to_string(extension->alpha2) << "\n";
  }
  o << "status: " << status << " (" << cost.messages << " messages, cost " << cost.symbols << ")\n";
  o << "code: " << params_or_unknown(code, distances_known) << "\n";
  if (enumerator) o << "  enumerator: " << enumerator->render() << "\n";
  o << "dual: " << params_or_unknown(dual, distances_known) << "\n";
  if (dual_enumerator) o << "  enumerator: " << dual_enumerator->render() << "\n";
  for (std::size_t i = 0; i < qecc.size(); ++i) {
    const auto& p = qecc[i];
    o << "qecc: "
      << (distances_known ? p.to_string() : "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",?]]_" + std::to_string(p.q))
      << " (" << source_name(p.source) << (distances_known && p.pure ? ", pure" : "") << ")";
    if (i < gv.size() && gv[i].applicable) o << "; GV: " << gv[i].describe() << ", lhs " << gv[i].lhs << " vs rhs " << gv[i].rhs;
    o << "\n";
  }
  for (const auto& p : eaqecc) {
    o << "eaqecc: "
      << (distances_known ? p.to_string()
                          : "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + ",?;" + std::to_string(p.c) + "]]_" +
                                std::to_string(p.q))
      << " (" << source_name(p.source) << (p.maximal ? ", maximal" : "") << ")\n";
  }
  return o.str();
}

Report evaluate(const CodeSpec& spec, const EvalOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const ParsedSpec ps = parse_spec(spec);
  const QcCode base = QcCode::build(ps.f, ps.g);
  const FieldPtr& F = ps.field;
  const unsigned Q = F->order(), q = F->q();

  Report r;
  r.spec = spec.to_json();
  r.n = base.n();
  r.k = base.k();
  r.deg_g = base.deg_g();
  r.f_coprime = base.f_coprime();
  r.self_orth = base.self_orthogonality();
  r.gram_rank = base.gram_rank();
  r.hull_dim = r.k - r.gram_rank;
  r.ebits = rank(base.H() * base.H().conj_transpose());
  r.psi_closed = base.psi_closed();
  if (r.f_coprime) r.theorem7 = theorem7_conditions(base);

  const Mat* G = &base.G();
  if (spec.mode != SpecMode::Base) {
    const bool so = r.self_orth.by_gram;
    auto pick = [&](const std::optional<std::vector<Elem>>& x, int side, Elem alpha) {
      if (x) return *x;
      if (!opts.find_missing_x)
        throw SpecError("missing-x" + std::to_string(side), "extend mode needs x" + std::to_string(side));
      const auto rule = so ? ExtensionRule::equal_p_minus_1() : ExtensionRule::not_equal(alpha);
      return find_extension_vector(base, side, rule);
    };
    const auto x1 = pick(ps.x1, 1, ps.alpha1);
    if (spec.mode == SpecMode::ExtendOne) {
      r.extension = extend_one(base, x1, ps.alpha1);
    } else {
      const auto x2 = pick(ps.x2, 2, ps.alpha2);
      r.extension = extend_two(base, x1, x2, ps.alpha1, ps.alpha2);
    }
    G = &r.extension->G;
  }
  const std::size_t N = G->cols(), K = G->rows();
  r.code = {N, K, 0, Q};
  r.dual = {N, N - K, 0, Q};
  r.cost = enumeration_cost(Q, K, N);

  BigInt budget = opts.budget ? *opts.budget : spec.enum_budget ? *spec.enum_budget : BigInt(1) << 32;
  if (opts.allow_long && !opts.budget && !spec.enum_budget) budget = r.cost.messages;
  const bool gated = r.cost.messages > budget || (r.cost.long_run && !opts.allow_long);
  if (gated && !opts.skip_gated) {
    throw BudgetExceeded("enumeration needs " + r.cost.messages.str() + " messages (cost " + r.cost.symbols.str() +
                             " symbol updates); budget " + budget.str() +
                             (r.cost.long_run ? ", long-run: pass --allow-long" : ""),
                         r.cost.messages.str());
  }
  std::size_t d_impure = 0;
  if (gated) {
    r.status = "skipped (long-run)";
  } else {
    EnumerateOptions eo;
    eo.budget = budget;
    eo.threads = opts.threads;
    r.enumerator = enumerate(*G, eo);
    r.dual_enumerator = macwilliams(*r.enumerator, K, Q);
    r.code.d = min_distance(*r.enumerator);
    r.dual.d = min_distance(*r.dual_enumerator);
    r.distances_known = true;
    if (r.self_orth.by_gram || (r.extension && r.extension->applied == Proposition::SelfOrthogonal))
      d_impure = impure_distance(*r.enumerator, *r.dual_enumerator);
  }

  auto add_qecc = [&](const QeccParams& p) {
    r.qecc.push_back(p);
    r.gv.push_back(gv_bound(p.n, p.k, p.d, p.q));
  };
  if (!r.extension) {
    if (r.self_orth.by_gram && 2 * K < N)
      add_qecc(r.distances_known ? qecc_from_self_orthogonal(N, K, d_impure, r.dual.d, q)
                                 : QeccParams{N, N - 2 * K, 0, q, false, QeccParams::Source::Theorem3});
    if (r.theorem7 && r.theorem7->holds()) {
      auto [a, b] = eaqecc_theorem7(base, r.code.d, r.dual.d);
      r.eaqecc.push_back(a);
      r.eaqecc.push_back(b);
    } else {
      auto a = eaqecc_theorem5(base.G(), base.H(), r.code.d, q);
      auto b = eaqecc_theorem5(base.H(), base.G(), r.dual.d, q);
      r.eaqecc.push_back(a);
      r.eaqecc.push_back(b);
    }
  } else if (r.extension->applied == Proposition::SelfOrthogonal) {
    const QeccParams p = r.distances_known
                             ? qecc_from_self_orthogonal(N, K, d_impure, r.dual.d, q)
                             : QeccParams{N, N - 2 * K, 0, q, false, QeccParams::Source::Theorem3};
    if (r.deg_g >= 1) {
      const auto dims = qecc_dims_theorem4(r.n, r.deg_g);
      const std::size_t expect = r.extension->columns == 1 ? dims.k_one : dims.k_two;
      if (p.k != expect) throw std::logic_error("extended code dimension disagrees with the one-generator count");
    }
    add_qecc(p);
    add_qecc(lengthen(p));
  } else {
    r.eaqecc.push_back(eaqecc_theorem8(base, *r.extension, r.dual.d));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qcx
