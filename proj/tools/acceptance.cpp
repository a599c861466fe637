// Acceptance run: one PASS/FAIL line per criterion, with the evidence under it.
#include "qcx/errors.hpp"
#include "qcx/explorer.hpp"
#include "qcx/pipeline.hpp"
#include "qcx/reference.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace qcx;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string secs(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

bool has(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

Mat rows_of(const FieldPtr& F, std::initializer_list<const char*> rows) {
  std::vector<std::vector<Elem>> v;
  for (const char* r : rows) v.push_back(expand_compact(r, F));
  return Mat::from_rows(F, v, v.front().size());
}

std::size_t psi_checked = 0, psi_closed = 0;

void note_psi(bool closed) {
  ++psi_checked;
  psi_closed += closed;
}

Report timed_eval(const CodeSpec& spec, double& seconds) {
  const auto t = std::chrono::steady_clock::now();
  Report r = evaluate(spec);
  seconds = since(t);
  note_psi(r.psi_closed);
  return r;
}

void example_common(Outcome& o, const ReferenceRow& ref, const Report& r) {
  const std::size_t N = r.code.n;
  if (!ref.printed_enumerator.empty())
    o.check(r.enumerator && *r.enumerator == WeightEnumerator::parse(ref.printed_enumerator, N),
            "weight enumerator equals the printed one (" + (r.enumerator ? r.enumerator->render() : "none") + ")");
  if (!ref.printed_dual_enumerator.empty())
    o.check(r.dual_enumerator && *r.dual_enumerator == WeightEnumerator::parse(ref.printed_dual_enumerator, N),
            "dual enumerator equals all printed coefficients");
}

Outcome criterion1() {
  Outcome o;
  const auto& ref = reference_example(1);
  double s = 0;
  const Report r = timed_eval(ref.spec, s);
  o.check(r.code.to_string() == "[31,7,16]_4", "extended code " + r.code.to_string());
  example_common(o, ref, r);
  o.check(r.enumerator && (*r.enumerator)[16] == 3 && (*r.enumerator)[28] == 780, "A_16 = 3, A_28 = 780");
  o.check(r.dual.d == 5, "dual distance " + std::to_string(r.dual.d));
  const auto p = r.parameter_strings();
  o.check(has(p, "[[31,17,5]]_2") && has(p, "[[32,17,5]]_2"), "QECC [[31,17,5]]_2 and lengthened [[32,17,5]]_2");
  o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
  return o;
}

// sum_{i=1}^{d-1} (q^2-1)^(i-1) C(n,i) and (q^(n-k+2)-1)/(q^2-1), in 128-bit integers
std::pair<unsigned __int128, unsigned __int128> gv_sums(unsigned n, unsigned k, unsigned d, unsigned q) {
  unsigned __int128 top = 1;
  for (unsigned i = 0; i < n - k + 2; ++i) top *= q;
  const unsigned __int128 lhs = (top - 1) / (q * q - 1);
  unsigned __int128 rhs = 0;
  for (unsigned i = 1; i < d; ++i) {
    unsigned __int128 c = 1;
    for (unsigned t = 0; t < i; ++t) c = c * (n - t) / (t + 1);
    unsigned __int128 pw = 1;
    for (unsigned t = 1; t < i; ++t) pw *= q * q - 1;
    rhs += pw * c;
  }
  return {lhs, rhs};
}

std::string u128(unsigned __int128 v) {
  std::string s;
  do {
    s.insert(s.begin(), char('0' + int(v % 10)));
    v /= 10;
  } while (v);
  return s;
}

Outcome criterion2() {
  Outcome o;
  const auto& ref = reference_example(2);
  double s = 0;
  const Report r = timed_eval(ref.spec, s);
  o.check(r.code.to_string() == "[22,6,10]_9", "extended code " + r.code.to_string());
  example_common(o, ref, r);
  o.check(r.enumerator && (*r.enumerator)[10] == 16 && (*r.enumerator)[22] == 38640, "A_10 = 16, A_22 = 38640");
  o.check(r.dual.to_string() == "[22,16,5]_9", "dual " + r.dual.to_string());
  o.check(has(r.parameter_strings(), "[[22,10,5]]_3"), "QECC [[22,10,5]]_3");
  const auto [lhs, rhs] = gv_sums(22, 10, 5, 3);
  std::string verdict;
  for (std::size_t i = 0; i < r.qecc.size(); ++i)
    if (r.qecc[i].to_string() == "[[22,10,5]]_3") {
      const auto& v = r.gv[i];
      verdict = v.describe();
      o.check(v.lhs.str() == u128(lhs) && v.rhs.str() == u128(rhs) && u128(lhs) == "597871" && u128(rhs) == "3845710",
              "GV sums lhs " + v.lhs.str() + " vs rhs " + v.rhs.str() + " (independent 128-bit route agrees)");
    }
  o.check(verdict == "not guaranteed by GV (code exceeds bound)", "GV verdict: " + verdict);
  o.check(s < 30.0, "runtime " + secs(s) + " < 30 s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& ref = reference_example(4);
  double s = 0;
  const Report r = timed_eval(ref.spec, s);
  const ParsedSpec ps = parse_spec(ref.spec);
  const QcCode c = QcCode::build(ps.f, ps.g);
  const FieldPtr F = c.field();
  o.check(r.code.to_string() == "[14,6,7]_4", "base code " + r.code.to_string());
  o.check(c.H1() == rows_of(F, {"1111111"}), "H1 matches the printed matrix");
  o.check(c.H2() == rows_of(F, {"0013232", "2001323", "3200132", "2320013", "3232001", "1323200", "0132320"}),
          "H2 matches the printed matrix entry for entry");
  const auto t7 = theorem7_conditions(c);
  o.check(t7.P && *t7.P == rows_of(F, {"0023230", "0002323", "3000232", "2300023", "3230002", "2323000", "0232300"}),
          "P matches the printed matrix");
  o.check(r.ebits == 8, "rank(HH^dag) = " + std::to_string(r.ebits));
  // x (x^3 + w) (x^3 + w^2) with w = digit 2
  const Poly factored = Poly(F, {kZero, kOne}) * Poly(F, {Elem{2}, kZero, kZero, kOne}) * Poly(F, {Elem{3}, kZero, kZero, kOne});
  o.check(t7.char_poly_P && *t7.char_poly_P == factored && t7.char_poly_P->to_string() == "x^7+x^4+x",
          "char poly of P = " + (t7.char_poly_P ? t7.char_poly_P->to_string() : "?") + " = x(x^3+w)(x^3+w^2)");
  bool maximal = false;
  for (const auto& e : r.eaqecc)
    if (e.to_string() == "[[14,6,7;8]]_2") maximal = e.maximal;
  o.check(maximal, "Theorem-7 output [[14,6,7;8]]_2 flagged maximal");
  o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& ref = reference_example(5);
  double s = 0;
  const Report r = timed_eval(ref.spec, s);
  o.check(r.code.to_string() == "[22,5,13]_4", "code " + r.code.to_string());
  example_common(o, ref, r);
  std::size_t nonzero = 0;
  if (r.dual_enumerator)
    for (std::size_t w = 1; w <= r.dual_enumerator->length(); ++w) nonzero += (*r.dual_enumerator)[w] != 0;
  o.check(nonzero == 19 && r.dual_enumerator && (*r.dual_enumerator)[22] == 30644469,
          std::to_string(nonzero) + " nonzero dual coefficients B_1..B_22, B_22 = " +
              (r.dual_enumerator ? (*r.dual_enumerator)[22].str() : "?"));
  o.check(has(r.parameter_strings(), "[[22,17,4;5]]_2"), "EAQECC [[22,17,4;5]]_2");
  o.check(s < 1.0, "runtime " + secs(s) + " < 1 s");
  return o;
}

Outcome criterion5() {
  Outcome o;
  struct Want {
    const char* id;
    bool quantum_only;
  };
  const std::vector<Want> wants = {
      {"table1-n7", false},      {"table1-n17", false},  {"table1-n23", false}, {"table1-n31-k11", false},
      {"table1-n55", false},     {"table1-n63-k13", false}, {"table3-n11", true}, {"table3-n41", true},
      {"table5-n15", false},     {"table5-n17", false},  {"table6-n17", false}, {"table6-n19", false},
  };
  for (const auto& w : wants) {
    const ReferenceRow* ref = nullptr;
    for (const auto& r : reference_rows())
      if (r.id == w.id) ref = &r;
    if (!ref) {
      o.check(false, std::string(w.id) + " missing from the reference data");
      continue;
    }
    const auto t = std::chrono::steady_clock::now();
    RowCheck rc = check_row(*ref);
    const double s = since(t);
    if (rc.report) note_psi(rc.report->psi_closed);
    const auto derived = rc.report ? rc.report->parameter_strings() : std::vector<std::string>{};
    std::vector<std::string> want;
    for (const auto& p : ref->printed)
      if (!w.quantum_only || p.rfind("[[", 0) == 0) want.push_back(p);
    std::vector<std::string> missing;
    for (const auto& p : want)
      if (!has(derived, p)) missing.push_back(p);
    std::string line = std::string(w.id) + ": ";
    for (const auto& p : want) line += p + " ";
    line += "(" + secs(s) + ")";
    if (!missing.empty()) {
      line += "; not derived:";
      for (const auto& m : missing) line += " " + m;
      line += "; derived:";
      for (const auto& d : derived) line += " " + d;
    }
    o.check(missing.empty() && s < 300.0, line);
  }
  return o;
}

// Weight histogram by walking every message recursively.
WeightEnumerator naive(const Mat& g) {
  const Field& F = *g.field();
  std::vector<BigInt> counts(g.cols() + 1, 0);
  std::vector<Elem> cw(g.cols(), kZero);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == g.rows()) {
      std::size_t w = 0;
      for (Elem e : cw) w += !e.is_zero();
      ++counts[w];
      return;
    }
    const auto saved = cw;
    for (unsigned d = 0; d < F.order(); ++d) {
      for (std::size_t c = 0; c < g.cols(); ++c)
        cw[c] = F.add(saved[c], F.mul(Elem{static_cast<std::uint8_t>(d)}, g.at(r, c)));
      rec(r + 1);
    }
    cw = saved;
  };
  rec(0);
  return WeightEnumerator(counts);
}

Mat random_full_rank(const FieldPtr& F, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Mat m(F, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, Elem{static_cast<std::uint8_t>(rng() % F->order())});
    if (rank(m) == k) return m;
  }
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  const unsigned qs[] = {2, 3, 9};

  // MacWilliams involution + exact division + independent dual enumeration
  std::size_t mw_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const auto F = field_make(qs[t % 3]);
    const unsigned Q = F->order(), cap = Q == 4 ? 6 : Q == 9 ? 4 : 2;
    const std::size_t k = 1 + rng() % cap, n = k + 1 + rng() % cap;
    const Mat g = random_full_rank(F, k, n, rng);
    try {
      const auto a = enumerate(g);
      const auto b = macwilliams(a, k, Q);
      if (b.total() == message_count(Q, n - k) && macwilliams(b, n - k, Q) == a && enumerate(nullspace(g.conj())) == b)
        ++mw_ok;
    } catch (const Error&) {
    }
  }
  o.check(mw_ok == 200, "MacWilliams involution and exact division: " + std::to_string(mw_ok) + "/200 random codes");

  // hull dimension, rank formula vs direct intersection, on random quasi-cyclic codes
  std::size_t hull_ok = 0, hull_n = 0;
  const std::pair<unsigned, std::size_t> shapes[] = {{2, 7}, {2, 9}, {2, 15}, {3, 8}, {3, 10}, {9, 5}, {9, 10}};
  for (int t = 0; hull_n < 100; ++t) {
    const auto [q, n] = shapes[t % 7];
    const auto F = field_make(q);
    const auto fs = factor_xn_minus_1(F, n);
    Poly g(F, {kOne});
    for (const auto& f : fs)
      if (rng() % 2) g = g * f.poly;
    if (g.degree() == static_cast<int>(n)) continue;
    std::vector<Elem> fc(n);
    for (auto& e : fc) e = Elem{static_cast<std::uint8_t>(rng() % F->order())};
    const QcCode c = QcCode::build(RingPoly(F, n, fc), g);
    ++hull_n;
    hull_ok += hull_dim(c.G()) == hull_dim_by_intersection(c.G());
    note_psi(c.psi_closed());
  }
  o.check(hull_ok == hull_n, "hull dimension formula = direct intersection: " + std::to_string(hull_ok) + "/" +
                                 std::to_string(hull_n) + " random codes");

  // Lemma 2: every g with dual_gen(g) | g gives G G^dag = 0, n <= 31
  std::size_t lemma_ok = 0, lemma_n = 0;
  bool lists_agree = true;
  for (unsigned q : {2u, 3u}) {
    const auto F = field_make(q);
    for (std::size_t n = 2; n <= 31; ++n) {
      if (n % F->p() == 0) continue;
      auto all = enumerate_divisors(F, n);
      all.push_back(Poly::xn_minus_1(F, n));
      std::size_t direct = 0;
      for (const auto& g : all) direct += divides(dual_gen(g, n), g);
      const auto gs = enumerate_self_orthogonal_g(F, n);
      lists_agree &= direct == gs.size();
      for (const auto& g : gs) {
        std::vector<Elem> fc(n);
        for (auto& e : fc) e = Elem{static_cast<std::uint8_t>(rng() % F->order())};
        const QcCode c = QcCode::build(RingPoly(F, n, fc), g);
        ++lemma_n;
        lemma_ok += (c.G() * c.G().conj_transpose()).is_zero();
        note_psi(c.psi_closed());
      }
    }
  }
  o.check(lists_agree && lemma_ok == lemma_n,
          "dual_gen(g) | g implies GG^dag = 0: " + std::to_string(lemma_ok) + "/" + std::to_string(lemma_n) +
              " qualifying g, n <= 31, q in {2,3}");

  // Gray-order enumeration vs naive recursion, k = 1..6 (k <= 3 over GF(81))
  std::size_t gray_ok = 0, gray_n = 0;
  for (unsigned q : {2u, 3u, 9u})
    for (std::size_t k = 1; k <= (q == 9 ? 3u : 6u); ++k)
      for (std::size_t n : {k, k + 3, std::size_t(70)}) {
        const auto F = field_make(q);
        if (q == 9 && n == 70 && k == 3) continue;
        const Mat g = random_full_rank(F, k, n, rng);
        ++gray_n;
        gray_ok += enumerate(g) == naive(g);
      }
  o.check(gray_ok == gray_n, "Gray enumeration = naive oracle: " + std::to_string(gray_ok) + "/" + std::to_string(gray_n) +
                                 " codes, all k <= 6 (k <= 3 over GF(81))");

  // Frobenius identities, every element pair
  bool frob = true;
  for (unsigned q : {2u, 3u, 9u}) {
    const auto F = field_make(q);
    std::size_t fixed = 0;
    for (unsigned a = 0; a < F->order(); ++a) {
      const Elem x{static_cast<std::uint8_t>(a)};
      frob &= F->conj(F->conj(x)) == x && F->conj(x) == F->pow(x, q);
      fixed += F->conj(x) == x;
      for (unsigned b = 0; b < F->order(); ++b) {
        const Elem y{static_cast<std::uint8_t>(b)};
        frob &= F->conj(F->add(x, y)) == F->add(F->conj(x), F->conj(y));
        frob &= F->conj(F->mul(x, y)) == F->mul(F->conj(x), F->conj(y));
      }
    }
    frob &= fixed == q;
  }
  o.check(frob, "Frobenius: additive, multiplicative, involutive, a^q, fixed field of size q (Q = 4, 9, 81)");
  o.check(psi_checked > 0 && psi_closed == psi_checked, "psi double-shift closure: " + std::to_string(psi_closed) + "/" +
                                                        std::to_string(psi_checked) + " codes built");
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto gated = [](const CodeSpec& spec) {
    try {
      evaluate(spec);
    } catch (const BudgetExceeded&) {
      return true;
    } catch (const Error&) {
      return false;
    }
    return false;
  };
  EvalOptions skip;
  skip.skip_gated = true;

  const auto& ex3 = reference_example(3);
  o.check(gated(ex3.spec) && !is_desk_scale(ex3), "Example 3 (4^17 messages) gated without --allow-long");
  const Report r3 = evaluate(ex3.spec, skip);
  o.check(r3.code.n == 103 && r3.code.k == 17 && !r3.qecc.empty() && r3.qecc[0].n == 103 && r3.qecc[0].k == 69 &&
              r3.self_orth.by_gram,
          "Example 3 bookkeeping: [103,17]_4, self-orthogonal base, QECC [[103,69,?]]_2");

  const auto& ex6 = reference_example(6);
  o.check(gated(ex6.spec) && !is_desk_scale(ex6), "Example 6 (81^5 messages) gated without --allow-long");
  const Report r6 = evaluate(ex6.spec, skip);
  o.check(r6.code.n == 22 && r6.code.k == 5 && r6.theorem7 && r6.theorem7->holds() && r6.eaqecc.size() == 1 &&
              r6.eaqecc[0].k == 17 && r6.eaqecc[0].c == 5 && r6.eaqecc[0].maximal,
          "Example 6 bookkeeping: [22,5]_81, Theorem-7 conditions hold, EAQECC [[22,17,?;5]]_9 maximal");

  std::size_t big = 0, big_gated = 0;
  for (const auto& row : reference_rows()) {
    if (row.id.rfind("table", 0) != 0) continue;
    const ParsedSpec ps = parse_spec(row.spec);
    const std::size_t k = row.spec.n - static_cast<std::size_t>(std::max(0, ps.g.degree())) +
                          (row.spec.mode == SpecMode::ExtendOne ? 1 : row.spec.mode == SpecMode::ExtendTwo ? 2 : 0);
    const unsigned Q = ps.field->order();
    if (!((Q == 4 && k >= 15) || (Q == 9 && k >= 10))) continue;
    ++big;
    big_gated += !is_desk_scale(row) && (row.malformed || gated(row.spec));
  }
  o.check(big > 0 && big_gated == big, std::to_string(big_gated) + "/" + std::to_string(big) +
                                           " table rows with k >= 15 over GF(4) or k >= 10 over GF(9) gated");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Example 1 end-to-end", criterion1},
      {"Example 2 end-to-end", criterion2},
      {"Example 4 end-to-end", criterion3},
      {"Example 5 end-to-end", criterion4},
      {"Table reproduction, desk-scale subset", criterion5},
      {"Property suites", criterion6},
      {"Long-run rows gated, bookkeeping checked", criterion7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("threw: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << secs(since(t)) << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + (failed == 1 ? " criterion failed" : " criteria failed") : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
