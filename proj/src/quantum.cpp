#include "qcx/quantum.hpp"

#include "qcx/errors.hpp"

#include <stdexcept>

namespace qcx {

namespace {

std::string ints(std::initializer_list<std::size_t> xs) {
  std::string s;
  for (std::size_t x : xs) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

std::string LinearParams::to_string() const { return "[" + ints({n, k, d}) + "]_" + std::to_string(Q); }

std::string QeccParams::to_string() const { return "[[" + ints({n, k, d}) + "]]_" + std::to_string(q); }

nlohmann::json QeccParams::to_json() const {
  return {{"n", n}, {"k", k}, {"d", d}, {"q", q}, {"pure", pure}, {"source", source_name(source)}, {"text", to_string()}};
}

std::string EaqeccParams::to_string() const {
  return "[[" + ints({n, k, d}) + ";" + std::to_string(c) + "]]_" + std::to_string(q);
}

nlohmann::json EaqeccParams::to_json() const {
  return {{"n", n},       {"k", k},
          {"d", d},       {"c", c},
          {"q", q},       {"maximal", maximal},
          {"source", source_name(source)}, {"text", to_string()}};
}

std::string source_name(QeccParams::Source s) {
  switch (s) {
    case QeccParams::Source::Theorem3: return "theorem3";
    case QeccParams::Source::Theorem4One: return "theorem4-one";
    case QeccParams::Source::Theorem4Two: return "theorem4-two";
    case QeccParams::Source::Lengthened: return "lengthened";
  }
  return "?";
}

std::string source_name(EaqeccParams::Source s) {
  switch (s) {
    case EaqeccParams::Source::Theorem5: return "theorem5";
    case EaqeccParams::Source::Theorem7Primal: return "theorem7-primal";
    case EaqeccParams::Source::Theorem7Dual: return "theorem7-dual";
    case EaqeccParams::Source::Theorem8One: return "theorem8-one";
    case EaqeccParams::Source::Theorem8Two: return "theorem8-two";
  }
  return "?";
}

QeccParams qecc_from_self_orthogonal(std::size_t n, std::size_t k, std::size_t d_impure, std::size_t d_dual,
                                     unsigned q) {
  if (2 * k > n) throw PreconditionError("not-self-orthogonal", "a self-orthogonal code has 2k <= n");
  if (d_impure < d_dual) throw std::invalid_argument("impure distance below dual distance");
  return {n, n - 2 * k, d_impure, q, d_impure == d_dual, QeccParams::Source::Theorem3};
}

Theorem4Dims qecc_dims_theorem4(std::size_t n, std::size_t deg_g) {
  if (deg_g < 1) throw PreconditionError("deg-g-too-small", "one-column extension needs deg g >= 1");
  return {2 * n + 1, 2 * deg_g - 1, 2 * n + 2, 2 * deg_g - 2};
}

QeccParams lengthen(const QeccParams& p) {
  if (p.n < 1) throw std::invalid_argument("lengthen needs n >= 1");
  QeccParams r = p;
  r.n = p.n + 1;
  r.source = QeccParams::Source::Lengthened;
  return r;
}

namespace {

BigInt binom(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

GvVerdict gv_bound(std::size_t n, std::size_t k, std::size_t d, unsigned q) {
  GvVerdict v;
  if (!(n > k && k >= 2 && (n - k) % 2 == 0 && d >= 2)) return v;
  v.applicable = true;
  const BigInt q2 = BigInt(q) * q;
  v.lhs = (pow(BigInt(q), static_cast<unsigned>(n - k + 2)) - 1) / (q2 - 1);
  BigInt term = 1;  // (q^2-1)^(i-1)
  for (std::size_t i = 1; i < d; ++i) {
    v.rhs += term * binom(n, i);
    term *= q2 - 1;
  }
  v.guaranteed = v.lhs > v.rhs;
  return v;
}

std::string GvVerdict::describe() const {
  if (!applicable) return "not applicable (needs n > k >= 2, n = k mod 2, d >= 2)";
  return guaranteed ? "guaranteed by GV" : "not guaranteed by GV (code exceeds bound)";
}

nlohmann::json GvVerdict::to_json() const {
  nlohmann::json j{{"applicable", applicable}};
  if (applicable) {
    j["lhs"] = lhs.str();
    j["rhs"] = rhs.str();
    j["guaranteed"] = guaranteed;
  }
  return j;
}

EaqeccParams eaqecc_theorem5(std::size_t n, std::size_t k, std::size_t d, std::size_t c, unsigned q) {
  if (k > n || c > n || 2 * k + c < n) throw PreconditionError("bad-ebits", "2k - n + c is negative");
  const std::size_t kq = 2 * k + c - n;
  if (c > n - kq) throw PreconditionError("bad-ebits", "c exceeds n - k");
  return {n, kq, d, c, q, c == n - kq, EaqeccParams::Source::Theorem5};
}

EaqeccParams eaqecc_theorem5(const Mat& G, const Mat& H, std::size_t d, unsigned q) {
  const std::size_t n = G.cols(), k = G.rows();
  if (H.cols() != n) throw std::invalid_argument("G and H lengths differ");
  if (!(G * H.conj_transpose()).is_zero()) throw std::invalid_argument("H is not a parity-check matrix of G");
  const std::size_t c = rank(H * H.conj_transpose());
  const std::size_t gram = rank(G * G.conj_transpose());
  if (c + 2 * k != gram + n) throw std::logic_error("rank(HH^dag) disagrees with rank(GG^dag) + n - 2k");
  if (gram != k - hull_dim_by_intersection(G)) throw std::logic_error("rank(GG^dag) disagrees with the hull dimension");
  return eaqecc_theorem5(n, k, d, c, q);
}

std::pair<EaqeccParams, EaqeccParams> eaqecc_theorem7(const QcCode& code, std::size_t d, std::size_t d_dual) {
  const Theorem7Check t7 = theorem7_conditions(code);
  if (!t7.h1h1_nonsingular) throw PreconditionError("h1h1-singular", "H1 H1^dag is singular");
  if (!t7.one_not_eigenvalue) throw PreconditionError("one-is-eigenvalue", "1 is an eigenvalue of P");
  const std::size_t n = code.n(), dg = code.deg_g();
  const unsigned q = code.field()->q();
  const std::size_t c_h = rank(code.H() * code.H().conj_transpose());
  const std::size_t c_g = code.gram_rank();
  if (c_h != n + dg || c_g != n - dg) throw std::logic_error("Theorem 7 ebit count disagrees with the ranks");
  const EaqeccParams primal = eaqecc_theorem5(2 * n, n - dg, d, c_h, q);
  const EaqeccParams dual = eaqecc_theorem5(2 * n, n + dg, d_dual, c_g, q);
  if (primal.k != n - dg || dual.k != n + dg || !primal.maximal || !dual.maximal)
    throw std::logic_error("Theorem 7 parameters are not maximal-entanglement");
  EaqeccParams a = primal, b = dual;
  a.source = EaqeccParams::Source::Theorem7Primal;
  b.source = EaqeccParams::Source::Theorem7Dual;
  return {a, b};
}

EaqeccParams eaqecc_theorem8(const QcCode& base, const ExtendedCode& ext, std::size_t d_dual_ext) {
  if (base.field()->q() == 2) throw PreconditionError("q-equals-2", "the entanglement extension needs q > 2");
  if (ext.applied != Proposition::Entanglement)
    throw PreconditionError("not-entanglement-extension", "extension was not built under the entanglement rule");
  const std::size_t n = base.n(), dg = base.deg_g(), N = ext.length(), K = ext.k();
  if (N != 2 * n + ext.columns || K != n - dg + ext.columns) throw std::logic_error("extension dimensions are off");
  // the quantum code uses the extended code's dual, whose parity-check matrix is ext.G
  const std::size_t c = ext.gram_rank;
  if (c != rank(ext.G * ext.G.conj_transpose()) || c != n - dg + ext.columns)
    throw std::logic_error("extension Gram rank disagrees with n - deg g + columns");
  EaqeccParams p = eaqecc_theorem5(N, N - K, d_dual_ext, c, base.field()->q());
  if (p.k != n + dg || !p.maximal) throw std::logic_error("Theorem 8 parameters are not maximal-entanglement");
  p.source = ext.columns == 1 ? EaqeccParams::Source::Theorem8One : EaqeccParams::Source::Theorem8Two;
  return p;
}

}  // namespace qcx
