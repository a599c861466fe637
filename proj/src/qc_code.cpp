#include "qcx/qc_code.hpp"

#include "qcx/errors.hpp"

#include <stdexcept>

namespace qcx {

QcCode QcCode::build(const RingPoly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const std::size_t n = f.n();
  if (g.is_zero() || !divides(g, Poly::xn_minus_1(f.field(), n)))
    throw PreconditionError("g-not-divisor", "g(x) does not divide x^" + std::to_string(n) + " - 1");
  return QcCode(f.field(), n, f, g.monic());
}

QcCode::QcCode(FieldPtr field, std::size_t n, RingPoly f, Poly g)
    : field_(std::move(field)),
      n_(n),
      f_(std::move(f)),
      g_(std::move(g)),
      g_dual_(reciprocal_dual(g_, n_)),
      fbar_q_(frob_poly(bar(f_))),
      G1_(field_, 0, n_),
      G2_(field_, 0, n_),
      G_(field_, 0, 2 * n_),
      H1_(field_, 0, n_),
      H2_(field_, 0, n_),
      H_(field_, 0, 2 * n_) {
  const std::size_t k = n_ - deg_g();
  const RingPoly gr = RingPoly::from_poly(g_, n_);
  G1_ = Mat::circulant(gr, k);
  G2_ = Mat::circulant(mul_mod(f_, gr), k);
  G_ = hstack(G1_, G2_);
  H1_ = Mat::circulant(RingPoly::from_poly(g_dual_, n_), deg_g());
  H2_ = Mat::circulant(-fbar_q_, n_);
  H_ = vstack(hstack(H1_, Mat(field_, deg_g(), n_)), hstack(H2_, Mat::identity(field_, n_)));
  f_coprime_ = gcd(f_.to_poly(), Poly::xn_minus_1(field_, n_)).degree() == 0;
  if (!(G_ * H_.conj_transpose()).is_zero()) throw std::logic_error("parity-check matrix is not orthogonal to G");
}

SelfOrthogonality QcCode::self_orthogonality() const {
  SelfOrthogonality s;
  s.by_gram = (G_ * G_.conj_transpose()).is_zero();
  s.by_lemma2 = divides(g_dual_, g_);
  if (s.by_lemma2 && !s.by_gram) throw std::logic_error("divisibility test holds but G G^dagger != 0");
  return s;
}

std::size_t QcCode::gram_rank() const { return rank(G_ * G_.conj_transpose()); }

bool QcCode::psi_closed() const {
  for (std::size_t i = 0; i < G_.rows(); ++i) {
    std::vector<Elem> shifted(2 * n_);
    for (std::size_t j = 0; j < n_; ++j) {
      shifted[(j + 1) % n_] = G_.at(i, j);
      shifted[n_ + (j + 1) % n_] = G_.at(i, n_ + j);
    }
    if (!in_rowspace(G_, shifted)) return false;
  }
  return true;
}

Mat QcCode::dual_basis(int side) const {
  if (side == 1) return H1_;
  if (side != 2) throw std::invalid_argument("side must be 1 or 2");
  const Poly xn = Poly::xn_minus_1(field_, n_);
  const Poly c2 = gcd(mul_mod(f_, RingPoly::from_poly(g_, n_)).to_poly(), xn);
  if (c2.is_zero()) return Mat::identity(field_, n_);
  const std::size_t dim_c2 = n_ - static_cast<std::size_t>(c2.degree());
  if (rank(G2_) == dim_c2) return Mat::circulant(RingPoly::from_poly(dual_gen(c2, n_), n_), n_ - dim_c2);
  return nullspace(G2_.conj());
}

Elem self_product(const Field& f, std::span<const Elem> x) { return hermitian_inner(f, x, x); }

bool rule_accepts(const Field& f, const ExtensionRule& rule, std::span<const Elem> x) {
  const Elem pm1 = f.from_int(static_cast<long long>(f.p()) - 1);
  const Elem s = self_product(f, x);
  if (rule.kind == ExtensionRule::Kind::EqualPMinus1) return s == pm1;
  return s != f.mul(pm1, f.pow(rule.alpha, f.q() + 1));
}

std::vector<Elem> find_extension_vector(const QcCode& code, int side, const ExtensionRule& rule,
                                        const ExtensionSearchLimits& limits) {
  const Field& F = *code.field();
  const Mat basis = code.dual_basis(side);
  const std::size_t r = basis.rows(), n = basis.cols();
  const unsigned Q = F.order();
  const std::size_t cap = limits.cap_for(Q);
  const std::size_t active = std::min(r, cap);
  const std::size_t first = r - active;  // rows before this index keep message digit 0

  // mult[j][d] = elem(d) * basis row (first + j)
  std::vector<std::vector<std::vector<Elem>>> mult(active, std::vector<std::vector<Elem>>(Q, std::vector<Elem>(n)));
  for (std::size_t j = 0; j < active; ++j)
    for (unsigned d = 0; d < Q; ++d)
      for (std::size_t c = 0; c < n; ++c) mult[j][d][c] = F.mul(Elem{static_cast<std::uint8_t>(d)}, basis.at(first + j, c));

  std::vector<unsigned> msg(active, 0);
  std::vector<Elem> cw(n, kZero);
  // odometer step; false once the message wraps back to zero
  auto advance = [&]() {
    for (std::size_t pos = active; pos-- > 0;) {
      const unsigned old = msg[pos];
      const unsigned next = (old + 1) % Q;
      msg[pos] = next;
      for (std::size_t c = 0; c < n; ++c) cw[c] = F.add(F.sub(cw[c], mult[pos][old][c]), mult[pos][next][c]);
      if (next != 0) return true;
    }
    return false;
  };
  while (advance())
    if (rule_accepts(F, rule, cw)) return cw;

  if (active < r) {
    BigInt total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= Q;
    throw BudgetExceeded("extension-vector search over a dual of dimension " + std::to_string(r) +
                             " exceeds the scan cap of " + std::to_string(cap),
                         total.str());
  }
  throw PreconditionError("no-extension-vector",
                          "no codeword of C" + std::to_string(side) + "^perp_h satisfies the self-product rule");
}

namespace {

void require_in_dual(const QcCode& code, int side, const std::vector<Elem>& x) {
  if (x.size() != code.n())
    throw PreconditionError("not-in-dual", "extension vector x(" + std::to_string(side) + ") must have length " +
                                               std::to_string(code.n()));
  const Mat& gi = side == 1 ? code.G1() : code.G2();
  const Mat xr = Mat::row_vector(code.field(), x);
  if (!(gi * xr.conj_transpose()).is_zero())
    throw PreconditionError("not-in-dual", "x(" + std::to_string(side) + ") is not in C" + std::to_string(side) +
                                               "^perp_h");
}

ExtendedCode assemble(const QcCode& code, const std::vector<std::vector<Elem>>& xs, const std::vector<Elem>& alphas,
                      Proposition prop) {
  const Field& F = *code.field();
  const FieldPtr& fp = code.field();
  const std::size_t n = code.n(), cols = xs.size();
  for (std::size_t i = 0; i < cols; ++i) {
    require_in_dual(code, static_cast<int>(i + 1), xs[i]);
    if (alphas[i].is_zero()) throw PreconditionError("wrong-self-product", "alpha must be nonzero");
  }

  const Elem pm1 = F.from_int(static_cast<long long>(F.p()) - 1);
  bool prop1_ok = code.is_hermitian_self_orthogonal();
  for (std::size_t i = 0; i < cols; ++i) prop1_ok = prop1_ok && alphas[i] == kOne && self_product(F, xs[i]) == pm1;

  Proposition applied = prop;
  if (prop == Proposition::Auto) applied = (prop1_ok || F.q() == 2) ? Proposition::SelfOrthogonal : Proposition::Entanglement;

  if (applied == Proposition::SelfOrthogonal) {
    if (!code.is_hermitian_self_orthogonal())
      throw PreconditionError("not-self-orthogonal", "the base code is not Hermitian self-orthogonal");
    for (std::size_t i = 0; i < cols; ++i) {
      if (alphas[i] != kOne)
        throw PreconditionError("wrong-self-product", "the self-orthogonal extension requires alpha = 1");
      if (self_product(F, xs[i]) != pm1)
        throw PreconditionError("wrong-self-product", "<x(" + std::to_string(i + 1) + "),x(" + std::to_string(i + 1) +
                                                          ")>_h must equal p - 1");
    }
  } else {
    if (F.q() <= 2) throw PreconditionError("wrong-field-size", "the entanglement extension requires q > 2");
    if (!theorem7_conditions(code).holds())
      throw PreconditionError("theorem7-conditions", "the base code does not satisfy the conditions of the maximal-entanglement construction");
    for (std::size_t i = 0; i < cols; ++i)
      if (self_product(F, xs[i]) == F.mul(pm1, F.pow(alphas[i], F.q() + 1)))
        throw PreconditionError("wrong-self-product", "<x(" + std::to_string(i + 1) + "),x(" + std::to_string(i + 1) +
                                                          ")>_h equals (p-1) alpha^(q+1)");
  }

  Mat ext = hstack(code.G(), Mat(fp, code.k(), cols));
  for (std::size_t i = 0; i < cols; ++i) {
    std::vector<Elem> row(2 * n + cols, kZero);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = xs[i][j];
    row[2 * n + i] = alphas[i];
    ext = vstack(ext, Mat::row_vector(fp, std::move(row)));
  }

  const std::size_t gram = rank(ext * ext.conj_transpose());
  ExtendedCode out{applied, static_cast<unsigned>(cols), xs[0], cols == 2 ? xs[1] : std::vector<Elem>{},
                   alphas[0], cols == 2 ? alphas[1] : kOne, std::move(ext), gram};
  if (applied == Proposition::SelfOrthogonal && out.gram_rank != 0)
    throw std::logic_error("extended generator matrix is not self-orthogonal");
  if (applied == Proposition::Entanglement && out.gram_rank != code.k() + cols)
    throw std::logic_error("extended Gram rank differs from k + columns");
  return out;
}

}  // namespace

ExtendedCode extend_one(const QcCode& code, const std::vector<Elem>& x1, Elem alpha1, Proposition prop) {
  return assemble(code, {x1}, {alpha1}, prop);
}

ExtendedCode extend_two(const QcCode& code, const std::vector<Elem>& x1, const std::vector<Elem>& x2, Elem alpha1,
                        Elem alpha2, Proposition prop) {
  return assemble(code, {x1, x2}, {alpha1, alpha2}, prop);
}

Theorem7Check theorem7_conditions(const QcCode& code) {
  if (!code.f_coprime())
    throw PreconditionError("f-not-coprime", "the maximal-entanglement construction requires gcd(f, x^n - 1) = 1");
  Theorem7Check out;
  const Mat& h1 = code.H1();
  const Mat& h2 = code.H2();
  const Mat gram1 = h1 * h1.conj_transpose();
  out.h1h1_nonsingular = rank(gram1) == gram1.rows();
  if (!out.h1h1_nonsingular) return out;
  const Mat p = h1.conj_transpose() * inverse(gram1) * h1 - inverse(h2.conj_transpose() * h2);
  out.one_not_eigenvalue = rank(p - Mat::identity(code.field(), code.n())) == code.n();
  out.char_poly_P = char_poly(p);
  out.P = p;
  return out;
}

}  // namespace qcx
