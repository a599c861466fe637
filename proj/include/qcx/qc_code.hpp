#pragma once

#include "qcx/matrix.hpp"
#include "qcx/poly.hpp"

#include <optional>
#include <vector>

namespace qcx {

struct SelfOrthogonality {
  bool by_gram = false;    // G G^dagger = 0
  bool by_lemma2 = false;  // g^{perp q} divides g
};

/// The one-generator quasi-cyclic code of length 2n generated by (g, f g).
class QcCode {
 public:
  /// Throws PreconditionError("g-not-divisor") unless g | x^n - 1.
  static QcCode build(const RingPoly& f, const Poly& g);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t length() const noexcept { return 2 * n_; }
  std::size_t k() const noexcept { return G_.rows(); }
  std::size_t deg_g() const noexcept { return static_cast<std::size_t>(g_.degree()); }

  const RingPoly& f() const noexcept { return f_; }
  const Poly& g() const noexcept { return g_; }
  /// g^{perp q} with constant term 1 (the rows of H1).
  const Poly& g_dual() const noexcept { return g_dual_; }
  /// conj(fbar), the polynomial whose negation fills H2.
  const RingPoly& fbar_q() const noexcept { return fbar_q_; }

  const Mat& G1() const noexcept { return G1_; }
  const Mat& G2() const noexcept { return G2_; }
  const Mat& G() const noexcept { return G_; }
  const Mat& H1() const noexcept { return H1_; }
  const Mat& H2() const noexcept { return H2_; }
  const Mat& H() const noexcept { return H_; }

  /// gcd(f, x^n - 1) = 1.
  bool f_coprime() const noexcept { return f_coprime_; }

  SelfOrthogonality self_orthogonality() const;
  bool is_hermitian_self_orthogonal() const { return self_orthogonality().by_gram; }
  /// rank(G G^dagger).
  std::size_t gram_rank() const;

  /// Every generator row stays in the code under the simultaneous cyclic
  /// shift of both halves.
  bool psi_closed() const;

  /// Rows of a basis of C_side^{perp_h}, where C_side is the row space of
  /// G1 (side 1) or G2 (side 2).
  Mat dual_basis(int side) const;

 private:
  QcCode(FieldPtr field, std::size_t n, RingPoly f, Poly g);

  FieldPtr field_;
  std::size_t n_;
  RingPoly f_;
  Poly g_;
  Poly g_dual_;
  RingPoly fbar_q_;
  Mat G1_, G2_, G_, H1_, H2_, H_;
  bool f_coprime_ = false;
};

struct ExtensionRule {
  enum class Kind {
    EqualPMinus1,  // <x,x>_h = p - 1
    NotEqual,      // <x,x>_h != (p - 1) alpha^{q+1}
  };
  Kind kind = Kind::EqualPMinus1;
  Elem alpha = kOne;

  static ExtensionRule equal_p_minus_1() { return {}; }
  static ExtensionRule not_equal(Elem alpha) { return {Kind::NotEqual, alpha}; }
};

struct ExtensionSearchLimits {
  /// Largest dual dimension scanned exhaustively, per field size Q.
  unsigned max_dim_q4 = 12;
  unsigned max_dim_q9 = 8;
  unsigned max_dim_q81 = 4;

  unsigned cap_for(unsigned Q) const { return Q <= 4 ? max_dim_q4 : Q <= 9 ? max_dim_q9 : max_dim_q81; }
};

/// <x, x>_h as a field element (always in GF(q)).
Elem self_product(const Field& f, std::span<const Elem> x);
/// True when rule accepts x.
bool rule_accepts(const Field& f, const ExtensionRule& rule, std::span<const Elem> x);

/// First nonzero codeword of C_side^{perp_h} in lexicographic message order
/// (message digit 0 most significant, basis from dual_basis(side)) that the
/// rule accepts. Throws PreconditionError("no-extension-vector") when the
/// exhaustive scan finds nothing, BudgetExceeded when the dual is larger than
/// the cap and its capped prefix holds no qualifying vector.
std::vector<Elem> find_extension_vector(const QcCode& code, int side, const ExtensionRule& rule,
                                        const ExtensionSearchLimits& limits = {});

enum class Proposition {
  Auto,            // Prop 1 when its hypotheses hold, else Prop 2
  SelfOrthogonal,  // Prop 1: alpha = 1, <x,x>_h = p - 1, self-orthogonal base
  Entanglement,    // Prop 2: q > 2, <x,x>_h != (p - 1) alpha^{q+1}, Theorem 7 base
};

struct ExtendedCode {
  Proposition applied = Proposition::SelfOrthogonal;
  unsigned columns = 1;
  std::vector<Elem> x1, x2;
  Elem alpha1 = kOne, alpha2 = kOne;
  Mat G;
  /// rank(G G^dagger) of the extended generator matrix.
  std::size_t gram_rank = 0;

  std::size_t length() const { return G.cols(); }
  std::size_t k() const { return G.rows(); }
};

/// Generator (G1 | G2 | 0) with the row (x1, 0..0, alpha1) appended.
ExtendedCode extend_one(const QcCode& code, const std::vector<Elem>& x1, Elem alpha1 = kOne,
                        Proposition prop = Proposition::Auto);
/// Generator (G1 | G2 | 0 0) with rows (x1, 0..0, alpha1, 0) and (0..0, x2, 0, alpha2).
ExtendedCode extend_two(const QcCode& code, const std::vector<Elem>& x1, const std::vector<Elem>& x2,
                        Elem alpha1 = kOne, Elem alpha2 = kOne, Proposition prop = Proposition::Auto);

struct Theorem7Check {
  bool h1h1_nonsingular = false;
  bool one_not_eigenvalue = false;
  std::optional<Mat> P;
  std::optional<Poly> char_poly_P;

  bool holds() const { return h1h1_nonsingular && one_not_eigenvalue; }
};

/// Builds P = H1^dag (H1 H1^dag)^{-1} H1 - (H2^dag H2)^{-1} and tests
/// det(H1 H1^dag) != 0 and rank(P - I) = n. Throws
/// PreconditionError("f-not-coprime") unless gcd(f, x^n - 1) = 1.
Theorem7Check theorem7_conditions(const QcCode& code);

}  // namespace qcx
