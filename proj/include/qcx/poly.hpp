#pragma once

#include "qcx/gf.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcx {

/// A plain polynomial over GF(Q), not reduced modulo anything.
/// Coefficients are ascending and trimmed; the zero polynomial has degree -1.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly monomial(FieldPtr field, std::size_t k, Elem c = kOne);
  /// x^n - 1.
  static Poly xn_minus_1(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : kZero; }
  Elem lead() const noexcept { return coeffs_.empty() ? kZero : coeffs_.back(); }

  Poly monic() const;
  Elem eval(Elem x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;

  bool operator==(const Poly& other) const;

  /// Descending human-readable form, e.g. "x^7+x^4+x" or "2x^3+1".
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// True when a | b exactly. The zero polynomial divides only zero.
bool divides(const Poly& a, const Poly& b);
/// b / a; throws PreconditionError("non-exact-division") when a does not divide b.
Poly quotient(const Poly& b, const Poly& a);

/// An element of R_n = GF(Q)[x]/(x^n - 1), stored as exactly n ascending
/// coefficients.
class RingPoly {
 public:
  RingPoly(FieldPtr field, std::size_t n);
  RingPoly(FieldPtr field, std::size_t n, std::vector<Elem> coeffs);
  /// Reduces an arbitrary polynomial modulo x^n - 1.
  static RingPoly from_poly(const Poly& p, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return coeffs_.size(); }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem operator[](std::size_t i) const { return coeffs_.at(i); }
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  Poly to_poly() const { return Poly(field_, coeffs_); }

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
  RingPoly operator-() const;
  /// Product modulo x^n - 1.
  friend RingPoly mul_mod(const RingPoly& a, const RingPoly& b);
  /// x^k * p.
  RingPoly shifted(std::size_t k) const;

  bool operator==(const RingPoly& other) const;

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

inline RingPoly add(const RingPoly& a, const RingPoly& b) { return a + b; }

/// f0 + f_{n-1} x + f_{n-2} x^2 + ... + f1 x^{n-1}.
RingPoly bar(const RingPoly& f);
/// Coefficient-wise Frobenius a -> a^q.
RingPoly frob_poly(const RingPoly& f);
Poly frob_poly(const Poly& f);

/// Generator of the Hermitian dual of the cyclic code <g>: with
/// h = (x^n - 1)/g, returns the monic associate of conj(x^{deg h} h(1/x)).
/// Throws PreconditionError("g-not-divisor") unless g | x^n - 1.
Poly dual_gen(const Poly& g, std::size_t n);
/// The same polynomial before normalization: conj(x^{deg h} h(1/x)) with h
/// monic, so its constant term is 1.
Poly reciprocal_dual(const Poly& g, std::size_t n);

/// Parses the compact table notation into an element of R_n.
///
/// For Q <= 9 the grammar is
///   seq  := item+
///   item := atom ('^' count)?
///   atom := digit | '(' seq ')'
///   count := digit | '{' digits '}'
/// where `^` repeats the preceding atom. For larger fields the input is a
/// comma-separated list of tokens, each a digit (log encoding) or "z^k"
/// (alpha^k). Throws SpecError on malformed input, digits >= Q, or an
/// expansion longer than n.
RingPoly parse_compact(std::string_view s, const FieldPtr& field, std::size_t n);

/// Expands compact notation to its digit sequence without a length bound.
std::vector<Elem> expand_compact(std::string_view s, const FieldPtr& field);

/// Canonical compact rendering of coefficients up to the last nonzero one;
/// runs of equal digits are written d^k (braced when k > 9). The zero
/// polynomial renders as "0". For Q > 9, a comma-separated digit list.
std::string render_compact(const std::vector<Elem>& coeffs, const FieldPtr& field);
inline std::string render_compact(const RingPoly& p) { return render_compact(p.coeffs(), p.field()); }
inline std::string render_compact(const Poly& p) { return render_compact(p.coeffs(), p.field()); }

/// Q-cyclotomic cosets of Z/n, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::uint64_t Q, std::size_t n);

struct IrreducibleFactor {
  Poly poly;
  /// Exponents s with beta^s a root, for the chosen primitive n-th root beta.
  std::vector<std::size_t> coset;
};

/// Complete factorization of x^n - 1 into monic irreducibles via cyclotomic
/// cosets and minimal polynomials over GF(Q^m), m = ord_n(Q). Factors are
/// ordered like their cosets. Throws PreconditionError("n-divisible-by-p")
/// when p | n.
std::vector<IrreducibleFactor> factor_xn_minus_1(const FieldPtr& field, std::size_t n);

}  // namespace qcx
