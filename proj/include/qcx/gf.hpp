#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qcx {

using BigInt = boost::multiprecision::cpp_int;

/// A field element in log ("digit") encoding: 0 is zero, d >= 1 is alpha^(d-1)
/// for the field's primitive element alpha. This matches the 0,1,2,3 / 0..8
/// notation used for GF(4) and GF(9) tables.
struct Elem {
  std::uint8_t digit = 0;

  constexpr bool is_zero() const noexcept { return digit == 0; }
  constexpr auto operator<=>(const Elem&) const = default;
};

constexpr Elem kZero{0};
constexpr Elem kOne{1};

/// GF(q^2) built from an irreducible modulus over the prime field GF(p).
///
/// Arithmetic runs through precomputed Q x Q tables (Q <= 256), so every
/// operation is a lookup. The object is immutable once constructed.
class Field {
 public:
  /// `modulus` holds the ascending coefficients of a monic polynomial over
  /// GF(p) of even degree 2e; the field is GF(p^(2e)) with q = p^e. The
  /// constructor verifies that the modulus is irreducible and that its root
  /// generates the multiplicative group, and throws std::invalid_argument
  /// otherwise.
  Field(unsigned p, std::vector<unsigned> modulus);

  unsigned p() const noexcept { return p_; }
  unsigned q() const noexcept { return q_; }
  unsigned order() const noexcept { return order_; }
  /// Degree of GF(Q) over GF(p).
  unsigned prime_degree() const noexcept { return degree_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return kZero; }
  Elem one() const noexcept { return kOne; }
  /// The primitive element alpha (digit 2).
  Elem generator() const noexcept { return Elem{2}; }

  Elem add(Elem a, Elem b) const { return Elem{add_[index(a, b)]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return Elem{neg_[check(a)]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[index(a, b)]}; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Frobenius a -> a^q; an involution on GF(q^2).
  Elem conj(Elem a) const { return Elem{conj_[check(a)]}; }

  /// alpha^k for any integer k (reduced mod Q-1).
  Elem from_log(long long k) const;
  /// Discrete log of a nonzero element.
  unsigned log(Elem a) const;
  /// The image of the integer v in the prime subfield (v * 1).
  Elem from_int(long long v) const;
  bool in_prime_field(Elem a) const;

  /// Coordinates of `a` over GF(p) in the polynomial basis 1, t, t^2, ...
  std::span<const std::uint8_t> components(Elem a) const;
  Elem from_components(std::span<const std::uint8_t> c) const;

  /// Human-readable token: the digit for Q <= 10, otherwise "0", "1" or "z^k".
  std::string to_string(Elem a) const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  std::size_t check(Elem a) const;
  std::size_t index(Elem a, Elem b) const { return check(a) * order_ + check(b); }

  unsigned p_;
  unsigned degree_;
  unsigned q_;
  unsigned order_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, conj_;
  std::vector<std::uint8_t> comps_;   // order_ x degree_ component table
  std::vector<std::uint8_t> from_vec_;  // packed base-p integer -> digit
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(q^2) for q in {2, 3, 9}, built from the Conway polynomial of the
/// matching degree. Instances are cached; equal q yields the same pointer.
FieldPtr field_make(unsigned q);

/// True when both pointers name the same field (by identity or by value).
bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Throws std::invalid_argument unless `same_field(a, b)`.
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// GF(Q^m) over a base field GF(Q), elements stored as polynomials of degree
/// < m over the base field, so GF(Q) embeds as the constants. Used to find
/// n-th roots of unity when factoring x^n - 1.
class ExtField {
 public:
  using Value = std::vector<Elem>;  // ascending, exactly degree() entries

  ExtField(FieldPtr base, std::vector<Elem> modulus);

  const FieldPtr& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return degree_; }
  /// Monic irreducible modulus over the base field, ascending coefficients.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }
  /// Q^m.
  BigInt order() const;

  Value zero() const { return Value(degree_, kZero); }
  Value one() const { return embed(kOne); }
  Value embed(Elem a) const;
  bool is_base(const Value& v) const;
  bool is_zero(const Value& v) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;
  Value pow(const Value& a, const BigInt& e) const;

  /// Uniformly random element (may be zero).
  Value random(std::mt19937_64& rng) const;

  /// An element of multiplicative order exactly n. Requires n | Q^m - 1;
  /// throws std::invalid_argument otherwise.
  Value root_of_unity(std::uint64_t n, std::mt19937_64& rng) const;

 private:
  FieldPtr base_;
  unsigned degree_;
  std::vector<Elem> modulus_;
};

/// Builds GF(Q^m) by drawing random monic degree-m polynomials from a
/// seeded generator until one passes Rabin's irreducibility test. m = 1
/// returns the base field itself (modulus x).
ExtField ext_field_make(FieldPtr base, unsigned m, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// True when the monic polynomial `f` (ascending) is irreducible over `base`.
bool is_irreducible(const FieldPtr& base, const std::vector<Elem>& f);

/// Distinct prime factors of v, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// Multiplicative order of a modulo n (gcd(a, n) must be 1, n >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

}  // namespace qcx
