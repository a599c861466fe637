#include "qcx/gf.hpp"

#include "dense_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qcx {
namespace {

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as ascending unsigned coefficient vectors.
using PrimePoly = std::vector<unsigned>;

PrimePoly prime_mod(const PrimePoly& a, const PrimePoly& m, unsigned p) {
  PrimePoly r = a;
  const std::size_t dm = m.size() - 1;
  // m is monic
  for (std::size_t i = r.size(); i-- > dm;) {
    const unsigned c = r[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] = (r[i - dm + j] + p * p - c * m[j] % p) % p;
  }
  r.resize(std::min(r.size(), dm));
  return r;
}

bool has_monic_divisor_of_degree(const PrimePoly& f, unsigned p, unsigned deg) {
  // every monic polynomial of degree `deg` over GF(p)
  std::vector<unsigned> low(deg, 0);
  for (;;) {
    PrimePoly d(low.begin(), low.end());
    d.push_back(1);
    const PrimePoly r = prime_mod(f, d, p);
    bool zero = true;
    for (unsigned c : r) zero = zero && (c % p == 0);
    if (zero) return true;
    std::size_t i = 0;
    while (i < deg && ++low[i] == p) low[i++] = 0;
    if (i == deg) return false;
  }
}

}  // namespace

Field::Field(unsigned p, std::vector<unsigned> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::invalid_argument("field modulus must be monic of degree >= 1");
  for (unsigned c : modulus_)
    if (c >= p_) throw std::invalid_argument("field modulus coefficient out of range");
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
  if (degree_ % 2 != 0) throw std::invalid_argument("field degree over GF(p) must be even (GF(q^2))");
  order_ = 1;
  for (unsigned i = 0; i < degree_; ++i) order_ *= p_;
  if (order_ > 256) throw std::invalid_argument("field order above 256 is not supported");
  q_ = 1;
  for (unsigned i = 0; i < degree_ / 2; ++i) q_ *= p_;

  for (unsigned d = 1; d <= degree_ / 2; ++d)
    if (has_monic_divisor_of_degree(modulus_, p_, d))
      throw std::invalid_argument("field modulus is reducible");

  // Powers of the root t of the modulus, as component vectors.
  const unsigned group = order_ - 1;
  comps_.assign(static_cast<std::size_t>(order_) * degree_, 0);
  from_vec_.assign(order_, 0);
  std::vector<bool> seen(order_, false);
  seen[0] = true;
  std::vector<unsigned> cur(degree_, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < group; ++k) {
    unsigned packed = 0;
    for (unsigned j = degree_; j-- > 0;) packed = packed * p_ + cur[j];
    if (seen[packed]) throw std::invalid_argument("field modulus root is not primitive");
    seen[packed] = true;
    const auto digit = static_cast<std::uint8_t>(k + 1);
    from_vec_[packed] = digit;
    for (unsigned j = 0; j < degree_; ++j) comps_[digit * degree_ + j] = static_cast<std::uint8_t>(cur[j]);
    // multiply by t
    const unsigned top = cur[degree_ - 1];
    for (unsigned j = degree_ - 1; j > 0; --j) cur[j] = (cur[j - 1] + p_ * p_ - top * modulus_[j] % p_) % p_;
    cur[0] = (p_ * p_ - top * modulus_[0] % p_) % p_;
  }
  if (!(cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](unsigned c) { return c == 0; })))
    throw std::invalid_argument("field modulus root does not have order Q-1");

  const std::size_t Q = order_;
  add_.assign(Q * Q, 0);
  mul_.assign(Q * Q, 0);
  neg_.assign(Q, 0);
  inv_.assign(Q, 0);
  conj_.assign(Q, 0);
  std::vector<std::uint8_t> tmp(degree_);
  for (std::size_t a = 0; a < Q; ++a) {
    for (std::size_t b = 0; b < Q; ++b) {
      for (unsigned j = 0; j < degree_; ++j)
        tmp[j] = static_cast<std::uint8_t>((comps_[a * degree_ + j] + comps_[b * degree_ + j]) % p_);
      add_[a * Q + b] = from_components(tmp).digit;
      if (a != 0 && b != 0) mul_[a * Q + b] = static_cast<std::uint8_t>((a - 1 + b - 1) % group + 1);
    }
    for (unsigned j = 0; j < degree_; ++j)
      tmp[j] = static_cast<std::uint8_t>((p_ - comps_[a * degree_ + j]) % p_);
    neg_[a] = from_components(tmp).digit;
    if (a != 0) {
      inv_[a] = static_cast<std::uint8_t>((group - (a - 1)) % group + 1);
      conj_[a] = static_cast<std::uint8_t>(((a - 1) * q_) % group + 1);
    }
  }
}

std::size_t Field::check(Elem a) const {
  if (a.digit >= order_) throw std::invalid_argument("element digit out of range for field");
  return a.digit;
}

Elem Field::inv(Elem a) const {
  if (check(a) == 0) throw std::domain_error("inverse of zero");
  return Elem{inv_[a.digit]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  check(a);
  if (e == 0) return kOne;
  if (a.is_zero()) return kZero;
  const std::uint64_t group = order_ - 1;
  return Elem{static_cast<std::uint8_t>(((a.digit - 1) * (e % group)) % group + 1)};
}

Elem Field::from_log(long long k) const {
  const long long group = order_ - 1;
  return Elem{static_cast<std::uint8_t>(((k % group) + group) % group + 1)};
}

unsigned Field::log(Elem a) const {
  if (check(a) == 0) throw std::domain_error("log of zero");
  return a.digit - 1u;
}

Elem Field::from_int(long long v) const {
  std::vector<std::uint8_t> c(degree_, 0);
  const long long pp = p_;
  c[0] = static_cast<std::uint8_t>(((v % pp) + pp) % pp);
  return from_components(c);
}

bool Field::in_prime_field(Elem a) const { return conj(a) == a && pow(a, p_) == a; }

std::span<const std::uint8_t> Field::components(Elem a) const {
  return {comps_.data() + check(a) * degree_, degree_};
}

Elem Field::from_components(std::span<const std::uint8_t> c) const {
  if (c.size() != degree_) throw std::invalid_argument("component vector has wrong length");
  unsigned packed = 0;
  for (std::size_t j = degree_; j-- > 0;) {
    if (c[j] >= p_) throw std::invalid_argument("component out of range");
    packed = packed * p_ + c[j];
  }
  return Elem{from_vec_[packed]};
}

std::string Field::to_string(Elem a) const {
  check(a);
  if (order_ <= 10 || a.digit <= 1) return std::to_string(a.digit);
  return "z^" + std::to_string(a.digit - 1);
}

FieldPtr field_make(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  FieldPtr f;
  switch (q) {
    case 2: f = std::make_shared<const Field>(2, std::vector<unsigned>{1, 1, 1}); break;
    case 3: f = std::make_shared<const Field>(3, std::vector<unsigned>{2, 2, 1}); break;
    case 9: f = std::make_shared<const Field>(3, std::vector<unsigned>{2, 0, 0, 2, 1}); break;
    default:
      throw std::invalid_argument("unsupported base size q=" + std::to_string(q) + " (expected 2, 3 or 9)");
  }
  cache.emplace(q, f);
  return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  return a && b && *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw std::invalid_argument("operands belong to different fields");
}

// ---------------------------------------------------------------------------
// Extension fields

ExtField::ExtField(FieldPtr base, std::vector<Elem> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  detail::trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != kOne)
    throw std::invalid_argument("extension modulus must be monic of degree >= 1");
  degree_ = static_cast<unsigned>(modulus_.size() - 1);
}

BigInt ExtField::order() const {
  BigInt r = 1;
  for (unsigned i = 0; i < degree_; ++i) r *= base_->order();
  return r;
}

ExtField::Value ExtField::embed(Elem a) const {
  Value v(degree_, kZero);
  v[0] = a;
  return v;
}

bool ExtField::is_base(const Value& v) const {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

bool ExtField::is_zero(const Value& v) const {
  for (Elem e : v)
    if (!e.is_zero()) return false;
  return true;
}

namespace {
ExtField::Value pad(detail::Coeffs c, unsigned m) {
  c.resize(m, kZero);
  return c;
}
}  // namespace

ExtField::Value ExtField::add(const Value& a, const Value& b) const {
  return pad(detail::add(*base_, a, b), degree_);
}

ExtField::Value ExtField::sub(const Value& a, const Value& b) const {
  return pad(detail::sub(*base_, a, b), degree_);
}

ExtField::Value ExtField::neg(const Value& a) const { return sub(zero(), a); }

ExtField::Value ExtField::mul(const Value& a, const Value& b) const {
  return pad(detail::mulmod(*base_, a, b, modulus_), degree_);
}

ExtField::Value ExtField::pow(const Value& a, const BigInt& e) const {
  return pad(detail::powmod(*base_, a, e, modulus_), degree_);
}

ExtField::Value ExtField::random(std::mt19937_64& rng) const {
  Value v(degree_);
  for (auto& c : v) c = Elem{static_cast<std::uint8_t>(rng() % base_->order())};
  return v;
}

ExtField::Value ExtField::root_of_unity(std::uint64_t n, std::mt19937_64& rng) const {
  if (n == 0) throw std::invalid_argument("root of unity order must be positive");
  const BigInt group = order() - 1;
  if (group % n != 0) throw std::invalid_argument("n does not divide the multiplicative group order");
  if (n == 1) return one();
  const BigInt cofactor = group / n;
  const auto primes = prime_factors(n);
  for (;;) {
    Value a = random(rng);
    if (is_zero(a)) continue;
    Value b = pow(a, cofactor);
    bool primitive = true;
    for (std::uint64_t r : primes) {
      if (pow(b, BigInt(n / r)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) return b;
  }
}

bool is_irreducible(const FieldPtr& base, const std::vector<Elem>& f) {
  detail::Coeffs m = f;
  detail::trim(m);
  const int deg = detail::degree(m);
  if (deg < 1) return false;
  if (deg == 1) return true;
  const Field& F = *base;
  const detail::Coeffs x{kZero, kOne};
  // frob[i] = x^(Q^i) mod f
  std::vector<detail::Coeffs> frob{detail::mod(F, x, m)};
  for (int i = 1; i <= deg; ++i) frob.push_back(detail::powmod(F, frob.back(), BigInt(F.order()), m));
  if (detail::sub(F, frob[static_cast<std::size_t>(deg)], detail::mod(F, x, m)).size() != 0) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(deg))) {
    const auto diff = detail::sub(F, frob[static_cast<std::size_t>(deg) / r], x);
    if (detail::degree(detail::gcd(F, diff, m)) != 0) return false;
  }
  return true;
}

ExtField ext_field_make(FieldPtr base, unsigned m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
  if (m == 1) return ExtField(base, {kZero, kOne});
  std::mt19937_64 rng(seed);
  const unsigned Q = base->order();
  for (;;) {
    std::vector<Elem> f(m + 1);
    for (unsigned i = 0; i < m; ++i) f[i] = Elem{static_cast<std::uint8_t>(rng() % Q)};
    f[m] = kOne;
    if (f[0].is_zero()) continue;
    if (is_irreducible(base, f)) return ExtField(base, f);
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a) % n);
  }
  throw std::invalid_argument("a is not invertible modulo n");
}

}  // namespace qcx
