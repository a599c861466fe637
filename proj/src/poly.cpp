#include "qcx/poly.hpp"

#include "dense_poly.hpp"
#include "qcx/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcx {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("polynomial needs a field");
  detail::trim(coeffs_);
}

Poly Poly::monomial(FieldPtr field, std::size_t k, Elem c) {
  std::vector<Elem> v(k + 1, kZero);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::xn_minus_1(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, kZero);
  v[0] = field->neg(kOne);
  v[n] = field->add(v[n], kOne);
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const { return Poly(field_, detail::make_monic(*field_, coeffs_)); }

Elem Poly::eval(Elem x) const {
  Elem acc = kZero;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  return Poly(a.field_, detail::add(*a.field_, a.coeffs_, b.coeffs_));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  return Poly(a.field_, detail::sub(*a.field_, a.coeffs_, b.coeffs_));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field_, b.field_);
  return Poly(a.field_, detail::mul(*a.field_, a.coeffs_, b.coeffs_));
}

Poly Poly::scaled(Elem c) const { return Poly(field_, detail::scale(*field_, coeffs_, c)); }

bool Poly::operator==(const Poly& other) const {
  return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  const bool wide = field_->order() > 10;
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Elem c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const bool unit = c == kOne;
    if (!unit || i == 0) {
      out += field_->to_string(c);
      if (wide && i > 0) out += '*';
    }
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  auto [q, r] = detail::divmod(*a.field(), a.coeffs(), b.coeffs());
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  return Poly(a.field(), detail::gcd(*a.field(), a.coeffs(), b.coeffs()));
}

bool divides(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero()) return b.is_zero();
  return divmod(b, a).remainder.is_zero();
}

Poly quotient(const Poly& b, const Poly& a) {
  if (a.is_zero()) throw PreconditionError("non-exact-division", "division by the zero polynomial");
  auto [q, r] = divmod(b, a);
  if (!r.is_zero()) throw PreconditionError("non-exact-division", "polynomial division is not exact");
  return q;
}

// ---------------------------------------------------------------------------

RingPoly::RingPoly(FieldPtr field, std::size_t n) : field_(std::move(field)), coeffs_(n, kZero) {
  if (n == 0) throw std::invalid_argument("ring length must be positive");
}

RingPoly::RingPoly(FieldPtr field, std::size_t n, std::vector<Elem> coeffs) : RingPoly(std::move(field), n) {
  detail::trim(coeffs);
  if (coeffs.size() > n) throw std::invalid_argument("too many coefficients for R_n");
  for (Elem c : coeffs)
    if (c.digit >= field_->order()) throw std::invalid_argument("coefficient outside field");
  std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

RingPoly RingPoly::from_poly(const Poly& p, std::size_t n) {
  RingPoly r(p.field(), n);
  const Field& F = *p.field();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.coeffs_[i % n] = F.add(r.coeffs_[i % n], p.coeffs()[i]);
  return r;
}

int RingPoly::degree() const noexcept { return detail::degree(coeffs_); }

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.n() != b.n()) throw std::invalid_argument("ring lengths differ");
  RingPoly r(a.field_, a.n());
  for (std::size_t i = 0; i < a.n(); ++i) r.coeffs_[i] = a.field_->add(a.coeffs_[i], b.coeffs_[i]);
  return r;
}

RingPoly RingPoly::operator-() const {
  RingPoly r(field_, n());
  for (std::size_t i = 0; i < n(); ++i) r.coeffs_[i] = field_->neg(coeffs_[i]);
  return r;
}

RingPoly mul_mod(const RingPoly& a, const RingPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.n() != b.n()) throw std::invalid_argument("ring lengths differ");
  const std::size_t n = a.n();
  const Field& F = *a.field_;
  RingPoly r(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = r.coeffs_[(i + j) % n];
      slot = F.add(slot, F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return r;
}

RingPoly RingPoly::shifted(std::size_t k) const {
  RingPoly r(field_, n());
  for (std::size_t i = 0; i < n(); ++i) r.coeffs_[(i + k) % n()] = coeffs_[i];
  return r;
}

bool RingPoly::operator==(const RingPoly& other) const {
  return same_field(field_, other.field_) && coeffs_ == other.coeffs_;
}

RingPoly bar(const RingPoly& f) {
  const std::size_t n = f.n();
  std::vector<Elem> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = f[(n - i) % n];
  return RingPoly(f.field(), n, std::move(c));
}

RingPoly frob_poly(const RingPoly& f) {
  std::vector<Elem> c(f.coeffs());
  for (auto& e : c) e = f.field()->conj(e);
  return RingPoly(f.field(), f.n(), std::move(c));
}

Poly frob_poly(const Poly& f) {
  std::vector<Elem> c(f.coeffs());
  for (auto& e : c) e = f.field()->conj(e);
  return Poly(f.field(), std::move(c));
}

Poly dual_gen(const Poly& g, std::size_t n) { return reciprocal_dual(g, n).monic(); }

Poly reciprocal_dual(const Poly& g, std::size_t n) {
  const Poly xn = Poly::xn_minus_1(g.field(), n);
  if (!divides(g, xn)) throw PreconditionError("g-not-divisor", "g(x) does not divide x^n - 1");
  const Poly h = quotient(xn, g).monic();
  std::vector<Elem> rev(h.coeffs().rbegin(), h.coeffs().rend());
  return frob_poly(Poly(g.field(), std::move(rev)));
}

// ---------------------------------------------------------------------------
// Compact notation

namespace {

class CompactParser {
 public:
  CompactParser(std::string_view s, const Field& field) : s_(s), field_(field) {}

  std::vector<Elem> parse() {
    auto out = seq(false);
    if (pos_ != s_.size()) fail("unexpected ')'");
    if (out.empty()) fail("empty notation");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("bad-compact", "compact notation \"" + std::string(s_) + "\" at offset " +
                                       std::to_string(pos_) + ": " + what);
  }

  std::vector<Elem> seq(bool nested) {
    std::vector<Elem> out;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      std::vector<Elem> atom;
      const char c = s_[pos_];
      if (c == '(') {
        ++pos_;
        atom = seq(true);
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("unbalanced '('");
        ++pos_;
        if (atom.empty()) fail("empty group");
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const unsigned d = static_cast<unsigned>(c - '0');
        if (d >= field_.order()) fail("digit " + std::to_string(d) + " not below Q=" + std::to_string(field_.order()));
        atom.push_back(Elem{static_cast<std::uint8_t>(d)});
        ++pos_;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      std::size_t count = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        count = repeat_count();
      }
      for (std::size_t r = 0; r < count; ++r) out.insert(out.end(), atom.begin(), atom.end());
      if (out.size() > kMaxExpansion) fail("expansion too long");
    }
    if (!nested && pos_ < s_.size()) fail("unexpected ')'");
    return out;
  }

  std::size_t repeat_count() {
    if (pos_ >= s_.size()) fail("missing repeat count");
    std::size_t count = 0;
    if (s_[pos_] == '{') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        count = count * 10 + static_cast<std::size_t>(s_[pos_] - '0');
        if (count > kMaxExpansion) fail("repeat count too large");
        ++pos_;
      }
      if (pos_ == start || pos_ >= s_.size() || s_[pos_] != '}') fail("malformed braced repeat count");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      count = static_cast<std::size_t>(s_[pos_] - '0');
      ++pos_;
    } else {
      fail("missing repeat count");
    }
    if (count == 0) fail("repeat count must be positive");
    return count;
  }

  static constexpr std::size_t kMaxExpansion = 1u << 20;

  std::string_view s_;
  const Field& field_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Elem> parse_token_list(std::string_view s, const Field& field) {
  std::vector<Elem> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    const std::string_view tok = strip(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (tok.empty()) throw SpecError("bad-compact", "empty token in list \"" + std::string(s) + "\"");
    if (tok.size() > 2 && (tok[0] == 'z' || tok[0] == 'Z') && tok[1] == '^') {
      long long k = 0;
      for (char c : tok.substr(2)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw SpecError("bad-compact", "bad exponent token \"" + std::string(tok) + "\"");
        k = k * 10 + (c - '0');
        if (k > 1'000'000) throw SpecError("bad-compact", "exponent too large in \"" + std::string(tok) + "\"");
      }
      out.push_back(field.from_log(k));
    } else {
      unsigned d = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw SpecError("bad-compact", "bad digit token \"" + std::string(tok) + "\"");
        d = d * 10 + static_cast<unsigned>(c - '0');
        if (d >= field.order())
          throw SpecError("bad-compact", "digit \"" + std::string(tok) + "\" not below Q=" + std::to_string(field.order()));
      }
      out.push_back(Elem{static_cast<std::uint8_t>(d)});
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Elem> expand_compact(std::string_view s, const FieldPtr& field) {
  if (field->order() > 9) return parse_token_list(s, *field);
  return CompactParser(s, *field).parse();
}

RingPoly parse_compact(std::string_view s, const FieldPtr& field, std::size_t n) {
  auto digits = expand_compact(s, field);
  if (digits.size() > n)
    throw SpecError("bad-compact", "compact notation \"" + std::string(s) + "\" expands to " +
                                       std::to_string(digits.size()) + " coefficients, more than n=" +
                                       std::to_string(n));
  return RingPoly(field, n, std::move(digits));
}

std::string render_compact(const std::vector<Elem>& coeffs, const FieldPtr& field) {
  const int deg = detail::degree(coeffs);
  if (deg < 0) return "0";
  const auto len = static_cast<std::size_t>(deg) + 1;
  std::string out;
  if (field->order() > 9) {
    for (std::size_t i = 0; i < len; ++i) {
      if (i) out += ',';
      out += std::to_string(coeffs[i].digit);
    }
    return out;
  }
  for (std::size_t i = 0; i < len;) {
    std::size_t j = i;
    while (j < len && coeffs[j] == coeffs[i]) ++j;
    const std::size_t run = j - i;
    out += static_cast<char>('0' + coeffs[i].digit);
    if (run > 9)
      out += "^{" + std::to_string(run) + "}";
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factoring x^n - 1

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::uint64_t Q, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> coset;
    std::size_t t = s;
    while (!seen[t]) {
      seen[t] = true;
      coset.push_back(t);
      t = static_cast<std::size_t>((static_cast<unsigned __int128>(t) * Q) % n);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<IrreducibleFactor> factor_xn_minus_1(const FieldPtr& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n % field->p() == 0)
    throw PreconditionError("n-divisible-by-p", "factoring x^n - 1 requires gcd(n, p) = 1 (n=" + std::to_string(n) +
                                                    ", p=" + std::to_string(field->p()) + ")");
  const std::uint64_t Q = field->order();
  const auto m = static_cast<unsigned>(multiplicative_order(Q % n, n));
  const ExtField ext = ext_field_make(field, m);
  std::mt19937_64 rng(0x5eed0000ULL + n);
  const ExtField::Value beta = ext.root_of_unity(n, rng);

  std::vector<ExtField::Value> powers{ext.one()};
  for (std::size_t s = 1; s < n; ++s) powers.push_back(ext.mul(powers.back(), beta));

  std::vector<IrreducibleFactor> out;
  for (auto& coset : cyclotomic_cosets(Q, n)) {
    // prod (x - beta^s) with coefficients in GF(Q^m)
    std::vector<ExtField::Value> acc{ext.one()};
    for (std::size_t s : coset) {
      std::vector<ExtField::Value> next(acc.size() + 1, ext.zero());
      const auto root = ext.neg(powers[s]);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i] = ext.add(next[i], ext.mul(acc[i], root));
        next[i + 1] = ext.add(next[i + 1], acc[i]);
      }
      acc = std::move(next);
    }
    std::vector<Elem> coeffs;
    for (const auto& c : acc) {
      if (!ext.is_base(c)) throw std::logic_error("minimal polynomial has coefficients outside GF(Q)");
      coeffs.push_back(c[0]);
    }
    out.push_back({Poly(field, std::move(coeffs)), std::move(coset)});
  }
  return out;
}

}  // namespace qcx
