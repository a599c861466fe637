#include "dense_poly.hpp"

#include <stdexcept>

namespace qcx::detail {

Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), kZero);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Coeffs scale(const Field& f, const Coeffs& a, Elem c) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> divmod(const Field& f, const Coeffs& a, const Coeffs& b) {
  const int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Coeffs r = a;
  trim(r);
  const int da = degree(r);
  if (da < db) return {Coeffs{}, r};
  Coeffs quot(static_cast<std::size_t>(da - db + 1), kZero);
  const Elem lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (int i = da; i >= db; --i) {
    const Elem c = r[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Elem factor = f.mul(c, lead_inv);
    const auto shift = static_cast<std::size_t>(i - db);
    quot[shift] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[shift + static_cast<std::size_t>(j)];
      slot = f.sub(slot, f.mul(factor, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(quot);
  trim(r);
  return {quot, r};
}

Coeffs mod(const Field& f, const Coeffs& a, const Coeffs& b) { return divmod(f, a, b).second; }

Coeffs make_monic(const Field& f, const Coeffs& a) {
  Coeffs r = a;
  trim(r);
  if (r.empty()) return r;
  return scale(f, r, f.inv(r.back()));
}

Coeffs gcd(const Field& f, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, a);
}

Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  return mod(f, mul(f, a, b), m);
}

Coeffs powmod(const Field& f, const Coeffs& base, const BigInt& e, const Coeffs& m) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Coeffs result = mod(f, Coeffs{kOne}, m);
  Coeffs b = mod(f, base, m);
  const std::size_t bits = e == 0 ? 0 : msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(f, result, result, m);
    if (bit_test(e, static_cast<unsigned>(i))) result = mulmod(f, result, b, m);
  }
  return result;
}

}  // namespace qcx::detail
