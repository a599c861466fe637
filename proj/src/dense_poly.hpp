#pragma once

// Dense polynomial kernels over a table field, shared by the extension-field
// code and the public Poly type. Coefficients are ascending; "trimmed" means
// no trailing zero coefficients (the zero polynomial is empty).

#include "qcx/gf.hpp"

#include <utility>
#include <vector>

namespace qcx::detail {

using Coeffs = std::vector<Elem>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline int degree(const Coeffs& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Field& f, const Coeffs& a, Elem c);

/// Quotient and remainder of a by a nonzero b; both trimmed.
std::pair<Coeffs, Coeffs> divmod(const Field& f, const Coeffs& a, const Coeffs& b);
Coeffs mod(const Field& f, const Coeffs& a, const Coeffs& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
Coeffs gcd(const Field& f, Coeffs a, Coeffs b);
Coeffs make_monic(const Field& f, const Coeffs& a);

Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b, const Coeffs& m);
Coeffs powmod(const Field& f, const Coeffs& base, const BigInt& e, const Coeffs& m);

}  // namespace qcx::detail
