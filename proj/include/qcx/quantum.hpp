#pragma once

#include "qcx/gf.hpp"
#include "qcx/matrix.hpp"
#include "qcx/qc_code.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace qcx {

/// [n, k, d]_Q of a classical code.
struct LinearParams {
  std::size_t n = 0, k = 0, d = 0;
  unsigned Q = 0;

  std::string to_string() const;
  bool operator==(const LinearParams&) const = default;
};

struct QeccParams {
  enum class Source { Theorem3, Theorem4One, Theorem4Two, Lengthened };

  std::size_t n = 0, k = 0, d = 0;
  unsigned q = 0;
  bool pure = false;
  Source source = Source::Theorem3;

  /// "[[31,17,5]]_2"
  std::string to_string() const;
  nlohmann::json to_json() const;
};

struct EaqeccParams {
  enum class Source { Theorem5, Theorem7Primal, Theorem7Dual, Theorem8One, Theorem8Two };

  std::size_t n = 0, k = 0, d = 0, c = 0;
  unsigned q = 0;
  bool maximal = false;
  Source source = Source::Theorem5;

  /// "[[14,6,7;8]]_2"
  std::string to_string() const;
  nlohmann::json to_json() const;
};

std::string source_name(QeccParams::Source s);
std::string source_name(EaqeccParams::Source s);

/// [[n, n - 2k, d_impure]]_q from a Hermitian self-orthogonal [n, k] code
/// over GF(q^2). pure when d_impure equals the plain dual distance.
QeccParams qecc_from_self_orthogonal(std::size_t n, std::size_t k, std::size_t d_impure, std::size_t d_dual,
                                     unsigned q);

struct Theorem4Dims {
  std::size_t n_one, k_one;  // one extension column
  std::size_t n_two, k_two;  // two extension columns
};
/// (2n+1, 2 deg g - 1) and (2n+2, 2 deg g - 2); no distance involved.
/// Throws PreconditionError("deg-g-too-small") when a dimension would be negative.
Theorem4Dims qecc_dims_theorem4(std::size_t n, std::size_t deg_g);

/// [[n+1, k, d]]_q.
QeccParams lengthen(const QeccParams& p);

struct GvVerdict {
  bool applicable = false;
  BigInt lhs = 0, rhs = 0;
  /// lhs > rhs: a pure [[n,k,d]]_q code is guaranteed to exist.
  bool guaranteed = false;

  /// Human-readable verdict line.
  std::string describe() const;
  nlohmann::json to_json() const;
};
/// lhs = (q^(n-k+2) - 1)/(q^2 - 1), rhs = sum_{i=1}^{d-1} (q^2-1)^(i-1) C(n,i).
/// Inputs outside n > k >= 2, n = k mod 2, d >= 2 return applicable = false.
GvVerdict gv_bound(std::size_t n, std::size_t k, std::size_t d, unsigned q);

/// [[n, 2k - n + c, d; c]]_q from an [n, k, d] code with parity-check rank c.
/// Throws PreconditionError("bad-ebits") unless 0 <= 2k - n + c and c <= n - (2k - n + c).
EaqeccParams eaqecc_theorem5(std::size_t n, std::size_t k, std::size_t d, std::size_t c, unsigned q);
/// Same, with c = rank(H H^dag) taken from the matrices and cross-checked
/// against rank(G G^dag) + n - 2k and the hull dimension.
EaqeccParams eaqecc_theorem5(const Mat& G, const Mat& H, std::size_t d, unsigned q);

/// The maximal-entanglement pair [[2n, n - deg g, d; n + deg g]] and
/// [[2n, n + deg g, d_dual; n - deg g]]. Throws PreconditionError
/// "h1h1-singular" or "one-is-eigenvalue" when a Theorem 7 condition fails.
std::pair<EaqeccParams, EaqeccParams> eaqecc_theorem7(const QcCode& code, std::size_t d, std::size_t d_dual);

/// [[2n+1, n + deg g, d'; n - deg g + 1]] or [[2n+2, n + deg g, d''; n - deg g + 2]]
/// where d', d'' are the Hermitian dual distances of the extended code.
/// Throws PreconditionError("q-equals-2") for binary q and
/// PreconditionError("not-entanglement-extension") unless built under Prop 2.
EaqeccParams eaqecc_theorem8(const QcCode& base, const ExtendedCode& ext, std::size_t d_dual_ext);

}  // namespace qcx
