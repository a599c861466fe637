#pragma once

#include "qcx/gf.hpp"
#include "qcx/matrix.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qcx {

/// Exact weight distribution A_0..A_n of a linear code.
class WeightEnumerator {
 public:
  WeightEnumerator() = default;
  explicit WeightEnumerator(std::vector<BigInt> counts);

  std::size_t length() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }
  const BigInt& operator[](std::size_t w) const { return counts_.at(w); }
  BigInt total() const;

  /// {"weight": "count"} for every nonzero A_w; counts are decimal strings.
  nlohmann::json to_json() const;
  static WeightEnumerator from_json(const nlohmann::json& j, std::size_t n);

  /// Space-separated "w^c" terms for nonzero A_w, e.g. "0^1 16^3 18^630".
  std::string render() const;
  /// Accepts the rendered form and the typeset form ("16^3 18^{630}"),
  /// ignoring whitespace, '&', '\' and a trailing '.'.
  static WeightEnumerator parse(std::string_view s, std::size_t n);

  bool operator==(const WeightEnumerator& other) const = default;

 private:
  std::vector<BigInt> counts_;
};

struct EnumerateOptions {
  /// Largest number of messages (Q^k) the call may visit.
  BigInt budget = BigInt(1) << 32;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Number of messages Q^k needed to enumerate a k-row generator matrix.
BigInt message_count(unsigned Q, std::size_t k);

/// Exhaustive enumeration of the row space of a full-row-rank G in Q-ary
/// Gray order. Throws BudgetExceeded when Q^k exceeds the budget and
/// PreconditionError("not-full-rank") for dependent rows.
WeightEnumerator enumerate(const Mat& g, const EnumerateOptions& opts = {});

/// Smallest w > 0 with A_w > 0. Throws PreconditionError("zero-code").
std::size_t min_distance(const WeightEnumerator& w);

/// K_j(i) = sum_s (-1)^s (Q-1)^(j-s) C(i,s) C(n-i,j-s).
BigInt krawtchouk(unsigned Q, std::size_t n, std::size_t j, std::size_t i);

/// B_j = Q^-k sum_i A_i K_j(i). Throws PreconditionError("non-exact-division")
/// if any division leaves a remainder or the total is not Q^k.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k, unsigned Q);

std::size_t dual_distance(const WeightEnumerator& w, std::size_t k, unsigned Q);

/// Smallest w > 0 with B_w > A_w, the minimum weight of C^perp \ C for a
/// self-orthogonal C. Throws PreconditionError("self-dual") when B = A.
std::size_t impure_distance(const WeightEnumerator& code, const WeightEnumerator& dual);

}  // namespace qcx
