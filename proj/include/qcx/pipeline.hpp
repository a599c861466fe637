#pragma once

#include "qcx/gf.hpp"
#include "qcx/poly.hpp"
#include "qcx/qc_code.hpp"
#include "qcx/quantum.hpp"
#include "qcx/weight.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qcx {

enum class SpecMode { Base, ExtendOne, ExtendTwo };

std::string mode_name(SpecMode m);

/// Input document describing one code: field, length, f, g and the optional
/// extension rows. Polynomials and vectors are kept as written (compact
/// notation or a JSON array of digits / "z^k" tokens).
struct CodeSpec {
  std::string name;
  unsigned q = 2;
  std::size_t n = 0;
  nlohmann::json f, g;
  std::optional<nlohmann::json> x1, x2;
  nlohmann::json alpha1 = 1, alpha2 = 1;
  SpecMode mode = SpecMode::Base;
  std::optional<BigInt> enum_budget;

  /// Throws SpecError with a field-specific code on malformed input.
  static CodeSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// A spec resolved against its field.
struct ParsedSpec {
  FieldPtr field;
  RingPoly f;
  Poly g;
  std::optional<std::vector<Elem>> x1, x2;
  Elem alpha1 = kOne, alpha2 = kOne;
};

ParsedSpec parse_spec(const CodeSpec& spec);

/// Polynomial or vector given as compact text or a JSON array.
std::vector<Elem> parse_elems(const nlohmann::json& v, const FieldPtr& field, const std::string& what);
Elem parse_elem(const nlohmann::json& v, const FieldPtr& field, const std::string& what);

struct EvalOptions {
  /// Message budget; unset means the default (2^32), or no limit with allow_long.
  std::optional<BigInt> budget;
  bool allow_long = false;
  unsigned threads = 0;
  /// Report gated enumerations as skipped instead of throwing BudgetExceeded.
  bool skip_gated = false;
  /// Extension rows missing from an extend-mode spec are searched for.
  bool find_missing_x = false;
};

/// Messages x length above which a run counts as long-running.
BigInt long_run_threshold();

struct Cost {
  BigInt messages;
  BigInt symbols;  // messages x length
  bool long_run = false;
};
Cost enumeration_cost(unsigned Q, std::size_t k, std::size_t length);

struct Report {
  nlohmann::json spec;
  std::string status = "ok";  // or "skipped (long-run)"
  Cost cost;

  // base quasi-cyclic code
  std::size_t n = 0, k = 0, deg_g = 0;
  bool f_coprime = false;
  SelfOrthogonality self_orth;
  std::size_t gram_rank = 0, hull_dim = 0, ebits = 0;
  bool psi_closed = false;
  std::optional<Theorem7Check> theorem7;

  std::optional<ExtendedCode> extension;

  // the code under study (base or extended) and its Hermitian dual
  LinearParams code, dual;
  bool distances_known = false;
  std::optional<WeightEnumerator> enumerator, dual_enumerator;

  std::vector<QeccParams> qecc;
  std::vector<EaqeccParams> eaqecc;
  std::vector<GvVerdict> gv;  // one per qecc entry

  double seconds = 0;

  /// Every parameter string the report derives ("[31,7,16]_4", "[[31,17,5]]_2", ...).
  std::vector<std::string> parameter_strings() const;

  nlohmann::json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

/// Runs construction, enumeration and parameter derivation for one spec.
Report evaluate(const CodeSpec& spec, const EvalOptions& opts = {});

}  // namespace qcx
