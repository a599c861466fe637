#pragma once

#include "qcx/pipeline.hpp"
#include "qcx/poly.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qcx {

/// Monic divisors g of x^n - 1 with dual_gen(g) | g, sorted by degree and
/// then by compact rendering. Throws BudgetExceeded when the factorization
/// has more than max_combinations subsets.
std::vector<Poly> enumerate_self_orthogonal_g(const FieldPtr& field, std::size_t n,
                                              std::uint64_t max_combinations = std::uint64_t(1) << 20);

/// Every monic divisor of x^n - 1 other than 1 and x^n - 1, same order and cap.
std::vector<Poly> enumerate_divisors(const FieldPtr& field, std::size_t n,
                                     std::uint64_t max_combinations = std::uint64_t(1) << 20);

enum class SearchMode {
  Qecc,    // self-orthogonal g, one-column extension, QECC from the extended code
  Eaqecc,  // any proper divisor g, base code, EAQECC pair
};

std::string search_mode_name(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

struct SearchConfig {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t max_f_samples = 16;
  std::uint64_t rng_seed = 1;
  BigInt enum_budget = BigInt(1) << 24;
  SearchMode mode = SearchMode::Qecc;
  std::string output_path;
  /// Largest degree of a sampled f; unset means n - 1.
  std::optional<std::size_t> f_max_degree;
  /// Only g of these degrees when non-empty.
  std::vector<std::size_t> g_degrees;
  std::uint64_t max_combinations = std::uint64_t(1) << 20;
  unsigned threads = 0;

  /// Reads a config document; throws SpecError on bad fields.
  static SearchConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct CodeRecord {
  std::string status = "ok";  // or "skipped"
  unsigned q = 2;
  std::size_t n = 0;
  SearchMode mode = SearchMode::Qecc;
  std::string f, g;
  std::optional<std::string> x1;
  /// Dimension of the code under study; d and d_dual are zero when skipped.
  std::size_t length = 0, k = 0, d = 0, d_dual = 0;
  std::string code, dual;  // "[15,4,8]_4"
  std::vector<std::string> qecc, eaqecc;
  bool self_orthogonal = false, theorem7_ok = false;
  std::string required;  // message count of a skipped candidate
  std::uint64_t seed = 0;
  std::string timestamp;

  /// The spec this record was evaluated from.
  CodeSpec spec() const;
  /// FNV-1a over the record without timestamp and hash.
  std::uint64_t content_hash() const;
  /// Identity of the (f, g) candidate used for resume and dedup.
  std::string candidate_key() const;

  nlohmann::json to_json() const;
  /// Throws SpecError("bad-record") on missing or mistyped fields.
  static CodeRecord from_json(const nlohmann::json& j);

  /// "[31,7,16]_4 / [[31,17,5]]_2"
  std::string summary() const;
};

/// Builds the record for one evaluated report.
CodeRecord make_record(const CodeSpec& spec, const Report& report, SearchMode mode, std::uint64_t seed);

struct SearchStats {
  std::size_t g_count = 0, candidates = 0, evaluated = 0, emitted = 0, skipped = 0, resumed = 0, no_extension = 0;
};

/// Samples f for every qualifying g and appends frontier-improving records to
/// config.output_path (when set). Records already present in the output file
/// are not re-evaluated and seed the frontier. `sink` sees each emitted
/// record in order.
SearchStats search(const SearchConfig& config, const std::function<void(const CodeRecord&)>& sink = {});

struct SummaryRow {
  CodeRecord best;
  std::optional<std::string> reference_id;
  std::vector<std::string> reference_printed;
};

struct RecordSummary {
  std::vector<SummaryRow> rows;  // one per (q, n, mode, k), sorted
  std::vector<std::string> rejected;  // "line 3: ..."
  std::size_t duplicates = 0, skipped = 0;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Best record per (q, n, mode, k), first occurrence wins among duplicates
/// and ties. Throws SpecError("io") when the file cannot be read.
RecordSummary report_records(const std::string& records_path);

}  // namespace qcx
