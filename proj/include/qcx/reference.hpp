#pragma once

#include "qcx/pipeline.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcx {

/// A published code together with the parameters printed next to it.
///
/// The printed fields are reference data for diffing only; evaluation uses
/// nothing but `spec`.
struct ReferenceRow {
  std::string id;       // "example1", "table1-n7", "table1-n31-k16", ...
  std::vector<int> tables;  // printed tables the row appears in; empty for examples
  CodeSpec spec;
  std::vector<std::string> printed;  // "[15,4,8]_4", "[[15,7,3]]_2", ...
  std::string printed_enumerator, printed_dual_enumerator;
  /// Set when the printed inputs cannot describe the printed code.
  std::optional<std::string> malformed;
};

const std::vector<ReferenceRow>& reference_rows();

/// Rows of table 1..6. Throws SpecError("bad-table") for other ids.
std::vector<ReferenceRow> reference_table(int id);

/// Example 1..6. Throws SpecError("bad-example") for other ids.
const ReferenceRow& reference_example(int id);

/// Rows whose exhaustive enumeration stays within the default budget and
/// below the long-run threshold.
bool is_desk_scale(const ReferenceRow& row);

struct RowCheck {
  std::string id;
  std::string status;  // "reproduced", "mismatch", "skipped (long-run)", "malformed", "error"
  std::vector<std::string> missing;  // printed strings not derived
  std::string detail;
  double seconds = 0;
  std::optional<Report> report;

  bool ok() const { return status == "reproduced" || status == "skipped (long-run)" || status == "malformed"; }
};

/// Evaluates the row's spec and compares its derived parameter strings
/// against the printed ones.
RowCheck check_row(const ReferenceRow& row, const EvalOptions& opts = {});

}  // namespace qcx
