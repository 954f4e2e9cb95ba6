#pragma once

#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"

namespace nccr {

inline constexpr const char* kReportVersion = "nccr-report/1";

/// Parsed input file:
///   {"group": {"free_rank": 1, "torsion": [2]}, "weights": [[1, 0], [1, 1], ...]}
/// Each weight lists its free coordinate (rank one only) followed by one
/// residue per torsion entry. Torsion lists need not be a divisor chain;
/// they are canonicalized and the weights mapped accordingly.
struct InputDocument {
  FGGroup group;
  std::vector<GroupElement> weights;
  /// Coordinate change from raw input coordinates to `group`.
  IntMatrix to_group;

  GroupElement from_raw(const std::vector<Int>& coords) const;
};

/// Throws UsageError("ParseError").
InputDocument parse_input(const std::string& json_text);
InputDocument load_input(const std::string& path);

}  // namespace nccr
