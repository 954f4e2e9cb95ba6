#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nccr/graded_poset.hpp"

namespace nccr {

/// Finite subset of H encoding an upper set: no two elements x, y satisfy
/// x >= y + p. Elements are kept sorted and unique.
struct JSet {
  std::vector<GroupElement> elements;
  bool maximal = false;

  friend bool operator==(const JSet& a, const JSet& b) { return a.elements == b.elements; }
};

enum class JSetStatus { NotInJTilde, InJTilde, Maximal };

struct JSetCheck {
  JSetStatus status = JSetStatus::InJTilde;
  /// For NotInJTilde: (x, y) with x >= y + p.
  std::optional<std::pair<GroupElement, GroupElement>> witness;
};

/// Translation class of a maximal JSet, held by its normal form.
struct UpperSetClass {
  JSet canonical;
  /// Number of torsion translations fixing the canonical set (1 = free).
  std::size_t stabilizer_order = 1;
};

struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  GroupElement at;  // minimal element mutated in the canonical form of `from`
};

struct ExchangeGraph {
  std::vector<UpperSetClass> nodes;
  std::vector<ExchangeEdge> edges;
  bool connected = false;
};

/// Sorts and deduplicates.
std::vector<GroupElement> sorted_unique(std::vector<GroupElement> elems);

JSetCheck jset_check(const GradedContext& ctx, const std::vector<GroupElement>& elems);
bool is_maximal(const GradedContext& ctx, const std::vector<GroupElement>& elems);

/// h in I(J), the up-closure of J.
bool upper_membership(const GradedContext& ctx, const std::vector<GroupElement>& j, const GroupElement& h);

/// The unique n0 with x + n p in I(J) exactly for n >= n0. J non-empty.
Int boundary_index(const GradedContext& ctx, const std::vector<GroupElement>& j, const GroupElement& x);

/// J(I) for I the up-closure of gens: one element r + n0 p per orbit.
JSet j_from_generators(const GradedContext& ctx, const std::vector<GroupElement>& gens);

std::vector<GroupElement> translate_set(const GradedContext& ctx, const std::vector<GroupElement>& elems,
                                        const GroupElement& by);

/// Lexicographically smallest sorted translate whose minimal free part is 0.
std::vector<GroupElement> normal_form(const GradedContext& ctx, const std::vector<GroupElement>& elems);

/// All translation classes of maximal JSets, sorted by normal form.
std::vector<UpperSetClass> enumerate_classes(const GradedContext& ctx);

/// Index into `classes` of the class containing J; nullopt if none.
std::optional<std::size_t> class_index(const GradedContext& ctx, const std::vector<UpperSetClass>& classes,
                                       const std::vector<GroupElement>& j);

/// Minimal elements of J, which are the minimal elements of I(J).
std::vector<GroupElement> minimal_elements(const GradedContext& ctx, const std::vector<GroupElement>& j);

/// J \ {m} u {m + p}. Throws UsageError("NotMinimal").
JSet mutate(const GradedContext& ctx, const JSet& j, const GroupElement& m);

/// J' = mutate(J, m) for a minimal m; with class_level, up to translation.
bool hasse_arrow(const GradedContext& ctx, const JSet& j, const JSet& j2, bool class_level = false);

/// Class-level mutation graph. Throws InternalError("DisconnectedGraph")
/// when the graph is not connected.
ExchangeGraph exchange_graph(const GradedContext& ctx);

std::string format_set(const FGGroup& g, const std::vector<GroupElement>& elems);

}  // namespace nccr
