#pragma once

#include <vector>

#include "nccr/graded_poset.hpp"
#include "nccr/upper_sets.hpp"
#include "nccr/weight_system.hpp"

namespace nccr {

/// Degrees g in G of the divisorial summands S_g of a splitting module.
struct VertexSet {
  std::vector<GroupElement> degrees;  // sorted, unique

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Bookkeeping for the combinatorial mutation: the module-level move
/// iterates the right mutation l' - 1 times (equivalently the left one
/// l - 1 times) at the fixed summand.
struct MutationCertificate {
  VertexSet fixed_part;
  GroupElement removed_orbit;  // m in H
  std::size_t plus_steps = 0;   // l' - 1
  std::size_t minus_steps = 0;  // l - 1
};

struct MutationResult {
  VertexSet mutated;
  MutationCertificate certificate;
};

/// Weight system plus its graded context.
class Classifier {
 public:
  explicit Classifier(WeightSystem ws);

  const WeightSystem& weights() const noexcept { return ws_; }
  const GradedContext& context() const noexcept { return ctx_; }
  const FGGroup& g() const noexcept { return ws_.group(); }
  const FGGroup& h() const noexcept { return ctx_.group(); }

  /// S_g is maximal Cohen-Macaulay: q(g) is neither >= p nor <= -p.
  bool is_mcm(const GroupElement& g) const;
  /// q(V) satisfies the no-x>=y+p condition.
  bool is_modifying(const VertexSet& v) const;
  /// Pairwise formulation: every difference h - g of degrees is MCM.
  bool is_modifying_pairwise(const VertexSet& v) const;
  /// q(V) is a maximal JSet and V is its full preimage.
  bool is_nccr(const VertexSet& v) const;

  /// Kernel of q, sorted.
  const std::vector<GroupElement>& kernel() const noexcept { return kernel_; }
  std::vector<GroupElement> image(const VertexSet& v) const;
  /// q^{-1}(J)
  VertexSet summands(const std::vector<GroupElement>& j) const;
  std::vector<VertexSet> enumerate_nccrs() const;

  /// Throws UsageError("NotNCCR") or UsageError("NotMinimal").
  MutationResult iw_mutation(const VertexSet& v, const GroupElement& m) const;

 private:
  WeightSystem ws_;
  GradedContext ctx_;
  std::vector<GroupElement> kernel_;
};

VertexSet make_vertex_set(std::vector<GroupElement> degrees);

}  // namespace nccr
