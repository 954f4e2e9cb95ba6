#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/weight_system.hpp"

namespace nccr {

struct OrbitPosition {
  GroupElement representative;
  Int shift = 0;  // h = representative + shift * p
};

struct AxiomReport {
  std::size_t samples = 0;
  bool a1 = true;
  bool a2 = true;
  bool a3 = true;
  bool antisymmetry = true;
  std::vector<std::string> violations;

  bool ok() const noexcept { return a1 && a2 && a3 && antisymmetry; }
};

/// The quotient H = G / <torsion weights> ordered by the monoid H_{>=0}
/// spanned by q(x_1), ..., q(x_l), -q(x_{l+1}), ..., -q(x_{l+l'}), with Z
/// acting by translation along p.
///
/// Membership in H_{>=0} is answered from a reachability table that covers
/// every torsion coset up to its conductor; above the conductor every
/// element is a member. The table is filled once at construction, so a
/// finished context is immutable and safe to share between threads.
class GradedContext {
 public:
  /// Requires a validated rank-one system. Throws InternalError
  /// ("InternalInconsistency") if the two expressions for p disagree.
  static GradedContext from_weights(const WeightSystem& ws);

  /// Context from raw data, bypassing weight validation. Generators must
  /// have positive free part and generate H as a group. Used to probe the
  /// axiom checks with deliberately broken periods. q() is the identity.
  static GradedContext from_parts(FGGroup h, std::vector<GroupElement> generators, GroupElement p);

  const FGGroup& group() const noexcept { return h_; }
  const QuotientMap& q() const noexcept { return q_; }
  const GroupElement& p() const noexcept { return p_; }
  /// pi(p)
  Int period() const noexcept { return p_.free; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }

  /// h in H_{>=0}.
  bool monoid_member(const GroupElement& h) const;
  /// Same answer by exhaustive coefficient search with the free-part
  /// budget; independent of the reachability table.
  bool member_by_search(const GroupElement& h) const;
  /// a <= b  iff  b - a in H_{>=0}.
  bool leq(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const { return a != b && leq(a, b); }

  /// Conductor per torsion coset, indexed by FGGroup::torsion_index.
  const std::vector<Int>& conductor() const noexcept { return conductor_; }
  Int conductor_of(const GroupElement& h) const { return conductor_.at(h_.torsion_index(h)); }
  Int max_conductor() const noexcept;

  /// pi(p) * |H_tors|
  std::size_t orbit_count() const;
  /// Elements with free part in [0, pi(p)), one per orbit of Z p, sorted.
  std::vector<GroupElement> orbit_representatives() const;
  OrbitPosition orbit_index(const GroupElement& h) const;

  /// h + n p
  GroupElement translate(const GroupElement& h, Int n) const { return h_.add(h, h_.scale(p_, n)); }

  /// Samples elements in a box around the origin and checks the three
  /// action axioms plus antisymmetry of the order.
  AxiomReport check_axioms(std::size_t sample_size, std::uint64_t seed) const;

 private:
  GradedContext() = default;
  void build_conductor();

  FGGroup h_;
  QuotientMap q_;
  GroupElement p_;
  std::vector<GroupElement> generators_;
  std::vector<Int> conductor_;
  // reachable_[tau][f] for 0 <= f < conductor_[tau]
  std::vector<std::vector<bool>> reachable_;
};

}  // namespace nccr
