#pragma once

#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/cm_nccr.hpp"
#include "nccr/weight_system.hpp"

namespace nccr {

/// One irreducible monomial x^a giving a map S_source -> S_target.
struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<Int> exponents;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Vertices are sorted G-degrees; arrows sorted by (source, target, exponents).
struct Quiver {
  FGGroup group;
  std::vector<GroupElement> vertices;
  std::vector<Arrow> arrows;

  std::size_t loop_count() const;
};

struct ArrowSearch {
  Quiver quiver;
  Int bound = 0;
  std::vector<std::string> warnings;
};

/// Number of monomials of total degree <= bound and degree h - g.
std::size_t hom_monomial_count(const WeightSystem& ws, const GroupElement& g, const GroupElement& h, Int bound);

/// (l + l') * (1 + max conductor + pi(p))
Int default_search_bound(const Classifier& c);

/// Irreducible monomials of total degree <= bound between vertices of V:
/// x^a from s is irreducible when no proper nonzero sub-monomial x^b has
/// s + deg(x^b) in V.
Quiver arrows_at_bound(const WeightSystem& ws, const VertexSet& v, Int bound);

/// arrows_at_bound plus a stability check at twice the bound; a changed
/// arrow set adds a "BoundTooSmall" warning.
ArrowSearch arrows(const WeightSystem& ws, const VertexSet& v, Int bound);

/// Finite G: vertices all of G, one arrow g -> g + x_i per weight.
/// Throws UsageError("InfiniteGroup") for rank-one groups.
Quiver mckay_quiver(const WeightSystem& ws);

/// "x1^2*x3", "1" for the zero vector.
std::string monomial_label(const std::vector<Int>& exponents);

std::string emit_dot(const Quiver& q);

/// Every arrow satisfies deg(x^a) = target - source.
bool degree_coherent(const WeightSystem& ws, const Quiver& q);

/// Every monomial of total degree <= bound between two vertices factors as
/// a product of arrows along a path.
bool path_generated(const WeightSystem& ws, const Quiver& q, Int bound);

}  // namespace nccr
