#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nccr {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// An element of Z^r x Z/d1 x ... x Z/dk with r in {0,1}. `free` is zero
/// when the ambient group has rank zero. Ordering is by free part, then by
/// torsion residues lexicographically; this is the serialized order used
/// everywhere downstream.
struct GroupElement {
  Int free = 0;
  std::vector<Int> tors;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.free <=> b.free; c != 0) return c;
    return a.tors <=> b.tors;
  }
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Finitely generated abelian group of free rank at most one, held in
/// invariant-factor form: every d_j >= 2 and d_j | d_{j+1}.
class FGGroup {
 public:
  FGGroup() = default;
  /// Throws UsageError("InvalidGroup") when the chain condition fails.
  FGGroup(int free_rank, std::vector<Int> torsion_invariants);

  /// Canonicalizes an arbitrary list of cyclic moduli (entries >= 1, not
  /// necessarily a divisor chain).
  static FGGroup from_moduli(int free_rank, const std::vector<Int>& moduli);

  int free_rank() const noexcept { return free_rank_; }
  const std::vector<Int>& torsion_invariants() const noexcept { return invariants_; }
  std::size_t torsion_count() const noexcept { return invariants_.size(); }
  /// Order of the torsion subgroup.
  Int torsion_order() const noexcept;
  bool is_finite() const noexcept { return free_rank_ == 0; }

  GroupElement zero() const;
  /// Reduces raw coordinates (free, t_1, ..., t_k) into canonical range.
  GroupElement element(Int free, std::vector<Int> tors) const;
  /// Coordinates (free?, t_1, ..., t_k); length free_rank + torsion_count.
  GroupElement from_coords(const std::vector<Int>& coords) const;
  std::vector<Int> coords(const GroupElement& g) const;
  std::size_t coord_count() const noexcept {
    return static_cast<std::size_t>(free_rank_) + invariants_.size();
  }

  bool contains(const GroupElement& g) const noexcept;
  GroupElement reduce(GroupElement g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, Int n) const;

  /// Free coordinate; throws UsageError("RankZeroGroup") on finite groups.
  Int free_projection(const GroupElement& g) const;
  /// std::nullopt stands for infinite order.
  std::optional<Int> order(const GroupElement& g) const;

  /// Index of the torsion residue vector in mixed radix, in [0, torsion_order).
  std::size_t torsion_index(const GroupElement& g) const;
  std::vector<Int> torsion_from_index(std::size_t index) const;
  /// All elements of the torsion subgroup, in serialized order.
  std::vector<GroupElement> torsion_elements() const;

  /// "Z^1 x Z/2 x Z/4", "Z^0" for the trivial group.
  std::string to_string() const;
  /// "(n; t1,...,tk)", "(n)" without torsion, "(t1,...,tk)" for rank zero.
  std::string format(const GroupElement& g) const;
  /// Inverse of format; throws UsageError("ParseError").
  GroupElement parse(std::string_view text) const;

  friend bool operator==(const FGGroup&, const FGGroup&) = default;

 private:
  void check(const GroupElement& g) const;

  int free_rank_ = 1;
  std::vector<Int> invariants_;
};

/// Homomorphism onto a canonical quotient group, represented by the
/// coordinate matrix from source coordinates to target coordinates and a
/// section matrix used for lifting.
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(FGGroup source, FGGroup target, IntMatrix to_target, IntMatrix section);

  const FGGroup& source() const noexcept { return source_; }
  const FGGroup& target() const noexcept { return target_; }

  GroupElement operator()(const GroupElement& g) const;
  /// Some preimage of h; lift(h) maps to h.
  GroupElement lift(const GroupElement& h) const;

 private:
  FGGroup source_;
  FGGroup target_;
  IntMatrix to_target_;
  IntMatrix section_;
};

/// Result of reducing Z^n modulo the row span of a relation matrix.
struct Presentation {
  FGGroup group;
  IntMatrix to_group;  // n x coord_count
  IntMatrix section;   // coord_count x n
};

/// Smith normal form reduction of Z^n / rowspan(relations). The free
/// coordinate is oriented so that the first raw unit vector with nonzero
/// free image maps to a positive free part. Throws UsageError("RankTooLarge")
/// when the quotient has free rank >= 2.
Presentation present(std::size_t generator_count, const IntMatrix& relations);

/// H = G / <gens> together with q. Generators must be torsion.
QuotientMap quotient_by_subgroup(const FGGroup& group, const std::vector<GroupElement>& gens);

/// True when gens generate the whole group.
bool generates(const FGGroup& group, const std::vector<GroupElement>& gens);

/// All elements of the (finite) subgroup generated by torsion gens, sorted.
std::vector<GroupElement> torsion_subgroup(const FGGroup& group,
                                           const std::vector<GroupElement>& gens);

}  // namespace nccr
