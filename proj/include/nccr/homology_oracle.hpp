#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/weight_system.hpp"

// Brute-force evidence for the Cohen-Macaulay criterion. Nothing in here
// consults the order on H: witnesses are searched directly in G, and the
// local cohomology contributions are read off the complexes Delta_a.
namespace nccr::oracle {

using SignVector = std::vector<Int>;

enum class Pattern {
  PositiveBlock,  // a_i >= 0 on the positive weights, < 0 elsewhere
  NegativeBlock,  // a_i >= 0 on the negative weights, < 0 elsewhere
};

struct Witness {
  SignVector a;
  Pattern pattern = Pattern::PositiveBlock;
};

/// All degrees reachable by sign vectors of either pattern with entries in
/// [-W, W], each with an L1-minimal (then lexicographically minimal)
/// witness. Built once per window and queried per degree.
class WitnessTable {
 public:
  WitnessTable(const WeightSystem& ws, Int window);

  std::optional<Witness> find(const GroupElement& g) const;
  Int window() const noexcept { return window_; }

 private:
  std::map<GroupElement, SignVector> positive_;
  std::map<GroupElement, SignVector> negative_;
  Int window_;
};

std::optional<Witness> sign_pattern_witness(const WeightSystem& ws, const GroupElement& g, Int window);

struct CrosscheckReport {
  std::size_t checked = 0;
  std::size_t agree = 0;
  std::vector<GroupElement> mcm_degrees;
  std::vector<GroupElement> mismatches;

  /// "agree: 21/21, mismatches: 0"
  std::string summary() const;
};

/// Compares `criterion(g)` against "no witness exists" for every degree.
/// Throws InternalError("OracleMismatch") on any disagreement.
CrosscheckReport mcm_crosscheck(const WeightSystem& ws, const std::vector<GroupElement>& degrees, Int window,
                                const std::function<bool(const GroupElement&)>& criterion);

/// Smallest window that keeps the crosscheck sound for degrees with
/// |free part| <= span.
Int sufficient_window(const WeightSystem& ws, Int span, Int max_conductor);

/// Index subsets are 0-based positions in the validated weight order.
bool face_test(const WeightSystem& ws, const std::vector<std::size_t>& subset);

struct HomotopyType {
  enum class Kind { Empty, Contractible, Sphere };
  Kind kind = Kind::Contractible;
  int dim = 0;  // sphere dimension

  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
  std::string to_string() const;
};

/// Homotopy type of X_a by the seven-case analysis of sign patterns.
/// Throws InternalError("UnclassifiableSignPattern").
HomotopyType classify_xa(const WeightSystem& ws, const SignVector& a);

/// Downward closure of `facets`. The empty face is always present, so a
/// complex without facets is the empty complex {∅}.
struct SimplicialComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> facets;

  std::vector<std::vector<std::size_t>> faces() const;
  int dimension() const;
};

/// Reduced Betti numbers over Q for degrees -1, 0, ..., dim.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& c);

/// Betti profile of a homotopy type padded to degrees -1..top.
std::vector<std::size_t> expected_betti(const HomotopyType& t, int top);

SimplicialComplex delta_complex(const WeightSystem& ws, const SignVector& a);

/// result[r] for r = 0..d+1: summed reduced Betti contributions of X_a at
/// homological degree d - r over all in-window a of degree g.
std::vector<std::size_t> local_cohomology_window(const WeightSystem& ws, const GroupElement& g, Int window);

}  // namespace nccr::oracle
