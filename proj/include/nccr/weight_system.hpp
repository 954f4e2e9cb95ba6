#pragma once

#include <cstddef>
#include <vector>

#include "nccr/abelian_group.hpp"

namespace nccr {

/// Validated Gorenstein weight data. For rank-one groups the weights are
/// stably reordered: indices [0, l) have positive free part, [l, l + l')
/// negative, the remainder are torsion. For finite groups no reordering
/// takes place and l = l' = 0.
class WeightSystem {
 public:
  const FGGroup& group() const noexcept { return group_; }
  const std::vector<GroupElement>& weights() const noexcept { return weights_; }
  const GroupElement& weight(std::size_t i) const { return weights_.at(i); }
  std::size_t size() const noexcept { return weights_.size(); }

  std::size_t positive_count() const noexcept { return l_; }
  std::size_t negative_count() const noexcept { return l_prime_; }
  std::size_t torsion_weight_count() const noexcept { return weights_.size() - l_ - l_prime_; }
  /// d + 1 = number of weights - 1.
  std::size_t ring_dimension() const noexcept { return weights_.size() - 1; }
  /// d
  std::size_t d() const noexcept { return weights_.size() - 2; }

  /// permutation()[i] is the raw input index of validated weight i.
  const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }

  /// Degree of the monomial with exponent vector a (any integer entries).
  GroupElement degree(const std::vector<Int>& exponents) const;

  friend WeightSystem validate(const FGGroup& group, const std::vector<GroupElement>& raw_weights);

 private:
  FGGroup group_;
  std::vector<GroupElement> weights_;
  std::vector<std::size_t> permutation_;
  std::size_t l_ = 0;
  std::size_t l_prime_ = 0;
};

/// Checks, in order, the sign counts (rank one only; >= 2 positive and
/// >= 2 negative weights), the Gorenstein condition sum = 0, and
/// generation: every proper subfamily obtained by dropping one weight
/// generates G (rank one), or the whole family generates G (finite G).
/// Throws ValidationError with kind SignCountFailure, NotGorenstein or
/// GenerationFailure.
WeightSystem validate(const FGGroup& group, const std::vector<GroupElement>& raw_weights);

}  // namespace nccr
