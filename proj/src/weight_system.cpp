#include "nccr/weight_system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nccr/errors.hpp"

namespace nccr {

GroupElement WeightSystem::degree(const std::vector<Int>& exponents) const {
  if (exponents.size() != weights_.size()) {
    throw UsageError("MismatchedGroup", "exponent vector length differs from weight count");
  }
  GroupElement acc = group_.zero();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) acc = group_.add(acc, group_.scale(weights_[i], exponents[i]));
  }
  return acc;
}

WeightSystem validate(const FGGroup& group, const std::vector<GroupElement>& raw_weights) {
  for (const auto& w : raw_weights) {
    if (!group.contains(w)) throw UsageError("MismatchedGroup", "weight outside " + group.to_string());
  }
  if (raw_weights.empty()) throw ValidationError("GenerationFailure", "no weights given");

  WeightSystem ws;
  ws.group_ = group;
  ws.permutation_.resize(raw_weights.size());
  std::iota(ws.permutation_.begin(), ws.permutation_.end(), std::size_t{0});

  if (group.free_rank() == 1) {
    auto sign_class = [&](std::size_t i) {
      Int f = raw_weights[i].free;
      return f > 0 ? 0 : (f < 0 ? 1 : 2);
    };
    std::stable_sort(ws.permutation_.begin(), ws.permutation_.end(),
                     [&](std::size_t a, std::size_t b) { return sign_class(a) < sign_class(b); });
    for (std::size_t i = 0; i < raw_weights.size(); ++i) {
      if (raw_weights[i].free > 0) ++ws.l_;
      if (raw_weights[i].free < 0) ++ws.l_prime_;
    }
    if (ws.l_ < 2 || ws.l_prime_ < 2) {
      throw SignCountFailure(ws.l_, ws.l_prime_, "need >= 2 positive and >= 2 negative weights, got " +
                                                    std::to_string(ws.l_) + " positive and " +
                                                    std::to_string(ws.l_prime_) + " negative");
    }
  }
  for (std::size_t i : ws.permutation_) ws.weights_.push_back(raw_weights[i]);

  GroupElement sum = group.zero();
  for (const auto& w : ws.weights_) sum = group.add(sum, w);
  if (sum != group.zero()) {
    throw ValidationError("NotGorenstein", "weights sum to " + group.format(sum) + ", not zero");
  }

  if (group.free_rank() == 1) {
    for (std::size_t i0 = 0; i0 < raw_weights.size(); ++i0) {
      std::vector<GroupElement> rest;
      for (std::size_t i = 0; i < raw_weights.size(); ++i) {
        if (i != i0) rest.push_back(raw_weights[i]);
      }
      if (!generates(group, rest)) {
        throw GenerationFailure(i0, "weights without index " + std::to_string(i0) + " do not generate G");
      }
    }
  } else if (!generates(group, raw_weights)) {
    throw GenerationFailure(raw_weights.size(), "weights do not generate G");
  }
  return ws;
}

}  // namespace nccr
