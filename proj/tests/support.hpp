#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "nccr/abelian_group.hpp"
#include "nccr/cm_nccr.hpp"
#include "nccr/weight_system.hpp"

namespace testing_support {

using nccr::FGGroup;
using nccr::GroupElement;
using nccr::Int;

struct Example {
  std::string name;
  FGGroup group;
  std::vector<GroupElement> raw;
};

inline std::vector<GroupElement> free_weights(const FGGroup& g, std::initializer_list<Int> ws) {
  std::vector<GroupElement> out;
  for (Int w : ws) out.push_back(g.element(w, {}));
  return out;
}

inline std::vector<GroupElement> mixed_weights(const FGGroup& g, std::initializer_list<std::pair<Int, Int>> ws) {
  std::vector<GroupElement> out;
  for (auto [f, t] : ws) out.push_back(g.element(f, {t}));
  return out;
}

inline Example ex1() {
  FGGroup z(1, {});
  return {"ex1", z, free_weights(z, {1, 1, -1, -1})};
}
inline Example ex2() {
  FGGroup z(1, {});
  return {"ex2", z, free_weights(z, {2, 3, -2, -3})};
}
inline Example ex3_1() {
  FGGroup g(1, {2});
  return {"ex3_1", g, mixed_weights(g, {{1, 0}, {1, 1}, {-1, 0}, {-1, 1}})};
}
inline Example ex3_2() {
  FGGroup g(1, {3});
  return {"ex3_2", g, mixed_weights(g, {{1, 0}, {1, 0}, {-1, 1}, {-1, 2}})};
}
// The torsion weights differ from the text's listing, whose sum is not zero;
// (-1;1) keeps the same H and p.
inline Example ex4() {
  FGGroup g(1, {4});
  return {"ex4", g, mixed_weights(g, {{1, 0}, {1, 1}, {-1, 0}, {-1, 1}, {0, 2}})};
}

inline std::vector<Example> all_examples() { return {ex1(), ex2(), ex3_1(), ex3_2(), ex4()}; }

inline nccr::Classifier classifier(const Example& e) { return nccr::Classifier(nccr::validate(e.group, e.raw)); }

inline GroupElement random_element(std::mt19937_64& rng, const FGGroup& g, Int box) {
  std::uniform_int_distribution<Int> f(-box, box);
  std::vector<Int> tors;
  for (Int d : g.torsion_invariants()) tors.push_back(std::uniform_int_distribution<Int>(0, d - 1)(rng));
  return g.element(g.free_rank() == 1 ? f(rng) : 0, tors);
}

// Members of the monoid spanned by `gens` with free part <= bound, grown by
// plain breadth-first closure. Generators all have positive free part.
inline std::set<GroupElement> monoid_ball(const FGGroup& h, const std::vector<GroupElement>& gens, Int bound) {
  std::set<GroupElement> seen{h.zero()};
  std::vector<GroupElement> frontier{h.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        auto y = h.add(x, g);
        if (y.free <= bound && seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<GroupElement> elems(const FGGroup& g, std::initializer_list<Int> frees) {
  std::vector<GroupElement> out;
  for (Int f : frees) out.push_back(g.element(f, {}));
  return out;
}

inline std::vector<GroupElement> elems2(const FGGroup& g, std::initializer_list<std::pair<Int, Int>> xs) {
  std::vector<GroupElement> out;
  for (auto [f, t] : xs) out.push_back(g.element(f, {t}));
  return out;
}

}  // namespace testing_support
