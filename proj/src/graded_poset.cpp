#include "nccr/graded_poset.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nccr/errors.hpp"

namespace nccr {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

QuotientMap identity_map(const FGGroup& g) {
  const std::size_t n = g.coord_count();
  IntMatrix id(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return QuotientMap(g, g, id, id);
}

}  // namespace

GradedContext GradedContext::from_weights(const WeightSystem& ws) {
  const FGGroup& g = ws.group();
  if (g.free_rank() != 1) throw UsageError("RankZeroGroup", "graded context needs a rank-one group");
  const std::size_t l = ws.positive_count();
  const std::size_t lp = ws.negative_count();

  std::vector<GroupElement> torsion_weights(ws.weights().begin() + static_cast<std::ptrdiff_t>(l + lp),
                                            ws.weights().end());
  GradedContext ctx;
  ctx.q_ = quotient_by_subgroup(g, torsion_weights);
  ctx.h_ = ctx.q_.target();
  const FGGroup& h = ctx.h_;

  GroupElement p_pos = h.zero();
  GroupElement p_neg = h.zero();
  for (std::size_t i = 0; i < l; ++i) {
    auto gi = ctx.q_(ws.weight(i));
    p_pos = h.add(p_pos, gi);
    ctx.generators_.push_back(std::move(gi));
  }
  for (std::size_t j = 0; j < lp; ++j) {
    auto gj = h.neg(ctx.q_(ws.weight(l + j)));
    p_neg = h.add(p_neg, gj);
    ctx.generators_.push_back(std::move(gj));
  }
  if (p_pos != p_neg) {
    throw InternalError("InternalInconsistency",
                        "period mismatch " + h.format(p_pos) + " vs " + h.format(p_neg));
  }
  ctx.p_ = p_pos;
  ctx.build_conductor();
  return ctx;
}

GradedContext GradedContext::from_parts(FGGroup h, std::vector<GroupElement> generators, GroupElement p) {
  if (h.free_rank() != 1) throw UsageError("RankZeroGroup", "graded context needs a rank-one group");
  for (const auto& g : generators) {
    if (!h.contains(g) || g.free <= 0) {
      throw UsageError("InvalidGenerator", "generators must lie in H with positive free part");
    }
  }
  if (!h.contains(p)) throw UsageError("MismatchedGroup", "period outside H");
  if (!generates(h, generators)) throw UsageError("InvalidGenerator", "generators must generate H");
  GradedContext ctx;
  ctx.q_ = identity_map(h);
  ctx.h_ = std::move(h);
  ctx.generators_ = std::move(generators);
  ctx.p_ = std::move(p);
  ctx.build_conductor();
  return ctx;
}

// Reachability grows in increasing free part. A coset is saturated once a
// run of e * pi(g*) consecutive free parts is reachable, g* a generator of
// minimal free part and e the order of its torsion component: adding
// e * g* = (e * pi(g*); 0) then carries the run upward forever.
void GradedContext::build_conductor() {
  const FGGroup& h = h_;
  const auto cosets = static_cast<std::size_t>(h.torsion_order());
  const auto gstar = *std::min_element(generators_.begin(), generators_.end(),
                                       [](const auto& a, const auto& b) { return a.free < b.free; });
  const Int e = *h.order(GroupElement{0, gstar.tors});
  const Int run_needed = e * gstar.free;

  std::vector<std::size_t> gen_tors;
  for (const auto& g : generators_) gen_tors.push_back(h.torsion_index(g));
  const auto torsion = h.torsion_elements();

  // diff_index[a][b] = index of torsion(a) - torsion(b)
  std::vector<std::vector<std::size_t>> diff_index(cosets, std::vector<std::size_t>(cosets));
  for (std::size_t a = 0; a < cosets; ++a) {
    for (std::size_t b = 0; b < cosets; ++b) diff_index[a][b] = h.torsion_index(h.sub(torsion[a], torsion[b]));
  }

  std::vector<std::vector<bool>> table(cosets);  // table[tau][f]
  std::vector<Int> run(cosets, 0);
  std::vector<bool> saturated(cosets, false);
  conductor_.assign(cosets, 0);
  std::size_t open = cosets;
  const Int hard_cap = 1'000'000;
  for (Int f = 0; open > 0; ++f) {
    if (f > hard_cap) throw InternalError("InternalInconsistency", "conductor search did not terminate");
    for (std::size_t tau = 0; tau < cosets; ++tau) {
      bool hit = (f == 0 && tau == 0);
      for (std::size_t k = 0; k < generators_.size() && !hit; ++k) {
        const Int prev = f - generators_[k].free;
        if (prev < 0) continue;
        hit = table[diff_index[tau][gen_tors[k]]][static_cast<std::size_t>(prev)];
      }
      table[tau].push_back(hit);
      if (saturated[tau]) continue;
      run[tau] = hit ? run[tau] + 1 : 0;
      if (run[tau] >= run_needed) {
        saturated[tau] = true;
        conductor_[tau] = f - run[tau] + 1;
        --open;
      }
    }
  }
  reachable_.assign(cosets, {});
  for (std::size_t tau = 0; tau < cosets; ++tau) {
    reachable_[tau].assign(table[tau].begin(), table[tau].begin() + conductor_[tau]);
  }
}

bool GradedContext::monoid_member(const GroupElement& h) const {
  if (h.free < 0) return false;
  const std::size_t tau = h_.torsion_index(h);
  if (h.free >= conductor_[tau]) return true;
  return reachable_[tau][static_cast<std::size_t>(h.free)];
}

bool GradedContext::member_by_search(const GroupElement& h) const {
  // coefficient vectors in lexicographic order, pruned by the free budget
  auto search = [&](auto&& self, std::size_t k, const GroupElement& rest) -> bool {
    if (rest.free < 0) return false;
    if (k == generators_.size()) return rest == h_.zero();
    GroupElement cur = rest;
    while (cur.free >= 0) {
      if (self(self, k + 1, cur)) return true;
      cur = h_.sub(cur, generators_[k]);
    }
    return false;
  };
  return search(search, 0, h_.reduce(h));
}

bool GradedContext::leq(const GroupElement& a, const GroupElement& b) const {
  return monoid_member(h_.sub(b, a));
}

Int GradedContext::max_conductor() const noexcept {
  return conductor_.empty() ? 0 : *std::max_element(conductor_.begin(), conductor_.end());
}

std::size_t GradedContext::orbit_count() const {
  if (period() <= 0) throw UsageError("InvalidPeriod", "orbit data needs pi(p) > 0");
  return static_cast<std::size_t>(period()) * static_cast<std::size_t>(h_.torsion_order());
}

std::vector<GroupElement> GradedContext::orbit_representatives() const {
  if (period() <= 0) throw UsageError("InvalidPeriod", "orbit data needs pi(p) > 0");
  std::vector<GroupElement> reps;
  for (Int f = 0; f < period(); ++f) {
    for (const auto& t : h_.torsion_elements()) reps.push_back(GroupElement{f, t.tors});
  }
  return reps;
}

OrbitPosition GradedContext::orbit_index(const GroupElement& h) const {
  if (period() <= 0) throw UsageError("InvalidPeriod", "orbit data needs pi(p) > 0");
  const Int n = floor_div(h.free, period());
  return OrbitPosition{translate(h, -n), n};
}

AxiomReport GradedContext::check_axioms(std::size_t sample_size, std::uint64_t seed) const {
  AxiomReport rep;
  rep.samples = sample_size;
  std::mt19937_64 rng(seed);
  const Int box = 2 * (std::max<Int>(period(), 1) + max_conductor()) + 5;
  std::uniform_int_distribution<Int> free_dist(-box, box);
  std::uniform_int_distribution<Int> shift_dist(-3, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  auto random_element = [&] {
    std::vector<Int> tors;
    for (Int d : h_.torsion_invariants()) tors.push_back(std::uniform_int_distribution<Int>(0, d - 1)(rng));
    return h_.element(free_dist(rng), std::move(tors));
  };
  auto random_monoid_element = [&] {
    GroupElement acc = h_.zero();
    std::uniform_int_distribution<Int> coef(0, 2);
    for (const auto& g : generators_) acc = h_.add(acc, h_.scale(g, coef(rng)));
    return acc;
  };
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.violations.size() < 20) rep.violations.push_back(msg);
  };

  const GroupElement zero = h_.zero();
  if (p_ == zero) fail(rep.a1, "A1: p = 0, so x < x + p fails");
  if (!monoid_member(p_)) fail(rep.a1, "A1: p not in H>=0");
  if (p_ != zero && monoid_member(h_.neg(p_))) fail(rep.a1, "A1: -p in H>=0");

  for (std::size_t s = 0; s < sample_size; ++s) {
    const GroupElement x = random_element();
    const GroupElement y = coin(rng) ? h_.add(x, random_monoid_element()) : random_element();
    const Int n = shift_dist(rng);

    const GroupElement xp = translate(x, 1);
    if (!(less(x, xp))) fail(rep.a1, "A1: " + h_.format(x) + " not < x + p");

    if (leq(x, y) && !leq(translate(x, n), translate(y, n))) {
      fail(rep.a2, "A2: " + h_.format(x) + " <= " + h_.format(y) + " but not after shift " + std::to_string(n));
    }

    if (period() <= 0) {
      fail(rep.a3, "A3: no witness possible with pi(p) <= 0");
    } else {
      const Int need = max_conductor() - h_.sub(x, y).free;
      const Int m = ceil_div(need, period());
      if (!leq(y, translate(x, m))) {
        fail(rep.a3, "A3: " + h_.format(x) + " + " + std::to_string(m) + "p not >= " + h_.format(y));
      }
    }

    if (leq(x, y) && leq(y, x) && x != y) {
      fail(rep.antisymmetry, "antisymmetry: " + h_.format(x) + " vs " + h_.format(y));
    }
  }
  return rep;
}

}  // namespace nccr
