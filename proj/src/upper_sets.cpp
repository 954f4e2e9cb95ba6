#include "nccr/upper_sets.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "nccr/errors.hpp"

namespace nccr {

namespace {

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// x >= y + p is forbidden for every ordered pair.
bool compatible(const GradedContext& ctx, const GroupElement& x, const GroupElement& y) {
  return !ctx.leq(ctx.translate(y, 1), x) && !ctx.leq(ctx.translate(x, 1), y);
}

}  // namespace

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

JSetCheck jset_check(const GradedContext& ctx, const std::vector<GroupElement>& elems) {
  const auto j = sorted_unique(elems);
  JSetCheck out;
  for (const auto& x : j) {
    for (const auto& y : j) {
      if (ctx.leq(ctx.translate(y, 1), x)) {
        out.status = JSetStatus::NotInJTilde;
        out.witness = std::make_pair(x, y);
        return out;
      }
    }
  }
  // Inside the tilde set distinct elements lie in distinct orbits.
  out.status = j.size() == ctx.orbit_count() ? JSetStatus::Maximal : JSetStatus::InJTilde;
  return out;
}

bool is_maximal(const GradedContext& ctx, const std::vector<GroupElement>& elems) {
  return jset_check(ctx, elems).status == JSetStatus::Maximal;
}

bool upper_membership(const GradedContext& ctx, const std::vector<GroupElement>& j, const GroupElement& h) {
  return std::any_of(j.begin(), j.end(), [&](const GroupElement& y) { return ctx.leq(y, h); });
}

Int boundary_index(const GradedContext& ctx, const std::vector<GroupElement>& j, const GroupElement& x) {
  if (j.empty()) throw UsageError("EmptySet", "boundary index needs a non-empty set");
  Int lo = j.front().free;
  Int hi = j.front().free;
  for (const auto& y : j) {
    lo = std::min(lo, y.free);
    hi = std::max(hi, y.free);
  }
  const Int period = ctx.period();
  const Int n_lo = ceil_div(lo - x.free, period);
  const Int n_hi = ceil_div(hi + ctx.max_conductor() - x.free, period);
  for (Int n = n_lo; n <= n_hi; ++n) {
    if (upper_membership(ctx, j, ctx.translate(x, n))) return n;
  }
  throw InternalError("InternalInconsistency", "boundary index not found below conductor bound");
}

JSet j_from_generators(const GradedContext& ctx, const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw UsageError("EmptySet", "need at least one generator");
  JSet out;
  for (const auto& r : ctx.orbit_representatives()) {
    out.elements.push_back(ctx.translate(r, boundary_index(ctx, gens, r)));
  }
  out.elements = sorted_unique(std::move(out.elements));
  out.maximal = true;
  return out;
}

std::vector<GroupElement> translate_set(const GradedContext& ctx, const std::vector<GroupElement>& elems,
                                        const GroupElement& by) {
  std::vector<GroupElement> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(ctx.group().add(e, by));
  return sorted_unique(std::move(out));
}

std::vector<GroupElement> normal_form(const GradedContext& ctx, const std::vector<GroupElement>& elems) {
  if (elems.empty()) return {};
  Int fmin = elems.front().free;
  for (const auto& e : elems) fmin = std::min(fmin, e.free);
  std::vector<GroupElement> best;
  for (const auto& t : ctx.group().torsion_elements()) {
    auto cand = translate_set(ctx, elems, GroupElement{-fmin, t.tors});
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

std::vector<UpperSetClass> enumerate_classes(const GradedContext& ctx) {
  const auto reps = ctx.orbit_representatives();
  const Int period = ctx.period();
  const Int cmax = ctx.max_conductor();
  const GroupElement zero = ctx.group().zero();

  // candidates[i]: elements of orbit i compatible with the pinned 0
  std::vector<std::vector<GroupElement>> candidates(reps.size());
  candidates[0] = {zero};
  for (std::size_t i = 1; i < reps.size(); ++i) {
    const Int f = reps[i].free;
    const Int n_lo = ceil_div(-period - cmax - f, period);
    const Int n_hi = ceil_div(period + cmax - f, period);
    for (Int n = n_lo; n <= n_hi; ++n) {
      auto y = ctx.translate(reps[i], n);
      if (compatible(ctx, zero, y)) candidates[i].push_back(std::move(y));
    }
  }

  std::set<std::vector<GroupElement>> found;
  std::vector<GroupElement> chosen;
  chosen.reserve(reps.size());
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == reps.size()) {
      found.insert(normal_form(ctx, chosen));
      return;
    }
    for (const auto& y : candidates[i]) {
      bool ok = true;
      for (const auto& x : chosen) {
        if (!compatible(ctx, x, y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(y);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);

  std::vector<UpperSetClass> out;
  for (const auto& nf : found) {
    UpperSetClass c;
    c.canonical.elements = nf;
    c.canonical.maximal = true;
    c.stabilizer_order = 0;
    for (const auto& t : ctx.group().torsion_elements()) {
      if (translate_set(ctx, nf, t) == nf) ++c.stabilizer_order;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::size_t> class_index(const GradedContext& ctx, const std::vector<UpperSetClass>& classes,
                                       const std::vector<GroupElement>& j) {
  const auto nf = normal_form(ctx, sorted_unique(j));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].canonical.elements == nf) return i;
  }
  return std::nullopt;
}

std::vector<GroupElement> minimal_elements(const GradedContext& ctx, const std::vector<GroupElement>& j) {
  std::vector<GroupElement> out;
  for (const auto& m : j) {
    bool minimal = std::none_of(j.begin(), j.end(), [&](const GroupElement& x) { return ctx.less(x, m); });
    if (minimal) out.push_back(m);
  }
  return out;
}

JSet mutate(const GradedContext& ctx, const JSet& j, const GroupElement& m) {
  const auto mins = minimal_elements(ctx, j.elements);
  if (std::find(mins.begin(), mins.end(), m) == mins.end()) {
    throw UsageError("NotMinimal", ctx.group().format(m) + " is not a minimal element");
  }
  JSet out;
  for (const auto& x : j.elements) {
    if (x != m) out.elements.push_back(x);
  }
  out.elements.push_back(ctx.translate(m, 1));
  out.elements = sorted_unique(std::move(out.elements));
  out.maximal = j.maximal;
  return out;
}

bool hasse_arrow(const GradedContext& ctx, const JSet& j, const JSet& j2, bool class_level) {
  const auto target = class_level ? normal_form(ctx, j2.elements) : sorted_unique(j2.elements);
  for (const auto& m : minimal_elements(ctx, j.elements)) {
    const auto k = mutate(ctx, j, m);
    if ((class_level ? normal_form(ctx, k.elements) : k.elements) == target) return true;
  }
  return false;
}

ExchangeGraph exchange_graph(const GradedContext& ctx) {
  ExchangeGraph g;
  g.nodes = enumerate_classes(ctx);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& j = g.nodes[i].canonical;
    for (const auto& m : minimal_elements(ctx, j.elements)) {
      const auto k = mutate(ctx, j, m);
      const auto to = class_index(ctx, g.nodes, k.elements);
      if (!to) throw InternalError("InternalInconsistency", "mutation left the enumerated classes");
      g.edges.push_back(ExchangeEdge{i, *to, m});
    }
  }
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(g.nodes.size(), false);
  std::size_t reached = 0;
  if (!g.nodes.empty()) {
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    while (!todo.empty()) {
      auto v = todo.front();
      todo.pop();
      ++reached;
      for (auto w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push(w);
        }
      }
    }
  }
  g.connected = reached == g.nodes.size() && !g.nodes.empty();
  if (!g.connected) throw InternalError("DisconnectedGraph", "exchange graph is not connected");
  return g;
}

std::string format_set(const FGGroup& g, const std::vector<GroupElement>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ", ";
    s += g.format(elems[i]);
  }
  return s + "}";
}

}  // namespace nccr
