#include "nccr/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nccr/errors.hpp"

namespace nccr {

namespace {

// Calls f(a) for every a >= 0 with total degree <= bound.
template <typename F>
void for_each_monomial(std::size_t n, Int bound, F&& f) {
  std::vector<Int> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == n) {
      f(a);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      a[i] = v;
      self(self, i + 1, left - v);
    }
    a[i] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace

std::size_t Quiver::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.source == a.target; }));
}

std::size_t hom_monomial_count(const WeightSystem& ws, const GroupElement& g, const GroupElement& h, Int bound) {
  if (bound < 0) throw UsageError("InvalidBound", "bound must be >= 0");
  const auto target = ws.group().sub(h, g);
  std::size_t count = 0;
  for_each_monomial(ws.size(), bound, [&](const std::vector<Int>& a) {
    if (ws.degree(a) == target) ++count;
  });
  return count;
}

Int default_search_bound(const Classifier& c) {
  const auto& ws = c.weights();
  const Int blocks = static_cast<Int>(ws.positive_count() + ws.negative_count());
  return blocks * (1 + c.context().max_conductor() + c.context().period());
}

Quiver arrows_at_bound(const WeightSystem& ws, const VertexSet& v, Int bound) {
  if (bound < 1) throw UsageError("InvalidBound", "search bound must be >= 1");
  const FGGroup& g = ws.group();
  const std::size_t n = ws.size();
  Quiver q;
  q.group = g;
  q.vertices = make_vertex_set(v.degrees).degrees;
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) index[q.vertices[i]] = i;

  for (std::size_t s = 0; s < q.vertices.size(); ++s) {
    const auto& src = q.vertices[s];
    // open: monomials all of whose nonzero sub-monomials (themselves
    // included) avoid the vertex set; only these can be extended.
    std::set<std::vector<Int>> open{std::vector<Int>(n, 0)};
    for (Int k = 0; k < bound && !open.empty(); ++k) {
      std::set<std::vector<Int>> candidates;
      for (const auto& a : open) {
        for (std::size_t i = 0; i < n; ++i) {
          auto b = a;
          ++b[i];
          candidates.insert(std::move(b));
        }
      }
      std::set<std::vector<Int>> next_open;
      for (const auto& b : candidates) {
        bool irreducible = true;
        for (std::size_t j = 0; j < n && irreducible; ++j) {
          if (b[j] == 0) continue;
          auto c = b;
          --c[j];
          irreducible = open.count(c) > 0;
        }
        if (!irreducible) continue;
        const auto dst = g.add(src, ws.degree(b));
        if (auto it = index.find(dst); it != index.end()) {
          q.arrows.push_back(Arrow{s, it->second, b});
        } else {
          next_open.insert(b);
        }
      }
      open = std::move(next_open);
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

ArrowSearch arrows(const WeightSystem& ws, const VertexSet& v, Int bound) {
  ArrowSearch out;
  out.bound = bound;
  out.quiver = arrows_at_bound(ws, v, bound);
  const auto doubled = arrows_at_bound(ws, v, 2 * bound);
  if (doubled.arrows != out.quiver.arrows) {
    out.warnings.push_back("BoundTooSmall: arrow set changed between bound " + std::to_string(bound) + " and " +
                           std::to_string(2 * bound));
  }
  return out;
}

Quiver mckay_quiver(const WeightSystem& ws) {
  const FGGroup& g = ws.group();
  if (!g.is_finite()) throw UsageError("InfiniteGroup", "McKay quiver needs a finite group");
  Quiver q;
  q.group = g;
  q.vertices = g.torsion_elements();
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) index[q.vertices[i]] = i;
  for (std::size_t s = 0; s < q.vertices.size(); ++s) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::vector<Int> e(ws.size(), 0);
      e[i] = 1;
      q.arrows.push_back(Arrow{s, index.at(g.add(q.vertices[s], ws.weight(i))), std::move(e)});
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

std::string monomial_label(const std::vector<Int>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (exponents[i] != 1) s += '^' + std::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

std::string emit_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices) os << "  \"" << q.group.format(v) << "\";\n";
  for (const auto& a : q.arrows) {
    os << "  \"" << q.group.format(q.vertices[a.source]) << "\" -> \"" << q.group.format(q.vertices[a.target])
       << "\" [label=\"" << monomial_label(a.exponents) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

bool degree_coherent(const WeightSystem& ws, const Quiver& q) {
  const FGGroup& g = ws.group();
  return std::all_of(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) {
    return ws.degree(a.exponents) == g.sub(q.vertices[a.target], q.vertices[a.source]);
  });
}

bool path_generated(const WeightSystem& ws, const Quiver& q, Int bound) {
  const FGGroup& g = ws.group();
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) index[q.vertices[i]] = i;
  std::vector<std::vector<const Arrow*>> out(q.vertices.size());
  for (const auto& a : q.arrows) out[a.source].push_back(&a);

  std::map<std::pair<std::size_t, std::vector<Int>>, bool> memo;
  // from vertex s, does x^a factor as a path of arrows?
  auto factors = [&](auto&& self, std::size_t s, const std::vector<Int>& a) -> bool {
    if (std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; })) return true;
    auto key = std::make_pair(s, a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (const Arrow* arr : out[s]) {
      bool fits = true;
      for (std::size_t i = 0; i < a.size() && fits; ++i) fits = arr->exponents[i] <= a[i];
      if (!fits) continue;
      auto rest = a;
      for (std::size_t i = 0; i < a.size(); ++i) rest[i] -= arr->exponents[i];
      if (self(self, arr->target, rest)) {
        ok = true;
        break;
      }
    }
    memo[key] = ok;
    return ok;
  };

  bool all = true;
  for (std::size_t s = 0; s < q.vertices.size() && all; ++s) {
    for_each_monomial(ws.size(), bound, [&](const std::vector<Int>& a) {
      if (!all) return;
      if (std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; })) return;
      if (!index.count(g.add(q.vertices[s], ws.degree(a)))) return;
      if (!factors(factors, s, a)) all = false;
    });
  }
  return all;
}

}  // namespace nccr
