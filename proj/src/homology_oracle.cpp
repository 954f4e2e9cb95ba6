#include "nccr/homology_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "nccr/errors.hpp"

namespace nccr::oracle {

namespace {

enum class Sign { Positive, Negative, Torsion };

Sign sign_of(const WeightSystem& ws, std::size_t i) {
  if (i < ws.positive_count()) return Sign::Positive;
  if (i < ws.positive_count() + ws.negative_count()) return Sign::Negative;
  return Sign::Torsion;
}

Int l1(const SignVector& a) {
  Int s = 0;
  for (Int x : a) s += x < 0 ? -x : x;
  return s;
}

bool better(const SignVector& a, const SignVector& b) {
  const Int la = l1(a), lb = l1(b);
  return la != lb ? la < lb : a < b;
}

// Layered reachability: entry i ranges over [lo_i, hi_i].
std::map<GroupElement, SignVector> reach_all(const WeightSystem& ws, const std::vector<std::pair<Int, Int>>& ranges) {
  const FGGroup& g = ws.group();
  std::map<GroupElement, SignVector> layer{{g.zero(), {}}};
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::map<GroupElement, SignVector> next;
    for (const auto& [sum, vec] : layer) {
      for (Int v = ranges[i].first; v <= ranges[i].second; ++v) {
        auto s = g.add(sum, g.scale(ws.weight(i), v));
        SignVector w = vec;
        w.push_back(v);
        auto it = next.find(s);
        if (it == next.end()) {
          next.emplace(std::move(s), std::move(w));
        } else if (better(w, it->second)) {
          it->second = std::move(w);
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

WitnessTable::WitnessTable(const WeightSystem& ws, Int window) : window_(window) {
  if (window < 1) throw UsageError("InvalidWindow", "window must be >= 1");
  std::vector<std::pair<Int, Int>> pos, neg;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Sign s = sign_of(ws, i);
    pos.emplace_back(s == Sign::Positive ? std::make_pair(Int{0}, window) : std::make_pair(-window, Int{-1}));
    neg.emplace_back(s == Sign::Negative ? std::make_pair(Int{0}, window) : std::make_pair(-window, Int{-1}));
  }
  positive_ = reach_all(ws, pos);
  negative_ = reach_all(ws, neg);
}

std::optional<Witness> WitnessTable::find(const GroupElement& g) const {
  if (auto it = positive_.find(g); it != positive_.end()) return Witness{it->second, Pattern::PositiveBlock};
  if (auto it = negative_.find(g); it != negative_.end()) return Witness{it->second, Pattern::NegativeBlock};
  return std::nullopt;
}

std::optional<Witness> sign_pattern_witness(const WeightSystem& ws, const GroupElement& g, Int window) {
  return WitnessTable(ws, window).find(g);
}

std::string CrosscheckReport::summary() const {
  std::ostringstream os;
  os << "agree: " << agree << "/" << checked << ", mismatches: " << mismatches.size();
  return os.str();
}

CrosscheckReport mcm_crosscheck(const WeightSystem& ws, const std::vector<GroupElement>& degrees, Int window,
                                const std::function<bool(const GroupElement&)>& criterion) {
  const WitnessTable table(ws, window);
  CrosscheckReport rep;
  for (const auto& g : degrees) {
    ++rep.checked;
    const bool mcm = criterion(g);
    const bool no_witness = !table.find(g).has_value();
    if (mcm == no_witness) {
      ++rep.agree;
    } else {
      rep.mismatches.push_back(g);
    }
    if (mcm) rep.mcm_degrees.push_back(g);
  }
  if (!rep.mismatches.empty()) {
    throw InternalError("OracleMismatch", rep.summary() + ", first at " + ws.group().format(rep.mismatches.front()));
  }
  return rep;
}

Int sufficient_window(const WeightSystem& ws, Int span, Int max_conductor) {
  Int min_abs = 0;
  Int max_order = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Int f = ws.weight(i).free < 0 ? -ws.weight(i).free : ws.weight(i).free;
    if (f > 0 && (min_abs == 0 || f < min_abs)) min_abs = f;
    if (f == 0) max_order = std::max(max_order, *ws.group().order(ws.weight(i)));
  }
  if (min_abs == 0) return max_order;
  const Int budget = (span + min_abs - 1) / min_abs + 1 + max_conductor;
  return std::max(budget, max_order);
}

bool face_test(const WeightSystem& ws, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(ws.size(), false);
  for (auto i : subset) in.at(i) = true;
  bool pos = false, neg = false, tors_only = true, empty = true;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (in[i]) continue;
    empty = false;
    const Sign s = sign_of(ws, i);
    pos = pos || s == Sign::Positive;
    neg = neg || s == Sign::Negative;
    tors_only = tors_only && s == Sign::Torsion;
  }
  return empty || (pos && neg) || tors_only;
}

std::string HomotopyType::to_string() const {
  switch (kind) {
    case Kind::Empty:
      return "Empty";
    case Kind::Contractible:
      return "Contractible";
    case Kind::Sphere:
      return "Sphere(" + std::to_string(dim) + ")";
  }
  return "?";
}

HomotopyType classify_xa(const WeightSystem& ws, const SignVector& a) {
  if (a.size() != ws.size()) {
    throw InternalError("UnclassifiableSignPattern", "sign vector length differs from weight count");
  }
  const std::size_t l = ws.positive_count();
  const std::size_t lp = ws.negative_count();
  using K = HomotopyType::Kind;

  for (std::size_t i = l + lp; i < a.size(); ++i) {
    if (a[i] >= 0) return {K::Contractible, 0};
  }
  auto block = [&](std::size_t from, std::size_t to, bool& all_nonneg, bool& all_neg) {
    all_nonneg = all_neg = true;
    for (std::size_t i = from; i < to; ++i) {
      if (a[i] >= 0) all_neg = false;
      else all_nonneg = false;
    }
  };
  bool pos_nonneg, pos_neg, neg_nonneg, neg_neg;
  block(0, l, pos_nonneg, pos_neg);
  block(l, l + lp, neg_nonneg, neg_neg);
  if (!pos_nonneg && !pos_neg) return {K::Contractible, 0};
  if (!neg_nonneg && !neg_neg) return {K::Contractible, 0};
  if (pos_neg && neg_neg) return {K::Empty, 0};
  if (pos_nonneg && neg_nonneg) return {K::Contractible, 0};
  if (pos_nonneg && neg_neg) return {K::Sphere, static_cast<int>(l) - 2};
  if (pos_neg && neg_nonneg) return {K::Sphere, static_cast<int>(lp) - 2};
  throw InternalError("UnclassifiableSignPattern", "no case applies");
}

std::vector<std::vector<std::size_t>> SimplicialComplex::faces() const {
  std::set<std::vector<std::size_t>> all{{}};
  for (const auto& f : facets) {
    std::vector<std::size_t> facet = f;
    std::sort(facet.begin(), facet.end());
    const std::size_t k = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::size_t{1} << b)) face.push_back(facet[b]);
      }
      all.insert(std::move(face));
    }
  }
  return {all.begin(), all.end()};
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

namespace {

std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> reduced_homology(const SimplicialComplex& c) {
  const int dim = c.dimension();
  const auto faces = c.faces();
  // by_size[k] lists faces with k vertices, i.e. dimension k - 1
  std::vector<std::vector<std::vector<std::size_t>>> by_size(static_cast<std::size_t>(dim + 2));
  for (const auto& f : faces) by_size[f.size()].push_back(f);

  // rank of the boundary from faces of size k to size k - 1, k >= 1
  std::vector<std::size_t> rank(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    const auto& lower = by_size[k - 1];
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    std::vector<std::vector<mpq_class>> m(by_size[k].size(), std::vector<mpq_class>(lower.size(), 0));
    for (std::size_t r = 0; r < by_size[k].size(); ++r) {
      const auto& f = by_size[k][r];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<std::size_t> sub;
        for (std::size_t t = 0; t < f.size(); ++t) {
          if (t != drop) sub.push_back(f[t]);
        }
        m[r][index.at(sub)] = (drop % 2 == 0) ? 1 : -1;
      }
    }
    rank[k] = rational_rank(std::move(m));
  }
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    betti.push_back(by_size[k].size() - rank[k] - rank[k + 1]);
  }
  return betti;
}

std::vector<std::size_t> expected_betti(const HomotopyType& t, int top) {
  std::vector<std::size_t> b(static_cast<std::size_t>(std::max(top, -1) + 2), 0);
  switch (t.kind) {
    case HomotopyType::Kind::Empty:
      b[0] = 1;
      break;
    case HomotopyType::Kind::Sphere:
      if (t.dim + 1 < static_cast<int>(b.size())) b[static_cast<std::size_t>(t.dim + 1)] = 1;
      break;
    case HomotopyType::Kind::Contractible:
      break;
  }
  return b;
}

SimplicialComplex delta_complex(const WeightSystem& ws, const SignVector& a) {
  const std::size_t n = ws.size();
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (mask & (std::size_t{1} << i)) {
        subset.push_back(i);
        ok = a[i] >= 0;
      }
    }
    if (ok && face_test(ws, subset)) members.push_back(std::move(subset));
  }
  SimplicialComplex c;
  c.vertex_count = n;
  for (const auto& s : members) {
    const bool covered = std::any_of(members.begin(), members.end(), [&](const auto& t) {
      return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (!covered && !s.empty()) c.facets.push_back(s);
  }
  return c;
}

std::vector<std::size_t> local_cohomology_window(const WeightSystem& ws, const GroupElement& g, Int window) {
  const std::size_t n = ws.size();
  const std::size_t d = ws.d();
  std::vector<std::size_t> out(d + 2, 0);
  SignVector a(n, -window);
  const FGGroup& grp = ws.group();
  auto rec = [&](auto&& self, std::size_t i, const GroupElement& partial) -> void {
    if (i == n) {
      if (partial != g) return;
      const auto t = classify_xa(ws, a);
      if (t.kind == HomotopyType::Kind::Empty) {
        ++out[d + 1];
      } else if (t.kind == HomotopyType::Kind::Sphere && t.dim >= 0 && static_cast<std::size_t>(t.dim) <= d) {
        ++out[d - static_cast<std::size_t>(t.dim)];
      }
      return;
    }
    for (Int v = -window; v <= window; ++v) {
      a[i] = v;
      self(self, i + 1, grp.add(partial, grp.scale(ws.weight(i), v)));
    }
  };
  rec(rec, 0, grp.zero());
  return out;
}

}  // namespace nccr::oracle
