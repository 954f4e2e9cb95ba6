#include "nccr/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "nccr/errors.hpp"

namespace nccr {

namespace {

Int mod(Int a, Int d) {
  Int r = a % d;
  return r < 0 ? r + d : r;
}

Int abs_i(Int a) { return a < 0 ? -a : a; }

// Smith normal form with column-transform tracking. After run(), a_ is
// diagonal with d_0 | d_1 | ... and a_ = (row ops) * input * v_.
class SmithReducer {
 public:
  SmithReducer(IntMatrix a, std::size_t cols) : a_(std::move(a)), rows_(a_.size()), cols_(cols) {
    for (auto& row : a_) row.resize(cols_, 0);
    v_.assign(cols_, std::vector<Int>(cols_, 0));
    vinv_ = v_;
    for (std::size_t i = 0; i < cols_; ++i) v_[i][i] = vinv_[i][i] = 1;
  }

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest(t, t, rows_, cols_)) {
        rank_ = t;
        return;
      }
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (a_[i][t] == 0) continue;
          row_axpy(i, t, -(a_[i][t] / a_[t][t]));
          if (a_[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[t][j] == 0) continue;
          col_axpy(j, t, -(a_[t][j] / a_[t][t]));
          if (a_[t][j] != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows_ && divisible; ++i) {
          for (std::size_t j = t + 1; j < cols_; ++j) {
            if (a_[i][j] % a_[t][t] != 0) {
              row_axpy(t, i, 1);
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (a_[t][t] < 0) {
        for (auto& x : a_[t]) x = -x;
      }
    }
    rank_ = limit;
    // limit may stop before a zero pivot is detected
    while (rank_ > 0 && a_[rank_ - 1][rank_ - 1] == 0) --rank_;
  }

  std::size_t rank() const { return rank_; }
  Int diagonal(std::size_t i) const { return a_[i][i]; }
  const IntMatrix& v() const { return v_; }
  const IntMatrix& vinv() const { return vinv_; }

  void negate_column(std::size_t j) {
    for (std::size_t i = 0; i < cols_; ++i) v_[i][j] = -v_[i][j];
    for (auto& x : vinv_[j]) x = -x;
  }

 private:
  bool move_smallest(std::size_t t, std::size_t row_from, std::size_t row_to, std::size_t col_to) {
    Int best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = row_from; i < row_to; ++i) {
      for (std::size_t j = t; j < col_to; ++j) {
        Int x = abs_i(a_[i][j]);
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    Int best = abs_i(a_[t][t]);
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      Int x = abs_i(a_[i][t]);
      if (x != 0 && x < best) {
        best = x;
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      Int x = abs_i(a_[t][j]);
      if (x != 0 && x < best) {
        best = x;
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i != k) std::swap(a_[i], a_[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    for (auto& row : v_) std::swap(row[j], row[k]);
    std::swap(vinv_[j], vinv_[k]);
  }

  // row_i += factor * row_k
  void row_axpy(std::size_t i, std::size_t k, Int factor) {
    for (std::size_t j = 0; j < cols_; ++j) a_[i][j] += factor * a_[k][j];
  }

  // col_j += factor * col_k, tracked in v and its inverse
  void col_axpy(std::size_t j, std::size_t k, Int factor) {
    for (auto& row : a_) row[j] += factor * row[k];
    for (auto& row : v_) row[j] += factor * row[k];
    for (std::size_t c = 0; c < cols_; ++c) vinv_[k][c] -= factor * vinv_[j][c];
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix v_;
  IntMatrix vinv_;
  std::size_t rank_ = 0;
};

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t seed = std::hash<Int>{}(g.free);
  for (Int t : g.tors) hash_combine(seed, std::hash<Int>{}(t));
  return seed;
}

FGGroup::FGGroup(int free_rank, std::vector<Int> torsion_invariants)
    : free_rank_(free_rank), invariants_(std::move(torsion_invariants)) {
  if (free_rank_ != 0 && free_rank_ != 1) {
    throw UsageError("InvalidGroup", "free rank must be 0 or 1");
  }
  for (std::size_t j = 0; j < invariants_.size(); ++j) {
    if (invariants_[j] < 2) throw UsageError("InvalidGroup", "torsion invariants must be >= 2");
    if (j + 1 < invariants_.size() && invariants_[j + 1] % invariants_[j] != 0) {
      throw UsageError("InvalidGroup", "torsion invariants must form a divisor chain");
    }
  }
}

FGGroup FGGroup::from_moduli(int free_rank, const std::vector<Int>& moduli) {
  IntMatrix rels;
  const std::size_t n = static_cast<std::size_t>(free_rank) + moduli.size();
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] < 1) throw UsageError("InvalidGroup", "cyclic moduli must be >= 1");
    std::vector<Int> row(n, 0);
    row[static_cast<std::size_t>(free_rank) + j] = moduli[j];
    rels.push_back(std::move(row));
  }
  return present(n, rels).group;
}

Int FGGroup::torsion_order() const noexcept {
  Int o = 1;
  for (Int d : invariants_) o *= d;
  return o;
}

GroupElement FGGroup::zero() const { return GroupElement{0, std::vector<Int>(invariants_.size(), 0)}; }

GroupElement FGGroup::element(Int free, std::vector<Int> tors) const {
  if (tors.size() != invariants_.size()) {
    throw UsageError("MismatchedGroup", "torsion length does not match group " + to_string());
  }
  if (free_rank_ == 0) free = 0;
  for (std::size_t j = 0; j < tors.size(); ++j) tors[j] = mod(tors[j], invariants_[j]);
  return GroupElement{free, std::move(tors)};
}

GroupElement FGGroup::from_coords(const std::vector<Int>& coords) const {
  if (coords.size() != coord_count()) {
    throw UsageError("MismatchedGroup", "coordinate vector length does not match group " + to_string());
  }
  Int free = free_rank_ == 1 ? coords[0] : 0;
  std::vector<Int> tors(coords.begin() + free_rank_, coords.end());
  return element(free, std::move(tors));
}

std::vector<Int> FGGroup::coords(const GroupElement& g) const {
  std::vector<Int> c;
  c.reserve(coord_count());
  if (free_rank_ == 1) c.push_back(g.free);
  c.insert(c.end(), g.tors.begin(), g.tors.end());
  return c;
}

bool FGGroup::contains(const GroupElement& g) const noexcept {
  if (g.tors.size() != invariants_.size()) return false;
  if (free_rank_ == 0 && g.free != 0) return false;
  for (std::size_t j = 0; j < g.tors.size(); ++j) {
    if (g.tors[j] < 0 || g.tors[j] >= invariants_[j]) return false;
  }
  return true;
}

GroupElement FGGroup::reduce(GroupElement g) const { return element(g.free, std::move(g.tors)); }

void FGGroup::check(const GroupElement& g) const {
  if (g.tors.size() != invariants_.size()) {
    throw UsageError("MismatchedGroup", "operand does not belong to " + to_string());
  }
}

GroupElement FGGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r{a.free + b.free, a.tors};
  for (std::size_t j = 0; j < r.tors.size(); ++j) r.tors[j] = mod(r.tors[j] + b.tors[j], invariants_[j]);
  return r;
}

GroupElement FGGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement FGGroup::neg(const GroupElement& a) const {
  check(a);
  GroupElement r{-a.free, a.tors};
  for (std::size_t j = 0; j < r.tors.size(); ++j) r.tors[j] = mod(-r.tors[j], invariants_[j]);
  return r;
}

GroupElement FGGroup::scale(const GroupElement& a, Int n) const {
  check(a);
  GroupElement r{a.free * n, a.tors};
  for (std::size_t j = 0; j < r.tors.size(); ++j) r.tors[j] = mod(mod(n, invariants_[j]) * r.tors[j], invariants_[j]);
  return r;
}

Int FGGroup::free_projection(const GroupElement& g) const {
  if (free_rank_ == 0) throw UsageError("RankZeroGroup", "free projection of a finite group");
  check(g);
  return g.free;
}

std::optional<Int> FGGroup::order(const GroupElement& g) const {
  check(g);
  if (g.free != 0) return std::nullopt;
  Int o = 1;
  for (std::size_t j = 0; j < g.tors.size(); ++j) {
    Int d = invariants_[j];
    o = std::lcm(o, d / std::gcd(g.tors[j], d));
  }
  return o;
}

std::size_t FGGroup::torsion_index(const GroupElement& g) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < invariants_.size(); ++j) {
    idx = idx * static_cast<std::size_t>(invariants_[j]) + static_cast<std::size_t>(g.tors[j]);
  }
  return idx;
}

std::vector<Int> FGGroup::torsion_from_index(std::size_t index) const {
  std::vector<Int> t(invariants_.size(), 0);
  for (std::size_t j = invariants_.size(); j-- > 0;) {
    const auto d = static_cast<std::size_t>(invariants_[j]);
    t[j] = static_cast<Int>(index % d);
    index /= d;
  }
  return t;
}

std::vector<GroupElement> FGGroup::torsion_elements() const {
  std::vector<GroupElement> out;
  const auto n = static_cast<std::size_t>(torsion_order());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(GroupElement{0, torsion_from_index(i)});
  return out;
}

std::string FGGroup::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank_;
  for (Int d : invariants_) os << " x Z/" << d;
  return os.str();
}

std::string FGGroup::format(const GroupElement& g) const {
  std::ostringstream os;
  os << '(';
  if (free_rank_ == 1) {
    os << g.free;
    if (!g.tors.empty()) os << "; ";
  }
  for (std::size_t j = 0; j < g.tors.size(); ++j) {
    if (j) os << ',';
    os << g.tors[j];
  }
  os << ')';
  return os.str();
}

GroupElement FGGroup::parse(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw UsageError("ParseError", "element must be parenthesized: " + std::string(text));
  }
  s = s.substr(1, s.size() - 2);
  auto parse_int = [&](const std::string& tok) -> Int {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw UsageError("ParseError", "bad integer '" + tok + "' in " + std::string(text));
    }
    return v;
  };
  auto split_commas = [&](const std::string& body) {
    std::vector<Int> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
      auto pos = body.find(',', start);
      out.push_back(parse_int(body.substr(start, pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return out;
  };
  Int free = 0;
  std::vector<Int> tors;
  if (free_rank_ == 1) {
    auto semi = s.find(';');
    free = parse_int(s.substr(0, semi));
    if (semi != std::string::npos) tors = split_commas(s.substr(semi + 1));
  } else {
    if (s.find(';') != std::string::npos) throw UsageError("ParseError", "finite group element has no free part");
    tors = split_commas(s);
  }
  if (tors.size() != invariants_.size()) {
    throw UsageError("ParseError", "element " + std::string(text) + " does not match group " + to_string());
  }
  return element(free, std::move(tors));
}

QuotientMap::QuotientMap(FGGroup source, FGGroup target, IntMatrix to_target, IntMatrix section)
    : source_(std::move(source)),
      target_(std::move(target)),
      to_target_(std::move(to_target)),
      section_(std::move(section)) {}

GroupElement QuotientMap::operator()(const GroupElement& g) const {
  const auto x = source_.coords(g);
  std::vector<Int> y(target_.coord_count(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * to_target_[i][j];
  }
  return target_.from_coords(y);
}

GroupElement QuotientMap::lift(const GroupElement& h) const {
  const auto y = target_.coords(h);
  std::vector<Int> x(source_.coord_count(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[i] * section_[i][j];
  }
  return source_.from_coords(x);
}

Presentation present(std::size_t generator_count, const IntMatrix& relations) {
  SmithReducer snf(relations, generator_count);
  snf.run();
  const std::size_t rank = snf.rank();
  const std::size_t free_count = generator_count - rank;
  if (free_count > 1) throw UsageError("RankTooLarge", "quotient has free rank >= 2");

  if (free_count == 1) {
    const std::size_t k = rank;
    for (std::size_t i = 0; i < generator_count; ++i) {
      if (snf.v()[i][k] != 0) {
        if (snf.v()[i][k] < 0) snf.negate_column(k);
        break;
      }
    }
  }

  std::vector<std::size_t> kept;
  std::vector<Int> invariants;
  if (free_count == 1) kept.push_back(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (snf.diagonal(i) > 1) {
      kept.push_back(i);
      invariants.push_back(snf.diagonal(i));
    }
  }

  Presentation out;
  out.group = FGGroup(static_cast<int>(free_count), invariants);
  out.to_group.assign(generator_count, std::vector<Int>(kept.size(), 0));
  out.section.assign(kept.size(), std::vector<Int>(generator_count, 0));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    for (std::size_t i = 0; i < generator_count; ++i) {
      out.to_group[i][c] = snf.v()[i][kept[c]];
      out.section[c][i] = snf.vinv()[kept[c]][i];
    }
  }
  return out;
}

namespace {

IntMatrix group_relations(const FGGroup& group) {
  IntMatrix rels;
  const std::size_t n = group.coord_count();
  for (std::size_t j = 0; j < group.torsion_count(); ++j) {
    std::vector<Int> row(n, 0);
    row[static_cast<std::size_t>(group.free_rank()) + j] = group.torsion_invariants()[j];
    rels.push_back(std::move(row));
  }
  return rels;
}

}  // namespace

QuotientMap quotient_by_subgroup(const FGGroup& group, const std::vector<GroupElement>& gens) {
  IntMatrix rels = group_relations(group);
  for (const auto& g : gens) {
    if (!group.contains(g)) throw UsageError("MismatchedGroup", "generator outside " + group.to_string());
    if (!group.order(g)) {
      throw UsageError("NonTorsionGenerator", "generator " + group.format(g) + " has infinite order");
    }
    rels.push_back(group.coords(g));
  }
  auto pres = present(group.coord_count(), rels);
  return QuotientMap(group, pres.group, std::move(pres.to_group), std::move(pres.section));
}

bool generates(const FGGroup& group, const std::vector<GroupElement>& gens) {
  IntMatrix rels = group_relations(group);
  for (const auto& g : gens) rels.push_back(group.coords(g));
  const auto pres = present(group.coord_count(), rels);
  return pres.group.free_rank() == 0 && pres.group.torsion_count() == 0;
}

std::vector<GroupElement> torsion_subgroup(const FGGroup& group, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens) {
    if (!group.order(g)) {
      throw UsageError("NonTorsionGenerator", "generator " + group.format(g) + " has infinite order");
    }
  }
  std::set<GroupElement> seen{group.zero()};
  std::queue<GroupElement> todo;
  todo.push(group.zero());
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      auto nxt = group.add(cur, g);
      if (seen.insert(nxt).second) todo.push(std::move(nxt));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace nccr
