#include <algorithm>
#include <random>
#include <tuple>

#include "doctest.h"
#include "nccr/errors.hpp"
#include "nccr/quiver.hpp"
#include "support.hpp"

using namespace nccr;
using namespace testing_support;

namespace {

using Labeled = std::tuple<GroupElement, GroupElement, std::string>;

std::vector<Labeled> labeled(const Quiver& q, const FGGroup& g, const GroupElement& shift) {
  std::vector<Labeled> out;
  for (const auto& a : q.arrows) {
    out.emplace_back(g.add(q.vertices[a.source], shift), g.add(q.vertices[a.target], shift),
                     monomial_label(a.exponents));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> loop_labels(const Quiver& q) {
  std::vector<std::string> out;
  for (const auto& a : q.arrows) {
    if (a.source == a.target) out.push_back(monomial_label(a.exponents));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("quiver") {

TEST_CASE("hom counts") {
  auto ws = validate(ex1().group, ex1().raw);
  const auto& z = ws.group();
  CHECK(hom_monomial_count(ws, z.zero(), z.zero(), 2) == 5);
  CHECK(hom_monomial_count(ws, z.zero(), z.zero(), 0) == 1);
  CHECK(hom_monomial_count(ws, z.zero(), z.element(1, {}), 1) == 2);
}

TEST_CASE("first example quiver") {
  auto c = classifier(ex1());
  const auto& z = c.g();
  auto s = arrows(c.weights(), make_vertex_set(elems(z, {0, 1})), default_search_bound(c));
  CHECK(s.warnings.empty());
  const auto& q = s.quiver;
  CHECK(q.vertices.size() == 2);
  CHECK(q.arrows.size() == 4);
  CHECK(q.loop_count() == 0);
  CHECK(emit_dot(q) ==
        "digraph quiver {\n"
        "  \"(0)\";\n"
        "  \"(1)\";\n"
        "  \"(0)\" -> \"(1)\" [label=\"x2\"];\n"
        "  \"(0)\" -> \"(1)\" [label=\"x1\"];\n"
        "  \"(1)\" -> \"(0)\" [label=\"x4\"];\n"
        "  \"(1)\" -> \"(0)\" [label=\"x3\"];\n"
        "}\n");
}

TEST_CASE("second example golden quivers") {
  auto c = classifier(ex2());
  const auto& z = c.g();
  const Int bound = default_search_bound(c);
  auto a = arrows(c.weights(), make_vertex_set(elems(z, {0, 1, 2, 3, 4})), bound);
  CHECK(a.warnings.empty());
  CHECK(a.quiver.arrows.size() == 11);
  CHECK(loop_labels(a.quiver) == std::vector<std::string>{"x2*x4"});
  for (const auto& arr : a.quiver.arrows) {
    if (arr.source == arr.target) CHECK(a.quiver.vertices[arr.source] == z.element(2, {}));
  }
  auto b = arrows(c.weights(), make_vertex_set(elems(z, {0, 2, 3, 4, 6})), bound);
  CHECK(b.warnings.empty());
  CHECK(b.quiver.arrows.size() == 13);
  CHECK(loop_labels(b.quiver) == std::vector<std::string>{"x1*x3", "x2*x4", "x2*x4"});
  std::vector<std::pair<Int, std::string>> loops;
  for (const auto& arr : b.quiver.arrows) {
    if (arr.source == arr.target) loops.emplace_back(b.quiver.vertices[arr.source].free, monomial_label(arr.exponents));
  }
  std::sort(loops.begin(), loops.end());
  CHECK(loops == std::vector<std::pair<Int, std::string>>{{2, "x2*x4"}, {3, "x1*x3"}, {4, "x2*x4"}});
}

TEST_CASE("class quivers of examples three and four") {
  struct Pin {
    Example e;
    std::vector<std::size_t> vertices, arrow_counts;
  };
  // vertex and arrow counts read off the drawn quivers
  std::vector<Pin> pins{{ex3_1(), {4, 4}, {8, 10}}, {ex3_2(), {6, 6, 6}, {12, 16, 16}}, {ex4(), {8, 8}, {24, 28}}};
  for (const auto& pin : pins) {
    auto c = classifier(pin.e);
    auto classes = enumerate_classes(c.context());
    REQUIRE(classes.size() == pin.vertices.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto v = c.summands(classes[i].canonical.elements);
      auto s = arrows(c.weights(), v, default_search_bound(c));
      CHECK(s.warnings.empty());
      CHECK(s.quiver.vertices.size() == pin.vertices[i]);
      CHECK(s.quiver.arrows.size() == pin.arrow_counts[i]);
    }
  }
}

TEST_CASE("coherence, path generation and twist invariance") {
  std::mt19937_64 rng(31);
  for (const auto& e : all_examples()) {
    auto c = classifier(e);
    const Int bound = default_search_bound(c);
    for (const auto& v : c.enumerate_nccrs()) {
      auto q = arrows_at_bound(c.weights(), v, bound);
      CHECK(degree_coherent(c.weights(), q));
      CHECK(path_generated(c.weights(), q, std::min<Int>(bound, 8)));
      for (int it = 0; it < 3; ++it) {
        auto g0 = random_element(rng, c.g(), 7);
        std::vector<GroupElement> moved;
        for (const auto& d : v.degrees) moved.push_back(c.g().add(d, g0));
        auto q2 = arrows_at_bound(c.weights(), make_vertex_set(moved), bound);
        CHECK(labeled(q2, c.g(), c.g().zero()) == labeled(q, c.g(), g0));
      }
    }
  }
}

TEST_CASE("small bound warns") {
  auto c = classifier(ex2());
  auto s = arrows(c.weights(), make_vertex_set(elems(c.g(), {0, 2, 3, 4, 6})), 1);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].rfind("BoundTooSmall", 0) == 0);
  CHECK_THROWS_AS(arrows_at_bound(c.weights(), make_vertex_set(elems(c.g(), {0})), 0), UsageError);
}

TEST_CASE("mckay quivers") {
  FGGroup z2(0, {2}), z3(0, {3}), triv(0, {});
  auto q2 = mckay_quiver(validate(z2, {z2.element(0, {1}), z2.element(0, {1})}));
  CHECK(q2.vertices.size() == 2);
  CHECK(q2.arrows.size() == 4);
  auto q3 = mckay_quiver(validate(z3, {z3.element(0, {1}), z3.element(0, {1}), z3.element(0, {1})}));
  CHECK(q3.vertices.size() == 3);
  CHECK(q3.arrows.size() == 9);
  auto qt = mckay_quiver(validate(triv, {triv.zero()}));
  CHECK(qt.vertices.size() == 1);
  CHECK(qt.loop_count() == 1);
  CHECK_THROWS_AS(mckay_quiver(validate(ex1().group, ex1().raw)), UsageError);
}

TEST_CASE("dot rendering") {
  CHECK(monomial_label({0, 1, 0, 1}) == "x2*x4");
  CHECK(monomial_label({2, 0, 1}) == "x1^2*x3");
  CHECK(monomial_label({0, 0}) == "1");
  Quiver empty;
  empty.group = FGGroup(1, {});
  CHECK(emit_dot(empty) == "digraph quiver {\n}\n");
  Quiver loop;
  loop.group = FGGroup(1, {});
  loop.vertices = {GroupElement{3, {}}};
  loop.arrows = {Arrow{0, 0, {0, 1, 0, 1}}};
  CHECK(emit_dot(loop) == "digraph quiver {\n  \"(3)\";\n  \"(3)\" -> \"(3)\" [label=\"x2*x4\"];\n}\n");
}

}  // TEST_SUITE
