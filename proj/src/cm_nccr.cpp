#include "nccr/cm_nccr.hpp"

#include <algorithm>
#include <iterator>

#include "nccr/errors.hpp"

namespace nccr {

VertexSet make_vertex_set(std::vector<GroupElement> degrees) { return VertexSet{sorted_unique(std::move(degrees))}; }

Classifier::Classifier(WeightSystem ws) : ws_(std::move(ws)), ctx_(GradedContext::from_weights(ws_)) {
  std::vector<GroupElement> torsion_weights(ws_.weights().begin() +
                                                static_cast<std::ptrdiff_t>(ws_.positive_count() + ws_.negative_count()),
                                            ws_.weights().end());
  kernel_ = torsion_subgroup(ws_.group(), torsion_weights);
}

bool Classifier::is_mcm(const GroupElement& g) const {
  const auto h = ctx_.q()(g);
  const auto& hg = ctx_.group();
  return !ctx_.leq(ctx_.p(), h) && !ctx_.leq(h, hg.neg(ctx_.p()));
}

std::vector<GroupElement> Classifier::image(const VertexSet& v) const {
  std::vector<GroupElement> out;
  out.reserve(v.degrees.size());
  for (const auto& g : v.degrees) out.push_back(ctx_.q()(g));
  return sorted_unique(std::move(out));
}

bool Classifier::is_modifying(const VertexSet& v) const {
  return jset_check(ctx_, image(v)).status != JSetStatus::NotInJTilde;
}

bool Classifier::is_modifying_pairwise(const VertexSet& v) const {
  for (const auto& a : v.degrees) {
    for (const auto& b : v.degrees) {
      if (!is_mcm(g().sub(b, a))) return false;
    }
  }
  return true;
}

bool Classifier::is_nccr(const VertexSet& v) const {
  if (v.degrees.empty()) return false;
  const auto img = image(v);
  if (!is_maximal(ctx_, img)) return false;
  return summands(img) == make_vertex_set(v.degrees);
}

VertexSet Classifier::summands(const std::vector<GroupElement>& j) const {
  std::vector<GroupElement> out;
  out.reserve(j.size() * kernel_.size());
  for (const auto& h : j) {
    const auto base = ctx_.q().lift(h);
    for (const auto& k : kernel_) out.push_back(g().add(base, k));
  }
  return make_vertex_set(std::move(out));
}

std::vector<VertexSet> Classifier::enumerate_nccrs() const {
  std::vector<VertexSet> out;
  for (const auto& c : enumerate_classes(ctx_)) out.push_back(summands(c.canonical.elements));
  return out;
}

MutationResult Classifier::iw_mutation(const VertexSet& v, const GroupElement& m) const {
  if (!is_nccr(v)) throw UsageError("NotNCCR", "vertex set does not give an NCCR");
  JSet j{image(v), true};
  JSet mutated = mutate(ctx_, j, m);

  std::vector<GroupElement> rest;
  std::copy_if(j.elements.begin(), j.elements.end(), std::back_inserter(rest),
               [&](const GroupElement& x) { return x != m; });

  MutationResult r;
  r.mutated = summands(mutated.elements);
  r.certificate.fixed_part = summands(rest);
  r.certificate.removed_orbit = m;
  r.certificate.plus_steps = ws_.negative_count() - 1;
  r.certificate.minus_steps = ws_.positive_count() - 1;
  return r;
}

}  // namespace nccr
