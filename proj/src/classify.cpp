#include "affa/classify.hpp"

#include <numeric>
#include <stdexcept>

#include "affa/evaluate.hpp"
#include "affa/generators.hpp"
#include "affa/relations.hpp"

namespace affa {

std::string family_class_name(FamilyClass f) {
  switch (f) {
    case FamilyClass::ShadedAodd:
      return "shaded-a-odd";
    case FamilyClass::UnshadedAodd:
      return "unshaded-a-odd";
    case FamilyClass::Aeven:
      return "a-even";
    case FamilyClass::UnshadedAInf:
      return "unshaded-a-inf";
    case FamilyClass::ShadedAInf:
      return "shaded-a-inf";
  }
  throw std::logic_error("unknown family class");
}

FamilyClass parse_family_class(const std::string& s) {
  for (FamilyClass f : {FamilyClass::ShadedAodd, FamilyClass::UnshadedAodd, FamilyClass::Aeven,
                        FamilyClass::UnshadedAInf, FamilyClass::ShadedAInf})
    if (family_class_name(f) == s) return f;
  throw std::invalid_argument("unknown family class '" + s + "'");
}

std::vector<Theory> enumerate_presentations(FamilyClass f, int n) {
  auto with_roots = [](Family fam, int k) { return theories_with_roots(fam, k); };
  std::vector<Theory> out;
  switch (f) {
    case FamilyClass::ShadedAodd:
      return with_roots(Family::ShadedAodd, n);
    case FamilyClass::UnshadedAodd:
      out = with_roots(Family::UnshadedArrowAodd, n);
      for (const Theory& t : with_roots(Family::UnshadedColorAodd, n)) out.push_back(t);
      return out;
    case FamilyClass::Aeven:
      return with_roots(Family::UnshadedArrowAeven, n);
    case FamilyClass::UnshadedAInf:
      return {Theory::make(Family::UnshadedArrowAInf), Theory::make(Family::UnshadedColorAInf)};
    case FamilyClass::ShadedAInf:
      return {Theory::make(Family::ShadedAInf)};
  }
  return out;
}

namespace {

// How many clicks bring kind k back to a multiple of itself.
int return_clicks(const Theory& t) { return t.arrow() ? 1 : 2; }

Cyclo eigenvalue_on(const Theory& t, BoxKind k) {
  Morphism b = box(t, k), bs = box(t, adjoint_kind(k));
  Cyclo base = eval_closed(trace_close(compose(b, bs), Side::Right));
  Cyclo moved = eval_closed(trace_close(compose(click(b, return_clicks(t)), bs), Side::Right));
  if (base.is_zero()) throw std::logic_error("click_eigenvalue: generator has zero norm");
  return moved / base;
}

BoxKind distinguished(const Theory& t) {
  return t.family == Family::UnshadedColorAodd ? BoxKind::V : BoxKind::U;
}

// The generator that plays the distinguished role after exchanging P_1 and Q_1.
BoxKind relabeled(const Theory& t) {
  if (t.shaded()) return BoxKind::V;
  return adjoint_kind(distinguished(t));
}

std::string case_name(const Theory& t) {
  if (t.shaded()) return "shaded";
  if (t.arrow()) return "arrow";
  return "color";
}

}  // namespace

Cyclo click_eigenvalue(const Theory& t) {
  if (!t.has_boxes() || t.source()) throw std::invalid_argument("click_eigenvalue: " + t.name() + " has no generator box");
  return eigenvalue_on(t, distinguished(t));
}

namespace {

// Vertex count of the principal graph, 0 for the infinite families.
int graph_size(const Theory& t) {
  if (t.infinite()) return 0;
  return t.family == Family::UnshadedArrowAeven ? 2 * t.n + 1 : 2 * t.n;
}

}  // namespace

IsoResult are_isomorphic(const Theory& a, const Theory& b) {
  if (a == b) return {true, "identical presentations"};
  if (graph_size(a) != graph_size(b) || a.infinite() != b.infinite() || a.shaded() != b.shaded())
    return {false, "different principal graphs or shading"};
  if (case_name(a) != case_name(b))
    return {false, "P_1 is " + std::string(a.arrow() ? "dual to Q_1" : "self-dual") + " in " + a.name() +
                       " but " + (b.arrow() ? "dual to Q_1" : "self-dual") + " in " + b.name()};
  if (a.infinite()) return {true, "box-free presentations of the same case"};
  Cyclo ea = click_eigenvalue(a), eb = click_eigenvalue(b);
  Cyclo ra = eigenvalue_on(a, relabeled(a)), rb = eigenvalue_on(b, relabeled(b));
  if (ea == eb && ra == rb) return {true, "click eigenvalue " + ea.to_string() + " on both generators"};
  return {false, "click eigenvalue " + ea.to_string() + " vs " + eb.to_string() + "; after exchanging P_1 and Q_1 " +
                     ra.to_string() + " vs " + rb.to_string()};
}

int count_classes(FamilyClass f, int n) {
  std::vector<Theory> ts = enumerate_presentations(f, n);
  std::vector<int> parent(ts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size(); ++j)
      if (find(static_cast<int>(i)) != find(static_cast<int>(j)) && are_isomorphic(ts[i], ts[j]).isomorphic)
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
  int classes = 0;
  for (size_t i = 0; i < ts.size(); ++i) classes += find(static_cast<int>(i)) == static_cast<int>(i);
  return classes;
}

}  // namespace affa
