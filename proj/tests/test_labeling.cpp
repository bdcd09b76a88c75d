#include <doctest.h>

#include <numeric>

#include "affa/evaluate.hpp"
#include "affa/generators.hpp"
#include "affa/labeling.hpp"
#include "affa/relations.hpp"
#include "affa/testgen.hpp"

using namespace affa;

namespace {

// Group law written out directly: dihedral elements are (rb)^a r^e, cyclic ones u^a.
GroupElement mul(const GroupElement& x, const GroupElement& y) {
  GroupElement z = x;
  long a = x.dihedral && x.reflection ? x.rotation - y.rotation : x.rotation + y.rotation;
  if (x.order) a = ((a % x.order) + x.order) % x.order;
  z.rotation = a;
  z.reflection = x.reflection != y.reflection;
  return z;
}

GroupElement inv(const GroupElement& x) {
  GroupElement z = x;
  if (!x.reflection) {
    z.rotation = x.order ? (x.order - x.rotation) % x.order : -x.rotation;
  }
  return z;
}

GroupElement letter(const Diagram& d, const FaceMap& fm, int dart) {
  const Strand& s = d.strands[fm.edge[dart]];
  GroupElement one = identity_element(d.theory);
  if (is_oriented(s.label)) {
    bool along = (fm.edge_end[dart] == 0) == (s.dir > 0);
    return times(one, along ? Label::Down : Label::Up);
  }
  bool color = d.theory.family == Family::UnshadedColorAodd || d.theory.family == Family::UnshadedColorAInf;
  bool red = s.label == Label::Red;
  return times(one, red != color ? Label::Red : Label::Blue);
}

// Labels every face starting from `start` with the identity.
std::vector<GroupElement> relabel_from(const Diagram& d, const FaceMap& fm, int start) {
  std::vector<GroupElement> lab(fm.num_faces, identity_element(d.theory));
  std::vector<bool> known(fm.num_faces, false);
  known[start] = true;
  std::vector<int> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (size_t dart = 0; dart < fm.face.size(); ++dart) {
      if (fm.face[dart] != queue[qi]) continue;
      int g = fm.face[fm.alpha[dart]];
      GroupElement want = fm.edge[dart] < 0 ? lab[queue[qi]] : mul(lab[queue[qi]], letter(d, fm, static_cast<int>(dart)));
      if (!known[g]) {
        known[g] = true;
        lab[g] = want;
        queue.push_back(g);
      } else {
        REQUIRE(lab[g] == want);
      }
    }
  return lab;
}

// Faces of a closed diagram from Euler's formula on the sphere.
int euler_faces(const Diagram& d) {
  int v = static_cast<int>(d.boxes.size()) + d.anchors;
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto node = [&](const Endpoint& e) {
    return e.kind == Endpoint::Kind::Box ? e.index : static_cast<int>(d.boxes.size()) + e.index;
  };
  int components = v;
  for (const Strand& s : d.strands) {
    int a = find(node(s.a)), b = find(node(s.b));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return static_cast<int>(d.strands.size()) - v + 1 + components;
}

const Diagram& only(const Morphism& m) {
  REQUIRE(m.terms.size() == 1);
  return m.terms[0].d;
}

std::vector<Theory> finite_theories(int max_n) {
  std::vector<Theory> out;
  for (Family f : {Family::ShadedAodd, Family::UnshadedArrowAodd, Family::UnshadedArrowAeven,
                   Family::UnshadedColorAodd})
    for (int n = 1; n <= max_n; ++n)
      for (const Theory& t : theories_with_roots(f, n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("regions of small diagrams") {
  Theory t = Theory::make(Family::UnshadedColorAodd, 2, 1);
  CHECK(regions(only(id(t, {Label::Red}))).size() == 2);
  CHECK(regions(only(loop(t, Label::Red))).size() == 2);
  Theory s = Theory::make(Family::ShadedAodd, 2, 1);
  Diagram uu = only(trace_close(compose(box(s, BoxKind::U), box(s, BoxKind::Ustar)), Side::Right));
  CHECK(static_cast<int>(regions(uu).size()) == euler_faces(uu));
  size_t darts = 0;
  for (const Region& r : regions(uu)) darts += r.darts.size();
  CHECK(darts == trace_faces(uu).face.size());
}

TEST_CASE("labels of the empty diagram and of single loops") {
  Theory c = Theory::make(Family::ShadedAodd, 3, 1);
  RegionLabeling e = label_regions(only(id(c, {})));
  REQUIRE(e.labels.size() == 1);
  CHECK(e.labels[0] == identity_element(c));

  GroupElement one = identity_element(c);
  RegionLabeling red = label_regions(only(loop(c, Label::Red)));
  REQUIRE(red.labels.size() == 2);
  CHECK(red.labels[red.star_face] == one);
  CHECK(red.labels[1 - red.star_face] == times(one, Label::Red));

  Theory a = Theory::make(Family::UnshadedArrowAodd, 2, 1);
  GroupElement u = times(identity_element(a), Label::Down);
  // clockwise: the inside lies to the right of the arrow
  RegionLabeling cw = label_regions(only(loop(a, Label::Up, 1)));
  CHECK(cw.labels[1 - cw.star_face] == u);
  RegionLabeling ccw = label_regions(only(loop(a, Label::Up, -1)));
  CHECK(ccw.labels[1 - ccw.star_face] == inv(u));
}

TEST_CASE("invariant examples") {
  Theory a = Theory::make(Family::UnshadedArrowAodd, 2, 1);
  Cyclo w = a.root();
  Morphism three = Cyclo::from_int(3) * loop(a, Label::Up, 1);
  CHECK(invariant(three) == Cyclo::from_int(3));
  Morphism U = box(a, BoxKind::U), Us = box(a, BoxKind::Ustar);
  CHECK(invariant(trace_close(compose(U, Us), Side::Right)) == Cyclo::one());
  CHECK(invariant(trace_close(compose(click(U, 1), Us), Side::Right)) == w);
  CHECK(eval_closed(trace_close(compose(click(U, 1), Us), Side::Right)) == w);
  // a plain loop expands into two labeled loops
  CHECK(invariant(loop(a, Label::Plain)) == Cyclo::from_int(2));
  CHECK_THROWS_AS(invariant(U), DiagramError);
}

TEST_CASE("face counts obey Euler's formula and labelings are unique") {
  for (const Theory& t : finite_theories(3)) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Diagram d = random_closed(t, 4, 2, seed);
      CAPTURE(t.name());
      CAPTURE(seed);
      FaceMap fm = trace_faces(d);
      CHECK(fm.num_faces == euler_faces(d));
      for (const Diagram& x : expand_plain(d)) {
        if (!is_valid(x)) continue;
        RegionLabeling r = label_regions(x);
        CHECK(r.labels[r.star_face] == identity_element(t));
        for (int start = 0; start < r.faces.num_faces; ++start) {
          std::vector<GroupElement> other = relabel_from(x, r.faces, start);
          for (int f = 0; f < r.faces.num_faces; ++f)
            CHECK(other[f] == mul(inv(r.labels[start]), r.labels[f]));
        }
      }
    }
  }
}

TEST_CASE("invariant agrees with the evaluator on random diagrams") {
  for (const Theory& t : finite_theories(3))
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
      Diagram d = random_closed(t, 6, 3, seed);
      CAPTURE(t.name());
      CAPTURE(seed);
      CHECK(invariant(d) == eval_diagram(d));
    }
}

TEST_CASE("calibration of the open conventions") {
  // the alternative readings disagree with the evaluator somewhere
  LabelConvention literal;
  literal.arrow_difference = false;
  LabelConvention shifted;
  shifted.shaded_table_as_written = false;
  bool literal_differs = false, shifted_differs = false;
  for (const Theory& t : finite_theories(3))
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Diagram d = random_closed(t, 6, 2, seed);
      Cyclo ev = eval_diagram(d);
      if (t.arrow()) literal_differs = literal_differs || invariant(d, literal) != ev;
      if (t.shaded()) shifted_differs = shifted_differs || invariant(d, shifted) != ev;
    }
  CHECK(literal_differs);
  CHECK(shifted_differs);
}

TEST_CASE("source theories are labeled through their target") {
  Theory v = Theory::make(Family::VecCyclicSource, 3, 1);
  Morphism u = box(v, BoxKind::ScriptU), us = box(v, BoxKind::ScriptUstar);
  Morphism closed = compose(us, u);
  CHECK(invariant(closed) == eval_closed(closed));
}
