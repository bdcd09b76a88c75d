#include "affa/labeling.hpp"

#include "affa/equiv.hpp"

namespace affa {

std::vector<Region> regions(const Diagram& d) {
  FaceMap fm = trace_faces(d);
  std::vector<Region> out(fm.num_faces);
  for (int f = 0; f < fm.num_faces; ++f) out[f].id = f;
  std::vector<bool> seen(fm.face.size(), false);
  for (size_t dart = 0; dart < fm.face.size(); ++dart) {
    if (seen[dart]) continue;
    int x = static_cast<int>(dart);
    while (!seen[x]) {
      seen[x] = true;
      out[fm.face[x]].darts.push_back(x);
      x = fm.sigma[fm.alpha[x]];
    }
  }
  return out;
}

namespace {

// Group letter recorded when crossing strand s.
Label crossing_letter(const Theory& t, const Strand& s) {
  if (t.family == Family::UnshadedColorAodd || t.family == Family::UnshadedColorAInf)
    return s.label == Label::Red ? Label::Blue : Label::Red;
  return s.label;
}

}  // namespace

RegionLabeling label_regions(const Diagram& d) {
  if (!d.closed()) throw DiagramError("structure", "region labelings are defined for closed diagrams");
  if (d.theory.source()) return label_regions(functor_image(d));
  for (const Strand& s : d.strands)
    if (s.label == Label::Plain) throw DiagramError("label", "expand plain strands before labeling");

  RegionLabeling r;
  r.faces = trace_faces(d);
  const FaceMap& fm = r.faces;
  r.star_face = fm.corner_face(0, 0);
  GroupElement one = identity_element(d.theory);
  r.labels.assign(fm.num_faces, one);
  std::vector<bool> known(fm.num_faces, false);
  known[r.star_face] = true;

  // label(face across dart) = label(face of dart) * step(dart)
  auto step = [&](int dart, const GroupElement& g) {
    int e = fm.edge[dart];
    if (e < 0) return g;
    const Strand& s = d.strands[e];
    if (!is_oriented(s.label)) return times(g, crossing_letter(d.theory, s));
    // the dart travels along the arrow when it leaves end a of a strand flowing a -> b;
    // its own face is then the left one
    bool along = (fm.edge_end[dart] == 0) == (s.dir > 0);
    return times(g, along ? Label::Down : Label::Up);
  };

  std::vector<int> queue{r.star_face};
  std::vector<std::vector<int>> darts_of(fm.num_faces);
  for (size_t dart = 0; dart < fm.face.size(); ++dart) darts_of[fm.face[dart]].push_back(static_cast<int>(dart));
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (int dart : darts_of[f]) {
      int g = fm.face[fm.alpha[dart]];
      GroupElement want = step(dart, r.labels[f]);
      if (!known[g]) {
        known[g] = true;
        r.labels[g] = want;
        queue.push_back(g);
      } else if (r.labels[g] != want) {
        throw std::logic_error("label_regions: inconsistent labeling across strand");
      }
    }
  }
  for (int f = 0; f < fm.num_faces; ++f)
    if (!known[f]) throw std::logic_error("label_regions: face not reachable from the star");
  for (size_t b = 0; b < d.boxes.size(); ++b)
    r.box_face.push_back(fm.corner_face(fm.node_id(NodeKind::Box, static_cast<int>(b)), d.boxes[b].rot));
  return r;
}

long box_ell(const Theory& t, BoxKind k, const GroupElement& g, const LabelConvention& c) {
  BoxKind v = vertex_kind(k);
  bool starred = v == BoxKind::Ustar || v == BoxKind::Vstar;
  if (t.arrow()) {
    long m = g.rotation;
    if (starred) return m;
    return c.arrow_difference ? -m : m;
  }
  long a = g.rotation;
  long base = g.reflection ? (c.shaded_table_as_written ? -a : -(a + 1)) : a;
  return starred ? -base : base;
}

LabelResult label_term(const Diagram& d, const LabelConvention& c) {
  if (d.theory.source()) return label_term(functor_image(d), c);
  LabelResult res;
  res.labeling = label_regions(d);
  int N = d.theory.modulus();
  for (size_t b = 0; b < d.boxes.size(); ++b)
    res.ell += box_ell(d.theory, d.boxes[b].kind, res.labeling.labels[res.labeling.box_face[b]], c);
  if (N) res.ell = ((res.ell % N) + N) % N;
  res.value = d.boxes.empty() ? Cyclo::one() : d.theory.root().pow(res.ell);
  return res;
}

Cyclo invariant(const Diagram& d, const LabelConvention& c) {
  Cyclo total = Cyclo::zero();
  for (const Diagram& x : expand_plain(d)) {
    std::string why;
    if (!is_valid(x, &why)) continue;  // label clash: the term vanishes
    total += label_term(x, c).value;
  }
  return total;
}

Cyclo invariant(const Morphism& m, const LabelConvention& c) {
  if (!m.closed()) throw DiagramError("structure", "invariant needs a closed morphism");
  Cyclo total = Cyclo::zero();
  for (const Term& t : m.terms) total += t.c * invariant(t.d, c);
  return total;
}

}  // namespace affa
