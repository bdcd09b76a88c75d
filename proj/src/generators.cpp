#include "affa/generators.hpp"

namespace affa {

std::vector<Label> repeat(Label l, int k) { return std::vector<Label>(std::max(k, 0), l); }

std::vector<Label> alternating_word(Label first, int k) {
  Label second = first;
  switch (first) {
    case Label::Red:
      second = Label::Blue;
      break;
    case Label::Blue:
      second = Label::Red;
      break;
    case Label::Up:
      second = Label::Down;
      break;
    case Label::Down:
      second = Label::Up;
      break;
    default:
      break;
  }
  std::vector<Label> w;
  for (int i = 0; i < k; ++i) w.push_back(i % 2 == 0 ? first : second);
  return w;
}

std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Label> dual(const std::vector<Label>& w) {
  std::vector<Label> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(dual_label(*it));
  return r;
}

Morphism id(const Theory& t, const std::vector<Label>& w) { return Morphism::of(identity_diagram(t, w)); }

Morphism cup(const Theory& t, Label l) { return Morphism::of(rainbow_cups(t, {l})); }

Morphism cap(const Theory& t, Label l) { return Morphism::of(rainbow_caps(t, {l})); }

Diagram box_diagram(const Theory& t, BoxKind k, int rot) {
  Signature sig = box_signature(t, k);
  int q = static_cast<int>(sig.top.size()), p = static_cast<int>(sig.bottom.size());
  int L = p + q;
  Diagram d;
  d.theory = t;
  d.bottom.assign(p, Label::Plain);
  d.top.assign(q, Label::Plain);
  rot = L == 0 ? 0 : ((rot % L) + L) % L;
  d.boxes.push_back({k, rot});
  for (int w = 0; w < L; ++w) {
    int j = ((w - rot) % L + L) % L;
    Label l = canonical_leg_label(t, k, j);
    bool top = w < q;
    if (canonical_leg_on_top(t, k, j) != top && is_oriented(l)) l = flip_label(l);
    Endpoint e = top ? Endpoint::top(w) : Endpoint::bottom(p - 1 - (w - q));
    if (top)
      d.top[w] = l;
    else
      d.bottom[p - 1 - (w - q)] = l;
    d.strands.push_back(make_strand(l, e, !top, Endpoint::box(0, w)));
  }
  return d;
}

Morphism box(const Theory& t, BoxKind k, int rot) { return Morphism::of(box_diagram(t, k, rot)); }

Morphism loop(const Theory& t, Label cls, int dir) {
  Diagram d;
  d.theory = t;
  d.anchors = 1;
  Strand s{Endpoint::anchor(0, 0), Endpoint::anchor(0, 1), cls, is_oriented(cls) ? (dir == 0 ? 1 : dir) : 0};
  if (is_oriented(cls)) s.label = orient_class(cls);
  d.strands.push_back(s);
  d.links.push_back({Corner{NodeKind::Anchor, 0, 0}, Corner{NodeKind::Outer, 0, 0}});
  return Morphism::of(d);
}

Label state_leg_label(const Theory& t, BoxKind k, int rot, int slot) {
  int L = leg_count(t, k);
  int leg = ((slot - rot) % L + L) % L;
  Label l = canonical_leg_label(t, k, leg);
  // a leg on the box's bottom side turns around to reach the top
  if (!canonical_leg_on_top(t, k, leg) && is_oriented(l)) l = flip_label(l);
  return l;
}

}  // namespace affa
