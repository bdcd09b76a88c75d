#include <algorithm>
#include <numeric>

#include "affa/diagram.hpp"

namespace affa {

namespace {

int mod(int a, int m) { return m == 0 ? 0 : ((a % m) + m) % m; }

std::vector<Label> dual_word(const std::vector<Label>& w) {
  std::vector<Label> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(dual_label(*it));
  return r;
}

void refresh_boundary(Diagram& d) {
  for (const Strand& s : d.strands) {
    for (int end = 0; end < 2; ++end) {
      const Endpoint& e = end == 0 ? s.a : s.b;
      if (e.kind == Endpoint::Kind::Bottom) d.bottom[e.index] = label_at(d, s, end == 0);
      if (e.kind == Endpoint::Kind::Top) d.top[e.index] = label_at(d, s, end == 0);
    }
  }
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int node_index(const Diagram& d, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Box:
      return 1 + e.index;
    case Endpoint::Kind::Anchor:
      return 1 + static_cast<int>(d.boxes.size()) + e.index;
    default:
      return 0;
  }
}

int node_index(const Diagram& d, const Corner& c) {
  switch (c.node) {
    case NodeKind::Box:
      return 1 + c.index;
    case NodeKind::Anchor:
      return 1 + static_cast<int>(d.boxes.size()) + c.index;
    default:
      return 0;
  }
}

}  // namespace

Strand make_strand(Label l, Endpoint a, bool a_above, Endpoint b) {
  Strand s{a, b, l, 0};
  if (is_oriented(l)) {
    s.label = orient_class(l);
    s.dir = end_role(l, a_above) == Role::Source ? 1 : -1;
  }
  return s;
}

// ---- tensor ------------------------------------------------------------------------

Diagram tensor(const Diagram& a, const Diagram& b) {
  if (!(a.theory == b.theory)) throw std::invalid_argument("tensor: theory mismatch");
  int qa = static_cast<int>(a.top.size()), pa = static_cast<int>(a.bottom.size());
  int qb = static_cast<int>(b.top.size()), pb = static_cast<int>(b.bottom.size());
  int ka = qa + pa, kb = qb + pb;
  int K = ka + kb;
  int Ba = static_cast<int>(a.boxes.size());
  Diagram r;
  r.theory = a.theory;
  r.bottom = a.bottom;
  r.bottom.insert(r.bottom.end(), b.bottom.begin(), b.bottom.end());
  r.top = a.top;
  r.top.insert(r.top.end(), b.top.begin(), b.top.end());
  r.boxes = a.boxes;
  r.boxes.insert(r.boxes.end(), b.boxes.begin(), b.boxes.end());
  r.anchors = a.anchors + b.anchors;
  for (const Strand& s : a.strands) r.strands.push_back(s);
  auto shift_b = [&](Endpoint e) {
    switch (e.kind) {
      case Endpoint::Kind::Bottom:
        e.index += pa;
        break;
      case Endpoint::Kind::Top:
        e.index += qa;
        break;
      case Endpoint::Kind::Box:
        e.index += Ba;
        break;
      case Endpoint::Kind::Anchor:
        e.index += a.anchors;
        break;
    }
    return e;
  };
  for (Strand s : b.strands) {
    s.a = shift_b(s.a);
    s.b = shift_b(s.b);
    r.strands.push_back(s);
  }
  auto outer_a = [&](int c) {
    if (ka == 0) return 0;
    if (c < qa) return c;
    if (c == qa) return mod(qa, K);
    return qa + qb + pb + (c - qa);
  };
  auto outer_b = [&](int c) {
    if (kb == 0 || c == 0) return mod(qa, K);
    if (c < qb) return qa + c;
    if (c == qb) return mod(qa + qb, K);
    return qa + qb + (c - qb);
  };
  for (Link l : a.links) {
    for (Corner* c : {&l.child, &l.parent})
      if (c->node == NodeKind::Outer) c->corner = outer_a(c->corner);
    r.links.push_back(l);
  }
  for (Link l : b.links) {
    for (Corner* c : {&l.child, &l.parent}) {
      if (c->node == NodeKind::Outer)
        c->corner = outer_b(c->corner);
      else if (c->node == NodeKind::Box)
        c->index += Ba;
      else
        c->index += a.anchors;
    }
    r.links.push_back(l);
  }
  return r;
}

// ---- compose -------------------------------------------------------------------------

std::optional<Diagram> compose(const Diagram& a, const Diagram& b) {
  if (!(a.theory == b.theory)) throw std::invalid_argument("compose: theory mismatch");
  if (a.bottom.size() != b.top.size()) throw std::invalid_argument("compose: boundary length mismatch");
  int k = static_cast<int>(a.bottom.size());
  int qa = static_cast<int>(a.top.size()), pa = k;
  int pb = static_cast<int>(b.bottom.size());
  int Kn = qa + pb;
  int Ba = static_cast<int>(a.boxes.size()), Bb = static_cast<int>(b.boxes.size());
  int Aa = a.anchors, Ab = b.anchors;
  int glue0 = Aa + Ab;  // glue node g is anchor glue0 + g in the net

  // Net: glue points are temporary anchors with side 0 up and side 1 down.
  Diagram net;
  net.theory = a.theory;
  net.top = a.top;
  net.bottom = b.bottom;
  net.boxes = a.boxes;
  net.boxes.insert(net.boxes.end(), b.boxes.begin(), b.boxes.end());
  net.anchors = Aa + Ab + k;
  auto map_a = [&](Endpoint e) {
    if (e.kind == Endpoint::Kind::Bottom) return Endpoint::anchor(glue0 + e.index, 0);
    return e;
  };
  auto map_b = [&](Endpoint e) {
    switch (e.kind) {
      case Endpoint::Kind::Top:
        return Endpoint::anchor(glue0 + e.index, 1);
      case Endpoint::Kind::Box:
        e.index += Ba;
        return e;
      case Endpoint::Kind::Anchor:
        e.index += Aa;
        return e;
      default:
        return e;
    }
  };
  for (Strand s : a.strands) {
    s.a = map_a(s.a);
    s.b = map_a(s.b);
    net.strands.push_back(s);
  }
  int Sa = static_cast<int>(a.strands.size());
  for (Strand s : b.strands) {
    s.a = map_b(s.a);
    s.b = map_b(s.b);
    net.strands.push_back(s);
  }
  auto glue_corner = [&](int g, int c) { return Corner{NodeKind::Anchor, glue0 + g, c}; };
  auto outer = [&](int c) { return Corner{NodeKind::Outer, 0, mod(c, Kn)}; };
  int ka = qa + pa, kb = k + pb;
  auto corner_a = [&](Corner c) {
    if (c.node != NodeKind::Outer) return c;
    int x = c.corner;
    if (ka == 0 || x == 0) return outer(0);
    if (x < qa) return outer(x);
    if (x == qa) return outer(qa);
    int jp = x - qa;  // gap between glue pa-jp and pa-1-jp
    return glue_corner(pa - 1 - jp, 1);
  };
  auto corner_b = [&](Corner c) {
    if (c.node == NodeKind::Box) {
      c.index += Ba;
      return c;
    }
    if (c.node == NodeKind::Anchor) {
      c.index += Aa;
      return c;
    }
    int x = c.corner;
    if (kb == 0 || x == 0) return outer(0);
    if (x < k) return glue_corner(x - 1, 1);
    if (x == k) return outer(qa);
    return outer(qa + (x - k));
  };
  for (const Link& l : a.links) net.links.push_back({corner_a(l.child), corner_a(l.parent)});
  for (const Link& l : b.links) net.links.push_back({corner_b(l.child), corner_b(l.parent)});

  int N = 1 + Ba + Bb + net.anchors;
  auto nid = [&](const Endpoint& e) { return node_index(net, e); };
  auto nidc = [&](const Corner& c) { return node_index(net, c); };
  auto glue_node = [&](int g) { return 1 + Ba + Bb + glue0 + g; };
  UF uf(N);
  for (const Strand& s : net.strands) uf.unite(nid(s.a), nid(s.b));
  std::vector<char> placed(N, 0);
  for (const Link& l : net.links) placed[uf.find(nidc(l.child))] = 1;
  std::vector<char> seen(N, 0);
  for (int g = 0; g < k; ++g) {
    int c = uf.find(glue_node(g));
    if (c == uf.find(0) || placed[c] || seen[c]) continue;
    seen[c] = 1;
    Corner parent = g == 0 ? Corner{NodeKind::Outer, 0, 0} : glue_corner(g - 1, 1);
    net.links.push_back({glue_corner(g, 0), parent});
  }

  // chains through glue points
  int S = static_cast<int>(net.strands.size());
  std::vector<std::array<int, 2>> at_glue(k, {-1, -1});
  for (int i = 0; i < S; ++i) {
    for (const Endpoint* e : {&net.strands[i].a, &net.strands[i].b})
      if (e->kind == Endpoint::Kind::Anchor && e->index >= glue0) at_glue[e->index - glue0][e->slot] = i;
  }
  (void)Sa;
  std::vector<char> used(S, 0);
  std::vector<char> glue_survives(k, 0);
  struct Chain {
    Endpoint a, b;
    Label label;
    int dir;
    int anchor_glue;  // -1 unless a closed glue loop
  };
  std::vector<Chain> chains;
  bool clash = false;
  auto run = [&](int seg, bool from_a, Endpoint start, int cyc_glue) {
    Label cls = Label::Plain;
    int fwd = 0;  // +1 forward, -1 backward, 0 unknown
    Endpoint end_ep = start;
    while (true) {
      used[seg] = 1;
      const Strand& s = net.strands[seg];
      if (s.label != Label::Plain) {
        if (cls == Label::Plain)
          cls = s.label;
        else if (cls != s.label)
          clash = true;
      }
      if (s.dir != 0) {
        int f = (s.dir == 1) == from_a ? 1 : -1;
        if (fwd == 0)
          fwd = f;
        else if (fwd != f)
          clash = true;
      }
      Endpoint out = from_a ? s.b : s.a;
      if (out.kind == Endpoint::Kind::Anchor && out.index >= glue0) {
        int g = out.index - glue0;
        if (g == cyc_glue && out.slot == 1) {
          end_ep = out;
          break;
        }
        int next = at_glue[g][1 - out.slot];
        seg = next;
        from_a = net.strands[next].a == Endpoint::anchor(out.index, 1 - out.slot);
        continue;
      }
      end_ep = out;
      break;
    }
    chains.push_back({start, end_ep, cls, is_oriented(cls) ? (fwd == 0 ? 1 : fwd) : 0, cyc_glue});
  };
  auto is_glue = [&](const Endpoint& e) { return e.kind == Endpoint::Kind::Anchor && e.index >= glue0; };
  for (int i = 0; i < S; ++i) {
    if (used[i]) continue;
    const Strand& s = net.strands[i];
    if (!is_glue(s.a))
      run(i, true, s.a, -1);
    else if (!is_glue(s.b))
      run(i, false, s.b, -1);
  }
  for (int g = 0; g < k; ++g) {
    int seg = at_glue[g][0];
    if (used[seg]) continue;
    glue_survives[g] = 1;
    const Strand& s = net.strands[seg];
    bool from_a = s.a == Endpoint::anchor(glue0 + g, 0);
    run(seg, from_a, Endpoint::anchor(glue0 + g, 0), g);
  }
  if (clash) return std::nullopt;

  // re-home link corners that sit on vanishing glue points
  FaceMap fm = trace_faces(net);
  auto survives = [&](int node) {
    int first_glue = 1 + Ba + Bb + glue0;
    if (node < first_glue) return true;
    return static_cast<bool>(glue_survives[node - first_glue]);
  };
  auto corner_of_dart = [&](int dart) {
    int v = fm.node[dart];
    int c = fm.dart_corner[dart];
    if (v == 0) return Corner{NodeKind::Outer, 0, c};
    if (v <= Ba + Bb) return Corner{NodeKind::Box, v - 1, c};
    return Corner{NodeKind::Anchor, v - 1 - Ba - Bb, c};
  };
  auto rehome = [&](const Corner& c) {
    int v = nidc(c);
    if (survives(v)) return c;
    int f = fm.corner_face(v, c.corner);
    int comp = uf.find(v);
    for (size_t dart = 0; dart < fm.face.size(); ++dart) {
      if (fm.face[dart] != f) continue;
      int u = fm.node[dart];
      if (!survives(u) || uf.find(u) != comp) continue;
      return corner_of_dart(static_cast<int>(dart));
    }
    throw std::logic_error("compose: no surviving corner for placement link");
  };

  Diagram r;
  r.theory = a.theory;
  r.top = a.top;
  r.bottom = b.bottom;
  r.boxes = net.boxes;
  std::vector<int> glue_anchor(k, -1);
  int na = Aa + Ab;
  for (int g = 0; g < k; ++g)
    if (glue_survives[g]) glue_anchor[g] = na++;
  r.anchors = na;
  auto final_ep = [&](Endpoint e) {
    if (is_glue(e)) e.index = glue_anchor[e.index - glue0];
    return e;
  };
  auto final_corner = [&](Corner c) {
    if (c.node == NodeKind::Anchor && c.index >= glue0) c.index = glue_anchor[c.index - glue0];
    return c;
  };
  for (const Chain& ch : chains) {
    Strand s{final_ep(ch.a), final_ep(ch.b), ch.label, ch.dir};
    r.strands.push_back(s);
  }
  for (const Link& l : net.links) r.links.push_back({final_corner(rehome(l.child)), final_corner(rehome(l.parent))});
  refresh_boundary(r);
  if (r.theory.shaded()) derived_shading(r);
  return r;
}

// ---- adjoint, click ----------------------------------------------------------------

Diagram adjoint(const Diagram& a) {
  Diagram r;
  r.theory = a.theory;
  r.bottom = a.top;
  r.top = a.bottom;
  r.anchors = a.anchors;
  int k = a.walk_length();
  for (const BoxInst& b : a.boxes) {
    int L = leg_count(a.theory, b.kind);
    r.boxes.push_back({adjoint_kind(b.kind), mod(L - b.rot, L)});
  }
  auto ep = [&](Endpoint e) {
    switch (e.kind) {
      case Endpoint::Kind::Bottom:
        return Endpoint::top(e.index);
      case Endpoint::Kind::Top:
        return Endpoint::bottom(e.index);
      case Endpoint::Kind::Box:
        e.slot = a.box_legs(e.index) - 1 - e.slot;
        return e;
      case Endpoint::Kind::Anchor:
        e.slot = 1 - e.slot;
        return e;
    }
    return e;
  };
  for (Strand s : a.strands) {
    s.a = ep(s.a);
    s.b = ep(s.b);
    s.dir = -s.dir;
    r.strands.push_back(s);
  }
  auto cn = [&](Corner c) {
    if (c.node == NodeKind::Outer)
      c.corner = mod(k - c.corner, k);
    else if (c.node == NodeKind::Box) {
      int L = a.box_legs(c.index);
      c.corner = mod(L - c.corner, L);
    }
    return c;
  };
  for (const Link& l : a.links) r.links.push_back({cn(l.child), cn(l.parent)});
  return r;
}

namespace {

// New boundary after a click of the walk by `steps`.
void clicked_boundary(const std::vector<Label>& bottom, const std::vector<Label>& top, int steps,
                      std::vector<Label>& nb, std::vector<Label>& nt) {
  int q = static_cast<int>(top.size()), p = static_cast<int>(bottom.size());
  int k = p + q;
  nb.assign(p, Label::Plain);
  nt.assign(q, Label::Plain);
  for (int w = 0; w < k; ++w) {
    Label l = w < q ? top[w] : bottom[p - 1 - (w - q)];
    int w2 = mod(w + steps, k);
    bool was_top = w < q, is_top = w2 < q;
    if (was_top != is_top && is_oriented(l)) l = flip_label(l);
    if (is_top)
      nt[w2] = l;
    else
      nb[p - 1 - (w2 - q)] = l;
  }
}

}  // namespace

Diagram click(const Diagram& a, int steps) {
  int k = a.walk_length();
  if (k == 0) return a;
  Diagram r = a;
  clicked_boundary(a.bottom, a.top, steps, r.bottom, r.top);
  for (Strand& s : r.strands) {
    for (Endpoint* e : {&s.a, &s.b}) {
      if (e->kind == Endpoint::Kind::Box || e->kind == Endpoint::Kind::Anchor) continue;
      *e = walk_endpoint(r, mod(walk_position(a, *e) + steps, k));
    }
  }
  for (Link& l : r.links)
    for (Corner* c : {&l.child, &l.parent})
      if (c->node == NodeKind::Outer) c->corner = mod(c->corner + steps, k);
  return r;
}

std::vector<Diagram> expand_plain(const Diagram& a) {
  std::vector<Diagram> out{a};
  for (size_t i = 0; i < a.strands.size(); ++i) {
    if (a.strands[i].label != Label::Plain) continue;
    std::vector<Diagram> next;
    for (const Diagram& d : out) {
      for (int v = 0; v < 2; ++v) {
        Diagram e = d;
        if (a.theory.colored()) {
          e.strands[i].label = v == 0 ? Label::Red : Label::Blue;
        } else if (a.theory.arrow()) {
          e.strands[i].label = Label::Up;
          e.strands[i].dir = v == 0 ? 1 : -1;
        } else {
          throw std::invalid_argument("expand_plain: theory has no plain strands");
        }
        refresh_boundary(e);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---- morphism level -------------------------------------------------------------------

Morphism tensor(const Morphism& a, const Morphism& b) {
  if (!(a.theory == b.theory)) throw std::invalid_argument("tensor: theory mismatch");
  std::vector<Label> bot = a.bottom, top = a.top;
  bot.insert(bot.end(), b.bottom.begin(), b.bottom.end());
  top.insert(top.end(), b.top.begin(), b.top.end());
  Morphism r = Morphism::zero(a.theory, bot, top);
  for (const Term& x : a.terms)
    for (const Term& y : b.terms) r.add(tensor(x.d, y.d), x.c * y.c);
  return r;
}

Morphism compose(const Morphism& a, const Morphism& b) {
  if (!(a.theory == b.theory)) throw std::invalid_argument("compose: theory mismatch");
  if (a.bottom.size() != b.top.size()) throw std::invalid_argument("compose: boundary length mismatch");
  Morphism r = Morphism::zero(a.theory, b.bottom, a.top);
  for (const Term& x : a.terms)
    for (const Term& y : b.terms) {
      auto d = compose(x.d, y.d);
      if (d) r.add(*d, x.c * y.c);
    }
  return r;
}

Morphism adjoint(const Morphism& a) {
  Morphism r = Morphism::zero(a.theory, a.top, a.bottom);
  for (const Term& x : a.terms) r.add(adjoint(x.d), x.c.conj());
  return r;
}

Morphism click(const Morphism& a, int steps) {
  Morphism r = Morphism::zero(a.theory, {}, {});
  if (a.bottom.size() + a.top.size() == 0) return a;
  clicked_boundary(a.bottom, a.top, steps, r.bottom, r.top);
  for (const Term& x : a.terms) r.add(click(x.d, steps), x.c);
  return r;
}

Diagram rainbow_cups(const Theory& t, const std::vector<Label>& w) {
  Diagram d;
  d.theory = t;
  int k = static_cast<int>(w.size());
  d.top = w;
  auto dw = dual_word(w);
  d.top.insert(d.top.end(), dw.begin(), dw.end());
  for (int i = 0; i < k; ++i)
    d.strands.push_back(make_strand(w[i], Endpoint::top(i), false, Endpoint::top(2 * k - 1 - i)));
  return d;
}

Diagram rainbow_caps(const Theory& t, const std::vector<Label>& w) {
  Diagram d;
  d.theory = t;
  int k = static_cast<int>(w.size());
  d.bottom = w;
  auto dw = dual_word(w);
  d.bottom.insert(d.bottom.end(), dw.begin(), dw.end());
  for (int i = 0; i < k; ++i)
    d.strands.push_back(make_strand(w[i], Endpoint::bottom(i), true, Endpoint::bottom(2 * k - 1 - i)));
  return d;
}

Diagram identity_diagram(const Theory& t, const std::vector<Label>& w) {
  Diagram d;
  d.theory = t;
  d.bottom = w;
  d.top = w;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    d.strands.push_back(make_strand(w[i], Endpoint::bottom(i), true, Endpoint::top(i)));
  return d;
}

Morphism trace_close(const Morphism& a, Side side) {
  bool match = a.bottom.size() == a.top.size();
  for (size_t i = 0; match && i < a.bottom.size(); ++i)
    match = a.bottom[i] == a.top[i] || a.bottom[i] == Label::Plain || a.top[i] == Label::Plain;
  if (!match) throw std::invalid_argument("trace_close: bottom and top differ");
  Morphism r = Morphism::zero(a.theory, {}, {});
  for (const Term& x : a.terms) {
    const auto& w = x.d.top;
    std::optional<Diagram> d;
    if (side == Side::Right) {
      auto dw = dual_word(w);
      Diagram mid = tensor(x.d, identity_diagram(a.theory, dw));
      auto lower = compose(mid, rainbow_cups(a.theory, w));
      if (lower) d = compose(rainbow_caps(a.theory, w), *lower);
    } else {
      auto dw = dual_word(w);
      Diagram mid = tensor(identity_diagram(a.theory, dw), x.d);
      auto lower = compose(mid, rainbow_cups(a.theory, dw));
      if (lower) d = compose(rainbow_caps(a.theory, dw), *lower);
    }
    if (d) r.add(*d, x.c);
  }
  return r;
}

Morphism expand_plain(const Morphism& a) {
  Morphism r = Morphism::zero(a.theory, a.bottom, a.top);
  for (const Term& x : a.terms)
    for (const Diagram& d : expand_plain(x.d)) r.add(d, x.c);
  return r;
}

}  // namespace affa
