#include "affa/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace affa {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int node_of(const Diagram& d, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Bottom:
    case Endpoint::Kind::Top:
      return 0;
    case Endpoint::Kind::Box:
      return 1 + e.index;
    case Endpoint::Kind::Anchor:
      return 1 + static_cast<int>(d.boxes.size()) + e.index;
  }
  return 0;
}

int node_of(const Diagram& d, const Corner& c) {
  switch (c.node) {
    case NodeKind::Outer:
      return 0;
    case NodeKind::Box:
      return 1 + c.index;
    case NodeKind::Anchor:
      return 1 + static_cast<int>(d.boxes.size()) + c.index;
  }
  return 0;
}

// Number of gaps (corners) around a node.
int gaps_of(const Diagram& d, int v) {
  int B = static_cast<int>(d.boxes.size());
  if (v == 0) return std::max(1, d.walk_length());
  if (v <= B) return d.box_legs(v - 1);
  return 2;
}

// Is the endpoint's continuation above it (strand leaves upward)?
bool end_above(const Diagram& d, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Bottom:
      return true;
    case Endpoint::Kind::Top:
      return false;
    case Endpoint::Kind::Box: {
      const BoxInst& b = d.boxes[e.index];
      int L = d.box_legs(e.index);
      int j = ((e.slot - b.rot) % L + L) % L;
      return canonical_leg_on_top(d.theory, b.kind, j);
    }
    default:
      return true;
  }
}

std::string ep_str(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Bottom:
      return "bottom[" + std::to_string(e.index) + "]";
    case Endpoint::Kind::Top:
      return "top[" + std::to_string(e.index) + "]";
    case Endpoint::Kind::Box:
      return "box" + std::to_string(e.index) + ".leg" + std::to_string(e.slot);
    case Endpoint::Kind::Anchor:
      return "anchor" + std::to_string(e.index) + ".side" + std::to_string(e.slot);
  }
  return "?";
}

}  // namespace

Endpoint walk_endpoint(const Diagram& d, int w) {
  int q = static_cast<int>(d.top.size()), p = static_cast<int>(d.bottom.size());
  if (w < q) return Endpoint::top(w);
  return Endpoint::bottom(p - 1 - (w - q));
}

int walk_position(const Diagram& d, const Endpoint& e) {
  int q = static_cast<int>(d.top.size()), p = static_cast<int>(d.bottom.size());
  if (e.kind == Endpoint::Kind::Top) return e.index;
  if (e.kind == Endpoint::Kind::Bottom) return q + (p - 1 - e.index);
  throw std::invalid_argument("walk_position: not a boundary endpoint");
}

Label label_at(const Diagram& d, const Strand& s, bool at_a) {
  if (s.dir == 0) return s.label;
  const Endpoint& e = at_a ? s.a : s.b;
  bool source = (s.dir == 1) == at_a;
  bool above = end_above(d, e);
  return with_direction(s.label, source == above);
}

// ---- faces ----------------------------------------------------------------------

int FaceMap::node_id(NodeKind k, int index) const {
  if (k == NodeKind::Outer) return 0;
  if (k == NodeKind::Box) return 1 + index;
  return 1 + boxes + index;
}

int FaceMap::corner_face(int v, int c) const {
  int dart = gap_dart.at(v).at(c);
  if (dart >= 0) return face[dart];
  return isolated_face[v];
}

FaceMap trace_faces(const Diagram& d) {
  FaceMap fm;
  int B = static_cast<int>(d.boxes.size());
  int N = 1 + B + d.anchors;
  int S = static_cast<int>(d.strands.size());
  int Lk = static_cast<int>(d.links.size());
  int D = 2 * S + 2 * Lk;
  fm.num_nodes = N;
  fm.boxes = B;
  fm.node.assign(D, -1);
  fm.alpha.assign(D, -1);
  fm.sigma.assign(D, -1);
  fm.face.assign(D, -1);
  fm.edge.assign(D, 0);
  fm.edge_end.assign(D, 0);
  fm.dart_corner.assign(D, 0);
  fm.strand_dart.assign(S, 0);

  // real dart at each (node, corner-position)
  std::vector<std::vector<int>> slot_dart(N);
  for (int v = 0; v < N; ++v) {
    int g = gaps_of(d, v);
    slot_dart[v].assign(g, -1);
  }
  int k = d.walk_length();
  auto place = [&](const Endpoint& e, int dart) {
    int v = node_of(d, e);
    int pos;
    if (v == 0)
      pos = walk_position(d, e);
    else
      pos = e.slot;
    if (pos < 0 || pos >= static_cast<int>(slot_dart[v].size()))
      throw DiagramError("leg-count", "endpoint " + ep_str(e) + " out of range");
    if (slot_dart[v][pos] >= 0) throw DiagramError("structure", "endpoint " + ep_str(e) + " used twice");
    slot_dart[v][pos] = dart;
    fm.node[dart] = v;
  };
  for (int i = 0; i < S; ++i) {
    const Strand& s = d.strands[i];
    place(s.a, 2 * i);
    place(s.b, 2 * i + 1);
    fm.alpha[2 * i] = 2 * i + 1;
    fm.alpha[2 * i + 1] = 2 * i;
    fm.edge[2 * i] = fm.edge[2 * i + 1] = i;
    fm.edge_end[2 * i] = 0;
    fm.edge_end[2 * i + 1] = 1;
    fm.strand_dart[i] = 2 * i;
  }
  // links per (node, corner)
  std::vector<std::vector<std::vector<int>>> link_darts(N);
  for (int v = 0; v < N; ++v) link_darts[v].resize(gaps_of(d, v));
  for (int j = 0; j < Lk; ++j) {
    const Link& l = d.links[j];
    int dc = 2 * S + 2 * j, dp = dc + 1;
    for (auto [c, dart] : {std::pair{l.child, dc}, std::pair{l.parent, dp}}) {
      int v = node_of(d, c);
      if (v < 0 || v >= N || c.corner < 0 || c.corner >= static_cast<int>(link_darts[v].size()))
        throw DiagramError("planarity", "link corner out of range");
      link_darts[v][c.corner].push_back(dart);
      fm.node[dart] = v;
      fm.dart_corner[dart] = c.corner;
    }
    fm.alpha[dc] = dp;
    fm.alpha[dp] = dc;
    fm.edge[dc] = fm.edge[dp] = -1 - j;
  }
  for (int dart = 0; dart < 2 * S; ++dart)
    if (fm.node[dart] < 0) throw DiagramError("structure", "dangling strand end");

  fm.gap_dart.assign(N, {});
  fm.isolated_face.assign(N, -1);
  for (int v = 0; v < N; ++v) {
    int g = gaps_of(d, v);
    for (int pos = 0; pos < static_cast<int>(slot_dart[v].size()); ++pos) {
      if (v == 0 && k == 0) break;
      if (slot_dart[v][pos] < 0) {
        if (v == 0)
          throw DiagramError("structure", "boundary point without strand");
        throw DiagramError("leg-count", "node " + std::to_string(v) + " has an unused leg");
      }
    }
    // sigma-order: gap i precedes real position i
    std::vector<int> seq;
    fm.gap_dart[v].assign(g, -1);
    for (int i = 0; i < g; ++i) {
      int corner, real;
      if (v == 0) {
        if (k == 0) {
          corner = 0;
          real = -1;
        } else {
          corner = ((1 - i) % k + k) % k;
          real = slot_dart[0][(k - i) % k];
        }
      } else {
        corner = i;
        real = slot_dart[v][i];
      }
      size_t start = seq.size();
      for (int ld : link_darts[v][corner]) seq.push_back(ld);
      if (real >= 0) {
        fm.dart_corner[real] = corner;
        seq.push_back(real);
      }
      if (seq.size() > start) fm.gap_dart[v][corner] = seq[start];
    }
    for (size_t i = 0; i < seq.size(); ++i) fm.sigma[seq[i]] = seq[(i + 1) % seq.size()];
  }
  int f = 0;
  for (int dart = 0; dart < D; ++dart) {
    if (fm.face[dart] >= 0) continue;
    int x = dart;
    while (fm.face[x] < 0) {
      fm.face[x] = f;
      x = fm.sigma[fm.alpha[x]];
    }
    ++f;
  }
  for (int v = 0; v < N; ++v) {
    bool any = false;
    for (int x : fm.gap_dart[v]) any |= x >= 0;
    if (!any) fm.isolated_face[v] = f++;
  }
  fm.num_faces = f;
  return fm;
}

int gap_corner(const Diagram&, const FaceMap& fm, int dart) { return fm.dart_corner.at(dart); }

// ---- validation -----------------------------------------------------------------

namespace {

void check_alphabet(const Diagram& d) {
  auto alpha = alphabet(d.theory);
  auto legal = [&](Label l) { return std::find(alpha.begin(), alpha.end(), l) != alpha.end(); };
  for (Label l : d.bottom)
    if (!legal(l)) throw DiagramError("alphabet", "label " + label_name(l) + " not in alphabet");
  for (Label l : d.top)
    if (!legal(l)) throw DiagramError("alphabet", "label " + label_name(l) + " not in alphabet");
  for (const Strand& s : d.strands) {
    if (!legal(s.label)) throw DiagramError("alphabet", "strand label " + label_name(s.label));
    bool oriented = is_oriented(s.label);
    if (oriented && orient_class(s.label) != s.label)
      throw DiagramError("alphabet", "oriented strand must carry its class label");
    if (oriented != (s.dir != 0)) throw DiagramError("label", "strand direction inconsistent with label");
    if (s.dir < -1 || s.dir > 1) throw DiagramError("label", "bad direction");
  }
  for (const BoxInst& b : d.boxes) {
    if (!kind_legal(d.theory, b.kind))
      throw DiagramError("alphabet", "box kind " + kind_name(b.kind) + " illegal in " + d.theory.name());
    int L = leg_count(d.theory, b.kind);
    if (b.rot < 0 || b.rot >= L) throw DiagramError("leg-count", "rotation offset out of range");
  }
  if (d.anchors < 0) throw DiagramError("structure", "negative anchor count");
}

void check_labels(const Diagram& d) {
  for (const Strand& s : d.strands) {
    for (int end = 0; end < 2; ++end) {
      const Endpoint& e = end == 0 ? s.a : s.b;
      Label here = label_at(d, s, end == 0);
      Label want = Label::Plain;
      switch (e.kind) {
        case Endpoint::Kind::Bottom:
          if (e.index < 0 || e.index >= static_cast<int>(d.bottom.size()))
            throw DiagramError("structure", "bottom index out of range");
          want = d.bottom[e.index];
          break;
        case Endpoint::Kind::Top:
          if (e.index < 0 || e.index >= static_cast<int>(d.top.size()))
            throw DiagramError("structure", "top index out of range");
          want = d.top[e.index];
          break;
        case Endpoint::Kind::Box: {
          if (e.index < 0 || e.index >= static_cast<int>(d.boxes.size()))
            throw DiagramError("structure", "box index out of range");
          const BoxInst& b = d.boxes[e.index];
          int L = d.box_legs(e.index);
          if (e.slot < 0 || e.slot >= L) throw DiagramError("leg-count", "leg index out of range");
          want = canonical_leg_label(d.theory, b.kind, ((e.slot - b.rot) % L + L) % L);
          break;
        }
        case Endpoint::Kind::Anchor: {
          if (e.index < 0 || e.index >= d.anchors || e.slot < 0 || e.slot > 1)
            throw DiagramError("structure", "anchor endpoint out of range");
          const Endpoint& o = end == 0 ? s.b : s.a;
          if (o.kind != Endpoint::Kind::Anchor || o.index != e.index || o.slot == e.slot)
            throw DiagramError("structure", "anchor must host a single closed loop");
          continue;
        }
      }
      if (here != want)
        throw DiagramError("label", "strand reads " + label_name(here) + " at " + ep_str(e) +
                                        " but endpoint expects " + label_name(want));
    }
  }
}

}  // namespace

std::optional<int> derived_shading(const Diagram& d) {
  if (!d.theory.shaded()) return std::nullopt;
  FaceMap fm = trace_faces(d);
  std::vector<int> par(fm.num_faces, -1);
  int star = fm.corner_face(0, 0);
  par[star] = 0;
  // BFS over faces across strands
  std::vector<std::vector<int>> adj(fm.num_faces);
  for (size_t dart = 0; dart < fm.face.size(); ++dart) {
    if (fm.edge[dart] < 0) continue;
    adj[fm.face[dart]].push_back(fm.face[fm.alpha[dart]]);
  }
  std::vector<int> queue{star};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    for (int g : adj[f]) {
      if (par[g] < 0) {
        par[g] = par[f] ^ 1;
        queue.push_back(g);
      } else if (par[g] != (par[f] ^ 1)) {
        throw DiagramError("planarity", "faces admit no checkerboard shading");
      }
    }
  }
  std::optional<int> s;
  for (size_t b = 0; b < d.boxes.size(); ++b) {
    int f = fm.corner_face(fm.node_id(NodeKind::Box, static_cast<int>(b)), d.boxes[b].rot);
    if (par[f] < 0) throw DiagramError("planarity", "unreachable face");
    int need = star_shading(d.boxes[b].kind) ^ par[f];
    if (s && *s != need) throw DiagramError("shading", "boxes force inconsistent shading");
    s = need;
  }
  return s;
}

void validate(const Diagram& d) {
  check_alphabet(d);
  // every endpoint used exactly once is enforced by trace_faces
  FaceMap fm = trace_faces(d);
  check_labels(d);

  int B = static_cast<int>(d.boxes.size());
  int N = 1 + B + d.anchors;
  UnionFind uf(N);
  for (const Strand& s : d.strands) uf.unite(node_of(d, s.a), node_of(d, s.b));
  std::vector<int> parent_comp(N, -1);
  for (const Link& l : d.links) {
    int c = uf.find(node_of(d, l.child)), p = uf.find(node_of(d, l.parent));
    if (c == uf.find(0)) throw DiagramError("planarity", "link child in the boundary component");
    if (c == p) throw DiagramError("planarity", "link joins a component to itself");
    if (parent_comp[c] >= 0) throw DiagramError("planarity", "component placed twice");
    parent_comp[c] = p;
  }
  for (int v = 0; v < N; ++v) {
    int c = uf.find(v);
    if (c == uf.find(0)) continue;
    if (parent_comp[c] < 0) throw DiagramError("planarity", "component without placement");
    int x = c, steps = 0;
    while (x != uf.find(0)) {
      x = parent_comp[x];
      if (x < 0 || ++steps > N) throw DiagramError("planarity", "placement links form a cycle");
    }
  }
  int V = N;
  int E = static_cast<int>(d.strands.size() + d.links.size());
  int F = fm.num_faces;
  if (V - E + F != 2)
    throw DiagramError("planarity", "Euler characteristic " + std::to_string(V - E + F) + " != 2");
  derived_shading(d);
}

bool is_valid(const Diagram& d, std::string* why) {
  try {
    validate(d);
    return true;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

// ---- canonical form --------------------------------------------------------------

// Renumbers every box's slots so the star sits before slot 0.
Diagram unrotated(const Diagram& in) {
  Diagram d = in;
  auto shift = [&](int b, int x) {
    int L = d.box_legs(b);
    return ((x - in.boxes[b].rot) % L + L) % L;
  };
  for (Strand& s : d.strands)
    for (Endpoint* e : {&s.a, &s.b})
      if (e->kind == Endpoint::Kind::Box) e->slot = shift(e->index, e->slot);
  for (Link& l : d.links)
    for (Corner* c : {&l.child, &l.parent})
      if (c->node == NodeKind::Box) c->corner = shift(c->index, c->corner);
  for (BoxInst& b : d.boxes) b.rot = 0;
  return d;
}

Diagram canonical(const Diagram& in) {
  Diagram d = unrotated(in);
  int B = static_cast<int>(d.boxes.size());
  int N = 1 + B + d.anchors;
  // adjacency: for each node, ordered list of (neighbor node) by corner/slot order
  std::vector<std::vector<std::pair<int, int>>> at(N);  // (position, other node)
  for (const Strand& s : d.strands) {
    int u = node_of(d, s.a), v = node_of(d, s.b);
    int pu = u == 0 ? walk_position(d, s.a) : s.a.slot;
    int pv = v == 0 ? walk_position(d, s.b) : s.b.slot;
    at[u].push_back({2 * pu + 1, v});
    at[v].push_back({2 * pv + 1, u});
  }
  for (const Link& l : d.links) {
    int u = node_of(d, l.parent), v = node_of(d, l.child);
    at[u].push_back({2 * l.parent.corner, v});
    at[v].push_back({2 * l.child.corner, u});
  }
  for (auto& a : at) std::stable_sort(a.begin(), a.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<int> order(N, -1);
  std::vector<int> queue{0};
  order[0] = 0;
  int nb = 0, na = 0;
  std::vector<int> box_new(B, -1), anchor_new(d.anchors, -1);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (auto& [pos, w] : at[v]) {
      if (order[w] >= 0) continue;
      order[w] = 1;
      if (w <= B)
        box_new[w - 1] = nb++;
      else
        anchor_new[w - 1 - B] = na++;
      queue.push_back(w);
    }
  }
  for (int b = 0; b < B; ++b)
    if (box_new[b] < 0) box_new[b] = nb++;
  for (int a = 0; a < d.anchors; ++a)
    if (anchor_new[a] < 0) anchor_new[a] = na++;

  Diagram r;
  r.theory = d.theory;
  r.bottom = d.bottom;
  r.top = d.top;
  r.anchors = d.anchors;
  r.boxes.resize(B);
  for (int b = 0; b < B; ++b) r.boxes[box_new[b]] = d.boxes[b];
  auto map_ep = [&](Endpoint e) {
    if (e.kind == Endpoint::Kind::Box) e.index = box_new[e.index];
    if (e.kind == Endpoint::Kind::Anchor) e.index = anchor_new[e.index];
    return e;
  };
  auto map_corner = [&](Corner c) {
    if (c.node == NodeKind::Box) c.index = box_new[c.index];
    if (c.node == NodeKind::Anchor) c.index = anchor_new[c.index];
    return c;
  };
  for (Strand s : d.strands) {
    s.a = map_ep(s.a);
    s.b = map_ep(s.b);
    if (s.b < s.a) {
      std::swap(s.a, s.b);
      s.dir = -s.dir;
    }
    r.strands.push_back(s);
  }
  std::sort(r.strands.begin(), r.strands.end(), [](const Strand& x, const Strand& y) { return x.a < y.a; });
  for (Link l : d.links) r.links.push_back({map_corner(l.child), map_corner(l.parent)});
  std::sort(r.links.begin(), r.links.end());
  return r;
}

std::string diagram_key(const Diagram& d) {
  std::ostringstream os;
  os << static_cast<int>(d.theory.family) << ',' << d.theory.n << ',' << d.theory.root_order << ','
     << d.theory.root_exp << '|';
  for (Label l : d.bottom) os << static_cast<int>(l);
  os << '|';
  for (Label l : d.top) os << static_cast<int>(l);
  os << '|';
  for (auto& b : d.boxes) os << static_cast<int>(b.kind) << ':' << b.rot << ';';
  os << '|' << d.anchors << '|';
  auto ep = [&](const Endpoint& e) {
    os << static_cast<int>(e.kind) << '.' << e.index << '.' << e.slot;
  };
  for (auto& s : d.strands) {
    ep(s.a);
    os << '-';
    ep(s.b);
    os << ':' << static_cast<int>(s.label) << ':' << s.dir << ';';
  }
  os << '|';
  for (auto& l : d.links)
    os << static_cast<int>(l.child.node) << '.' << l.child.index << '.' << l.child.corner << '>'
       << static_cast<int>(l.parent.node) << '.' << l.parent.index << '.' << l.parent.corner << ';';
  return os.str();
}

// ---- morphisms ---------------------------------------------------------------------

bool refines(const std::vector<Label>& term, const std::vector<Label>& sig) {
  if (term.size() != sig.size()) return false;
  for (size_t i = 0; i < term.size(); ++i)
    if (term[i] != sig[i] && sig[i] != Label::Plain) return false;
  return true;
}

Morphism Morphism::zero(const Theory& t, std::vector<Label> bottom, std::vector<Label> top) {
  Morphism m;
  m.theory = t;
  m.bottom = std::move(bottom);
  m.top = std::move(top);
  return m;
}

Morphism Morphism::of(const Diagram& d, const Cyclo& c) {
  Morphism m = zero(d.theory, d.bottom, d.top);
  m.add(d, c);
  return m;
}

void Morphism::add(const Diagram& d, const Cyclo& c) {
  if (!(d.theory == theory)) throw std::invalid_argument("term theory differs from morphism theory");
  if (!refines(d.bottom, bottom) || !refines(d.top, top))
    throw std::invalid_argument("term boundary does not match morphism signature");
  if (c.is_zero()) return;
  Diagram cd = canonical(d);
  std::string key = diagram_key(cd);
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].key == key) {
      terms[i].c += c;
      if (terms[i].c.is_zero()) terms.erase(terms.begin() + static_cast<long>(i));
      return;
    }
  }
  terms.push_back({std::move(cd), c, std::move(key)});
}

Morphism Morphism::scaled(const Cyclo& c) const {
  Morphism r = zero(theory, bottom, top);
  if (c.is_zero()) return r;
  r.terms = terms;
  for (auto& t : r.terms) t.c = t.c * c;
  return r;
}

Morphism Morphism::operator+(const Morphism& o) const {
  if (!(o.theory == theory) || o.bottom.size() != bottom.size() || o.top.size() != top.size())
    throw std::invalid_argument("sum of morphisms with different signatures");
  Morphism r = *this;
  for (size_t i = 0; i < bottom.size(); ++i)
    if (r.bottom[i] != o.bottom[i]) r.bottom[i] = Label::Plain;
  for (size_t i = 0; i < top.size(); ++i)
    if (r.top[i] != o.top[i]) r.top[i] = Label::Plain;
  for (const auto& t : o.terms) r.add(t.d, t.c);
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const { return *this + o.scaled(Cyclo::from_int(-1)); }

Morphism operator*(const Cyclo& c, const Morphism& m) { return m.scaled(c); }

}  // namespace affa
