#include "affa/evaluate.hpp"

#include <map>

#include "affa/equiv.hpp"

namespace affa {

EvalTotals& eval_totals() {
  static EvalTotals t;
  return t;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

struct Vertex {
  BoxKind kind;
  int rot;
  int legs;
  bool alive = true;
};

// Leg (box, slot), or a dangling marker.
struct Leg {
  int box = -1, slot = -1;
  bool operator==(const Leg&) const = default;
};

struct Measure {
  long boxes, loops;
  bool operator<(const Measure& o) const {
    return boxes != o.boxes ? boxes < o.boxes : loops < o.loops;
  }
};

class Reducer {
 public:
  Reducer(const Diagram& d, EvalStats* stats) : t_(d.theory), stats_(stats) {
    for (const BoxInst& b : d.boxes) {
      BoxKind v = vertex_kind(b.kind);
      verts_.push_back({v, b.rot, leg_count(t_, b.kind)});
      partner_.emplace_back(verts_.back().legs);
    }
    for (const Strand& s : d.strands) {
      bool ba = s.a.kind == Endpoint::Kind::Box, bb = s.b.kind == Endpoint::Kind::Box;
      if (!ba && !bb) {
        ++loops_;
        if (s.label == Label::Plain) ++plain_loops_;
        continue;
      }
      if (!ba || !bb) throw InternalError("box strand ends on the boundary of a closed diagram");
      if (!strand_ok(d, s)) zero_ = true;
      partner_[s.a.index][s.a.slot] = {s.b.index, s.b.slot};
      partner_[s.b.index][s.b.slot] = {s.a.index, s.a.slot};
    }
  }

  Cyclo run() {
    Cyclo c = Cyclo::one();
    if (zero_) return Cyclo::zero();
    long alive = static_cast<long>(verts_.size());
    Measure cur{alive, loops_};
    long cap = alive + 1;
    while (alive > 0) {
      if (--cap < 0) throw InternalError("evaluation step cap exceeded");
      int up = 0;
      while (!verts_[up].alive) ++up;
      Vertex& U = verts_[up];
      int L = U.legs;
      int up_slot = mod(L - 1 + U.rot, L);
      Leg to = partner_[up][up_slot];
      if (to.box == up || alive == 1) return Cyclo::zero();
      Vertex& D = verts_[to.box];
      if (D.legs != L) throw InternalError("paired boxes differ in leg count");
      // click the lower box until the connecting strand sits on its first canonical leg
      int steps = mod(D.rot - to.slot, L);
      for (int i = 0; i < steps; ++i) {
        ClickRule r = click_rule(t_, D.kind);
        c *= r.scalar;
        D.kind = r.next;
        D.rot = mod(D.rot - 1, L);
      }
      if (D.kind != adjoint_kind(U.kind)) throw InternalError("paired boxes are not adjoint");
      eliminate(up, to.box);
      alive -= 2;
      advance(cur, {alive, loops_});
      if (stats_) ++stats_->rewrites;
      ++eval_totals().rewrites;
    }
    // pop every loop; each one is worth 1, plain loops 2
    while (loops_ > 0) {
      --loops_;
      advance(cur, {0, loops_});
      if (stats_) ++stats_->pops;
      ++eval_totals().pops;
    }
    for (long i = 0; i < plain_loops_; ++i) c *= Cyclo::from_int(2);
    return c;
  }

 private:
  // A Plain strand between two legs takes its label from the legs; clashes give zero.
  bool strand_ok(const Diagram& d, const Strand& s) const {
    if (s.label != Label::Plain) return true;
    auto leg_label = [&](const Endpoint& e, bool& on_top) {
      const BoxInst& b = d.boxes[e.index];
      int L = leg_count(t_, b.kind);
      int j = mod(e.slot - b.rot, L);
      on_top = canonical_leg_on_top(t_, b.kind, j);
      return canonical_leg_label(t_, b.kind, j);
    };
    bool ta = false, tb = false;
    Label la = leg_label(s.a, ta), lb = leg_label(s.b, tb);
    if (!is_oriented(la)) return la == lb;
    // a box leg on top continues upward from the box
    Role ra = end_role(la, ta), rb = end_role(lb, tb);
    return orient_class(la) == orient_class(lb) && ra != rb;
  }

  void advance(Measure& cur, Measure next) {
    if (stats_) ++stats_->measure_checks;
    ++eval_totals().measure_checks;
    if (!(next < cur)) throw InternalError("termination measure did not decrease");
    cur = next;
  }

  // Replaces the adjoint pair by parallel strands: leg j of the upper box continues
  // through leg L-1-j of the lower box.
  void eliminate(int up, int down) {
    int L = verts_[up].legs;
    int ru = verts_[up].rot, rd = verts_[down].rot;
    auto through = [&](Leg x) -> Leg {
      if (x.box == up) return {down, mod(L - 1 - mod(x.slot - ru, L) + rd, L)};
      return {up, mod(L - 1 - mod(x.slot - rd, L) + ru, L)};
    };
    auto inside = [&](const Leg& x) { return x.box == up || x.box == down; };
    std::map<std::pair<int, int>, bool> done;
    auto key = [](const Leg& x) { return std::make_pair(x.box, x.slot); };
    // chains starting at an outside leg
    for (int b : {up, down}) {
      for (int s = 0; s < L; ++s) {
        Leg start{b, s};
        Leg outer = partner_[b][s];
        if (inside(outer) || done[key(start)]) continue;
        Leg cur = start;
        while (true) {
          done[key(cur)] = true;
          Leg t = through(cur);
          done[key(t)] = true;
          Leg nxt = partner_[t.box][t.slot];
          if (!inside(nxt)) {
            partner_[outer.box][outer.slot] = nxt;
            partner_[nxt.box][nxt.slot] = outer;
            break;
          }
          cur = nxt;
        }
      }
    }
    // what remains closes up into loops
    for (int b : {up, down}) {
      for (int s = 0; s < L; ++s) {
        Leg start{b, s};
        if (done[key(start)]) continue;
        Leg cur = start;
        while (!done[key(cur)]) {
          done[key(cur)] = true;
          Leg t = through(cur);
          done[key(t)] = true;
          cur = partner_[t.box][t.slot];
        }
        ++loops_;
      }
    }
    verts_[up].alive = verts_[down].alive = false;
  }

  Theory t_;
  EvalStats* stats_;
  std::vector<Vertex> verts_;
  std::vector<std::vector<Leg>> partner_;
  long loops_ = 0, plain_loops_ = 0;
  bool zero_ = false;
};

}  // namespace

Cyclo eval_diagram(const Diagram& d, EvalStats* stats) {
  if (!d.closed()) throw std::invalid_argument("eval_closed: diagram is not closed");
  ++eval_totals().evaluations;
  if (d.theory.source()) return eval_diagram(functor_image(d), stats);
  return Reducer(d, stats).run();
}

Cyclo eval_closed(const Morphism& m, EvalStats* stats) {
  if (!m.closed()) throw std::invalid_argument("eval_closed: morphism is not closed");
  Cyclo total = Cyclo::zero();
  for (const Term& t : m.terms) total += t.c * eval_diagram(t.d, stats);
  return total;
}

Cyclo inner_product(const Morphism& f, const Morphism& g) {
  if (!(f.theory == g.theory)) throw std::invalid_argument("inner_product: theory mismatch");
  if (f.bottom.size() != g.bottom.size() || f.top.size() != g.top.size())
    throw std::invalid_argument("inner_product: boundary mismatch");
  if (f.theory.source()) return inner_product(functor_image(f), functor_image(g));
  Morphism h = compose(adjoint(f), g);
  if (h.is_zero()) return Cyclo::zero();  // boundary labels clash
  return eval_closed(trace_close(h, Side::Right));
}

bool morphism_eq(const Morphism& f, const Morphism& g) {
  Morphism h = f - g;
  return inner_product(h, h).is_zero();
}

}  // namespace affa
