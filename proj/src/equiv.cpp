#include "affa/equiv.hpp"

#include "affa/evaluate.hpp"
#include "affa/fusion.hpp"
#include "affa/generators.hpp"
#include "affa/relations.hpp"

namespace affa {

namespace {

BoxKind image_kind(BoxKind k) {
  switch (k) {
    case BoxKind::ScriptU:
      return BoxKind::UTilde;
    case BoxKind::ScriptUstar:
      return BoxKind::UTildeStar;
    case BoxKind::NCapPlus:
      return BoxKind::UTildeStarPrime;
    case BoxKind::NCapMinus:
      return BoxKind::UTildeStar;
    case BoxKind::NCupPlus:
      return BoxKind::UTildePrime;
    case BoxKind::NCupMinus:
      return BoxKind::UTilde;
    default:
      throw std::invalid_argument("box kind has no functor image");
  }
}

Label image_label(Label l) {
  switch (l) {
    case Label::Dot:
      return Label::Down;
    case Label::Plus:
      return Label::Up;
    case Label::Minus:
      return Label::Down;
    default:
      throw std::invalid_argument("label has no functor image");
  }
}

}  // namespace

Theory functor_target(const Theory& src) {
  if (src.family == Family::VecCyclicSource) return vec_target(src);
  if (src.family == Family::SUTwoRepSource) return rep_target(src);
  throw std::invalid_argument("functor_target: not a source theory");
}

Diagram functor_image(const Diagram& d) {
  if (!d.theory.source()) return d;
  Diagram r = d;
  r.theory = functor_target(d.theory);
  bool vec = d.theory.family == Family::VecCyclicSource;
  for (BoxInst& b : r.boxes) b.kind = image_kind(b.kind);
  for (Strand& s : r.strands) {
    // a dotted strand becomes a downward strand
    s.label = Label::Up;
    if (vec) s.dir = -s.dir;
  }
  for (Label& l : r.bottom) l = image_label(l);
  for (Label& l : r.top) l = image_label(l);
  return r;
}

Morphism functor_image(const Morphism& m) {
  if (!m.theory.source()) return m;
  std::vector<Label> bot, top;
  for (Label l : m.bottom) bot.push_back(image_label(l));
  for (Label l : m.top) top.push_back(image_label(l));
  Morphism r = Morphism::zero(functor_target(m.theory), bot, top);
  for (const Term& t : m.terms) r.add(functor_image(t.d), t.c);
  return r;
}

Cyclo cocycle(const CocycleSpec& s, int i, int j, int k) {
  int carry = (j + k - (j + k) % s.m) / s.m;
  return s.zeta().pow(static_cast<long>(i) * carry);
}

bool check_cocycle(const CocycleSpec& s) {
  int m = s.m;
  std::vector<Cyclo> table(static_cast<size_t>(m) * m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) table[(i * m + j) * m + k] = cocycle(s, i, j, k);
  auto w = [&](int i, int j, int k) -> const Cyclo& { return table[(i * m + j) * m + k]; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          Cyclo lhs = w((a + b) % m, c, d) * w(a, b, (c + d) % m);
          Cyclo rhs = w(a, b, c) * w(a, (b + c) % m, d) * w(b, c, d);
          if (lhs != rhs) return false;
        }
  return true;
}

bool FunctorReport::pass() const {
  for (const auto* v : {&relations, &hom_dims, &nontrivial})
    for (const Check& c : *v)
      if (!c.pass) return false;
  return true;
}

namespace {

long signed_count(const std::vector<Label>& w) {
  long g = 0;
  for (Label l : w) g += (l == Label::Minus) ? -1 : 1;
  return g;
}

std::vector<std::vector<Label>> all_words(const std::vector<Label>& alpha, int k) {
  std::vector<std::vector<Label>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Label>> next;
    for (const auto& w : out)
      for (Label l : alpha) {
        auto x = w;
        x.push_back(l);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

// A morphism empty -> w in the Rep source: cups cancel adjacent opposite signs, and
// blocks of m equal signs are closed off by n-boxes.
std::optional<Morphism> rep_state(const Theory& src, const std::vector<Label>& w) {
  int m = src.n;
  // stack reduction: remember which positions are still open
  std::vector<int> open;
  std::vector<std::pair<int, int>> cups;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (!open.empty() && w[open.back()] != w[i]) {
      cups.push_back({open.back(), i});
      open.pop_back();
    } else {
      open.push_back(i);
    }
  }
  if (static_cast<int>(open.size()) % m != 0) return std::nullopt;
  Diagram d;
  d.theory = src;
  d.top = w;
  for (auto [a, b] : cups) d.strands.push_back(make_strand(w[a], Endpoint::top(a), false, Endpoint::top(b)));
  for (size_t blk = 0; blk < open.size() / m; ++blk) {
    Label l = w[open[blk * m]];
    BoxKind k = l == Label::Plus ? BoxKind::NCapPlus : BoxKind::NCupMinus;
    int b = static_cast<int>(d.boxes.size());
    d.boxes.push_back({k, 0});
    for (int s = 0; s < m; ++s)
      d.strands.push_back(make_strand(l, Endpoint::top(open[blk * m + s]), false, Endpoint::box(b, s)));
  }
  validate(d);
  return Morphism::of(d);
}

// d_eps^delta: bend the bottom word up on the left and fill with rep_state.
std::optional<Morphism> rep_basis(const Theory& src, const std::vector<Label>& eps,
                                  const std::vector<Label>& delta) {
  auto st = rep_state(src, concat(dual(eps), delta));
  if (!st) return std::nullopt;
  Morphism caps = Morphism::of(rainbow_caps(src, eps));
  return compose(tensor(caps, id(src, delta)), tensor(id(src, eps), *st));
}

// Vec source: id^k followed by U or U* blocks on the right.
std::optional<Morphism> vec_basis(const Theory& src, int k, int l) {
  int m = src.n;
  if (((l - k) % m + m) % m != 0) return std::nullopt;
  Morphism base = id(src, repeat(Label::Dot, std::min(k, l)));
  Morphism blocks = id(src, {});
  for (int i = 0; i < std::abs(l - k) / m; ++i)
    blocks = tensor(blocks, box(src, l > k ? BoxKind::ScriptU : BoxKind::ScriptUstar));
  return tensor(base, blocks);
}

}  // namespace

int source_hom_dim(const Theory& src, const std::vector<Label>& from, const std::vector<Label>& to) {
  int m = src.n;
  if (src.family == Family::VecCyclicSource) {
    long d = static_cast<long>(to.size()) - static_cast<long>(from.size());
    return ((d % m) + m) % m == 0 ? 1 : 0;
  }
  long d = signed_count(to) - signed_count(from);
  return ((d % m) + m) % m == 0 ? 1 : 0;
}

FunctorReport check_functor(Which which, int m, long zeta_exp) {
  FunctorReport rep;
  rep.which = which;
  rep.m = m;
  rep.zeta_exp = zeta_exp;
  Theory src = Theory::make(which == Which::Vec ? Family::VecCyclicSource : Family::SUTwoRepSource, m, zeta_exp);
  Theory tgt = functor_target(src);

  for (const Relation& r : defining_relations(src)) {
    bool ok = morphism_eq(functor_image(r.lhs), functor_image(r.rhs));
    rep.relations.push_back({r.name, ok, ok ? "" : "images differ"});
  }

  // hom dimensions for total boundary length <= 2m
  for (int k = 0; k <= 2 * m; ++k) {
    for (int l = 0; k + l <= 2 * m; ++l) {
      if (which == Which::Vec) {
        int sdim = source_hom_dim(src, repeat(Label::Dot, k), repeat(Label::Dot, l));
        int tdim = hom_dim(tgt, repeat(Label::Down, k), repeat(Label::Down, l));
        int rank = 0;
        if (auto b = vec_basis(src, k, l)) {
          Morphism im = functor_image(*b);
          rank = inner_product(im, im).is_zero() ? 0 : 1;
        }
        bool ok = sdim == tdim && tdim == rank;
        rep.hom_dims.push_back({"Hom(" + std::to_string(k) + "," + std::to_string(l) + ")", ok,
                                "source " + std::to_string(sdim) + ", target " + std::to_string(tdim) +
                                    ", image rank " + std::to_string(rank)});
      } else {
        int sdim = 0, tdim = 0, rank = 0;
        for (const auto& eps : all_words({Label::Plus, Label::Minus}, k))
          for (const auto& del : all_words({Label::Plus, Label::Minus}, l)) {
            sdim += source_hom_dim(src, eps, del);
            std::vector<Label> te, td;
            for (Label x : eps) te.push_back(x == Label::Plus ? Label::Up : Label::Down);
            for (Label x : del) td.push_back(x == Label::Plus ? Label::Up : Label::Down);
            tdim += hom_dim(tgt, te, td);
            // distinct boundary labelings are orthogonal, so the rank adds up per sector
            if (auto b = rep_basis(src, eps, del)) {
              Morphism im = functor_image(*b);
              if (!inner_product(im, im).is_zero()) ++rank;
            }
          }
        bool ok = sdim == tdim && tdim == rank;
        rep.hom_dims.push_back({"Hom([" + std::to_string(k) + "],[" + std::to_string(l) + "])", ok,
                                "source " + std::to_string(sdim) + ", target " + std::to_string(tdim) +
                                    ", image rank " + std::to_string(rank)});
      }
    }
  }

  for (int ell = 0; ell <= 2; ++ell) {
    Morphism u = id(src, {});
    BoxKind k = which == Which::Vec ? BoxKind::ScriptU : BoxKind::NCupMinus;
    for (int i = 0; i < ell; ++i) u = tensor(u, box(src, k));
    Morphism im = functor_image(u);
    Cyclo v = inner_product(im, im);
    rep.nontrivial.push_back({"<A(U^" + std::to_string(ell) + "), A(U^" + std::to_string(ell) + ")> = 1",
                              v == Cyclo::one(), v.to_string()});
  }
  return rep;
}

}  // namespace affa
