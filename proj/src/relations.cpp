#include "affa/relations.hpp"

#include "affa/evaluate.hpp"
#include "affa/generators.hpp"

namespace affa {

namespace {

Morphism empty(const Theory& t) { return id(t, {}); }

void colored_basics(const Theory& t, std::vector<Relation>& out) {
  for (Label l : {Label::Red, Label::Blue})
    out.push_back({"(i) " + label_name(l) + " bubble = 1", loop(t, l), empty(t)});
  out.push_back({"(ii) plain strand = red + blue", id(t, {Label::Plain}),
                 id(t, {Label::Red}) + id(t, {Label::Blue})});
  out.push_back({"(iii) red o blue = 0", compose(id(t, {Label::Red}), id(t, {Label::Blue})),
                 Morphism::zero(t, {Label::Blue}, {Label::Red})});
  out.push_back({"(iii) blue o red = 0", compose(id(t, {Label::Blue}), id(t, {Label::Red})),
                 Morphism::zero(t, {Label::Red}, {Label::Blue})});
  for (Label l : {Label::Red, Label::Blue})
    out.push_back({"(iv) " + label_name(l) + " saddle", id(t, {l, l}), compose(cup(t, l), cap(t, l))});
}

void arrow_basics(const Theory& t, std::vector<Relation>& out) {
  out.push_back({"(i) clockwise bubble = 1", loop(t, Label::Up, 1), empty(t)});
  out.push_back({"(i) counterclockwise bubble = 1", loop(t, Label::Up, -1), empty(t)});
  out.push_back({"(ii) plain strand = up + down", id(t, {Label::Plain}),
                 id(t, {Label::Up}) + id(t, {Label::Down})});
  out.push_back({"(iii) up o down = 0", compose(id(t, {Label::Up}), id(t, {Label::Down})),
                 Morphism::zero(t, {Label::Down}, {Label::Up})});
  out.push_back({"(iii) down o up = 0", compose(id(t, {Label::Down}), id(t, {Label::Up})),
                 Morphism::zero(t, {Label::Up}, {Label::Down})});
  out.push_back({"(iv) up-down saddle", id(t, {Label::Up, Label::Down}),
                 compose(cup(t, Label::Up), cap(t, Label::Up))});
  out.push_back({"(iv) down-up saddle", id(t, {Label::Down, Label::Up}),
                 compose(cup(t, Label::Down), cap(t, Label::Down))});
}

void unitary(const Theory& t, BoxKind k, std::vector<Relation>& out) {
  Morphism a = box(t, k), as = box(t, adjoint_kind(k));
  std::string n = kind_name(k), ns = kind_name(adjoint_kind(k));
  out.push_back({"(v) " + n + " " + ns + " = id", compose(a, as), id(t, a.top)});
  out.push_back({"(v) " + ns + " " + n + " = id", compose(as, a), id(t, a.bottom)});
}

}  // namespace

std::vector<Relation> defining_relations(const Theory& t) {
  std::vector<Relation> out;
  Cyclo w = t.root();
  switch (t.family) {
    case Family::ShadedAodd: {
      colored_basics(t, out);
      unitary(t, BoxKind::U, out);
      unitary(t, BoxKind::V, out);
      Morphism U = box(t, BoxKind::U), Us = box(t, BoxKind::Ustar);
      out.push_back({"(vi) F(U) = sigma V*", click(U, 1), w * box(t, BoxKind::Vstar)});
      out.push_back({"(vi) F(U) = sigma F^-1(U)", click(U, 1), w * click(U, -1)});
      out.push_back({"(vi) F(U*) = V", click(Us, 1), box(t, BoxKind::V)});
      out.push_back({"(vi) F(U*) = sigma F^-1(U*)", click(Us, 1), w * click(Us, -1)});
      break;
    }
    case Family::UnshadedColorAodd: {
      colored_basics(t, out);
      unitary(t, BoxKind::V, out);
      Morphism V = box(t, BoxKind::V);
      out.push_back({"(vi) F(V) = tau V*", click(V, 1), w * box(t, BoxKind::Vstar)});
      out.push_back({"(vi) F(V) = tau F^-1(V)", click(V, 1), w * click(V, -1)});
      break;
    }
    case Family::UnshadedArrowAodd:
    case Family::UnshadedArrowAeven: {
      arrow_basics(t, out);
      unitary(t, BoxKind::U, out);
      Morphism U = box(t, BoxKind::U), Us = box(t, BoxKind::Ustar);
      out.push_back({"(vi) F(U) = omega U", click(U, 1), w * U});
      out.push_back({"(vi) F(U*) = omega U*", click(Us, 1), w * Us});
      break;
    }
    case Family::ShadedAInf:
    case Family::UnshadedColorAInf:
      colored_basics(t, out);
      break;
    case Family::UnshadedArrowAInf:
      arrow_basics(t, out);
      break;
    case Family::VecCyclicSource: {
      int m = t.n;
      Morphism u = box(t, BoxKind::ScriptU), us = box(t, BoxKind::ScriptUstar);
      Morphism dot = id(t, {Label::Dot});
      out.push_back({"(i) U* U = id_0", compose(us, u), empty(t)});
      out.push_back({"(ii) U U* = id_1^m", compose(u, us), id(t, repeat(Label::Dot, m))});
      out.push_back({"(iii) id_1 (x) U = zeta U (x) id_1", tensor(dot, u), w * tensor(u, dot)});
      break;
    }
    case Family::SUTwoRepSource: {
      int m = t.n;
      Label P = Label::Plus, M = Label::Minus;
      Morphism ip = id(t, {P}), im = id(t, {M});
      out.push_back({"(i) cup(+-) (x) + = + (x) cup(-+)", tensor(cup(t, P), ip), tensor(ip, cup(t, M))});
      out.push_back({"(i) cup(-+) (x) - = - (x) cup(+-)", tensor(cup(t, M), im), tensor(im, cup(t, P))});
      out.push_back({"(ii) cap(+-) (x) + = + (x) cap(-+)", tensor(cap(t, P), ip), tensor(ip, cap(t, M))});
      out.push_back({"(ii) cap(-+) (x) - = - (x) cap(+-)", tensor(cap(t, M), im), tensor(im, cap(t, P))});
      out.push_back({"(iii) cap(+-) cup(+-) = 1", compose(cap(t, P), cup(t, P)), empty(t)});
      out.push_back({"(iii) cap(-+) cup(-+) = 1", compose(cap(t, M), cup(t, M)), empty(t)});
      Morphism capp = box(t, BoxKind::NCapPlus), capm = box(t, BoxKind::NCapMinus);
      Morphism cupp = box(t, BoxKind::NCupPlus), cupm = box(t, BoxKind::NCupMinus);
      out.push_back({"(iv) n-cup(+) n-cap(+) = 1", compose(cupp, capp), empty(t)});
      out.push_back({"(iv) n-cap(-) n-cup(-) = 1", compose(capm, cupm), empty(t)});
      out.push_back({"(v) n-cap(-) (x) - = - (x) n-cap(-)", tensor(capm, im), tensor(im, capm)});
      out.push_back({"(vi) n-cap(+) (x) + = + (x) n-cap(+)", tensor(capp, ip), tensor(ip, capp)});
      out.push_back({"(vii) n-cup(+) (x) n-cap(-) = nested caps", tensor(cupp, capm),
                     Morphism::of(rainbow_caps(t, repeat(P, m)))});
      out.push_back({"(viii) n-cap(-) (x) n-cup(+) = nested caps", tensor(capm, cupp),
                     Morphism::of(rainbow_caps(t, repeat(M, m)))});
      out.push_back({"(ix) + (x) - saddle", id(t, {P, M}), compose(cup(t, P), cap(t, P))});
      out.push_back({"(ix) - (x) + saddle", id(t, {M, P}), compose(cup(t, M), cap(t, M))});
      out.push_back({"+ matched with - is zero", compose(ip, im), Morphism::zero(t, {M}, {P})});
      break;
    }
  }
  return out;
}

std::vector<RelationResult> check_relations(const Theory& t) {
  std::vector<RelationResult> out;
  for (const Relation& r : defining_relations(t)) out.push_back({r.name, morphism_eq(r.lhs, r.rhs)});
  return out;
}

std::vector<Theory> theories_with_roots(Family f, int n) {
  Theory base = Theory::make(f, n, 0);
  int N = base.modulus();
  if (N == 0) return {base};
  std::vector<Theory> out;
  for (int k = 0; k < N; ++k) {
    Theory t = Theory::make(f, n, k);
    bool seen = false;
    for (const Theory& x : out) seen = seen || x == t;
    if (!seen) out.push_back(t);
  }
  return out;
}

}  // namespace affa
