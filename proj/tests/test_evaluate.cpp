#include <doctest.h>

#include "affa/evaluate.hpp"
#include "affa/generators.hpp"
#include "affa/relations.hpp"
#include "affa/testgen.hpp"

using namespace affa;

namespace {

std::vector<Theory> finite_theories(int max_n) {
  std::vector<Theory> out;
  for (Family f : {Family::ShadedAodd, Family::UnshadedArrowAodd, Family::UnshadedArrowAeven,
                   Family::UnshadedColorAodd})
    for (int n = 1; n <= max_n; ++n)
      for (const Theory& t : theories_with_roots(f, n)) out.push_back(t);
  return out;
}

// Closes the rightmost strand of an endomorphism of a word of length >= 2.
Morphism trace_last(const Morphism& f) {
  const Theory& t = f.theory;
  std::vector<Label> a(f.bottom.begin(), f.bottom.end() - 1);
  Label b = f.bottom.back();
  Label bs = dual_label(b);
  Morphism open = tensor(id(t, a), cup(t, b));
  Morphism mid = tensor(f, id(t, {bs}));
  Morphism close = tensor(id(t, a), cap(t, b));
  return compose(close, compose(mid, open));
}

}  // namespace

TEST_CASE("bubbles and traces") {
  Theory c = Theory::make(Family::UnshadedColorAodd, 2, 1);
  CHECK(eval_closed(loop(c, Label::Red)) == Cyclo::one());
  CHECK(eval_closed(loop(c, Label::Plain)) == Cyclo::from_int(2));
  Theory s = Theory::make(Family::ShadedAodd, 3, 1);
  Morphism U = box(s, BoxKind::U), Us = box(s, BoxKind::Ustar);
  CHECK(eval_closed(trace_close(compose(U, Us), Side::Right)) == Cyclo::one());
  CHECK_THROWS_AS(eval_closed(U), std::invalid_argument);
}

TEST_CASE("inner products") {
  Theory s = Theory::make(Family::ShadedAodd, 2, 1);
  Morphism P = id(s, {Label::Red}), Q = id(s, {Label::Blue});
  CHECK(inner_product(P, P) == Cyclo::one());
  CHECK(inner_product(P, Q).is_zero());
  Morphism U = box(s, BoxKind::U);
  CHECK(inner_product(U, U) == Cyclo::one());
  CHECK_THROWS(inner_product(U, id(s, {Label::Red})));
  CHECK(morphism_eq(U, U));
  CHECK(morphism_eq(click(U, 1), s.root() * box(s, BoxKind::Vstar)));
  CHECK_FALSE(morphism_eq(U, s.root() * U + U));
}

TEST_CASE("distinct strands differ with norm two") {
  Theory s = Theory::make(Family::ShadedAodd, 2, 1);
  Morphism diff = id(s, {Label::Red}) - id(s, {Label::Plain}) + id(s, {Label::Blue});
  // red - (red + blue) + blue = 0
  CHECK(inner_product(diff, diff).is_zero());
  Theory a = Theory::make(Family::UnshadedArrowAodd, 2, 1);
  Morphism d = id(a, {Label::Up}) - id(a, {Label::Down});
  CHECK(inner_product(d, d) == Cyclo::from_int(2));
  CHECK_FALSE(morphism_eq(id(a, {Label::Up}), id(a, {Label::Down})));
}

TEST_CASE("plain loops count powers of two") {
  for (Family f : {Family::ShadedAodd, Family::UnshadedArrowAodd, Family::UnshadedColorAodd, Family::ShadedAInf}) {
    Theory t = Theory::make(f, 2, 1);
    Morphism m = id(t, {});
    for (int c = 1; c <= 8; ++c) {
      m = c % 2 ? tensor(m, loop(t, Label::Plain)) : trace_close(tensor(id(t, {Label::Plain}), m), Side::Right);
      CHECK(eval_closed(m) == Cyclo::from_int(1L << c));
    }
  }
}

TEST_CASE("multiplicativity and adjoints") {
  for (const Theory& t : finite_theories(3))
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      Diagram a = random_closed(t, 3, 2, seed), b = random_closed(t, 3, 2, seed + 1000);
      CAPTURE(t.name());
      CAPTURE(seed);
      Cyclo ea = eval_diagram(a), eb = eval_diagram(b);
      CHECK(eval_diagram(tensor(a, b)) == ea * eb);
      CHECK(eval_diagram(adjoint(a)) == ea.conj());
    }
}

TEST_CASE("left and right traces agree") {
  for (const Theory& t : finite_theories(3))
    for (BoxKind k : box_kinds(t)) {
      Morphism g = box(t, k);
      if (g.bottom.size() < 1) continue;
      int L = leg_count(t, k);
      for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
          Morphism gi = click(g, i), gj = click(g, j);
          if (gi.bottom != gj.bottom || gi.bottom.empty()) continue;
          Morphism f = compose(adjoint(gi), gj);
          while (f.bottom.size() > 1) f = trace_last(f);
          CAPTURE(t.name());
          CAPTURE(kind_name(k));
          CHECK(eval_closed(trace_close(f, Side::Left)) == eval_closed(trace_close(f, Side::Right)));
        }
    }
}

TEST_CASE("the termination measure is checked at every step") {
  Theory t = Theory::make(Family::UnshadedArrowAodd, 3, 1);
  long before = eval_totals().measure_checks.load();
  EvalStats st;
  Diagram d = random_closed(t, 6, 3, 7);
  eval_diagram(d, &st);
  CHECK(st.measure_checks >= st.rewrites + st.pops);
  CHECK(eval_totals().measure_checks.load() >= before + st.measure_checks);
  Morphism U = box(t, BoxKind::U);
  EvalStats s2;
  CHECK(eval_closed(trace_close(compose(U, box(t, BoxKind::Ustar)), Side::Right), &s2) == Cyclo::one());
  CHECK(s2.rewrites == 1);
  CHECK(s2.measure_checks > 0);
}
