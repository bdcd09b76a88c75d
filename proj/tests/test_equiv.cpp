#include <doctest.h>

#include "affa/equiv.hpp"
#include "affa/evaluate.hpp"
#include "affa/fusion.hpp"
#include "affa/generators.hpp"
#include "affa/relations.hpp"

using namespace affa;

TEST_CASE("cocycle values") {
  CHECK(cocycle({1, 0}, 0, 0, 0) == Cyclo::one());
  CHECK(cocycle({2, 1}, 1, 1, 1) == Cyclo::from_int(-1));
  CHECK(cocycle({2, 1}, 1, 1, 0) == Cyclo::one());
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k) CHECK(cocycle({5, 2}, 0, j, k) == Cyclo::one());
}

TEST_CASE("cocycle against integer exponents") {
  // zeta^(i (j + k - (j + k) mod m) / m) with the carry computed as an integer
  for (int m = 1; m <= 6; ++m)
    for (long e = 0; e < m; ++e)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            int carry = j + k >= m ? 1 : 0;
            CHECK(cocycle({m, e}, i, j, k) == Cyclo::root_power(m, e * i * carry));
          }
}

TEST_CASE("the cocycle identity holds") {
  CHECK(check_cocycle({1, 0}));
  CHECK(check_cocycle({4, 1}));
  CHECK(check_cocycle({6, 1}));
  for (int m = 1; m <= 8; ++m)
    for (long e = 0; e < m; ++e) CHECK(check_cocycle({m, e}));
}

TEST_CASE("functor images of generators") {
  Theory v = Theory::make(Family::VecCyclicSource, 3, 1);
  Theory target = functor_target(v);
  CHECK(target.family == Family::UnshadedArrowAeven);
  Morphism u = functor_image(box(v, BoxKind::ScriptU));
  REQUIRE(u.terms.size() == 1);
  REQUIRE(u.terms[0].d.boxes.size() == 1);
  CHECK(u.terms[0].d.boxes[0].kind == BoxKind::UTilde);
  Morphism dots = functor_image(id(v, repeat(Label::Dot, 2)));
  CHECK(dots.top == repeat(Label::Down, 2));
  CHECK(eval_closed(compose(box(v, BoxKind::ScriptUstar), box(v, BoxKind::ScriptU))) == Cyclo::one());

  Theory r = Theory::make(Family::SUTwoRepSource, 2, 1);
  Morphism plus = functor_image(id(r, {Label::Plus}));
  CHECK(plus.top == std::vector<Label>{Label::Up});
  Morphism bubble = compose(cap(r, Label::Minus), cup(r, Label::Minus));
  CHECK(eval_closed(bubble) == Cyclo::one());
  Morphism c = functor_image(cap(r, Label::Minus));
  CHECK(c.bottom.size() == 2);
  CHECK(c.top.empty());
}

TEST_CASE("functor images respect composition and tensor") {
  Theory r = Theory::make(Family::SUTwoRepSource, 3, 1);
  Morphism a = box(r, BoxKind::NCupPlus), b = box(r, BoxKind::NCapMinus);
  Morphism p = id(r, {Label::Plus});
  CHECK(morphism_eq(functor_image(tensor(a, p)), tensor(functor_image(a), functor_image(p))));
  Morphism ab = tensor(b, a);
  CHECK(morphism_eq(functor_image(ab), tensor(functor_image(b), functor_image(a))));
  Theory v = Theory::make(Family::VecCyclicSource, 2, 1);
  Morphism u = box(v, BoxKind::ScriptU), us = box(v, BoxKind::ScriptUstar);
  CHECK(morphism_eq(functor_image(compose(u, us)), compose(functor_image(u), functor_image(us))));
}

TEST_CASE("source hom dimensions") {
  Theory v = Theory::make(Family::VecCyclicSource, 3, 1);
  for (int k = 0; k <= 6; ++k) CHECK(source_hom_dim(v, repeat(Label::Dot, k), {}) == (k % 3 == 0 ? 1 : 0));
  Theory r = Theory::make(Family::SUTwoRepSource, 2, 1);
  CHECK(source_hom_dim(r, {Label::Plus, Label::Minus}, {}) == 1);
  CHECK(source_hom_dim(r, {Label::Plus, Label::Plus}, {}) == 1);
  CHECK(source_hom_dim(r, {Label::Plus}, {}) == 0);
}

TEST_CASE("functor checks") {
  for (int m = 1; m <= 4; ++m)
    for (long e = 0; e < m; ++e) {
      CAPTURE(m);
      CAPTURE(e);
      FunctorReport vr = check_functor(Which::Vec, m, e);
      CHECK(vr.pass());
      CHECK_FALSE(vr.relations.empty());
      CHECK_FALSE(vr.hom_dims.empty());
      CHECK_FALSE(vr.nontrivial.empty());
      CHECK(check_functor(Which::Rep, m, e).pass());
    }
}
