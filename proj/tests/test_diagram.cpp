#include <doctest.h>

#include "affa/generators.hpp"

using namespace affa;

namespace {

Theory color2() { return Theory::make(Family::UnshadedColorAodd, 2, 1); }
Theory shaded2() { return Theory::make(Family::ShadedAodd, 2, 1); }
Theory arrow2() { return Theory::make(Family::UnshadedArrowAodd, 2, 1); }
Theory arrow_even1() { return Theory::make(Family::UnshadedArrowAeven, 1, 1); }

const Diagram& only(const Morphism& m) {
  REQUIRE(m.terms.size() == 1);
  return m.terms[0].d;
}

void all_valid(const Morphism& m) {
  for (const Term& t : m.terms) {
    std::string why;
    INFO(serialize(t.d, t.c));
    CHECK_MESSAGE(is_valid(t.d, &why), why);
  }
}

bool same(const Morphism& a, const Morphism& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].key != b.terms[i].key || a.terms[i].c != b.terms[i].c) return false;
  return true;
}

}  // namespace

TEST_CASE("validate accepts basic diagrams") {
  CHECK(is_valid(only(id(color2(), {Label::Red}))));
  CHECK(is_valid(only(box(shaded2(), BoxKind::U))));
  CHECK(is_valid(only(box(arrow2(), BoxKind::Ustar))));
  CHECK(is_valid(only(loop(color2(), Label::Red))));
  CHECK(is_valid(only(cup(arrow2(), Label::Up))));
  CHECK(is_valid(only(cap(arrow2(), Label::Down))));
}

TEST_CASE("validate rejects wrong leg counts and crossings") {
  Diagram d = only(box(shaded2(), BoxKind::U));
  d.strands.pop_back();
  d.bottom.pop_back();
  try {
    validate(d);
    FAIL("expected an error");
  } catch (const DiagramError& e) {
    CHECK((e.kind == "leg-count" || e.kind == "structure"));
  }

  // bottom 0 -> top 1 and bottom 1 -> top 0 must cross
  Diagram x = only(id(color2(), {Label::Red, Label::Red}));
  x.strands[0].b = Endpoint::top(1);
  x.strands[1].b = Endpoint::top(0);
  try {
    validate(x);
    FAIL("expected an error");
  } catch (const DiagramError& e) {
    CHECK(e.kind == "planarity");
  }
}

TEST_CASE("alphabet violations are rejected") {
  Diagram d = only(id(color2(), {Label::Red}));
  d.bottom[0] = Label::Up;
  d.top[0] = Label::Up;
  d.strands[0].label = Label::Up;
  d.strands[0].dir = 1;
  CHECK_FALSE(is_valid(d));
}

TEST_CASE("tensor concatenates and respects zero") {
  Theory t = color2();
  Morphism r = tensor(id(t, {Label::Red}), id(t, {Label::Blue}));
  CHECK(same(r, id(t, {Label::Red, Label::Blue})));
  Morphism z = Morphism::zero(t, {Label::Red}, {Label::Red});
  CHECK(tensor(z, id(t, {Label::Blue})).is_zero());
  auto u = box(t, BoxKind::V);
  auto a = tensor(tensor(u, id(t, {Label::Red})), u);
  auto b = tensor(u, tensor(id(t, {Label::Red}), u));
  CHECK(same(a, b));
  CHECK(same(tensor(u, id(t, {})), u));
  CHECK(same(tensor(id(t, {}), u), u));
}

TEST_CASE("compose glues and detects label clashes") {
  Theory t = color2();
  Morphism p1 = id(t, {Label::Red}), q1 = id(t, {Label::Blue});
  CHECK(compose(p1, q1).is_zero());
  CHECK(same(compose(p1, p1), p1));

  Theory a = arrow2();
  CHECK(compose(id(a, {Label::Up}), id(a, {Label::Down})).is_zero());
  CHECK(same(compose(id(a, {Label::Up}), id(a, {Label::Up})), id(a, {Label::Up})));

  // plain strands refine to the other label
  Morphism x = id(t, {Label::Plain});
  CHECK(same(compose(x, p1), p1));
}

TEST_CASE("compose of boxes stays structural") {
  for (Theory t : {shaded2(), arrow2(), color2(), arrow_even1()}) {
    BoxKind k = t.colored() && !t.shaded() ? BoxKind::V : BoxKind::U;
    Morphism u = box(t, k), us = box(t, adjoint_kind(k));
    Morphism uus = compose(us, u);
    REQUIRE(uus.terms.size() == 1);
    CHECK(uus.terms[0].d.boxes.size() == 2);
    all_valid(uus);
    all_valid(compose(u, us));
    Morphism closed = trace_close(compose(u, us), Side::Right);
    CHECK(closed.closed());
    all_valid(closed);
    all_valid(trace_close(compose(u, us), Side::Left));
  }
}

TEST_CASE("identity is a unit for compose") {
  for (Theory t : {shaded2(), arrow2(), color2()}) {
    BoxKind k = t.colored() && !t.shaded() ? BoxKind::V : BoxKind::U;
    Morphism u = box(t, k);
    CHECK(same(compose(id(t, u.top), u), u));
    CHECK(same(compose(u, id(t, u.bottom)), u));
  }
}

TEST_CASE("adjoint is an anti-linear involution") {
  Theory t = arrow2();
  Morphism u = box(t, BoxKind::U);
  Morphism us = adjoint(u);
  CHECK(same(us, box(t, BoxKind::Ustar)));
  CHECK(same(adjoint(us), u));
  Cyclo z = Cyclo::root_power(8, 1);
  Morphism s = adjoint(z * u);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].c == z.conj());
  Morphism a = compose(box(t, BoxKind::Ustar), u);
  Morphism b = compose(u, box(t, BoxKind::Ustar));
  CHECK(same(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a))));
}

TEST_CASE("click rotates the boundary") {
  Theory t = color2();
  CHECK(same(click(id(t, {Label::Red}), 2), id(t, {Label::Red})));
  Theory s = shaded2();
  Morphism u = box(s, BoxKind::U);
  CHECK(same(click(click(u, 3), -3), u));
  CHECK(same(click(u, 2 * 2 * 2), u));
  Morphism c1 = click(u, 1);
  all_valid(c1);
  CHECK(same(c1, box(s, BoxKind::U, 1)));
  Theory a = arrow2();
  Morphism ua = box(a, BoxKind::U);
  for (int k = 0; k < 6; ++k) all_valid(click(ua, k));
}

TEST_CASE("trace closures") {
  Theory t = color2();
  Morphism bubble = trace_close(id(t, {Label::Red}), Side::Right);
  CHECK(same(bubble, loop(t, Label::Red)));
  Morphism plain = trace_close(id(t, {Label::Plain}), Side::Right);
  CHECK(same(plain, loop(t, Label::Plain)));
  CHECK_THROWS(trace_close(box(t, BoxKind::V), Side::Right));
}

TEST_CASE("expand_plain") {
  Theory a = arrow2();
  Morphism e = expand_plain(id(a, {Label::Plain}));
  CHECK(same(e, id(a, {Label::Up}) + id(a, {Label::Down})));
  Theory c = color2();
  Morphism l = expand_plain(loop(c, Label::Plain));
  CHECK(same(l, loop(c, Label::Red) + loop(c, Label::Blue)));
  CHECK(same(expand_plain(id(c, {Label::Red})), id(c, {Label::Red})));
}

TEST_CASE("serialization round trip") {
  Theory t = arrow2();
  Morphism m = compose(box(t, BoxKind::Ustar), box(t, BoxKind::U));
  m = m + Cyclo::root_power(4, 1) * compose(box(t, BoxKind::Ustar), click(box(t, BoxKind::U), 4));
  Morphism back = parse_morphism(serialize(m));
  CHECK(back.theory == m.theory);
  CHECK(same(back, m));
  Morphism z = Morphism::zero(t, {Label::Up}, {Label::Up});
  CHECK(serialize(z).find("\"terms\":[]") != std::string::npos);
  try {
    parse_morphism("{}");
    FAIL("expected an error");
  } catch (const DiagramError& e) {
    CHECK(std::string(e.what()).find("missing theory") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_morphism("{\"theory\": "), DiagramError);
}

TEST_CASE("nested loops keep their nesting") {
  Theory t = color2();
  Morphism inner = loop(t, Label::Red);
  // a red loop inside a blue loop differs from two side-by-side loops
  Morphism cupb = cup(t, Label::Blue), capb = cap(t, Label::Blue);
  Morphism around = compose(capb, compose(tensor(id(t, {Label::Blue}), tensor(inner, id(t, {Label::Blue}))), cupb));
  Morphism side = tensor(loop(t, Label::Blue), inner);
  all_valid(around);
  all_valid(side);
  CHECK_FALSE(same(around, side));
  FaceMap fa = trace_faces(only(around));
  CHECK(fa.num_faces == 3);
}
