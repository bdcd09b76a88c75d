#include <json.hpp>

#include "affa/diagram.hpp"

namespace affa {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DiagramError("parse", msg); }

json theory_json(const Theory& t) {
  return {{"family", family_name(t.family)},
          {"n", t.n},
          {"root", {{"order", t.root_order}, {"exp", t.root_exp}}}};
}

Theory theory_from(const json& j) {
  if (!j.is_object() || !j.contains("family")) fail("theory needs a family");
  Family f;
  try {
    f = parse_family(j.at("family").get<std::string>());
  } catch (const std::exception& e) {
    fail(std::string("bad family: ") + e.what());
  }
  int n = j.value("n", 0);
  Theory t = Theory::make(f, n, 0);
  if (j.contains("root")) {
    const json& r = j.at("root");
    int order = r.at("order").get<int>();
    long e = r.at("exp").get<long>();
    int N = t.modulus();
    if (order <= 0 || (N > 0 && N % order != 0) || (N == 0 && order != 1))
      fail("root order " + std::to_string(order) + " does not divide the theory modulus");
    return Theory::make(f, n, N == 0 ? 0 : e * (N / order));
  }
  if (j.contains("k")) return Theory::make(f, n, j.at("k").get<long>());
  return t;
}

json labels_json(const std::vector<Label>& ls) {
  json a = json::array();
  for (Label l : ls) a.push_back(label_name(l));
  return a;
}

std::vector<Label> labels_from(const json& j) {
  std::vector<Label> out;
  if (!j.is_array()) fail("label list expected");
  for (const json& x : j) out.push_back(parse_label(x.get<std::string>()));
  return out;
}

json endpoint_json(const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Bottom:
      return {{"bnd", "bottom"}, {"i", e.index}};
    case Endpoint::Kind::Top:
      return {{"bnd", "top"}, {"i", e.index}};
    case Endpoint::Kind::Box:
      return {{"box", e.index}, {"leg", e.slot}};
    case Endpoint::Kind::Anchor:
      return {{"anchor", e.index}, {"side", e.slot}};
  }
  return {};
}

Endpoint endpoint_from(const json& j) {
  if (j.contains("bnd")) {
    std::string s = j.at("bnd").get<std::string>();
    int i = j.at("i").get<int>();
    if (s == "bottom") return Endpoint::bottom(i);
    if (s == "top") return Endpoint::top(i);
    fail("bad boundary side " + s);
  }
  if (j.contains("box")) return Endpoint::box(j.at("box").get<int>(), j.at("leg").get<int>());
  if (j.contains("anchor")) return Endpoint::anchor(j.at("anchor").get<int>(), j.at("side").get<int>());
  fail("bad endpoint " + j.dump());
}

json corner_json(const Corner& c) {
  const char* k = c.node == NodeKind::Outer ? "outer" : c.node == NodeKind::Box ? "box" : "anchor";
  return {{"node", k}, {"index", c.index}, {"corner", c.corner}};
}

Corner corner_from(const json& j) {
  std::string k = j.at("node").get<std::string>();
  Corner c;
  if (k == "outer")
    c.node = NodeKind::Outer;
  else if (k == "box")
    c.node = NodeKind::Box;
  else if (k == "anchor")
    c.node = NodeKind::Anchor;
  else
    fail("bad corner node " + k);
  c.index = j.value("index", 0);
  c.corner = j.at("corner").get<int>();
  return c;
}

json cyclo_json(const Cyclo& c) {
  json a = json::array();
  for (const mpq_class& q : c.coeffs()) a.push_back(q.get_str());
  return {{"order", c.order()}, {"coeffs", a}};
}

Cyclo cyclo_from(const json& j) {
  if (j.is_number_integer()) return Cyclo::from_int(j.get<long>());
  if (j.is_string()) return Cyclo::from_rational(mpq_class(j.get<std::string>()));
  int order = j.at("order").get<int>();
  if (order < 1) fail("coefficient order must be positive");
  std::vector<mpq_class> poly;
  for (const json& x : j.at("coeffs")) {
    mpq_class q;
    if (x.is_number_integer())
      q = mpq_class(x.get<long>());
    else if (q.set_str(x.get<std::string>(), 10) != 0)
      fail("bad rational " + x.dump());
    q.canonicalize();
    poly.push_back(q);
  }
  return Cyclo::canonicalize(poly, order);
}

// Cyclic order of edge ids (strands as "s<i>", links as "l<i>") at each box and anchor.
json embedding_json(const Diagram& d) {
  json e = json::object();
  for (size_t b = 0; b < d.boxes.size(); ++b) {
    json slots = json::array();
    for (int s = 0; s < d.box_legs(static_cast<int>(b)); ++s) {
      for (size_t i = 0; i < d.strands.size(); ++i) {
        const Strand& st = d.strands[i];
        for (const Endpoint* p : {&st.a, &st.b})
          if (p->kind == Endpoint::Kind::Box && p->index == static_cast<int>(b) && p->slot == s)
            slots.push_back("s" + std::to_string(i));
      }
    }
    e["box" + std::to_string(b)] = slots;
  }
  for (int a = 0; a < d.anchors; ++a) {
    json sides = json::array();
    for (int side = 0; side < 2; ++side)
      for (size_t i = 0; i < d.strands.size(); ++i) {
        const Strand& st = d.strands[i];
        for (const Endpoint* p : {&st.a, &st.b})
          if (p->kind == Endpoint::Kind::Anchor && p->index == a && p->slot == side)
            sides.push_back("s" + std::to_string(i));
      }
    e["anchor" + std::to_string(a)] = sides;
  }
  return e;
}

json diagram_body(const Diagram& d) {
  json j;
  j["bottom"] = labels_json(d.bottom);
  j["top"] = labels_json(d.top);
  json boxes = json::array();
  for (const BoxInst& b : d.boxes) boxes.push_back({{"kind", kind_name(b.kind)}, {"rot", b.rot}});
  j["boxes"] = boxes;
  json strands = json::array();
  for (const Strand& s : d.strands)
    strands.push_back({{"a", endpoint_json(s.a)},
                       {"b", endpoint_json(s.b)},
                       {"label", label_name(s.label)},
                       {"dir", s.dir}});
  j["strands"] = strands;
  j["anchors"] = d.anchors;
  j["embedding"] = embedding_json(d);
  json links = json::array();
  for (const Link& l : d.links) links.push_back({{"child", corner_json(l.child)}, {"parent", corner_json(l.parent)}});
  j["placement"] = links;
  return j;
}

Diagram diagram_from(const json& j, const Theory& t) {
  Diagram d;
  d.theory = t;
  d.bottom = labels_from(j.value("bottom", json::array()));
  d.top = labels_from(j.value("top", json::array()));
  for (const json& b : j.value("boxes", json::array()))
    d.boxes.push_back({parse_kind(b.at("kind").get<std::string>()), b.value("rot", 0)});
  for (const json& s : j.value("strands", json::array())) {
    Strand st;
    st.a = endpoint_from(s.at("a"));
    st.b = endpoint_from(s.at("b"));
    st.label = parse_label(s.value("label", std::string("Plain")));
    st.dir = s.value("dir", 0);
    d.strands.push_back(st);
  }
  d.anchors = j.value("anchors", 0);
  for (const json& l : j.value("placement", json::array()))
    d.links.push_back({corner_from(l.at("child")), corner_from(l.at("parent"))});
  validate(d);
  return d;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace

std::string serialize(const Morphism& m, int indent) {
  json j;
  j["theory"] = theory_json(m.theory);
  j["bottom"] = labels_json(m.bottom);
  j["top"] = labels_json(m.top);
  json terms = json::array();
  for (const Term& t : m.terms) {
    json b = diagram_body(t.d);
    b["coeff"] = cyclo_json(t.c);
    terms.push_back(b);
  }
  j["terms"] = terms;
  return j.dump(indent);
}

std::string serialize(const Diagram& d, const Cyclo& c, int indent) {
  json j = diagram_body(d);
  j["theory"] = theory_json(d.theory);
  j["coeff"] = cyclo_json(c);
  return j.dump(indent);
}

Morphism parse_morphism(const std::string& text) {
  json j = parse_text(text);
  try {
    // A bare list of terms is accepted too; each term then names its theory.
    if (j.is_array()) {
      if (j.empty()) fail("empty term list carries no theory");
      if (!j[0].contains("theory")) fail("missing theory");
      Theory t = theory_from(j[0].at("theory"));
      Diagram first = diagram_from(j[0], t);
      Morphism m = Morphism::zero(t, first.bottom, first.top);
      for (const json& x : j) {
        if (!x.contains("theory") || !(theory_from(x.at("theory")) == t)) fail("terms disagree on theory");
        m.add(diagram_from(x, t), x.contains("coeff") ? cyclo_from(x.at("coeff")) : Cyclo::one());
      }
      return m;
    }
    if (!j.is_object() || !j.contains("theory")) fail("missing theory");
    Theory t = theory_from(j.at("theory"));
    if (!j.contains("terms")) {
      // a single diagram
      Diagram d = diagram_from(j, t);
      return Morphism::of(d, j.contains("coeff") ? cyclo_from(j.at("coeff")) : Cyclo::one());
    }
    Morphism m = Morphism::zero(t, labels_from(j.value("bottom", json::array())),
                                labels_from(j.value("top", json::array())));
    for (const json& x : j.at("terms")) {
      Diagram d = diagram_from(x, t);
      if (d.bottom.size() != m.bottom.size() || d.top.size() != m.top.size() ||
          !refines(d.bottom, m.bottom) || !refines(d.top, m.top))
        fail("term boundary does not match the morphism boundary");
      m.add(d, x.contains("coeff") ? cyclo_from(x.at("coeff")) : Cyclo::one());
    }
    return m;
  } catch (const json::exception& e) {
    fail(std::string("malformed morphism: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("malformed morphism: ") + e.what());
  }
}

Theory parse_theory_json(const std::string& text) {
  json j = parse_text(text);
  try {
    if (j.contains("theory")) return theory_from(j.at("theory"));
    return theory_from(j);
  } catch (const json::exception& e) {
    fail(std::string("malformed theory: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail(std::string("malformed theory: ") + e.what());
  }
}

}  // namespace affa
