// Presentations supported by the engine: alphabets, box signatures, click behavior.
#pragma once

#include <string>
#include <vector>

#include "affa/cyclotomic.hpp"

namespace affa {

enum class Family {
  ShadedAodd,
  UnshadedArrowAodd,
  UnshadedArrowAeven,
  UnshadedColorAodd,
  ShadedAInf,
  UnshadedArrowAInf,
  UnshadedColorAInf,
  VecCyclicSource,
  SUTwoRepSource,
};

enum class Label { Red, Blue, Up, Down, Plain, Dot, Plus, Minus };

enum class BoxKind {
  U,
  Ustar,
  V,
  Vstar,
  UTilde,           // all legs on top, sinks
  UTildeStar,       // all legs on bottom, sources
  UTildePrime,      // horizontal flip of UTilde: legs on bottom, sinks
  UTildeStarPrime,  // horizontal flip of UTildeStar: legs on top, sources
  ScriptU,
  ScriptUstar,
  NCapPlus,
  NCapMinus,
  NCupPlus,
  NCupMinus,
};

struct Theory {
  Family family = Family::UnshadedArrowAInf;
  int n = 0;           // size parameter; m for the source families
  int root_order = 1;  // exact multiplicative order of the chosen root
  int root_exp = 0;    // root = exp(2 pi i root_exp / root_order), gcd(exp, order) = 1

  // root = exp(2 pi i k / modulus(family, n)), normalized to its exact order.
  static Theory make(Family f, int n = 0, long k = 0);

  int modulus() const;  // n, 2n, 2n+1, m; 0 for box-free families
  Cyclo root() const { return Cyclo::root_power(root_order, root_exp); }
  bool infinite() const;
  bool has_boxes() const { return !infinite(); }
  bool shaded() const { return family == Family::ShadedAodd || family == Family::ShadedAInf; }
  bool colored() const;   // Red/Blue strands
  bool oriented() const;  // oriented strands of some kind
  bool source() const {
    return family == Family::VecCyclicSource || family == Family::SUTwoRepSource;
  }
  bool arrow() const {
    return family == Family::UnshadedArrowAodd || family == Family::UnshadedArrowAeven ||
           family == Family::UnshadedArrowAInf;
  }
  std::string name() const;

  bool operator==(const Theory&) const = default;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string label_name(Label l);
Label parse_label(const std::string& s);
std::string kind_name(BoxKind k);
BoxKind parse_kind(const std::string& s);

std::vector<Label> alphabet(const Theory& t);
std::vector<BoxKind> box_kinds(const Theory& t);
bool kind_legal(const Theory& t, BoxKind k);

struct Signature {
  std::vector<Label> bottom, top;
};
Signature box_signature(const Theory& t, BoxKind k);
int leg_count(const Theory& t, BoxKind k);

// Label of canonical leg j (legs listed clockwise from the star: top left to right,
// then bottom right to left).
Label canonical_leg_label(const Theory& t, BoxKind k, int j);
bool canonical_leg_on_top(const Theory& t, BoxKind k, int j);

// Oriented label helpers. Up, Plus and Dot point upward.
bool is_oriented(Label l);
bool points_up(Label l);
Label flip_label(Label l);
Label dual_label(Label l);
Label orient_class(Label l);  // Up, Plus or Dot
Label with_direction(Label cls, bool up);

enum class Role { Source, Sink, None };
// Role of a strand end where the strand leaves/enters across a horizontal line.
// `above` is true when the strand continues upward from the end.
Role end_role(Label l, bool above);

// F(K) = scalar * next (one click of the star).
struct ClickRule {
  Cyclo scalar;
  BoxKind next;
};
ClickRule click_rule(const Theory& t, BoxKind k);

BoxKind adjoint_kind(BoxKind k);
// Vertex type used by the evaluator: Ũ-family boxes are U/U* vertices.
BoxKind vertex_kind(BoxKind k);
BoxKind unitary_partner(BoxKind k);
// Required star shading in shaded families: 0 unshaded, 1 shaded.
int star_shading(BoxKind k);

// Targets of the equivalence functors.
Theory arrow_theory_of_size(int m, long k_over_m);
Theory vec_target(const Theory& src);
Theory rep_target(const Theory& src);

}  // namespace affa
