// Planar diagrams as combinatorial maps, and formal linear combinations of them.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affa/cyclotomic.hpp"
#include "affa/theory.hpp"

namespace affa {

struct DiagramError : std::runtime_error {
  std::string kind;  // "planarity", "leg-count", "alphabet", "label", "shading", "structure", ...
  DiagramError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

struct Endpoint {
  enum class Kind : std::uint8_t { Bottom, Top, Box, Anchor };
  Kind kind = Kind::Bottom;
  int index = 0;  // boundary position, box index or anchor index
  int slot = 0;   // box slot or anchor side

  static Endpoint bottom(int i) { return {Kind::Bottom, i, 0}; }
  static Endpoint top(int i) { return {Kind::Top, i, 0}; }
  static Endpoint box(int b, int s) { return {Kind::Box, b, s}; }
  static Endpoint anchor(int a, int side) { return {Kind::Anchor, a, side}; }
  auto operator<=>(const Endpoint&) const = default;
};

// Oriented strands keep their class label (Up, Plus or Dot) plus a direction:
// +1 flows a -> b, -1 flows b -> a. Unoriented strands have dir 0.
struct Strand {
  Endpoint a, b;
  Label label = Label::Plain;
  int dir = 0;
  bool operator==(const Strand&) const = default;
};

struct BoxInst {
  BoxKind kind = BoxKind::U;
  int rot = 0;  // slot s holds canonical leg (s - rot) mod L; the star sits before slot rot
  bool operator==(const BoxInst&) const = default;
};

enum class NodeKind : std::uint8_t { Outer, Box, Anchor };

// Corner c of a box or anchor is the gap just before slot/side c (clockwise).
// Corner c of the outer node is the boundary gap just before walk point c, where the
// walk runs clockwise from the star: top left to right, then bottom right to left.
struct Corner {
  NodeKind node = NodeKind::Outer;
  int index = 0;
  int corner = 0;
  auto operator<=>(const Corner&) const = default;
};

// Places a component that touches neither the boundary nor another component:
// the child's corner faces the parent's corner across one region.
struct Link {
  Corner child, parent;
  auto operator<=>(const Link&) const = default;
};

struct Diagram {
  Theory theory;
  std::vector<Label> bottom, top;
  std::vector<BoxInst> boxes;
  int anchors = 0;
  std::vector<Strand> strands;
  std::vector<Link> links;

  bool closed() const { return bottom.empty() && top.empty(); }
  int walk_length() const { return static_cast<int>(bottom.size() + top.size()); }
  int box_legs(int b) const { return leg_count(theory, boxes.at(b).kind); }
  bool operator==(const Diagram&) const = default;
};

// ---- well-formedness ----------------------------------------------------------

void validate(const Diagram& d);  // throws DiagramError
bool is_valid(const Diagram& d, std::string* why = nullptr);

// Label read at an endpoint of strand s (Up/Down etc. for oriented strands).
Label label_at(const Diagram& d, const Strand& s, bool at_a);
Endpoint walk_endpoint(const Diagram& d, int w);
int walk_position(const Diagram& d, const Endpoint& e);

// ---- faces ---------------------------------------------------------------------

struct FaceMap {
  int num_nodes = 0;   // 0 = outer, 1..B boxes, then anchors
  int num_faces = 0;
  std::vector<int> node, alpha, sigma, face;
  std::vector<int> edge;     // strand index, or -1 - link index
  std::vector<int> edge_end; // 0 if the dart leaves strand end a, 1 for end b
  std::vector<int> dart_corner;  // corner of the gap just before each dart
  std::vector<int> strand_dart;  // dart leaving end a of each strand
  std::vector<std::vector<int>> gap_dart;  // per node, per gap: first dart in that gap
  std::vector<int> isolated_face;          // per node: face id when it has no darts, else -1

  int corner_face(int node_id, int corner) const;
  int node_id(NodeKind k, int index) const;
  int boxes = 0;
};

FaceMap trace_faces(const Diagram& d);
// Corner index at node for the gap just before the dart.
int gap_corner(const Diagram& d, const FaceMap& fm, int dart);

// Derived star shading of a shaded diagram (0 unshaded, 1 shaded), if forced by boxes.
std::optional<int> derived_shading(const Diagram& d);

// Deterministic renumbering of boxes and anchors and sorted strands/links.
Diagram canonical(const Diagram& d);
std::string diagram_key(const Diagram& d);

// ---- formal combinations ---------------------------------------------------------

struct Term {
  Diagram d;  // canonical form
  Cyclo c;
  std::string key;
};

struct Morphism {
  Theory theory;
  std::vector<Label> bottom, top;
  std::vector<Term> terms;

  static Morphism zero(const Theory& t, std::vector<Label> bottom, std::vector<Label> top);
  static Morphism of(const Diagram& d, const Cyclo& c = Cyclo::one());

  bool is_zero() const { return terms.empty(); }
  bool closed() const { return bottom.empty() && top.empty(); }
  void add(const Diagram& d, const Cyclo& c);
  Morphism scaled(const Cyclo& c) const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
};

Morphism operator*(const Cyclo& c, const Morphism& m);

// ---- structural operations --------------------------------------------------------

// Diagram-level versions return nullopt when a label clash makes the term zero.
Diagram tensor(const Diagram& a, const Diagram& b);
std::optional<Diagram> compose(const Diagram& a, const Diagram& b);  // a on top of b
Diagram adjoint(const Diagram& a);
Diagram click(const Diagram& a, int steps);
std::vector<Diagram> expand_plain(const Diagram& a);

// Strand whose label reads `l` at end a; `a_above` says the strand leaves a upward.
Strand make_strand(Label l, Endpoint a, bool a_above, Endpoint b);

// Basic strand-only diagrams. Words are read left to right.
Diagram identity_diagram(const Theory& t, const std::vector<Label>& w);
Diagram rainbow_cups(const Theory& t, const std::vector<Label>& w);  // empty -> w (x) w*
Diagram rainbow_caps(const Theory& t, const std::vector<Label>& w);  // w (x) w* -> empty

enum class Side { Left, Right };

Morphism tensor(const Morphism& a, const Morphism& b);
Morphism compose(const Morphism& a, const Morphism& b);
Morphism adjoint(const Morphism& a);
Morphism click(const Morphism& a, int steps);
Morphism trace_close(const Morphism& a, Side side);
Morphism expand_plain(const Morphism& a);

// Term labels may refine Plain entries of a morphism signature.
bool refines(const std::vector<Label>& term, const std::vector<Label>& sig);

// ---- serialization ----------------------------------------------------------------

std::string serialize(const Morphism& m, int indent = -1);
std::string serialize(const Diagram& d, const Cyclo& c, int indent = -1);
Morphism parse_morphism(const std::string& text);
Theory parse_theory_json(const std::string& text);

}  // namespace affa
