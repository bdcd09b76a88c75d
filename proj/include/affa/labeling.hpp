// Region labelings of closed diagrams by the van Kampen group, and the invariants f, f_U, f_V.
#pragma once

#include <string>
#include <vector>

#include "affa/diagram.hpp"
#include "affa/fusion.hpp"

namespace affa {

struct Region {
  int id = 0;
  std::vector<int> darts;  // boundary darts, in tracing order
};

// Faces of a diagram, from orbit tracing of its rotation system.
std::vector<Region> regions(const Diagram& d);

struct RegionLabeling {
  FaceMap faces;
  std::vector<GroupElement> labels;  // per face
  int star_face = 0;
  std::vector<int> box_face;  // face holding each box's star
};

// Crossing a red/blue strand multiplies by r/b on the right. Crossing an oriented strand
// from its left to its right (facing along the arrow) multiplies by u.
// In color theories red strands record b and blue strands record r.
RegionLabeling label_regions(const Diagram& d);

// Conventions left open by the written definition. The defaults are the ones that agree
// with the rewriting evaluator.
struct LabelConvention {
  // arrow: ell = sum over U* of m minus sum over U of m (true), or the literal reading in
  // which the U-column negation and the step-4 subtraction cancel (false)
  bool arrow_difference = true;
  // shaded/color: reflections (rb)^a r contribute -a (true, the table as written) or -(a+1)
  bool shaded_table_as_written = true;
};

// ell-value of a single box whose star sits in a region labeled g.
long box_ell(const Theory& t, BoxKind k, const GroupElement& g, const LabelConvention& c = {});

struct LabelResult {
  RegionLabeling labeling;
  long ell = 0;
  Cyclo value;
};

// One fully labeled term (no Plain strands).
LabelResult label_term(const Diagram& d, const LabelConvention& c = {});

Cyclo invariant(const Morphism& m, const LabelConvention& c = {});
Cyclo invariant(const Diagram& d, const LabelConvention& c = {});

}  // namespace affa
