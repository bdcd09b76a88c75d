// Defining relations of every supported presentation, as pairs of morphisms.
#pragma once

#include <string>
#include <vector>

#include "affa/diagram.hpp"

namespace affa {

struct Relation {
  std::string name;  // e.g. "(v) U U* = id"
  Morphism lhs, rhs;
};

std::vector<Relation> defining_relations(const Theory& t);

struct RelationResult {
  std::string name;
  bool pass = false;
};

std::vector<RelationResult> check_relations(const Theory& t);

// Every legal theory of a family with size parameter n (one per root).
std::vector<Theory> theories_with_roots(Family f, int n);

}  // namespace affa
