// Presentations per family, the click-eigenvalue invariant, isomorphism and class counts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affa/diagram.hpp"

namespace affa {

// Family classes as counted by the classification theorems.
enum class FamilyClass { ShadedAodd, UnshadedAodd, Aeven, UnshadedAInf, ShadedAInf };

std::string family_class_name(FamilyClass f);
FamilyClass parse_family_class(const std::string& s);

std::vector<Theory> enumerate_presentations(FamilyClass f, int n = 0);

// The scalar by which one click acts on the distinguished generator, recovered through
// the evaluator. Throws for box-free theories.
Cyclo click_eigenvalue(const Theory& t);

struct IsoResult {
  bool isomorphic = false;
  std::string reason;  // witness or obstruction
};

IsoResult are_isomorphic(const Theory& a, const Theory& b);

int count_classes(FamilyClass f, int n = 0);

}  // namespace affa
