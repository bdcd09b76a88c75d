// Source diagrammatic categories, their functors into the arrow theories, and the 3-cocycle.
#pragma once

#include <string>
#include <vector>

#include "affa/diagram.hpp"

namespace affa {

// Relabels a Vec or Rep source diagram into its target arrow theory.
Diagram functor_image(const Diagram& d);
Morphism functor_image(const Morphism& m);
Theory functor_target(const Theory& src);

struct CocycleSpec {
  int m = 1;
  long zeta_exp = 0;  // zeta = exp(2 pi i zeta_exp / m)
  Cyclo zeta() const { return Cyclo::root_power(m, zeta_exp); }
};

Cyclo cocycle(const CocycleSpec& s, int i, int j, int k);
bool check_cocycle(const CocycleSpec& s);

enum class Which { Vec, Rep };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FunctorReport {
  Which which = Which::Vec;
  int m = 1;
  long zeta_exp = 0;
  std::vector<Check> relations;
  std::vector<Check> hom_dims;
  std::vector<Check> nontrivial;
  bool pass() const;
};

// Source hom dimension between two boundary words of the source category.
int source_hom_dim(const Theory& src, const std::vector<Label>& from, const std::vector<Label>& to);

FunctorReport check_functor(Which which, int m, long zeta_exp);

}  // namespace affa
