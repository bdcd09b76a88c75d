// Simple objects as graded words, principal graphs, Bratteli diagrams, Gram matrices.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affa/diagram.hpp"

namespace affa {

using Word = std::vector<Label>;

// Image of a word in the grading group: Z_N (N = 0 means Z) for arrow theories, the
// dihedral group D_N (N = 0 means D_infinity) for shaded and color theories.
struct GroupElement {
  bool dihedral = false;
  int order = 0;     // N
  long rotation = 0; // exponent of u, or of (rb) for dihedral elements
  bool reflection = false;
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
  std::string to_string() const;
};

GroupElement identity_element(const Theory& t);
// Right multiplication by one strand generator: r/b for Red/Blue, u/u^-1 for Down/Up.
GroupElement times(const GroupElement& g, Label l);
GroupElement grading(const Theory& t, const Word& w);
GroupElement inverse(const GroupElement& g);

int hom_dim(const Theory& t, const Word& w1, const Word& w2);

// Shortest word with the same grading; empty for the unit class.
Word simple_decompose(const Theory& t, const Word& w);
std::string word_name(const Word& w);

struct FusionGraph {
  struct Vertex {
    GroupElement g;
    Word word;
    Cyclo trace;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // with multiplicity by repetition
  bool trace_formula_ok = false;
  std::vector<int> neighbours(int v) const;
  std::string to_dot() const;
};

// Graph of simple classes under tensoring by X = P_1 + Q_1. For infinite families the
// vertices within `radius` steps of the unit are kept.
FusionGraph principal_graph(const Theory& t, int radius = 4);

struct BratteliRow {
  std::vector<std::pair<Word, long>> entries;  // class representative and multiplicity
  long dim() const;                            // sum of squares
};
std::vector<BratteliRow> bratteli(const Theory& t, int rows);

Cyclo trace_of_word(const Theory& t, const Word& w);

// Exact linear algebra over the cyclotomic field.
using Matrix = std::vector<std::vector<Cyclo>>;
int exact_rank(Matrix m);
bool is_hermitian(const Matrix& m);
// Exact LDL* with symmetric pivoting; pivot signs are certified numerically.
bool is_psd(const Matrix& m);

struct GramResult {
  std::vector<Diagram> basis;
  Matrix gram;
  int rank = 0;
  bool hermitian = false;
  bool psd = false;
};

// All diagrams empty -> w with at most `max_boxes` boxes, no two strand-connected. In
// shaded theories only diagrams whose star region is unshaded are kept.
std::vector<Diagram> spanning_diagrams(const Theory& t, const Word& w, int max_boxes);
GramResult gram_matrix(const Theory& t, const Word& w, int max_boxes);

}  // namespace affa
