// Seeded random closed diagrams for property and oracle suites.
#pragma once

#include <cstdint>
#include <map>

#include "affa/diagram.hpp"

namespace affa {

struct Coverage {
  long draws = 0;
  std::map<BoxKind, long> kinds;
  long nested_boxes = 0;  // boxes sitting inside a closed strand
  long plain_strands = 0;
  long loops_one_way = 0;    // cups opening red, or upward on the left
  long loops_other_way = 0;  // cups opening blue, or downward on the left
  void merge(const Coverage& o);
};

// A valid closed diagram with at most max_boxes boxes: a random state empty -> w is built
// from nested cups and clicked boxes, and closed off by the adjoint of a second state on w.
Diagram random_closed(const Theory& t, int max_boxes, int max_loops, std::uint64_t seed,
                      Coverage* cov = nullptr);

}  // namespace affa
