// Evaluation of closed diagrams by box-pair elimination, inner products, equality.
#pragma once

#include <atomic>

#include "affa/diagram.hpp"

namespace affa {

struct EvalStats {
  long rewrites = 0;        // unitary eliminations
  long pops = 0;            // loops popped
  long measure_checks = 0;  // (boxes, loops) comparisons made
};

// Process-wide counters, summed over every evaluation.
struct EvalTotals {
  std::atomic<long> rewrites{0}, pops{0}, measure_checks{0}, evaluations{0};
};
EvalTotals& eval_totals();

// Thrown when the termination measure fails to decrease or a step cap is hit.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Cyclo eval_closed(const Morphism& m, EvalStats* stats = nullptr);
Cyclo eval_diagram(const Diagram& d, EvalStats* stats = nullptr);

Cyclo inner_product(const Morphism& f, const Morphism& g);
bool morphism_eq(const Morphism& f, const Morphism& g);

}  // namespace affa
