// Named building blocks: strands, cups, caps, generator boxes and projections.
#pragma once

#include <vector>

#include "affa/diagram.hpp"

namespace affa {

Morphism id(const Theory& t, const std::vector<Label>& w);
Morphism cup(const Theory& t, Label l);  // empty -> l l*
Morphism cap(const Theory& t, Label l);  // l l* -> empty
Morphism box(const Theory& t, BoxKind k, int rot = 0);  // boundary from the box signature
Diagram box_diagram(const Theory& t, BoxKind k, int rot = 0);

// Label read at the top end of a strand from slot `slot` of a box lying below all of
// its strands.
Label state_leg_label(const Theory& t, BoxKind k, int rot, int slot);

// Closed loop of the given class; dir +1 runs clockwise.
Morphism loop(const Theory& t, Label cls, int dir = 0);

// Word helpers.
std::vector<Label> repeat(Label l, int k);
std::vector<Label> alternating_word(Label first, int k);  // Red/Blue or Up/Down alternation
std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b);
std::vector<Label> dual(const std::vector<Label>& w);

}  // namespace affa
