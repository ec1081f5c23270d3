#pragma once

// Independent evaluator for the simple representation: follow each strand
// downward through the word, collecting t/b (positive crossing) or
// t^-1/b^-1 (negative crossing) factors, and place the product at
// (start, end). Exists as a cross-check for rep::evaluate.

#include "braidrep/braid.hpp"
#include "braidrep/polymatrix.hpp"

namespace braidrep {

PolyMatrix path_matrix(const BraidWord& w);

}  // namespace braidrep
