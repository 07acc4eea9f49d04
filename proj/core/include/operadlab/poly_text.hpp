#ifndef OPERADLAB_POLY_TEXT_HPP
#define OPERADLAB_POLY_TEXT_HPP

#include <string>

#include "operadlab/magma.hpp"

namespace operadlab {

// Textual grammar:
//   poly := term (('+'|'-') term)*
//   term := rational '*'? tree
//   tree := leaf | '(' tree tree ')'
//   leaf := integer
// The printer always writes explicit coefficients, e.g.
//   "1 ((1 2) 3) - 1 ((2 1) 3) - 2 (1 (2 3)) + 2 (2 (1 3))"
// and "0" for the zero polynomial (which the parser also accepts).

std::string tree_str(const MagmaTree& t);
std::string poly_str(const TreePoly& p);

// Throw std::invalid_argument with a position message on malformed input.
MagmaTree parse_tree(const std::string& text);
TreePoly parse_poly(const std::string& text);

}  // namespace operadlab

#endif
