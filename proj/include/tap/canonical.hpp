#ifndef TAP_CANONICAL_HPP
#define TAP_CANONICAL_HPP

#include <string>
#include <vector>

#include "tap/tree.hpp"

namespace tap {

// code(v) = token(type(v)) "(" children codes in ascending order ")".
// Two decorated rooted trees are isomorphic exactly when their codes are
// equal strings.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const DecoratedTree& t);

// Codes of every subtree, indexed by vertex.
std::vector<CanonicalCode> subtree_codes(const DecoratedTree& t);

// Positions in the canonical preorder: children visited in ascending
// subtree-code order, ties by vertex index.
std::vector<std::uint32_t> canonical_preorder(const DecoratedTree& t);

bool isomorphic(const DecoratedTree& a, const DecoratedTree& b);

} // namespace tap

#endif
