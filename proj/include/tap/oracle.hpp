#ifndef TAP_ORACLE_HPP
#define TAP_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "tap/automaton.hpp"
#include "tap/tree.hpp"

namespace tap {

// Classification of the end space of a loop-only planar admissible tree:
// a countable compact space with m points of maximal Cantor-Bendixson
// rank r. The pair determines the space up to homeomorphism.
struct CBInvariant {
    std::uint32_t rank = 0;
    std::uint32_t multiplicity = 1;

    friend bool operator==(const CBInvariant&, const CBInvariant&) = default;
};

// Independent invariant for trees whose ordinary vertices all have plain
// type O: leaves rank 0, inner vertices one more than their deepest child;
// the root children realising the maximum are counted. Throws NotLoopOnly
// when a Theta-family or h/c vertex is present, and Error on a tree with
// no ordinary vertex (empty end space).
CBInvariant cb_invariant(const DecoratedTree& t);

using BitVector = std::vector<bool>;

// An automaton family separating surfaces by attached end ranks: a disk
// feeds a two-loop hub (a Cantor set of ends), and for every set bit k a
// chain of k one-loop blocks hangs off the hub, contributing an end
// cluster of rank k. Distinct bit vectors give non-homeomorphic surfaces.
TopologicalAutomaton gen_appendix(const BitVector& bits);

// Reduces the tree along `trials` random maximal move sequences and checks
// that every terminal canonical code equals the deterministic reduce's.
bool confluence_check(const DecoratedTree& t, std::uint32_t trials, std::uint64_t seed);

} // namespace tap

#endif
