#ifndef TAP_DECORATION_HPP
#define TAP_DECORATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tap/automaton.hpp"
#include "tap/symbols.hpp"

namespace tap {

// The block-level DAG: blocks reachable from X_0 through non-loop arrows,
// decorated with a type symbol per block. Loops are kept as counts, not
// edges; parallel arrows give parallel edges.
struct DecoratedGraph {
    struct Vertex {
        std::uint32_t block = 0;
        TypeSymbol type;
        std::uint64_t loop_count = 0;
        std::vector<std::uint32_t> children; // vertex indices, one entry per arrow
    };

    std::vector<Vertex> vertices; // index 0 is the root (block 0)
};

// Prunes to the root-reachable part and assigns base types: no loop gives
// the block's star symbol, one loop O/Oh/Oc and two or more Theta/ThetaH/
// ThetaC depending on planarity and orientability.
DecoratedGraph build_decorated_graph(const TopologicalAutomaton& aut);

// Applies the end-closure promotion rules: a star above recurring handles
// becomes StarInf, above recurring cross-caps StarInfCross; loop vertices
// pick up the h or c variant from their descendants. Promotions cascade;
// the pass is idempotent.
DecoratedGraph propagate(const DecoratedGraph& g);

// Deterministic DOT rendering; loops appear as one self-edge labelled with
// their multiplicity.
std::string decorated_graph_dot(const DecoratedGraph& g);

} // namespace tap

#endif
