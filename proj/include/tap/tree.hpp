#ifndef TAP_TREE_HPP
#define TAP_TREE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tap/decoration.hpp"
#include "tap/symbols.hpp"

namespace tap {

// A decorated rooted tree with unordered children, stored as an arena.
// Vertex 0 is the root. Admissible trees are decorated trees whose only
// starred vertex is the root; is_admissible checks that.
struct DecoratedTree {
    struct Node {
        TypeSymbol type;
        std::int32_t parent = -1;
        std::vector<std::uint32_t> children;
    };

    std::vector<Node> nodes;

    std::size_t size() const { return nodes.size(); }
    bool empty() const { return nodes.empty(); }
    TypeSymbol root_type() const { return nodes.front().type; }
    std::size_t ordinary_count() const { return nodes.size() - 1; }

    // Adds a child under `parent` and returns its index.
    std::uint32_t add_child(std::uint32_t parent, TypeSymbol type);

    // The vertices of the subtree at v, in preorder (v first).
    std::vector<std::uint32_t> subtree(std::uint32_t v) const;
};

// Builds a tree from a root type alone.
DecoratedTree singleton_tree(TypeSymbol root);

bool is_admissible(const DecoratedTree& t);

inline constexpr std::uint64_t kDefaultUnfoldCap = 1000000;

// Full path-unfolding of a decorated DAG: tree vertices are the directed
// paths from the root, parallel edges giving distinct paths. Throws
// SizeCapExceeded when the unfolding grows past the cap.
DecoratedTree unfold(const DecoratedGraph& g, std::uint64_t vertex_cap = kDefaultUnfoldCap);

// Connected-sum arithmetic on starred labels: genus adds while everything
// stays orientable and finite; any infinite part wins; a nonorientable
// finite sum converts handles at two cross-caps each (Dyck's theorem).
TypeSymbol merge_types(TypeSymbol father, TypeSymbol son);

// Eliminates starred non-root vertices bottom-up: a starred father absorbs
// the label via merge_types, a loop-type father just inherits the orphaned
// children. The result is admissible and independent of elimination order.
DecoratedTree admissibilize(const DecoratedTree& t);

// Deterministic DOT rendering of a decorated tree; children are emitted in
// canonical-code order, so isomorphic trees render byte-identically.
std::string tree_dot(const DecoratedTree& t);

} // namespace tap

#endif
