#include "tap/tree.hpp"

#include <algorithm>
#include <deque>

#include "tap/canonical.hpp"
#include "tap/errors.hpp"

namespace tap {

std::uint32_t DecoratedTree::add_child(std::uint32_t parent, TypeSymbol type) {
    auto idx = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({type, static_cast<std::int32_t>(parent), {}});
    nodes[parent].children.push_back(idx);
    return idx;
}

std::vector<std::uint32_t> DecoratedTree::subtree(std::uint32_t v) const {
    std::vector<std::uint32_t> result;
    std::vector<std::uint32_t> stack{v};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        result.push_back(u);
        for (std::uint32_t c : nodes[u].children) {
            stack.push_back(c);
        }
    }
    return result;
}

DecoratedTree singleton_tree(TypeSymbol root) {
    DecoratedTree t;
    t.nodes.push_back({root, -1, {}});
    return t;
}

bool is_admissible(const DecoratedTree& t) {
    if (t.empty() || !is_starred(t.root_type())) {
        return false;
    }
    for (std::size_t i = 1; i < t.nodes.size(); ++i) {
        if (!is_loop_kind(t.nodes[i].type)) {
            return false;
        }
    }
    return true;
}

DecoratedTree unfold(const DecoratedGraph& g, std::uint64_t vertex_cap) {
    DecoratedTree t = singleton_tree(g.vertices.front().type);

    // Breadth-first over root paths; each queue entry pairs a tree vertex
    // with the graph vertex its path ends at.
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{0, 0}};
    while (!queue.empty()) {
        auto [tree_v, graph_v] = queue.front();
        queue.pop_front();
        for (std::uint32_t child : g.vertices[graph_v].children) {
            if (t.nodes.size() >= vertex_cap) {
                throw SizeCapExceeded(vertex_cap);
            }
            std::uint32_t new_v = t.add_child(tree_v, g.vertices[child].type);
            queue.emplace_back(new_v, child);
        }
    }
    return t;
}

namespace {

struct StarContent {
    bool orientable = true;
    bool infinite = false;
    std::uint64_t genus = 0;
    std::uint64_t crosscaps = 0;
};

StarContent star_content(TypeSymbol s) {
    switch (s.kind) {
    case SymbolKind::StarOrient:
        return {true, false, s.index, 0};
    case SymbolKind::StarCross:
        return {false, false, 0, s.index};
    case SymbolKind::StarInf:
        return {true, true, 0, 0};
    default: // StarInfCross
        return {false, true, 0, 0};
    }
}

} // namespace

TypeSymbol merge_types(TypeSymbol father, TypeSymbol son) {
    StarContent a = star_content(father);
    StarContent b = star_content(son);
    bool orientable = a.orientable && b.orientable;
    if (a.infinite || b.infinite) {
        return orientable ? star_inf() : star_inf_cross();
    }
    if (orientable) {
        return star_orient(a.genus + b.genus);
    }
    return star_cross(2 * (a.genus + b.genus) + a.crosscaps + b.crosscaps);
}

DecoratedTree admissibilize(const DecoratedTree& t) {
    // Work on a mutable copy with tombstones, compacting at the end.
    DecoratedTree work = t;
    std::vector<bool> dead(work.nodes.size(), false);

    std::vector<std::uint32_t> depth(work.nodes.size(), 0);
    for (std::uint32_t v = 1; v < work.nodes.size(); ++v) {
        depth[v] = depth[work.nodes[v].parent] + 1;
    }

    while (true) {
        // Deepest starred non-root vertex; ties broken by index.
        std::int64_t pick = -1;
        for (std::uint32_t v = 1; v < work.nodes.size(); ++v) {
            if (dead[v] || !is_starred(work.nodes[v].type)) {
                continue;
            }
            if (pick < 0 || depth[v] > depth[pick]) {
                pick = v;
            }
        }
        if (pick < 0) {
            break;
        }
        auto v = static_cast<std::uint32_t>(pick);
        auto father = static_cast<std::uint32_t>(work.nodes[v].parent);
        if (is_starred(work.nodes[father].type)) {
            work.nodes[father].type = merge_types(work.nodes[father].type, work.nodes[v].type);
        }
        auto& siblings = work.nodes[father].children;
        siblings.erase(std::find(siblings.begin(), siblings.end(), v));
        for (std::uint32_t c : work.nodes[v].children) {
            work.nodes[c].parent = static_cast<std::int32_t>(father);
            siblings.push_back(c);
            // Depths of the reattached subtree shrink, but relative order
            // among surviving stars is all the fixpoint loop needs.
            depth[c] = depth[father] + 1;
        }
        work.nodes[v].children.clear();
        dead[v] = true;
    }

    DecoratedTree out;
    std::vector<std::uint32_t> remap(work.nodes.size(), 0);
    for (std::uint32_t v = 0; v < work.nodes.size(); ++v) {
        if (dead[v]) {
            continue;
        }
        remap[v] = static_cast<std::uint32_t>(out.nodes.size());
        out.nodes.push_back({work.nodes[v].type, -1, {}});
    }
    for (std::uint32_t v = 0; v < work.nodes.size(); ++v) {
        if (dead[v]) {
            continue;
        }
        std::int32_t parent = work.nodes[v].parent;
        if (parent >= 0) {
            out.nodes[remap[v]].parent = static_cast<std::int32_t>(remap[parent]);
            out.nodes[remap[parent]].children.push_back(remap[v]);
        }
    }
    return out;
}

std::string tree_dot(const DecoratedTree& t) {
    std::string os = "digraph tree {\n";
    if (!t.empty()) {
        std::vector<std::uint32_t> position = canonical_preorder(t);
        std::vector<std::uint32_t> vertex_at(position.size());
        for (std::uint32_t v = 0; v < position.size(); ++v) {
            vertex_at[position[v]] = v;
        }
        for (std::uint32_t pos = 0; pos < vertex_at.size(); ++pos) {
            os += "  n" + std::to_string(pos) + " [label=\"" +
                  symbol_token(t.nodes[vertex_at[pos]].type) + "\"];\n";
        }
        for (std::uint32_t pos = 0; pos < vertex_at.size(); ++pos) {
            std::int32_t parent = t.nodes[vertex_at[pos]].parent;
            if (parent >= 0) {
                os += "  n" + std::to_string(position[parent]) + " -> n" + std::to_string(pos) +
                      ";\n";
            }
        }
    }
    os += "}\n";
    return os;
}

} // namespace tap
