#include "tap/reduce.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "tap/errors.hpp"

namespace tap {

Move make_move1(std::uint32_t father, std::uint32_t child) {
    return {MoveKind::M1, {father, child, 0}, 2};
}

Move make_move2(std::uint32_t v1, std::uint32_t son, std::uint32_t deep) {
    return {MoveKind::M2, {v1, son, deep}, 3};
}

Move make_move3(std::uint32_t v1, std::uint32_t kept, std::uint32_t deleted) {
    return {MoveKind::M3, {v1, kept, deleted}, 3};
}

namespace {

struct TreeIndex {
    std::vector<CanonicalCode> codes;
    std::vector<std::uint32_t> position; // canonical preorder
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> tin, tout; // DFS intervals for ancestor tests

    explicit TreeIndex(const DecoratedTree& t)
        : codes(subtree_codes(t)), position(canonical_preorder(t)), depth(t.size(), 0),
          tin(t.size(), 0), tout(t.size(), 0) {
        std::uint32_t clock = 0;
        // Iterative DFS; second visit closes the interval.
        std::vector<std::pair<std::uint32_t, bool>> stack{{0, false}};
        while (!stack.empty()) {
            auto [v, closing] = stack.back();
            stack.pop_back();
            if (closing) {
                tout[v] = clock;
                continue;
            }
            tin[v] = clock++;
            stack.emplace_back(v, true);
            for (std::uint32_t c : t.nodes[v].children) {
                depth[c] = depth[v] + 1;
                stack.emplace_back(c, false);
            }
        }
    }

    bool strict_descendant(std::uint32_t v, std::uint32_t anc) const {
        return v != anc && tin[anc] < tin[v] && tin[v] < tout[anc];
    }
};

bool move1_applies(const DecoratedTree& t, std::uint32_t father, std::uint32_t child) {
    if (father == 0 || father >= t.size() || child >= t.size()) {
        return false;
    }
    const auto& f = t.nodes[father];
    if (f.children.size() != 1 || f.children[0] != child) {
        return false;
    }
    TypeSymbol ct = t.nodes[child].type;
    TypeSymbol ft = f.type;
    return is_theta_family(ct) && is_loop_kind(ft) && variant_class(ft) == variant_class(ct);
}

bool move2_applies(const DecoratedTree& t, const TreeIndex& ix, std::uint32_t v1,
                   std::uint32_t son, std::uint32_t deep) {
    if (v1 >= t.size() || son >= t.size() || deep >= t.size()) {
        return false;
    }
    if (t.nodes[son].parent != static_cast<std::int32_t>(v1)) {
        return false;
    }
    if (!ix.strict_descendant(deep, v1) || ix.depth[deep] < ix.depth[v1] + 2) {
        return false;
    }
    return ix.codes[son] == ix.codes[deep];
}

bool move3_applies(const DecoratedTree& t, const TreeIndex& ix, std::uint32_t v1,
                   std::uint32_t kept, std::uint32_t deleted) {
    if (v1 >= t.size() || kept >= t.size() || deleted >= t.size() || kept == deleted) {
        return false;
    }
    if (t.nodes[kept].parent != static_cast<std::int32_t>(v1) ||
        t.nodes[deleted].parent != static_cast<std::int32_t>(v1)) {
        return false;
    }
    if (v1 == 0 && !is_theta_family(t.nodes[kept].type)) {
        return false;
    }
    return ix.codes[kept] == ix.codes[deleted];
}

bool move_applies(const DecoratedTree& t, const TreeIndex& ix, const Move& m) {
    switch (m.kind) {
    case MoveKind::M1:
        return move1_applies(t, m.refs[0], m.refs[1]);
    case MoveKind::M2:
        return move2_applies(t, ix, m.refs[0], m.refs[1], m.refs[2]);
    default:
        return move3_applies(t, ix, m.refs[0], m.refs[1], m.refs[2]);
    }
}

void sort_moves(std::vector<Move>& moves, const TreeIndex& ix) {
    auto key = [&](const Move& m) {
        std::array<std::uint32_t, 5> k{static_cast<std::uint32_t>(m.kind),
                                       ix.position[m.target()], 0, 0, 0};
        for (std::uint8_t i = 0; i < m.ref_count; ++i) {
            k[2 + i] = ix.position[m.refs[i]];
        }
        return k;
    };
    std::sort(moves.begin(), moves.end(),
              [&](const Move& a, const Move& b) { return key(a) < key(b); });
}

std::vector<Move> collect_moves(const DecoratedTree& t, const TreeIndex& ix) {
    std::vector<Move> moves;
    if (t.size() <= 1) {
        return moves;
    }

    for (std::uint32_t v = 1; v < t.size(); ++v) {
        auto father = static_cast<std::uint32_t>(t.nodes[v].parent);
        if (move1_applies(t, father, v)) {
            moves.push_back(make_move1(father, v));
        }
    }

    // Vertices sharing a subtree code, for the duplicate-detection moves.
    std::map<CanonicalCode, std::vector<std::uint32_t>> classes;
    for (std::uint32_t v = 1; v < t.size(); ++v) {
        classes[ix.codes[v]].push_back(v);
    }
    for (const auto& [code, members] : classes) {
        if (members.size() < 2) {
            continue;
        }
        for (std::uint32_t son : members) {
            auto v1 = static_cast<std::uint32_t>(t.nodes[son].parent);
            for (std::uint32_t deep : members) {
                if (move2_applies(t, ix, v1, son, deep)) {
                    moves.push_back(make_move2(v1, son, deep));
                }
            }
            for (std::uint32_t sibling : members) {
                if (move3_applies(t, ix, v1, son, sibling)) {
                    moves.push_back(make_move3(v1, son, sibling));
                }
            }
        }
    }

    sort_moves(moves, ix);
    return moves;
}

DecoratedTree erase_vertices(const DecoratedTree& t, const std::vector<bool>& dead,
                             std::uint32_t reattach_child, std::int32_t reattach_parent) {
    DecoratedTree out;
    std::vector<std::uint32_t> remap(t.size(), 0);
    for (std::uint32_t v = 0; v < t.size(); ++v) {
        if (dead[v]) {
            continue;
        }
        remap[v] = static_cast<std::uint32_t>(out.nodes.size());
        out.nodes.push_back({t.nodes[v].type, -1, {}});
    }
    for (std::uint32_t v = 0; v < t.size(); ++v) {
        if (dead[v]) {
            continue;
        }
        std::int32_t parent = t.nodes[v].parent;
        if (v == reattach_child) {
            parent = reattach_parent;
        }
        if (parent >= 0) {
            std::uint32_t p = remap[static_cast<std::uint32_t>(parent)];
            out.nodes[remap[v]].parent = static_cast<std::int32_t>(p);
            out.nodes[p].children.push_back(remap[v]);
        }
    }
    return out;
}

} // namespace

DecoratedTree apply_move_unchecked(const DecoratedTree& t, const Move& m) {
    std::vector<bool> dead(t.size(), false);
    if (m.kind == MoveKind::M1) {
        std::uint32_t father = m.refs[0];
        dead[father] = true;
        return erase_vertices(t, dead, m.refs[1], t.nodes[father].parent);
    }
    for (std::uint32_t v : t.subtree(m.target())) {
        dead[v] = true;
    }
    return erase_vertices(t, dead, UINT32_MAX, -1);
}

std::vector<Move> applicable_moves(const DecoratedTree& t) {
    TreeIndex ix(t);
    return collect_moves(t, ix);
}

DecoratedTree apply_move(const DecoratedTree& t, const Move& m) {
    TreeIndex ix(t);
    if (!move_applies(t, ix, m)) {
        throw InapplicableMove("move does not apply to this tree");
    }
    return apply_move_unchecked(t, m);
}

namespace {

DecoratedTree reduce_impl(const DecoratedTree& t,
                          const std::function<void(const Move&, const DecoratedTree&)>* on_move) {
    DecoratedTree cur = t;
    std::size_t applied = 0;
    const std::size_t limit = t.size(); // each move removes a vertex

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (MoveKind kind : {MoveKind::M1, MoveKind::M2, MoveKind::M3}) {
            while (true) {
                TreeIndex ix(cur);
                std::vector<Move> moves = collect_moves(cur, ix);
                auto it = std::find_if(moves.begin(), moves.end(),
                                       [&](const Move& m) { return m.kind == kind; });
                if (it == moves.end()) {
                    break;
                }
                cur = apply_move_unchecked(cur, *it);
                progressed = true;
                ++applied;
                assert(applied < limit);
                if (on_move) {
                    (*on_move)(*it, cur);
                }
            }
        }
    }
    (void)applied;
    (void)limit;
    return cur;
}

} // namespace

DecoratedTree reduce(const DecoratedTree& t) {
    return reduce_impl(t, nullptr);
}

DecoratedTree reduce_traced(const DecoratedTree& t,
                            const std::function<void(const Move&, const DecoratedTree&)>& on_move) {
    return reduce_impl(t, &on_move);
}

bool is_reduced(const DecoratedTree& t) {
    return applicable_moves(t).empty();
}

} // namespace tap
