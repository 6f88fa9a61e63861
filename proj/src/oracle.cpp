#include "tap/oracle.hpp"

#include <random>

#include "tap/canonical.hpp"
#include "tap/errors.hpp"
#include "tap/reduce.hpp"

namespace tap {

CBInvariant cb_invariant(const DecoratedTree& t) {
    if (t.ordinary_count() == 0) {
        throw Error("tree has no ordinary vertex; its end space is empty");
    }
    for (std::size_t v = 1; v < t.size(); ++v) {
        if (t.nodes[v].type != sym_o()) {
            throw NotLoopOnly("vertex " + std::to_string(v) + " has type " +
                              symbol_token(t.nodes[v].type) + "; the oracle handles only O");
        }
    }

    // Rank of the end that loops forever at v: leaves are isolated, every
    // level above accumulates the level below.
    std::vector<std::uint32_t> order;
    order.reserve(t.size());
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::uint32_t c : t.nodes[order[i]].children) {
            order.push_back(c);
        }
    }
    std::vector<std::uint32_t> pointrank(t.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::uint32_t v = *it;
        std::uint32_t r = 0;
        for (std::uint32_t c : t.nodes[v].children) {
            r = std::max(r, pointrank[c] + 1);
        }
        pointrank[v] = r;
    }

    CBInvariant inv;
    inv.rank = 0;
    inv.multiplicity = 0;
    for (std::uint32_t c : t.nodes[0].children) {
        if (pointrank[c] > inv.rank) {
            inv.rank = pointrank[c];
            inv.multiplicity = 1;
        } else if (pointrank[c] == inv.rank) {
            ++inv.multiplicity;
        }
    }
    return inv;
}

TopologicalAutomaton gen_appendix(const BitVector& bits) {
    // One two-loop hub per set bit, nested, with the rank-k chain for bit
    // a_k hanging at a hub above every shorter chain. Longer chains first:
    // were a shorter chain attached above a longer one, it would duplicate
    // a suffix of the longer chain strictly deeper and fall to a move.
    std::vector<std::uint32_t> lengths; // chain lengths, descending
    for (std::size_t k = bits.size(); k-- > 0;) {
        if (bits[k]) {
            lengths.push_back(static_cast<std::uint32_t>(k) + 1);
        }
    }

    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.arrows.push_back({0, 0, 1});

    if (lengths.empty()) {
        // Just the Cantor set of ends: a single hub, no chains.
        aut.blocks.push_back(signature_block(orientable_signature(0, 3)));
        aut.incoming[1] = 0;
        aut.arrows.push_back({1, 1, 1});
        aut.arrows.push_back({1, 2, 1});
        return aut;
    }

    std::uint32_t next_block = 1;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        bool last_hub = i + 1 == lengths.size();
        std::uint32_t hub = next_block++;
        // Boundaries: 0 incoming, 1 and 2 loop back, 3 feeds the chain,
        // 4 (when present) feeds the next hub.
        aut.blocks.push_back(signature_block(orientable_signature(0, last_hub ? 4 : 5)));
        aut.incoming[hub] = 0;
        aut.arrows.push_back({hub, 1, hub});
        aut.arrows.push_back({hub, 2, hub});

        std::uint32_t chain_head = next_block;
        aut.arrows.push_back({hub, 3, chain_head});
        for (std::uint32_t j = 0; j < lengths[i]; ++j) {
            bool last = j + 1 == lengths[i];
            std::uint32_t block = next_block++;
            aut.blocks.push_back(signature_block(orientable_signature(0, last ? 2 : 3)));
            aut.incoming[block] = 0;
            aut.arrows.push_back({block, 1, block});
            if (!last) {
                aut.arrows.push_back({block, 2, block + 1});
            }
        }
        if (!last_hub) {
            aut.arrows.push_back({hub, 4, next_block});
        }
    }
    return aut;
}

bool confluence_check(const DecoratedTree& t, std::uint32_t trials, std::uint64_t seed) {
    const CanonicalCode reference = canonical_code(reduce(t));
    std::mt19937_64 rng(seed);
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        DecoratedTree cur = t;
        while (true) {
            std::vector<Move> moves = applicable_moves(cur);
            if (moves.empty()) {
                break;
            }
            cur = apply_move_unchecked(cur, moves[rng() % moves.size()]);
        }
        if (canonical_code(cur) != reference) {
            return false;
        }
    }
    return true;
}

} // namespace tap
