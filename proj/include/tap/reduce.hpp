#ifndef TAP_REDUCE_HPP
#define TAP_REDUCE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "tap/canonical.hpp"
#include "tap/tree.hpp"

namespace tap {

enum class MoveKind : std::uint8_t { M1, M2, M3 };

// A single rewrite on an admissible tree.
//
// M1 contracts a lone Theta-family child into its matching father:
//   refs = {father, child}, the father is deleted.
// M2 deletes a son subtree duplicated strictly deeper:
//   refs = {v1, son, deep duplicate}, the son subtree is deleted.
// M3 deletes one of two isomorphic sibling subtrees:
//   refs = {father, kept son, deleted son}.
struct Move {
    MoveKind kind = MoveKind::M1;
    std::array<std::uint32_t, 3> refs{0, 0, 0};
    std::uint8_t ref_count = 0;

    // The vertex removed by this move (root of the deleted subtree).
    std::uint32_t target() const {
        return kind == MoveKind::M1 ? refs[0] : refs[kind == MoveKind::M2 ? 1 : 2];
    }

    friend bool operator==(const Move&, const Move&) = default;
};

Move make_move1(std::uint32_t father, std::uint32_t child);
Move make_move2(std::uint32_t v1, std::uint32_t son, std::uint32_t deep);
Move make_move3(std::uint32_t v1, std::uint32_t kept, std::uint32_t deleted);

// All moves applicable to the tree, sorted by kind, then by the canonical
// preorder position of the deleted vertex, then by the reference tuple.
std::vector<Move> applicable_moves(const DecoratedTree& t);

// Applies one move; throws InapplicableMove when its conditions fail.
DecoratedTree apply_move(const DecoratedTree& t, const Move& m);

// As apply_move without the applicability re-check, for callers that just
// obtained the move from applicable_moves on the same tree.
DecoratedTree apply_move_unchecked(const DecoratedTree& t, const Move& m);

// Fixpoint of the three moves, with the phase discipline: exhaust M1, then
// M2, then M3, and repeat. Within a phase the move with the least deleted
// vertex in canonical preorder runs first; confluence makes the choice
// irrelevant for the result.
DecoratedTree reduce(const DecoratedTree& t);

// As reduce, invoking the callback after every applied move.
DecoratedTree reduce_traced(const DecoratedTree& t,
                            const std::function<void(const Move&, const DecoratedTree&)>& on_move);

bool is_reduced(const DecoratedTree& t);

} // namespace tap

#endif
