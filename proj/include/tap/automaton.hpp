#ifndef TAP_AUTOMATON_HPP
#define TAP_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tap/surface.hpp"

namespace tap {

using BigInt = boost::multiprecision::cpp_int;

// A building block, given either by its abstract classification invariants
// or by an explicit triangulation. Exactly one representation is present.
struct BlockSpec {
    std::optional<SurfaceSignature> signature;
    std::optional<Triangulation> triangulation;

    friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

BlockSpec signature_block(const SurfaceSignature& sig);
BlockSpec triangulation_block(Triangulation tri);

// Classification invariants of a block, computing (and validating) them
// from the triangulation when no abstract signature was given.
SurfaceSignature block_signature(const BlockSpec& block);

// A gluing instruction: the source boundary circle of block k is attached
// onto the incoming circle of block l. The target circle is always C_l.
struct Arrow {
    std::uint32_t source_block = 0;
    std::uint32_t source_boundary = 0;
    std::uint32_t target_block = 0;

    bool is_loop() const { return source_block == target_block; }

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Blocks X_0..X_p, the incoming boundary designations C_1..C_p, and the
// ordered arrow list f_1..f_q.
struct TopologicalAutomaton {
    std::vector<BlockSpec> blocks;
    std::map<std::uint32_t, std::uint32_t> incoming; // block k >= 1 -> boundary index
    std::vector<Arrow> arrows;

    std::size_t block_count() const { return blocks.size(); }

    friend bool operator==(const TopologicalAutomaton&, const TopologicalAutomaton&) = default;
};

enum class ValidationIssueKind {
    MissingArrow,       // an outgoing boundary is the domain of no arrow
    DuplicateArrow,     // an outgoing boundary is the domain of several arrows
    BackwardArrow,      // arrow with source block index above the target
    MissingIncoming,    // block k >= 1 has no incoming designation
    BoundaryOutOfRange, // boundary index outside the block, or target C_0
};

struct ValidationIssue {
    ValidationIssueKind kind;
    std::uint32_t block = 0;
    std::uint32_t boundary = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Reads the one-declaration-per-line text format. Throws ParseError with
// line and column on syntax errors, unknown block references and duplicate
// assignments; triangulated blocks are surface-validated on the spot.
TopologicalAutomaton parse(const std::string& text);

// Canonical text rendering; parsing it back yields an equal automaton.
std::string serialize(const TopologicalAutomaton& aut);

// Checks every structural invariant and reports all violations at once.
ValidationReport validate(const TopologicalAutomaton& aut);

// Throwing convenience wrapper around validate().
void validate_or_throw(const TopologicalAutomaton& aut);

// Aggregate invariants of the compact stage-s approximation M_s. Counts are
// arbitrary precision: branching automata grow them exponentially in s.
struct Development {
    std::uint64_t stage = 0;
    std::map<std::uint32_t, BigInt> copy_counts; // attached copies per block
    BigInt euler_characteristic = 0;
    BigInt boundary_count = 0;
    bool orientable = true;
    BigInt genus_or_crosscaps = 0;
};

inline constexpr std::uint64_t kDefaultStageCap = 100000;

// Runs the stage recursion: M_0 is X_0; every stage attaches one fresh copy
// of the arrow target to every open boundary circle.
Development develop(const TopologicalAutomaton& aut, std::uint64_t stage,
                    std::uint64_t stage_cap = kDefaultStageCap);

// Boundary circle count of a block (from the signature or the
// triangulation).
std::uint64_t block_boundary_count(const BlockSpec& block);

} // namespace tap

#endif
