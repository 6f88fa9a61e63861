#ifndef TAP_PIPELINE_HPP
#define TAP_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tap/automaton.hpp"
#include "tap/canonical.hpp"
#include "tap/decoration.hpp"
#include "tap/reduce.hpp"
#include "tap/tree.hpp"

namespace tap {

struct PipelineOptions {
    std::uint64_t unfold_cap = kDefaultUnfoldCap;
};

// Every intermediate stage of one classification run, for reporting and
// DOT export.
struct PipelineTrace {
    DecoratedGraph decorated;
    DecoratedTree unfolded;
    DecoratedTree admissible;
    DecoratedTree reduced;
};

PipelineTrace run_pipeline(const TopologicalAutomaton& aut, const PipelineOptions& opts = {});

// Classification invariants of M(X), read off the reduced tree.
struct Invariants {
    bool orientable = true;
    bool infinite = false;
    std::uint64_t genus_or_crosscaps = 0; // meaningful iff not infinite
    CanonicalCode reduced_code;
    bool planar = false;
    bool compact = false;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const TopologicalAutomaton& aut, const PipelineOptions& opts = {});

// Extracts the invariants from an already reduced tree.
Invariants invariants_of_reduced(const DecoratedTree& reduced);

struct Verdict {
    bool homeomorphic = false;
    Invariants first;
    Invariants second;
};

// The full decision procedure: two automata generate homeomorphic surfaces
// exactly when their reduced trees have equal canonical codes.
Verdict equivalent(const TopologicalAutomaton& a1, const TopologicalAutomaton& a2,
                   const PipelineOptions& opts = {});

// DOT renderings of the pipeline stages.
std::string to_dot(const DecoratedGraph& g);
std::string to_dot(const DecoratedTree& t);

} // namespace tap

#endif
