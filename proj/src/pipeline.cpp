#include "tap/pipeline.hpp"

namespace tap {

PipelineTrace run_pipeline(const TopologicalAutomaton& aut, const PipelineOptions& opts) {
    PipelineTrace trace;
    trace.decorated = propagate(build_decorated_graph(aut));
    trace.unfolded = unfold(trace.decorated, opts.unfold_cap);
    trace.admissible = admissibilize(trace.unfolded);
    trace.reduced = reduce(trace.admissible);
    return trace;
}

Invariants invariants_of_reduced(const DecoratedTree& reduced) {
    Invariants inv;
    TypeSymbol root = reduced.root_type();
    switch (root.kind) {
    case SymbolKind::StarOrient:
        inv.orientable = true;
        inv.genus_or_crosscaps = root.index;
        break;
    case SymbolKind::StarCross:
        inv.orientable = false;
        inv.genus_or_crosscaps = root.index;
        break;
    case SymbolKind::StarInf:
        inv.orientable = true;
        inv.infinite = true;
        break;
    default: // StarInfCross
        inv.orientable = false;
        inv.infinite = true;
        break;
    }
    inv.reduced_code = canonical_code(reduced);
    inv.compact = reduced.ordinary_count() == 0;

    // Planar surfaces have genus zero and only plain loop vertices; the
    // promotion pass already forces the latter when the root stayed *_0.
    inv.planar = root == star_orient(0);
    for (std::size_t v = 1; v < reduced.size() && inv.planar; ++v) {
        if (variant_class(reduced.nodes[v].type) != VariantClass::Plain) {
            inv.planar = false;
        }
    }
    return inv;
}

Invariants invariants(const TopologicalAutomaton& aut, const PipelineOptions& opts) {
    return invariants_of_reduced(run_pipeline(aut, opts).reduced);
}

Verdict equivalent(const TopologicalAutomaton& a1, const TopologicalAutomaton& a2,
                   const PipelineOptions& opts) {
    Verdict v;
    v.first = invariants(a1, opts);
    v.second = invariants(a2, opts);
    v.homeomorphic = v.first.reduced_code == v.second.reduced_code;
    return v;
}

std::string to_dot(const DecoratedGraph& g) {
    return decorated_graph_dot(g);
}

std::string to_dot(const DecoratedTree& t) {
    return tree_dot(t);
}

} // namespace tap
