#include "tap/decoration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tap {

DecoratedGraph build_decorated_graph(const TopologicalAutomaton& aut) {
    const std::size_t n = aut.blocks.size();
    std::vector<std::uint64_t> loops(n, 0);
    std::vector<std::vector<std::uint32_t>> out_edges(n); // non-loop arrow targets
    for (const Arrow& a : aut.arrows) {
        if (a.is_loop()) {
            ++loops[a.source_block];
        } else {
            out_edges[a.source_block].push_back(a.target_block);
        }
    }

    // Blocks reachable from X_0 through non-loop arrows.
    std::vector<bool> reachable(n, false);
    std::vector<std::uint32_t> stack{0};
    reachable[0] = true;
    while (!stack.empty()) {
        std::uint32_t k = stack.back();
        stack.pop_back();
        for (std::uint32_t l : out_edges[k]) {
            if (!reachable[l]) {
                reachable[l] = true;
                stack.push_back(l);
            }
        }
    }

    std::map<std::uint32_t, std::uint32_t> vertex_of_block;
    DecoratedGraph g;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (!reachable[k]) {
            continue;
        }
        SurfaceSignature sig = block_signature(aut.blocks[k]);
        TypeSymbol type;
        if (loops[k] == 0) {
            type = sig.orientable ? star_orient(sig.genus) : star_cross(sig.crosscaps);
        } else if (loops[k] == 1) {
            type = is_planar(sig) ? sym_o() : (sig.orientable ? sym_oh() : sym_oc());
        } else {
            type = is_planar(sig) ? sym_theta() : (sig.orientable ? sym_theta_h() : sym_theta_c());
        }
        vertex_of_block[k] = static_cast<std::uint32_t>(g.vertices.size());
        g.vertices.push_back({k, type, loops[k], {}});
    }

    for (DecoratedGraph::Vertex& v : g.vertices) {
        for (std::uint32_t target : out_edges[v.block]) {
            v.children.push_back(vertex_of_block.at(target));
        }
        std::sort(v.children.begin(), v.children.end());
    }
    return g;
}

DecoratedGraph propagate(const DecoratedGraph& g) {
    struct Flags {
        bool loop_h = false;    // descendant Oh or ThetaH
        bool loop_c = false;    // descendant Oc or ThetaC
        bool star_pos = false;  // descendant StarOrient(i >= 1)
        bool star_inf = false;  // descendant StarInf
        bool star_cross = false;
        bool star_inf_cross = false;
    };

    DecoratedGraph out = g;
    std::vector<Flags> flags(out.vertices.size());

    // Non-loop edges run toward strictly larger block indices, and vertices
    // are stored by ascending block, so descending index order is a reverse
    // topological order; descendants carry final labels when visited.
    for (std::size_t idx = out.vertices.size(); idx-- > 0;) {
        DecoratedGraph::Vertex& v = out.vertices[idx];
        Flags f;
        for (std::uint32_t child : v.children) {
            const Flags& cf = flags[child];
            f.loop_h |= cf.loop_h;
            f.loop_c |= cf.loop_c;
            f.star_pos |= cf.star_pos;
            f.star_inf |= cf.star_inf;
            f.star_cross |= cf.star_cross;
            f.star_inf_cross |= cf.star_inf_cross;
            TypeSymbol ct = out.vertices[child].type;
            switch (ct.kind) {
            case SymbolKind::Oh:
            case SymbolKind::ThetaH:
                f.loop_h = true;
                break;
            case SymbolKind::Oc:
            case SymbolKind::ThetaC:
                f.loop_c = true;
                break;
            case SymbolKind::StarOrient:
                f.star_pos |= ct.index >= 1;
                break;
            case SymbolKind::StarInf:
                f.star_inf = true;
                break;
            case SymbolKind::StarCross:
                f.star_cross = true;
                break;
            case SymbolKind::StarInfCross:
                f.star_inf_cross = true;
                break;
            default:
                break;
            }
        }
        flags[idx] = f;

        if (is_starred(v.type)) {
            // Stars only react to recurring (loop-type) structure below;
            // genus-0 stars and finite cross-cap stars deeper down are
            // handled by the merge arithmetic instead.
            if (f.loop_c) {
                v.type = star_inf_cross();
            } else if (f.loop_h &&
                       (v.type.kind == SymbolKind::StarOrient ||
                        v.type.kind == SymbolKind::StarInf)) {
                v.type = star_inf();
            }
        } else {
            bool hflag = f.loop_h || f.star_pos || f.star_inf;
            bool cflag = f.loop_c || f.star_cross || f.star_inf_cross;
            if (cflag) {
                v.type = with_variant_at_least(v.type, VariantClass::C);
            } else if (hflag) {
                v.type = with_variant_at_least(v.type, VariantClass::H);
            }
        }
    }
    return out;
}

std::string decorated_graph_dot(const DecoratedGraph& g) {
    std::ostringstream os;
    os << "digraph decorated {\n";
    for (const DecoratedGraph::Vertex& v : g.vertices) {
        os << "  b" << v.block << " [label=\"X" << v.block << " " << symbol_token(v.type)
           << "\"];\n";
    }
    for (const DecoratedGraph::Vertex& v : g.vertices) {
        for (std::uint32_t child : v.children) {
            os << "  b" << v.block << " -> b" << g.vertices[child].block << ";\n";
        }
        if (v.loop_count > 0) {
            os << "  b" << v.block << " -> b" << v.block << " [label=\"x" << v.loop_count
               << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace tap
