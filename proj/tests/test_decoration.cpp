#include <doctest.h>

#include "support/fixtures.hpp"
#include "tap/decoration.hpp"

using namespace tap;

namespace {

// The propagated decorated graph of a fixture.
DecoratedGraph decorated(const TopologicalAutomaton& aut) {
    return propagate(build_decorated_graph(aut));
}

} // namespace

TEST_CASE("plane_v1: root *_0 and one O vertex") {
    DecoratedGraph g = build_decorated_graph(fixtures::plane_v1());
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.vertices[0].type == star_orient(0));
    CHECK(g.vertices[0].loop_count == 0);
    CHECK(g.vertices[1].type == sym_o());
    CHECK(g.vertices[1].loop_count == 1);
    CHECK(g.vertices[0].children == std::vector<std::uint32_t>{1});
    // Nothing nonplanar anywhere: propagate is the identity here.
    DecoratedGraph p = propagate(g);
    CHECK(p.vertices[0].type == star_orient(0));
    CHECK(p.vertices[1].type == sym_o());
}

TEST_CASE("two or more loops give the Theta family") {
    DecoratedGraph g = build_decorated_graph(fixtures::cantor_tree());
    CHECK(g.vertices[1].type == sym_theta());
    CHECK(g.vertices[1].loop_count == 2);
}

TEST_CASE("orientable nonplanar loop block becomes Oh, nonorientable Oc") {
    CHECK(build_decorated_graph(fixtures::loch_ness()).vertices[1].type == sym_oh());
    CHECK(build_decorated_graph(fixtures::jacobs_ladder()).vertices[1].type == sym_oc());
}

TEST_CASE("promotion: handles below a star make it *_inf") {
    DecoratedGraph g = decorated(fixtures::loch_ness());
    CHECK(g.vertices[0].type == star_inf());
}

TEST_CASE("promotion: cross-caps below a star make it *_inf^c") {
    DecoratedGraph g = decorated(fixtures::jacobs_ladder());
    CHECK(g.vertices[0].type == star_inf_cross());
}

TEST_CASE("unreachable blocks are pruned") {
    TopologicalAutomaton aut = fixtures::plane_v1();
    // A block nobody points to, feeding the existing loop target.
    aut.blocks.push_back(signature_block(orientable_signature(5, 1)));
    aut.incoming[2] = 0;
    // Its boundary 0 is the incoming one, so it has no outgoing boundary and
    // needs no arrow; make it genus 5 so a leak would change labels.
    REQUIRE(validate(aut).ok());
    DecoratedGraph g = decorated(aut);
    CHECK(g.vertices.size() == 2);
    CHECK(g.vertices[0].type == star_orient(0));
}

TEST_CASE("promotions cascade through intermediate vertices") {
    // 0: disk (star) -> 1: planar loop block (O) -> 2: genus-1 loop block (Oh).
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 3)));
    aut.blocks.push_back(signature_block(orientable_signature(1, 2)));
    aut.incoming[1] = 0;
    aut.incoming[2] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({1, 2, 2});
    aut.arrows.push_back({2, 1, 2});
    REQUIRE(validate(aut).ok());

    DecoratedGraph g = decorated(aut);
    CHECK(g.vertices[2].type == sym_oh()); // base label already h
    CHECK(g.vertices[1].type == sym_oh()); // picked up from below
    CHECK(g.vertices[0].type == star_inf());
}

TEST_CASE("a positive-genus star below a loop vertex raises its class") {
    // 0: disk -> 1: planar loop block -> 2: genus-2 block with no loop.
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 3)));
    aut.blocks.push_back(signature_block(orientable_signature(2, 1)));
    aut.incoming[1] = 0;
    aut.incoming[2] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({1, 2, 2});
    REQUIRE(validate(aut).ok());

    DecoratedGraph g = decorated(aut);
    CHECK(g.vertices[2].type == star_orient(2)); // stars ignore star descendants
    CHECK(g.vertices[1].type == sym_oh());       // the loop replicates the handles
    CHECK(g.vertices[0].type == star_inf());

    // A genus-0 star below the loop changes nothing.
    TopologicalAutomaton flat = aut;
    flat.blocks[2] = signature_block(orientable_signature(0, 1));
    DecoratedGraph h = decorated(flat);
    CHECK(h.vertices[1].type == sym_o());
    CHECK(h.vertices[0].type == star_orient(0));
}

TEST_CASE("c beats h when both recur below") {
    // 1 carries a loop; below it one handle block (Oh) and one cross-cap
    // block (Oc), each looping.
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 4)));
    aut.blocks.push_back(signature_block(orientable_signature(1, 2)));
    aut.blocks.push_back(signature_block(nonorientable_signature(1, 2)));
    aut.incoming[1] = 0;
    aut.incoming[2] = 0;
    aut.incoming[3] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({1, 2, 2});
    aut.arrows.push_back({1, 3, 3});
    aut.arrows.push_back({2, 1, 2});
    aut.arrows.push_back({3, 1, 3});
    REQUIRE(validate(aut).ok());

    DecoratedGraph g = decorated(aut);
    CHECK(g.vertices[1].type == sym_oc());
    CHECK(g.vertices[0].type == star_inf_cross());
}

TEST_CASE("propagate is idempotent on the corpus") {
    for (const auto& [name, aut] : fixtures::corpus()) {
        CAPTURE(name);
        DecoratedGraph once = propagate(build_decorated_graph(aut));
        DecoratedGraph twice = propagate(once);
        REQUIRE(once.vertices.size() == twice.vertices.size());
        for (std::size_t i = 0; i < once.vertices.size(); ++i) {
            CHECK(once.vertices[i].type == twice.vertices[i].type);
        }
    }
}

TEST_CASE("after propagate no loop vertex outclasses its ancestors") {
    // Loop-kind edges u -> v with v in class h or c force the matching
    // promotion on u; starred u becomes *_inf or *_inf^c unless it is a
    // finite nonorientable star, which the label rules leave alone.
    for (const auto& [name, aut] : fixtures::corpus()) {
        CAPTURE(name);
        DecoratedGraph g = decorated(aut);
        for (const auto& u : g.vertices) {
            for (std::uint32_t ci : u.children) {
                const auto& v = g.vertices[ci];
                if (!is_loop_kind(v.type) || variant_class(v.type) == VariantClass::Plain) {
                    continue;
                }
                if (is_loop_kind(u.type)) {
                    CHECK(variant_class(u.type) >= variant_class(v.type));
                } else if (u.type.kind != SymbolKind::StarCross) {
                    CHECK((u.type == star_inf() || u.type == star_inf_cross()));
                }
            }
        }
    }
}

TEST_CASE("planar automata use only the three planar symbols") {
    for (const auto& name : {"plane_v1", "plane_v2", "cylinder", "cantor_tree"}) {
        CAPTURE(name);
        for (const auto& [n, aut] : fixtures::corpus()) {
            if (n != name) {
                continue;
            }
            DecoratedGraph g = decorated(aut);
            for (const auto& v : g.vertices) {
                bool planar_symbol = v.type == star_orient(0) || v.type == sym_o() ||
                                     v.type == sym_theta();
                CHECK(planar_symbol);
            }
        }
    }
}

TEST_CASE("decorated graph DOT is deterministic and shows loops") {
    DecoratedGraph g = decorated(fixtures::plane_v1());
    std::string dot = decorated_graph_dot(g);
    CHECK(dot == decorated_graph_dot(g));
    CHECK(dot.find("b1 -> b1") != std::string::npos); // the self-loop
    CHECK(dot.find("digraph") != std::string::npos);
}
