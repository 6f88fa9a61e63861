#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "tap/errors.hpp"

namespace tap::fixtures {

namespace {

TopologicalAutomaton seed_plus_loop_block(const SurfaceSignature& loop_block) {
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(loop_block));
    aut.incoming[1] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    return aut;
}

} // namespace

TopologicalAutomaton plane_v1() {
    return seed_plus_loop_block(orientable_signature(0, 2));
}

TopologicalAutomaton plane_v2() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 2)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 2)));
    aut.incoming[1] = 0;
    aut.incoming[2] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 2});
    aut.arrows.push_back({2, 1, 2});
    return aut;
}

TopologicalAutomaton cylinder() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 2)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 2)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 2)));
    aut.incoming[1] = 0;
    aut.incoming[2] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({0, 1, 2});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({2, 1, 2});
    return aut;
}

TopologicalAutomaton cantor_tree() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 3)));
    aut.incoming[1] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({1, 2, 1});
    return aut;
}

TopologicalAutomaton loch_ness() {
    return seed_plus_loop_block(orientable_signature(1, 2));
}

TopologicalAutomaton jacobs_ladder() {
    return seed_plus_loop_block(nonorientable_signature(1, 2));
}

TopologicalAutomaton sphere() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.blocks.push_back(signature_block(orientable_signature(0, 1)));
    aut.incoming[1] = 0;
    aut.arrows.push_back({0, 0, 1});
    return aut;
}

TopologicalAutomaton plane_triangulated() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(triangulation_block(disk_triangle()));
    aut.blocks.push_back(triangulation_block(annulus_ring()));
    aut.incoming[1] = 0; // outer square, the component containing vertex 0
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1}); // inner square loops back
    return aut;
}

TopologicalAutomaton cantor_triangulated() {
    TopologicalAutomaton aut;
    aut.blocks.push_back(triangulation_block(disk_triangle()));
    // Pants: a punched grid; boundary 0 is the outer rim, 1 and 2 the holes.
    Triangulation pants = make_triangulation({
        // Built by hand as a 3x5 grid of cells with cells (1,1) and (1,3)
        // removed. Vertices are r*6+c for r in 0..3, c in 0..5.
        {0, 1, 7},    {0, 7, 6},    {1, 2, 8},    {1, 8, 7},    {2, 3, 9},    {2, 9, 8},
        {3, 4, 10},   {3, 10, 9},   {4, 5, 11},   {4, 11, 10},  {6, 7, 13},   {6, 13, 12},
        {8, 9, 15},   {8, 15, 14},  {10, 11, 17}, {10, 17, 16}, {12, 13, 19}, {12, 19, 18},
        {13, 14, 20}, {13, 20, 19}, {14, 15, 21}, {14, 21, 20}, {15, 16, 22}, {15, 22, 21},
        {16, 17, 23}, {16, 23, 22},
    });
    aut.blocks.push_back(triangulation_block(std::move(pants)));
    aut.incoming[1] = 0;
    aut.arrows.push_back({0, 0, 1});
    aut.arrows.push_back({1, 1, 1});
    aut.arrows.push_back({1, 2, 1});
    return aut;
}

std::vector<std::pair<std::string, TopologicalAutomaton>> corpus() {
    return {
        {"plane_v1", plane_v1()},
        {"plane_v2", plane_v2()},
        {"cylinder", cylinder()},
        {"cantor_tree", cantor_tree()},
        {"loch_ness", loch_ness()},
        {"jacobs_ladder", jacobs_ladder()},
        {"sphere", sphere()},
        {"plane_triangulated", plane_triangulated()},
        {"cantor_triangulated", cantor_triangulated()},
    };
}

Triangulation disk_triangle() {
    return make_triangulation({{0, 1, 2}});
}

Triangulation annulus_ring() {
    return make_triangulation({
        {0, 1, 5}, {0, 5, 4}, {1, 2, 6}, {1, 6, 5},
        {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7},
    });
}

Triangulation mobius_band() {
    return make_triangulation({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
}

Triangulation projective_plane_minus_disk() {
    // Hemi-icosahedron with the face {2,3,5} removed.
    return make_triangulation({
        {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
        {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4},
    });
}

std::string fixture_path(const std::string& name) {
    return std::string(TAP_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) {
        throw Error("missing fixture " + name);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace tap::fixtures
