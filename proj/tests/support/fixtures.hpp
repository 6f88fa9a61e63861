#ifndef TAP_TESTS_FIXTURES_HPP
#define TAP_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "tap/automaton.hpp"

namespace tap::fixtures {

// Named automata used across the test suites. Each has a matching .tap
// document under tests/fixtures/.
TopologicalAutomaton plane_v1();
TopologicalAutomaton plane_v2();
TopologicalAutomaton cylinder();
TopologicalAutomaton cantor_tree();
TopologicalAutomaton loch_ness();
TopologicalAutomaton jacobs_ladder();
TopologicalAutomaton sphere();
TopologicalAutomaton plane_triangulated();
TopologicalAutomaton cantor_triangulated();

std::vector<std::pair<std::string, TopologicalAutomaton>> corpus();

// Hand-checked triangulations.
Triangulation disk_triangle();
Triangulation annulus_ring();
Triangulation mobius_band();
Triangulation projective_plane_minus_disk();

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);

} // namespace tap::fixtures

#endif
