#ifndef TAP_SURFACE_HPP
#define TAP_SURFACE_HPP

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "tap/errors.hpp"

namespace tap {

using VertexId = std::uint32_t;
using Triangle = std::array<VertexId, 3>;

// A simplicial surface candidate: vertex set plus ordered triangles.
// The vertex order inside a triangle fixes its orientation; cyclic
// rotations are the same orientation, swaps reverse it.
struct Triangulation {
    std::set<VertexId> vertices;
    std::vector<Triangle> triangles;

    // Triangles rotated so the smallest vertex comes first, then sorted.
    // Rotation is an even permutation, so orientations are untouched.
    Triangulation canonical() const;

    friend bool operator==(const Triangulation& a, const Triangulation& b);
};

// Convenience constructor that derives the vertex set from the triangles
// and checks the type invariants (distinct vertices per triangle, no two
// triangles with the same vertex set). Throws Error on violation.
Triangulation make_triangulation(std::vector<Triangle> triangles);

// Classification invariants of a compact connected surface-with-boundary.
struct SurfaceSignature {
    bool orientable = true;
    std::uint64_t genus = 0;     // meaningful iff orientable
    std::uint64_t crosscaps = 0; // meaningful iff nonorientable, then >= 1
    std::uint64_t boundary_count = 0;
    std::int64_t euler_characteristic = 2;

    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

constexpr SurfaceSignature orientable_signature(std::uint64_t genus, std::uint64_t boundaries) {
    return {true, genus, 0, boundaries,
            2 - 2 * static_cast<std::int64_t>(genus) - static_cast<std::int64_t>(boundaries)};
}

constexpr SurfaceSignature nonorientable_signature(std::uint64_t crosscaps,
                                                   std::uint64_t boundaries) {
    return {false, 0, crosscaps, boundaries,
            2 - static_cast<std::int64_t>(crosscaps) - static_cast<std::int64_t>(boundaries)};
}

inline bool is_planar(const SurfaceSignature& sig) {
    return sig.orientable && sig.genus == 0;
}

// One boundary circle. The cycle starts at its smallest vertex and runs
// toward the smaller of that vertex's two boundary neighbours; components
// are indexed by ascending smallest contained vertex id.
struct BoundaryComponent {
    std::vector<VertexId> cycle;
    std::uint32_t index = 0;
};

// A triangulation that passed the manifold checks, with the derived
// boundary structure attached.
class ValidatedSurface {
public:
    const Triangulation& triangulation() const { return tri_; }
    const std::vector<BoundaryComponent>& boundary() const { return boundary_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t triangle_count() const { return tri_.triangles.size(); }

private:
    friend ValidatedSurface validate_triangulation(const Triangulation& tri);

    Triangulation tri_;
    std::vector<BoundaryComponent> boundary_;
    std::uint64_t vertex_count_ = 0;
    std::uint64_t edge_count_ = 0;
};

// Checks that the complex is a connected compact 2-manifold-with-boundary:
// at least one triangle, every edge in one or two triangles, every vertex
// link a single fan, triangle adjacency connected. Throws SurfaceError
// naming the offending simplex otherwise.
ValidatedSurface validate_triangulation(const Triangulation& tri);

// Orientability, genus or cross-caps, boundary count and Euler
// characteristic of a validated surface.
SurfaceSignature signature(const ValidatedSurface& surf);

} // namespace tap

#endif
