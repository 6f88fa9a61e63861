#include "tap/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace tap {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge undirected(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string edge_name(const Edge& e) {
    std::ostringstream os;
    os << "(" << e.first << "," << e.second << ")";
    return os.str();
}

Triangle rotate_min_first(Triangle t) {
    auto it = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), it, t.end());
    return t;
}

} // namespace

Triangulation Triangulation::canonical() const {
    Triangulation out;
    out.vertices = vertices;
    out.triangles.reserve(triangles.size());
    for (const Triangle& t : triangles) {
        out.triangles.push_back(rotate_min_first(t));
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
    if (a.vertices != b.vertices) {
        return false;
    }
    return a.canonical().triangles == b.canonical().triangles;
}

Triangulation make_triangulation(std::vector<Triangle> triangles) {
    Triangulation tri;
    std::set<std::array<VertexId, 3>> seen;
    for (const Triangle& t : triangles) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw Error("triangle repeats a vertex: " +
                        edge_name({t[0], t[1]}) + " with " + std::to_string(t[2]));
        }
        std::array<VertexId, 3> key = t;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            std::ostringstream os;
            os << "duplicate triangle (" << key[0] << "," << key[1] << "," << key[2] << ")";
            throw Error(os.str());
        }
        for (VertexId v : t) {
            tri.vertices.insert(v);
        }
    }
    tri.triangles = std::move(triangles);
    return tri;
}

ValidatedSurface validate_triangulation(const Triangulation& tri) {
    if (tri.triangles.empty()) {
        throw SurfaceError(SurfaceDefect::Empty, "triangulation has no triangles");
    }

    // Edge -> incident triangle indices.
    std::map<Edge, std::vector<std::size_t>> edge_use;
    for (std::size_t i = 0; i < tri.triangles.size(); ++i) {
        const Triangle& t = tri.triangles[i];
        for (int k = 0; k < 3; ++k) {
            edge_use[undirected(t[k], t[(k + 1) % 3])].push_back(i);
        }
    }
    for (const auto& [edge, users] : edge_use) {
        if (users.size() > 2) {
            throw SurfaceError(SurfaceDefect::EdgeOveruse,
                               "edge " + edge_name(edge) + " lies in " +
                                   std::to_string(users.size()) + " triangles");
        }
    }

    // Link condition: the edges opposite to v in the triangles around v
    // must form a single simple path (boundary vertex) or cycle (interior).
    std::map<VertexId, std::vector<Edge>> links;
    for (const Triangle& t : tri.triangles) {
        links[t[0]].push_back(undirected(t[1], t[2]));
        links[t[1]].push_back(undirected(t[0], t[2]));
        links[t[2]].push_back(undirected(t[0], t[1]));
    }
    for (VertexId v : tri.vertices) {
        auto it = links.find(v);
        if (it == links.end()) {
            throw SurfaceError(SurfaceDefect::PinchedVertex,
                               "vertex " + std::to_string(v) + " lies in no triangle");
        }
        const std::vector<Edge>& link = it->second;
        std::map<VertexId, std::vector<VertexId>> adj;
        for (const Edge& e : link) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        int odd = 0;
        for (const auto& [w, nbrs] : adj) {
            if (nbrs.size() > 2) {
                throw SurfaceError(SurfaceDefect::PinchedVertex,
                                   "vertex " + std::to_string(v) + " has a non-fan link at " +
                                       std::to_string(w));
            }
            if (nbrs.size() == 1) {
                ++odd;
            }
        }
        if (odd != 0 && odd != 2) {
            throw SurfaceError(SurfaceDefect::PinchedVertex,
                               "vertex " + std::to_string(v) + " has a branching link");
        }
        // Max degree two and zero or two endpoints still allows several
        // disjoint paths or cycles; walk the link to rule that out.
        std::set<VertexId> reached;
        std::vector<VertexId> todo{adj.begin()->first};
        reached.insert(todo.back());
        while (!todo.empty()) {
            VertexId w = todo.back();
            todo.pop_back();
            for (VertexId u : adj[w]) {
                if (reached.insert(u).second) {
                    todo.push_back(u);
                }
            }
        }
        if (reached.size() != adj.size()) {
            throw SurfaceError(SurfaceDefect::PinchedVertex,
                               "vertex " + std::to_string(v) + " has a disconnected link");
        }
    }

    // Triangle adjacency across shared edges must connect everything.
    std::vector<int> component(tri.triangles.size(), -1);
    std::vector<std::size_t> stack{0};
    component[0] = 0;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        const Triangle& t = tri.triangles[i];
        for (int k = 0; k < 3; ++k) {
            for (std::size_t j : edge_use[undirected(t[k], t[(k + 1) % 3])]) {
                if (component[j] < 0) {
                    component[j] = 0;
                    stack.push_back(j);
                }
            }
        }
    }
    for (std::size_t i = 0; i < component.size(); ++i) {
        if (component[i] < 0) {
            const Triangle& t = tri.triangles[i];
            std::ostringstream os;
            os << "triangle (" << t[0] << "," << t[1] << "," << t[2]
               << ") is disconnected from the first triangle";
            throw SurfaceError(SurfaceDefect::Disconnected, os.str());
        }
    }

    // Boundary edges (single incident triangle) chain into disjoint cycles.
    std::map<VertexId, std::vector<VertexId>> boundary_adj;
    std::uint64_t boundary_edges = 0;
    for (const auto& [edge, users] : edge_use) {
        if (users.size() == 1) {
            ++boundary_edges;
            boundary_adj[edge.first].push_back(edge.second);
            boundary_adj[edge.second].push_back(edge.first);
        }
    }

    std::vector<BoundaryComponent> components;
    std::set<VertexId> seen;
    for (const auto& [start, nbrs] : boundary_adj) {
        if (seen.count(start)) {
            continue;
        }
        // Fan condition guarantees exactly two boundary neighbours here.
        BoundaryComponent comp;
        VertexId prev = start;
        VertexId cur = std::min(nbrs[0], nbrs[1]);
        comp.cycle.push_back(start);
        seen.insert(start);
        while (cur != start) {
            comp.cycle.push_back(cur);
            seen.insert(cur);
            const auto& next_nbrs = boundary_adj[cur];
            VertexId next = next_nbrs[0] == prev ? next_nbrs[1] : next_nbrs[0];
            prev = cur;
            cur = next;
        }
        components.push_back(std::move(comp));
    }
    // boundary_adj iterates in ascending vertex order, so components are
    // already discovered by ascending smallest vertex id.
    for (std::size_t i = 0; i < components.size(); ++i) {
        components[i].index = static_cast<std::uint32_t>(i);
    }

    ValidatedSurface out;
    out.tri_ = tri;
    out.boundary_ = std::move(components);
    out.vertex_count_ = tri.vertices.size();
    out.edge_count_ = edge_use.size();
    return out;
}

SurfaceSignature signature(const ValidatedSurface& surf) {
    const Triangulation& tri = surf.triangulation();

    // Propagate triangle orientations across interior edges; coherent
    // neighbours induce a shared edge in opposite directions.
    std::map<Edge, std::vector<std::size_t>> edge_use;
    for (std::size_t i = 0; i < tri.triangles.size(); ++i) {
        const Triangle& t = tri.triangles[i];
        for (int k = 0; k < 3; ++k) {
            edge_use[undirected(t[k], t[(k + 1) % 3])].push_back(i);
        }
    }
    auto direction = [&](std::size_t i, const Edge& e, bool flipped) {
        const Triangle& t = tri.triangles[i];
        for (int k = 0; k < 3; ++k) {
            VertexId a = t[k];
            VertexId b = t[(k + 1) % 3];
            if (undirected(a, b) == e) {
                bool forward = (a == e.first);
                return flipped ? !forward : forward;
            }
        }
        return false; // unreachable for incident edges
    };

    std::vector<int> flip(tri.triangles.size(), -1);
    bool orientable = true;
    std::vector<std::size_t> stack{0};
    flip[0] = 0;
    while (!stack.empty() && orientable) {
        std::size_t i = stack.back();
        stack.pop_back();
        const Triangle& t = tri.triangles[i];
        for (int k = 0; k < 3; ++k) {
            Edge e = undirected(t[k], t[(k + 1) % 3]);
            const auto& users = edge_use[e];
            if (users.size() != 2) {
                continue;
            }
            std::size_t j = users[0] == i ? users[1] : users[0];
            // Coherent neighbours traverse the shared edge in opposite
            // directions; flip j when it currently agrees with i.
            bool di = direction(i, e, flip[i] == 1);
            bool dj0 = direction(j, e, false);
            int wanted = (di == dj0) ? 1 : 0;
            if (flip[j] < 0) {
                flip[j] = wanted;
                stack.push_back(j);
            } else if (flip[j] != wanted) {
                orientable = false;
                break;
            }
        }
    }

    SurfaceSignature sig;
    sig.orientable = orientable;
    sig.boundary_count = surf.boundary().size();
    sig.euler_characteristic = static_cast<std::int64_t>(surf.vertex_count()) -
                               static_cast<std::int64_t>(surf.edge_count()) +
                               static_cast<std::int64_t>(surf.triangle_count());
    std::int64_t defect =
        2 - sig.euler_characteristic - static_cast<std::int64_t>(sig.boundary_count);
    if (orientable) {
        sig.genus = static_cast<std::uint64_t>(defect / 2);
        sig.crosscaps = 0;
    } else {
        sig.genus = 0;
        sig.crosscaps = static_cast<std::uint64_t>(defect);
    }
    return sig;
}

} // namespace tap
