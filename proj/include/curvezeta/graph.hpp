#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvezeta/numeric.hpp"

namespace curvezeta {

enum class VertexKind { Exceptional, StrictF, FormOnly };

enum class Ambient { Smooth, Singular };

struct GraphVertex {
    std::string id;
    VertexKind kind = VertexKind::Exceptional;
    long N = 0;     // multiplicity of f o h along the component
    Rat nu{1};      // 1 + multiplicity of h* omega
    long genus = 0;
    std::optional<long> self_int;       // -kappa when known
    std::optional<bool> first_blowup;   // only meaningful for exceptional
    long branches = 1;                  // Galois-conjugate components represented
};

struct GraphEdge {
    int a = 0, b = 0;   // vertex indices, a < b
    long points = 1;    // number of transverse intersection points
};

// Dual graph of an embedded resolution, decorated with numerical data.
// Immutable by convention: operations return new graphs.
struct ResolutionGraph {
    std::string name;
    Ambient ambient = Ambient::Smooth;
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    int index_of(const std::string& id) const;        // -1 when absent
    int require(const std::string& id) const;         // throws UnknownVertex
    const GraphVertex& vertex(const std::string& id) const { return vertices[require(id)]; }
    std::vector<std::pair<int, long>> neighbors(int v) const; // (index, points)
    long intersection_points(int v) const;                    // total incident points
    int find_edge(int a, int b) const;                        // edge index or -1
    bool is_exceptional(int v) const { return vertices[v].kind == VertexKind::Exceptional; }
};

// -- validation ---------------------------------------------------------------

struct VertexCheck {
    std::string id;
    bool ok = true;
    std::optional<long> kappa;   // inferred from kappa*N0 = sum N_j * points
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<VertexCheck> checks;
    std::string summary() const;
    std::optional<long> kappa_of(const std::string& id) const;
};

// Checks the two numerical-data identities at every exceptional vertex with
// N >= 1 and infers kappa = -E^2; never throws, failures live in the report.
ValidationReport validate(const ResolutionGraph& g);

// -- operations ---------------------------------------------------------------

struct VertexCenter { std::string id; };
struct EdgeCenter { std::string a, b; };
using BlowupCenter = std::variant<VertexCenter, EdgeCenter>;

// Abstract blow-up of a point of the configuration: a generic point of a
// component (vertex centre, N >= 1 required) or one intersection point of an
// edge.  Numerical data follow the point/edge cases with no strict transform
// through the centre.
ResolutionGraph blowup_point(const ResolutionGraph& g, const BlowupCenter& center,
                             const std::string& new_id = "");

enum class Counting { All, FOnly };

// chi of the open part of an exceptional component: 2 - 2g - r, where r
// counts intersection points with all neighbours (All) or only those with
// N >= 1 (FOnly).
long euler_char_open(const ResolutionGraph& g, const std::string& id, Counting counting);
long euler_char_open(const ResolutionGraph& g, int v, Counting counting);

// Removes every FormOnly vertex together with its incident edges.
ResolutionGraph prune_form_vertices(const ResolutionGraph& g);

// Replaces every vertex with branches = d > 1 by d unit copies; requires each
// incident edge to carry a point count divisible by d.
ResolutionGraph expand_clusters(const ResolutionGraph& g);

// Solves the numerical data (N, then nu) of the exceptional vertices from
// required kappa values (taken from self_int) and the boundary attachments,
// using the two identities as linear systems.  Boundary vertices keep the
// data they carry (strict transforms: given N and nu = 1; form components:
// N = 0 and given nu).
ResolutionGraph complete_numerical_data(const ResolutionGraph& shape);

// Decorated-graph equality up to vertex relabelling: exceptional vertices are
// matched in order of appearance, boundary vertices as multisets per carrier.
// Cluster vertices are expanded on both sides first.
bool same_decorated_graph(const ResolutionGraph& a, const ResolutionGraph& b);

// -- file I/O -----------------------------------------------------------------

ResolutionGraph parse_graph(const std::string& text);
std::string serialize(const ResolutionGraph& g);
std::string to_dot(const ResolutionGraph& g);
ResolutionGraph load_graph_file(const std::string& path);

} // namespace curvezeta
