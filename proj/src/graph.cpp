#include "curvezeta/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "curvezeta/errors.hpp"
#include "curvezeta/linalg.hpp"

namespace curvezeta {

int ResolutionGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int ResolutionGraph::require(const std::string& id) const {
    int i = index_of(id);
    if (i < 0) throw UnknownVertex("unknown vertex '" + id + "'");
    return i;
}

std::vector<std::pair<int, long>> ResolutionGraph::neighbors(int v) const {
    std::vector<std::pair<int, long>> out;
    for (const GraphEdge& e : edges) {
        if (e.a == v) out.emplace_back(e.b, e.points);
        if (e.b == v) out.emplace_back(e.a, e.points);
    }
    return out;
}

long ResolutionGraph::intersection_points(int v) const {
    long r = 0;
    for (const auto& [w, pts] : neighbors(v)) r += pts;
    return r;
}

int ResolutionGraph::find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].a == a && edges[i].b == b) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const VertexCheck& c : checks) {
        os << c.id << ": " << (c.ok ? "ok" : "FAIL");
        if (c.kappa) os << " kappa=" << *c.kappa;
        if (!c.message.empty()) os << " (" << c.message << ")";
        os << "\n";
    }
    return os.str();
}

std::optional<long> ValidationReport::kappa_of(const std::string& id) const {
    for (const VertexCheck& c : checks)
        if (c.id == id) return c.kappa;
    return std::nullopt;
}

ValidationReport validate(const ResolutionGraph& g) {
    ValidationReport rep;
    // the exceptional locus of a germ resolution is connected
    {
        std::vector<int> exc;
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (g.is_exceptional(static_cast<int>(i))) exc.push_back(static_cast<int>(i));
        if (exc.size() > 1) {
            std::set<int> seen{exc[0]};
            std::vector<int> stack{exc[0]};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [w, pts] : g.neighbors(v))
                    if (g.is_exceptional(w) && seen.insert(w).second) stack.push_back(w);
            }
            if (seen.size() != exc.size()) {
                rep.ok = false;
                VertexCheck c;
                c.id = "(graph)";
                c.ok = false;
                c.message = "exceptional subgraph is disconnected";
                rep.checks.push_back(c);
            }
        }
    }
    for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
        const GraphVertex& v = g.vertices[vi];
        if (v.kind != VertexKind::Exceptional) continue;
        VertexCheck check;
        check.id = v.id;
        if (v.N < 1) {
            check.ok = false;
            check.message = "exceptional vertex with N < 1";
            rep.checks.push_back(check);
            rep.ok = false;
            continue;
        }
        // identity (1): kappa * N0 = sum over intersection points of N_j
        Int sumN = 0;
        Rat sum_nu_m1(0);
        long r = 0;
        for (const auto& [w, pts] : g.neighbors(static_cast<int>(vi))) {
            const GraphVertex& nb = g.vertices[w];
            sumN += Int(pts) * Int(nb.N);
            sum_nu_m1 += Rat(pts) * (nb.nu - 1);
            r += pts;
        }
        if (sumN % Int(v.N) != 0 || sumN <= 0) {
            check.ok = false;
            check.message = "identity (1): kappa = " + Rat(Rat(sumN) / Rat(v.N)).get_str() +
                            " is not a positive integer";
        } else {
            long kappa = to_long(Int(sumN / Int(v.N)));
            check.kappa = kappa;
            if (v.self_int && *v.self_int != -kappa) {
                check.ok = false;
                check.message = "stored self-intersection " + std::to_string(*v.self_int) +
                                " != -" + std::to_string(kappa);
            }
            // identity (2): kappa * nu0 = sum (nu_j - 1) + 2 - 2 g0
            Rat lhs = Rat(kappa) * v.nu;
            Rat rhs = sum_nu_m1 + 2 - 2 * Rat(v.genus);
            if (lhs != rhs) {
                check.ok = false;
                check.message = "identity (2): " + lhs.get_str() + " != " + rhs.get_str();
            }
        }
        (void)r;
        if (!check.ok) rep.ok = false;
        rep.checks.push_back(check);
    }
    return rep;
}

// ---------------------------------------------------------------------------

ResolutionGraph blowup_point(const ResolutionGraph& g, const BlowupCenter& center,
                             const std::string& new_id) {
    ResolutionGraph out = g;
    GraphVertex nv;
    nv.kind = VertexKind::Exceptional;
    nv.genus = 0;
    nv.first_blowup = false;
    nv.self_int = -1;
    std::string id = new_id;
    if (id.empty()) {
        int k = 1;
        while (g.index_of("B" + std::to_string(k)) >= 0) ++k;
        id = "B" + std::to_string(k);
    } else if (g.index_of(id) >= 0) {
        throw DuplicateId("vertex '" + id + "' already exists");
    }
    nv.id = id;

    auto bump_selfint = [&out](int v) {
        if (out.vertices[v].self_int) *out.vertices[v].self_int -= 1;
    };

    if (const auto* vc = std::get_if<VertexCenter>(&center)) {
        int v = out.require(vc->id);
        const GraphVertex& c = out.vertices[v];
        // a generic point of a strict-transform or form component does not lie
        // over the origin; only exceptional components are contracted to it
        if (c.kind != VertexKind::Exceptional)
            throw NotExceptional("vertex blow-up centres must be exceptional; points of '" +
                                 c.id + "' other than the marked intersections are not over the origin");
        if (c.branches != 1) throw Error("cannot blow up a point of a conjugate cluster");
        nv.N = c.N;
        nv.nu = c.nu + 1;
        bump_selfint(v);
        out.vertices.push_back(nv);
        int ni = static_cast<int>(out.vertices.size()) - 1;
        out.edges.push_back({std::min(v, ni), std::max(v, ni), 1});
        return out;
    }
    const auto& ec = std::get<EdgeCenter>(center);
    int a = out.require(ec.a), b = out.require(ec.b);
    int ei = out.find_edge(a, b);
    if (ei < 0) throw UnknownEdge("no edge between '" + ec.a + "' and '" + ec.b + "'");
    const GraphVertex& va = out.vertices[a];
    const GraphVertex& vb = out.vertices[b];
    if (va.branches != 1 || vb.branches != 1)
        throw Error("cannot blow up an intersection point of a conjugate cluster");
    if (va.N + vb.N < 1) throw Error("edge centre with N_i + N_j = 0");
    nv.N = va.N + vb.N;
    nv.nu = va.nu + vb.nu;
    out.edges[ei].points -= 1;
    if (out.edges[ei].points == 0) out.edges.erase(out.edges.begin() + ei);
    bump_selfint(a);
    bump_selfint(b);
    out.vertices.push_back(nv);
    int ni = static_cast<int>(out.vertices.size()) - 1;
    out.edges.push_back({std::min(a, ni), std::max(a, ni), 1});
    out.edges.push_back({std::min(b, ni), std::max(b, ni), 1});
    return out;
}

long euler_char_open(const ResolutionGraph& g, int v, Counting counting) {
    const GraphVertex& vert = g.vertices[v];
    if (vert.kind != VertexKind::Exceptional)
        throw NotExceptional("euler_char_open expects an exceptional vertex");
    long r = 0;
    for (const auto& [w, pts] : g.neighbors(v))
        if (counting == Counting::All || g.vertices[w].N >= 1) r += pts;
    return 2 - 2 * vert.genus - r;
}

long euler_char_open(const ResolutionGraph& g, const std::string& id, Counting counting) {
    return euler_char_open(g, g.require(id), counting);
}

ResolutionGraph prune_form_vertices(const ResolutionGraph& g) {
    ResolutionGraph out;
    out.name = g.name;
    out.ambient = g.ambient;
    std::vector<int> remap(g.vertices.size(), -1);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].kind == VertexKind::FormOnly) continue;
        remap[i] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(g.vertices[i]);
    }
    for (const GraphEdge& e : g.edges) {
        if (remap[e.a] < 0 || remap[e.b] < 0) continue;
        int a = remap[e.a], b = remap[e.b];
        out.edges.push_back({std::min(a, b), std::max(a, b), e.points});
    }
    return out;
}

ResolutionGraph expand_clusters(const ResolutionGraph& g) {
    ResolutionGraph out;
    out.name = g.name;
    out.ambient = g.ambient;
    std::vector<std::vector<int>> copies(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const GraphVertex& v = g.vertices[i];
        for (long c = 0; c < v.branches; ++c) {
            GraphVertex nv = v;
            nv.branches = 1;
            if (v.branches > 1) nv.id = v.id + "." + std::to_string(c + 1);
            copies[i].push_back(static_cast<int>(out.vertices.size()));
            out.vertices.push_back(nv);
        }
    }
    for (const GraphEdge& e : g.edges) {
        long da = g.vertices[e.a].branches, db = g.vertices[e.b].branches;
        if (da == 1 && db == 1) {
            int a = copies[e.a][0], b = copies[e.b][0];
            out.edges.push_back({std::min(a, b), std::max(a, b), e.points});
            continue;
        }
        if (da > 1 && db > 1) throw Error("edge between two cluster vertices is not expandable");
        long d = std::max(da, db);
        if (e.points % d != 0)
            throw Error("cluster edge with point count not divisible by the branch count");
        long per = e.points / d;
        for (long c = 0; c < d; ++c) {
            int a = da > 1 ? copies[e.a][c] : copies[e.a][0];
            int b = db > 1 ? copies[e.b][c] : copies[e.b][0];
            out.edges.push_back({std::min(a, b), std::max(a, b), per});
        }
    }
    return out;
}

ResolutionGraph complete_numerical_data(const ResolutionGraph& shape) {
    ResolutionGraph out = shape;
    std::vector<int> exc;
    std::map<int, int> pos;
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        if (out.vertices[i].kind == VertexKind::Exceptional) {
            pos[static_cast<int>(i)] = static_cast<int>(exc.size());
            exc.push_back(static_cast<int>(i));
        }
    std::size_t n = exc.size();
    if (n == 0) return out;
    Mat m(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> rhsN(n, Rat(0)), rhsNu(n, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        int vi = exc[k];
        const GraphVertex& v = out.vertices[vi];
        if (!v.self_int) throw Error("complete_numerical_data: vertex '" + v.id + "' has no self-intersection");
        Rat kappa(-*v.self_int);
        m[k][k] = kappa;
        rhsNu[k] = Rat(2) - 2 * Rat(v.genus);
        for (const auto& [w, pts] : out.neighbors(vi)) {
            const GraphVertex& nb = out.vertices[w];
            if (nb.kind == VertexKind::Exceptional) {
                m[k][static_cast<std::size_t>(pos[w])] -= Rat(pts);
                rhsNu[k] -= Rat(pts); // the -1 in (nu_j - 1)
            } else {
                rhsN[k] += Rat(pts) * Rat(nb.N);
                rhsNu[k] += Rat(pts) * (nb.nu - 1);
            }
        }
    }
    std::vector<Rat> N = exact_solve(m, rhsN);
    std::vector<Rat> nu = exact_solve(m, rhsNu);
    for (std::size_t k = 0; k < n; ++k) {
        if (!rat_is_int(N[k]) || N[k] < 1)
            throw NonIntegralN("solved N for '" + out.vertices[exc[k]].id + "' is " + N[k].get_str());
        out.vertices[exc[k]].N = to_long(rat_num(N[k]));
        out.vertices[exc[k]].nu = nu[k];
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// decorations that must agree under any isomorphism
std::tuple<int, long, Rat, long, bool> vertex_label(const GraphVertex& v) {
    return {static_cast<int>(v.kind), v.N, v.nu, v.genus, v.first_blowup.value_or(false)};
}

bool match_rec(const ResolutionGraph& a, const ResolutionGraph& b, std::vector<int>& assign,
               std::size_t next, const std::vector<std::vector<int>>& candidates) {
    if (next == assign.size()) return true;
    for (int cand : candidates[next]) {
        bool used = false;
        for (std::size_t i = 0; i < next; ++i)
            if (assign[i] == cand) used = true;
        if (used) continue;
        // edges towards already-assigned vertices must agree
        bool ok = true;
        for (std::size_t i = 0; i < next && ok; ++i) {
            int ea = a.find_edge(static_cast<int>(next), static_cast<int>(i));
            int eb = b.find_edge(cand, assign[i]);
            if ((ea < 0) != (eb < 0)) ok = false;
            else if (ea >= 0 && a.edges[ea].points != b.edges[eb].points) ok = false;
        }
        if (!ok) continue;
        assign[next] = cand;
        if (match_rec(a, b, assign, next + 1, candidates)) return true;
        assign[next] = -1;
    }
    return false;
}

} // namespace

bool same_decorated_graph(const ResolutionGraph& ga, const ResolutionGraph& gb) {
    ResolutionGraph a = expand_clusters(ga), b = expand_clusters(gb);
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    std::vector<std::vector<int>> candidates(a.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        for (std::size_t j = 0; j < b.vertices.size(); ++j)
            if (vertex_label(a.vertices[i]) == vertex_label(b.vertices[j]))
                candidates[i].push_back(static_cast<int>(j));
        if (candidates[i].empty()) return false;
    }
    std::vector<int> assign(a.vertices.size(), -1);
    return match_rec(a, b, assign, 0, candidates);
}

// ---------------------------------------------------------------------------
// file format

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

ResolutionGraph parse_graph(const std::string& text) {
    ResolutionGraph g;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_graph = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "graph") {
            if (tok.size() != 2) throw ParseError("graph line needs a name", lineno);
            g.name = tok[1];
            saw_graph = true;
        } else if (tok[0] == "ambient") {
            if (tok.size() != 2 || (tok[1] != "smooth" && tok[1] != "singular"))
                throw ParseError("ambient must be smooth or singular", lineno);
            g.ambient = tok[1] == "singular" ? Ambient::Singular : Ambient::Smooth;
        } else if (tok[0] == "origin") {
            // implicit for germ graphs; accepted for completeness
        } else if (tok[0] == "vertex") {
            if (tok.size() < 2) throw ParseError("vertex line needs an id", lineno);
            GraphVertex v;
            v.id = tok[1];
            if (g.index_of(v.id) >= 0) throw DuplicateId("duplicate vertex '" + v.id + "'");
            bool sawN = false, sawNu = false, sawKind = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok[i] + "'", lineno);
                std::string key = tok[i].substr(0, eq), val = tok[i].substr(eq + 1);
                if (key == "kind") {
                    sawKind = true;
                    if (val == "exc")
                        v.kind = VertexKind::Exceptional;
                    else if (val == "strict")
                        v.kind = VertexKind::StrictF;
                    else if (val == "form")
                        v.kind = VertexKind::FormOnly;
                    else
                        throw ParseError("bad kind '" + val + "'", lineno);
                } else if (key == "N") {
                    v.N = std::stol(val);
                    sawN = true;
                } else if (key == "nu") {
                    v.nu = rat_parse(val);
                    sawNu = true;
                } else if (key == "genus") {
                    v.genus = std::stol(val);
                } else if (key == "selfint") {
                    v.self_int = std::stol(val);
                } else if (key == "first") {
                    v.first_blowup = val == "true";
                } else if (key == "branches") {
                    v.branches = std::stol(val);
                    if (v.branches < 1) throw ParseError("branches must be >= 1", lineno);
                } else {
                    throw ParseError("unknown vertex attribute '" + key + "'", lineno);
                }
            }
            if (!sawKind || !sawN || !sawNu)
                throw ParseError("vertex needs kind=, N= and nu=", lineno);
            if (v.kind == VertexKind::Exceptional && v.branches != 1)
                throw ParseError("exceptional vertices cannot be conjugate clusters", lineno);
            if (v.kind == VertexKind::FormOnly && v.N != 0)
                throw ParseError("form vertex must have N = 0", lineno);
            if (v.kind != VertexKind::FormOnly && v.N < 1)
                throw ParseError("exceptional/strict vertex must have N >= 1", lineno);
            g.vertices.push_back(v);
        } else if (tok[0] == "edge") {
            if (tok.size() < 3) throw ParseError("edge line needs two vertex ids", lineno);
            int a = g.index_of(tok[1]), b = g.index_of(tok[2]);
            if (a < 0 || b < 0)
                throw DanglingEdge("edge references unknown vertex on line " + std::to_string(lineno));
            if (a == b) throw ParseError("self-loops are not allowed", lineno);
            long pts = 1;
            for (std::size_t i = 3; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos || tok[i].substr(0, eq) != "points")
                    throw ParseError("unknown edge attribute '" + tok[i] + "'", lineno);
                pts = std::stol(tok[i].substr(eq + 1));
                if (pts < 1) throw ParseError("points must be >= 1", lineno);
            }
            if (g.find_edge(a, b) >= 0) throw ParseError("duplicate edge", lineno);
            g.edges.push_back({std::min(a, b), std::max(a, b), pts});
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    if (!saw_graph) throw ParseError("missing 'graph <name>' line", 0);
    if (g.vertices.empty()) throw ParseError("graph has no vertices", 0);
    return g;
}

std::string serialize(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph " << (g.name.empty() ? "unnamed" : g.name) << "\n";
    if (g.ambient == Ambient::Singular) os << "ambient singular\n";
    for (const GraphVertex& v : g.vertices) {
        os << "vertex " << v.id << " kind=";
        switch (v.kind) {
            case VertexKind::Exceptional: os << "exc"; break;
            case VertexKind::StrictF: os << "strict"; break;
            case VertexKind::FormOnly: os << "form"; break;
        }
        os << " N=" << v.N << " nu=" << rat_str(v.nu);
        if (v.genus != 0) os << " genus=" << v.genus;
        if (v.self_int) os << " selfint=" << *v.self_int;
        if (v.first_blowup) os << " first=" << (*v.first_blowup ? "true" : "false");
        if (v.branches != 1) os << " branches=" << v.branches;
        os << "\n";
    }
    std::vector<GraphEdge> es = g.edges;
    std::sort(es.begin(), es.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (const GraphEdge& e : es) {
        os << "edge " << g.vertices[e.a].id << " " << g.vertices[e.b].id;
        if (e.points != 1) os << " points=" << e.points;
        os << "\n";
    }
    return os.str();
}

std::string to_dot(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph \"" << g.name << "\" {\n";
    for (const GraphVertex& v : g.vertices) {
        os << "  \"" << v.id << "\" [label=\"" << v.id << "\\n(" << v.N << ","
           << rat_str(v.nu) << ")\"";
        switch (v.kind) {
            case VertexKind::Exceptional: os << ", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
            case VertexKind::StrictF: os << ", shape=doublecircle"; break;
            case VertexKind::FormOnly: os << ", shape=circle, style=dashed"; break;
        }
        if (v.branches > 1) os << ", xlabel=\"x" << v.branches << "\"";
        os << "];\n";
    }
    for (const GraphEdge& e : g.edges) {
        os << "  \"" << g.vertices[e.a].id << "\" -- \"" << g.vertices[e.b].id << "\"";
        bool dashed = g.vertices[e.a].kind == VertexKind::FormOnly ||
                      g.vertices[e.b].kind == VertexKind::FormOnly;
        os << " [";
        if (dashed) os << "style=dashed, ";
        os << "label=\"" << (e.points != 1 ? std::to_string(e.points) : "") << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

ResolutionGraph load_graph_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw Error("cannot open graph file '" + path + "'");
    std::string text;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
    std::fclose(f);
    ResolutionGraph g = parse_graph(text);
    if (g.name.empty()) g.name = path;
    return g;
}

} // namespace curvezeta
