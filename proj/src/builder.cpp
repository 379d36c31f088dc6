#include "curvezeta/builder.hpp"

#include <numeric>

#include "curvezeta/contfrac.hpp"
#include "curvezeta/errors.hpp"

namespace curvezeta {

BranchPlan kappa_assignment(const std::vector<long>& cf) {
    BranchPlan plan;
    plan.cf = cf;
    long w = static_cast<long>(cf.size()) - 1;
    plan.s.resize(cf.size());
    std::partial_sum(cf.begin(), cf.end(), plan.s.begin());
    long n = plan.s.back(); // s_w
    plan.kappa.assign(n, 2);
    for (long k = 0; k + 2 <= w; ++k) plan.kappa[plan.s[k] - 1] = cf[k + 1] + 2;
    if (w >= 1) plan.kappa[plan.s[w - 1] - 1] = cf[w] + 1;
    plan.kappa[n - 1] = 1;
    plan.polar.assign(n, 0);
    for (long j = 1; 2 * j <= w; ++j) plan.polar[plan.s[2 * j - 1] - 1] = cf[2 * j];
    return plan;
}

namespace {

struct Sim {
    std::vector<long> kappa;                      // per created vertex
    std::vector<std::tuple<int, int, long>> edges; // (a, b, points), 1-based
    int strict_at = 0;

    void drop_edge(int a, int b) {
        for (auto it = edges.begin(); it != edges.end(); ++it)
            if ((std::get<0>(*it) == a && std::get<1>(*it) == b) ||
                (std::get<0>(*it) == b && std::get<1>(*it) == a)) {
                edges.erase(it);
                return;
            }
        throw Error("builder: expected edge not present");
    }

    int blow(int compU, int compV) {
        kappa.push_back(1);
        int id = static_cast<int>(kappa.size());
        if (compU && compV) drop_edge(compU, compV);
        if (compU) {
            kappa[compU - 1] += 1;
            edges.emplace_back(compU, id, 1);
        }
        if (compV) {
            kappa[compV - 1] += 1;
            edges.emplace_back(compV, id, 1);
        }
        return id;
    }
};

// Minimal-resolution simulation for v^B - u^A at the origin; returns the
// state-machine result through the blow-up cases.
Sim simulate(long a, long b) {
    Sim sim;
    long A = a, B = b;
    int compU = 0, compV = 0;
    while (true) {
        if (A == 1 && B == 1) {
            if (compU && compV) {
                sim.strict_at = sim.blow(compU, compV);
            } else {
                sim.strict_at = compU ? compU : compV;
                if (!sim.strict_at) throw Error("builder: smooth input, nothing to build");
            }
            return sim;
        }
        if (B == 1 && !compV) {
            // v = u^A transverse to the only present component
            sim.strict_at = compU;
            if (!sim.strict_at) throw Error("builder: smooth input, nothing to build");
            return sim;
        }
        int created = sim.blow(compU, compV);
        long A2 = A - B;
        if (A2 >= B) {
            A = A2;          // B unchanged
            compU = created; // compV unchanged
        } else {
            A = B;
            B = A2;
            compU = compV;
            compV = created;
        }
    }
}

} // namespace

ResolutionGraph build_Bab_shape(long a, long b) {
    if (a <= b || b < 2) throw Error("build_Bab expects a > b >= 2");
    if (std::gcd(a, b) != 1) throw NonCoprime("gcd(a, b) != 1");
    std::vector<long> cf = even_normalize(continued_fraction(a, b));
    BranchPlan plan = kappa_assignment(cf);
    Sim sim = simulate(a, b);
    long n = static_cast<long>(sim.kappa.size());
    if (n != plan.s.back())
        throw Error("builder: simulation size " + std::to_string(n) +
                    " != continued-fraction size " + std::to_string(plan.s.back()));
    for (long i = 0; i < n; ++i)
        if (sim.kappa[i] != plan.kappa[i])
            throw Error("builder: kappa mismatch at vertex " + std::to_string(i + 1));
    if (sim.strict_at != n) throw Error("builder: strict transform not at the last vertex");

    ResolutionGraph g;
    g.name = "B(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (long i = 0; i < n; ++i) {
        GraphVertex v;
        v.id = "E" + std::to_string(i + 1);
        v.kind = VertexKind::Exceptional;
        v.self_int = -plan.kappa[i];
        v.first_blowup = i == 0;
        v.N = 1; // placeholder until complete_numerical_data
        g.vertices.push_back(v);
    }
    for (const auto& [x, y, pts] : sim.edges)
        g.edges.push_back({std::min(x, y) - 1, std::max(x, y) - 1, pts});
    // strict transform of the curve itself
    GraphVertex strict;
    strict.id = "O";
    strict.kind = VertexKind::StrictF;
    strict.N = 1;
    strict.nu = 1;
    g.vertices.push_back(strict);
    g.edges.push_back({static_cast<int>(n) - 1, static_cast<int>(g.vertices.size()) - 1, 1});
    // polar circles, numerical data (0, 2)
    int wi = 0;
    for (long i = 0; i < n; ++i)
        for (long c = 0; c < plan.polar[i]; ++c) {
            GraphVertex w;
            w.id = "P" + std::to_string(++wi);
            w.kind = VertexKind::FormOnly;
            w.N = 0;
            w.nu = 2;
            g.vertices.push_back(w);
            int widx = static_cast<int>(g.vertices.size()) - 1;
            g.edges.push_back({static_cast<int>(i), widx, 1});
        }
    return g;
}

ResolutionGraph build_Bab(long a, long b) {
    return complete_numerical_data(build_Bab_shape(a, b));
}

ResolutionGraph build_Bab_f_part(long a, long b) {
    return complete_numerical_data(prune_form_vertices(build_Bab_shape(a, b)));
}

ResolutionGraph assemble_zariski_pairs(const ZariskiSpec& spec) {
    if (spec.pairs.empty()) throw Error("empty Zariski pair list");
    for (const auto& [a, b] : spec.pairs) {
        if (a <= b || b < 2) throw Error("Zariski pairs need a > b >= 2");
        if (std::gcd(a, b) != 1)
            throw NonCoprime("gcd(" + std::to_string(a) + "," + std::to_string(b) + ") != 1");
    }
    ResolutionGraph g;
    g.name = "cable";
    int prev_rupture = -1;
    int piece_no = 0;
    for (const auto& [a, b] : spec.pairs) {
        ++piece_no;
        ResolutionGraph piece = build_Bab_shape(a, b);
        int rupture_local = -1, strict_local = -1;
        std::vector<int> remap(piece.vertices.size(), -1);
        for (std::size_t i = 0; i < piece.vertices.size(); ++i) {
            GraphVertex v = piece.vertices[i];
            if (v.kind == VertexKind::StrictF) {
                strict_local = static_cast<int>(i);
                continue; // replaced by the next piece (re-added for the last one)
            }
            v.id = (v.kind == VertexKind::Exceptional ? "E" : "P") +
                   std::to_string(piece_no) + "." + v.id.substr(1);
            if (v.kind == VertexKind::Exceptional) v.first_blowup = g.vertices.empty() && i == 0;
            remap[i] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(v);
        }
        // last exceptional of the piece carries the strict slot
        for (std::size_t i = 0; i < piece.vertices.size(); ++i)
            if (piece.vertices[i].kind == VertexKind::Exceptional) rupture_local = static_cast<int>(i);
        for (const GraphEdge& e : piece.edges) {
            if (e.a == strict_local || e.b == strict_local) continue;
            int x = remap[e.a], y = remap[e.b];
            g.edges.push_back({std::min(x, y), std::max(x, y), e.points});
        }
        int first_of_piece = remap[0];
        if (prev_rupture >= 0) {
            // the first blow-up of this cascade sits on the previous rupture
            g.edges.push_back({std::min(prev_rupture, first_of_piece),
                               std::max(prev_rupture, first_of_piece), 1});
            *g.vertices[prev_rupture].self_int -= 1;
        }
        prev_rupture = remap[rupture_local];
    }
    GraphVertex strict;
    strict.id = "O";
    strict.kind = VertexKind::StrictF;
    strict.N = 1;
    strict.nu = 1;
    g.vertices.push_back(strict);
    int si = static_cast<int>(g.vertices.size()) - 1;
    g.edges.push_back({std::min(prev_rupture, si), std::max(prev_rupture, si), 1});
    return complete_numerical_data(g);
}

} // namespace curvezeta
