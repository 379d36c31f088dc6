#include "curvezeta/zeta.hpp"

#include <algorithm>

#include "curvezeta/errors.hpp"

namespace curvezeta {

namespace {

// nu + N s as a linear polynomial in s
UniPoly line_of(const GraphVertex& v) {
    return UniPoly(std::vector<Rat>{v.nu, Rat(v.N)});
}

// One stratum of the resolution formula: class * prod 1/(L^{nu_i} - T^{N_i}),
// where the class is a polynomial in L (encoded by coefficients) times the
// stated number of points for 0-dimensional strata.
struct Stratum {
    // class in the Grothendieck ring restricted to genus-0 data:
    // c1 * L + c0 (single strata) or points * (L-1)^k collected explicitly
    LTPoly cls;
    Rat chi;                                   // topological substitute for cls
    std::vector<std::pair<long, long>> dens;   // (nu, N) factors
    long Tshift = 0;                           // T^{N} numerator factors
};

std::vector<Stratum> strata_of(const ResolutionGraph& g, bool need_classes) {
    std::vector<Stratum> out;
    bool has_exceptional = false;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (g.is_exceptional(static_cast<int>(i))) has_exceptional = true;

    LTPoly Lm1 = LTPoly::L() - LTPoly(Int(1));
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const GraphVertex& v = g.vertices[i];
        bool include;
        if (has_exceptional) {
            include = v.kind == VertexKind::Exceptional;
        } else {
            // identity resolution: strict components pass through the origin
            include = true;
        }
        if (!include) continue;
        Stratum s;
        if (v.kind == VertexKind::Exceptional) {
            if (need_classes && v.genus != 0)
                throw PositiveGenus("motivic class of a positive-genus component");
            long r = g.intersection_points(static_cast<int>(i));
            // [E deg] = L + 1 - r for genus 0, times (L-1)/(L^nu - T^N)
            s.cls = (LTPoly::L() + LTPoly(Int(1 - r))) * Lm1;
            s.chi = Rat(euler_char_open(g, static_cast<int>(i), Counting::All));
        } else {
            // point stratum over the origin
            s.cls = LTPoly(Int(v.branches)) * Lm1;
            s.chi = Rat(v.branches);
        }
        if (!rat_is_int(v.nu)) throw Error("motivic/topological strata need integer nu for pole factors");
        s.dens.emplace_back(to_long(rat_num(v.nu)), v.N);
        s.Tshift = v.N;
        out.push_back(s);
    }
    for (const GraphEdge& e : g.edges) {
        const GraphVertex& a = g.vertices[e.a];
        const GraphVertex& b = g.vertices[e.b];
        Stratum s;
        s.cls = LTPoly(Int(e.points)) * Lm1 * Lm1;
        s.chi = Rat(e.points);
        if (!rat_is_int(a.nu) || !rat_is_int(b.nu))
            throw Error("motivic/topological strata need integer nu for pole factors");
        s.dens.emplace_back(to_long(rat_num(a.nu)), a.N);
        s.dens.emplace_back(to_long(rat_num(b.nu)), b.N);
        s.Tshift = a.N + b.N;
        out.push_back(s);
    }
    return out;
}

} // namespace

RatFun topological_zeta(const ResolutionGraph& g) {
    RatFun z;
    bool has_exceptional = false;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const GraphVertex& v = g.vertices[i];
        if (v.kind != VertexKind::FormOnly && v.N < 1)
            throw ValidationFailure("vertex '" + v.id + "' of an f-component kind has N < 1");
        if (g.is_exceptional(static_cast<int>(i))) has_exceptional = true;
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const GraphVertex& v = g.vertices[i];
        if (has_exceptional) {
            if (v.kind != VertexKind::Exceptional) continue;
            long chi = euler_char_open(g, static_cast<int>(i), Counting::All);
            if (chi != 0) z = z + RatFun(UniPoly(Rat(chi)), line_of(v));
        } else {
            z = z + RatFun(UniPoly(Rat(v.branches)), line_of(v));
        }
    }
    for (const GraphEdge& e : g.edges) {
        const GraphVertex& a = g.vertices[e.a];
        const GraphVertex& b = g.vertices[e.b];
        z = z + RatFun(UniPoly(Rat(e.points)), line_of(a) * line_of(b));
    }
    return z;
}

LTRatExpr motivic_zeta(const ResolutionGraph& g) {
    std::vector<LTRatExpr> terms;
    for (const Stratum& s : strata_of(g, true)) {
        LTRatExpr t;
        t.num = s.cls * LTPoly::monomial(1, 0, s.Tshift);
        for (const auto& d : s.dens) t.den[d] += 1;
        t.reduce();
        terms.push_back(std::move(t));
    }
    return lt_sum(std::move(terms));
}

RatFun specialize_to_topological(const ResolutionGraph& g) {
    // (L-1) T^N / (L^nu - T^N)  ->  1 / (nu + N s);  classes -> chi
    RatFun z;
    for (const Stratum& s : strata_of(g, false)) {
        UniPoly den = UniPoly::one();
        for (const auto& [nu, N] : s.dens)
            den = den * UniPoly(std::vector<Rat>{Rat(nu), Rat(N)});
        z = z + RatFun(UniPoly(s.chi), den);
    }
    return z;
}

std::vector<CandidatePole> candidate_poles(const ResolutionGraph& g) {
    std::map<Rat, CandidatePole> by_value;
    for (const GraphVertex& v : g.vertices) {
        if (v.N < 1) continue;
        Rat s0 = -v.nu / Rat(v.N);
        CandidatePole& c = by_value[s0];
        c.value = s0;
        c.witnesses.insert(v.id);
    }
    std::vector<CandidatePole> out;
    for (auto& [val, c] : by_value) {
        c.trivial = true;
        for (const std::string& w : c.witnesses)
            if (g.vertex(w).kind != VertexKind::StrictF) c.trivial = false;
        out.push_back(c);
    }
    return out;
}

std::map<std::string, Rat> alpha_values(const ResolutionGraph& g, const std::string& id) {
    int v = g.require(id);
    const GraphVertex& v0 = g.vertices[v];
    if (v0.kind != VertexKind::Exceptional || v0.N < 1)
        throw NotExceptional("alpha_values expects an exceptional vertex with N >= 1");
    Rat ratio = v0.nu / Rat(v0.N);
    std::map<std::string, Rat> out;
    for (const auto& [w, pts] : g.neighbors(v)) {
        const GraphVertex& nb = g.vertices[w];
        out[nb.id] = nb.nu - ratio * Rat(nb.N);
    }
    return out;
}

Rat contribution_residue(const ResolutionGraph& g, const std::string& id, const Rat& s0) {
    int v = g.require(id);
    const GraphVertex& v0 = g.vertices[v];
    if (v0.kind != VertexKind::Exceptional)
        throw NotExceptional("contribution_residue expects an exceptional vertex");
    if (-v0.nu / Rat(v0.N) != s0)
        throw Error("s0 is not the candidate pole of '" + id + "'");
    Rat acc(0);
    long r = 0;
    for (const auto& [w, pts] : g.neighbors(v)) {
        const GraphVertex& nb = g.vertices[w];
        Rat alpha = nb.nu + s0 * Rat(nb.N);
        if (alpha == 0)
            throw NeighborSameRatio("neighbour '" + nb.id + "' shares the candidate ratio");
        acc += Rat(pts) / alpha;
        r += pts;
    }
    return (Rat(2) - 2 * Rat(v0.genus) - Rat(r) + acc) / Rat(v0.N);
}

bool non_contribution_check(const ResolutionGraph& g, const std::string& id) {
    int v = g.require(id);
    const GraphVertex& v0 = g.vertices[v];
    if (v0.kind != VertexKind::Exceptional)
        throw NotExceptional("non_contribution_check expects an exceptional vertex");
    if (v0.genus != 0) return false;
    Rat s0 = -v0.nu / Rat(v0.N);
    long not_one = 0;
    for (const auto& [w, pts] : g.neighbors(v)) {
        const GraphVertex& nb = g.vertices[w];
        Rat alpha = nb.nu + s0 * Rat(nb.N);
        if (alpha == 0) throw NeighborSameRatio("neighbour '" + nb.id + "' shares the candidate ratio");
        if (alpha != 1) not_one += pts;
    }
    return not_one <= 2;
}

PoleReport actual_poles(const ResolutionGraph& g) {
    PoleReport rep;
    rep.candidates = candidate_poles(g);
    rep.zeta = topological_zeta(g);
    rep.actual = poles_with_orders(rep.zeta);
    // order-2 cross-check: two intersecting components with equal ratio
    for (const auto& [value, order] : rep.actual) {
        if (order < 2) continue;
        bool witnessed = false;
        for (const GraphEdge& e : g.edges) {
            const GraphVertex& a = g.vertices[e.a];
            const GraphVertex& b = g.vertices[e.b];
            if (a.N < 1 || b.N < 1) continue;
            if (-a.nu / Rat(a.N) == value && -b.nu / Rat(b.N) == value) witnessed = true;
        }
        if (!witnessed)
            throw Error("order-2 pole " + value.get_str() + " without adjacent equal-ratio witnesses");
    }
    for (const CandidatePole& c : rep.candidates)
        for (const std::string& w : c.witnesses) {
            const GraphVertex& v = g.vertex(w);
            if (v.kind != VertexKind::Exceptional) continue;
            try {
                rep.contributions[w] = contribution_residue(g, w, c.value);
            } catch (const NeighborSameRatio&) {
                // order-2 situation: residue must be read from the reduced function
            }
        }
    return rep;
}

AllPolesCheck veys_all_poles_check(const ResolutionGraph& g) {
    for (const GraphVertex& v : g.vertices)
        if (v.kind == VertexKind::FormOnly)
            throw NotStandardForm("graph carries form components");
    AllPolesCheck chk;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const GraphVertex& v = g.vertices[i];
        if (v.N < 1) continue;
        bool predicted = v.kind == VertexKind::StrictF;
        if (v.kind == VertexKind::Exceptional &&
            g.intersection_points(static_cast<int>(i)) >= 3)
            predicted = true;
        if (predicted) chk.predicted.insert(-v.nu / Rat(v.N));
    }
    for (const auto& [value, order] : poles_with_orders(topological_zeta(g)))
        chk.actual.insert(value);
    chk.ok = chk.predicted == chk.actual;
    return chk;
}

} // namespace curvezeta
