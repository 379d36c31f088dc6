#include "curvezeta/monodromy.hpp"

#include <numeric>
#include <sstream>

#include "curvezeta/errors.hpp"

namespace curvezeta {

CycloVector acampo_product(const ResolutionGraph& g) {
    ResolutionGraph p = prune_form_vertices(g);
    CycloVector acc;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (!p.is_exceptional(static_cast<int>(i))) continue;
        long chi = euler_char_open(p, static_cast<int>(i), Counting::FOnly);
        if (chi == 0) continue;
        acc = acc * CycloVector::of_power(p.vertices[i].N).pow(static_cast<int>(-chi));
    }
    return acc;
}

std::optional<long> origin_d(const ResolutionGraph& g, Ambient ambient) {
    long d = 0;
    for (const GraphVertex& v : g.vertices)
        if (v.kind == VertexKind::StrictF) d = std::gcd(d, v.N);
    if (d == 0) d = 1; // no strict components recorded: only the unit eigenvalue
    if (ambient == Ambient::Smooth) return d;
    if (d == 1) return 1; // the divisor of 1 is forced
    return std::nullopt;
}

EigenvalueContext eigenvalue_context(const ResolutionGraph& g, Ambient ambient) {
    EigenvalueContext ctx;
    ctx.acampo = acampo_product(g);
    ctx.d_origin = origin_d(g, ambient);
    for (const GraphVertex& v : g.vertices)
        if (v.kind == VertexKind::StrictF)
            for (long i = 0; i < v.branches; ++i) ctx.strict_Ns.push_back(v.N);
    return ctx;
}

TriBool is_eigenvalue(const EigenvalueContext& ctx, const Rat& s0, Scope scope,
                      long multiplier) {
    if (multiplier < 1) throw Error("eigenvalue multiplier must be positive");
    Rat m = s0 * Rat(multiplier);
    long b = to_long(rat_den(m)); // order of e^{2 pi i m}
    if (b == 1) return TriBool::True; // eigenvalue 1, always present in P0
    if (scope == Scope::Nearby)
        for (long N : ctx.strict_Ns)
            if (N % b == 0) return TriBool::True;
    if (ctx.acampo.exponent(b) != 0) return TriBool::True;
    if (ctx.d_origin) return *ctx.d_origin % b == 0 ? TriBool::True : TriBool::False;
    return TriBool::Unknown;
}

std::string VerdictReport::str() const {
    std::ostringstream os;
    for (const PoleVerdict& p : poles) {
        os << "pole s0 = " << p.pole.get_str() << " (order " << p.order << ")";
        if (p.trivial) {
            os << " trivial, excluded";
        } else {
            os << " eigenvalue: "
               << (p.eigenvalue == TriBool::True
                       ? "yes"
                       : p.eigenvalue == TriBool::False ? "NO" : "unknown");
        }
        os << "\n";
    }
    if (holds == TriBool::True)
        os << "verdict: HOLDS\n";
    else if (holds == TriBool::Unknown)
        os << "verdict: UNKNOWN\n";
    else
        os << "verdict: FAILS at s0 = " << failing_pole->get_str() << "\n";
    return os.str();
}

VerdictReport conjecture_verdict(const ResolutionGraph& g, Ambient ambient, long multiplier) {
    VerdictReport rep;
    EigenvalueContext ctx = eigenvalue_context(g, ambient);
    PoleReport poles = actual_poles(g);
    for (const auto& [value, order] : poles.actual) {
        PoleVerdict pv;
        pv.pole = value;
        pv.order = order;
        pv.trivial = true;
        bool any_witness = false;
        for (const CandidatePole& c : poles.candidates)
            if (c.value == value) {
                pv.trivial = c.trivial;
                any_witness = true;
            }
        if (!any_witness) pv.trivial = false;
        pv.eigenvalue = is_eigenvalue(ctx, value, Scope::Nearby, multiplier);
        rep.poles.push_back(pv);
        if (pv.trivial) continue;
        if (pv.eigenvalue == TriBool::False && rep.holds != TriBool::False) {
            rep.holds = TriBool::False;
            rep.failing_pole = value;
        } else if (pv.eigenvalue == TriBool::Unknown && rep.holds == TriBool::True) {
            rep.holds = TriBool::Unknown;
        }
    }
    return rep;
}

} // namespace curvezeta
