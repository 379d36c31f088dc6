#include "curvezeta/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "curvezeta/errors.hpp"
#include "curvezeta/uniroots.hpp"

namespace curvezeta {

BiPoly hessian(const BiPoly& f) {
    BiPoly fx = f.dx(), fy = f.dy();
    return fx.dx() * fy.dy() - fx.dy() * fx.dy();
}

BiPoly polar_form(const BiPoly& f, const Rat& alpha, const Rat& beta) {
    if (alpha == 0 && beta == 0) throw ZeroDirection("polar direction (0, 0)");
    return f.dx() * beta - f.dy() * alpha;
}

BiPoly pullback_two_form(const std::vector<BiPoly>& parametrization,
                         const std::vector<Rat>& coefficients) {
    std::size_t m = parametrization.size();
    if (m < 2) throw LengthMismatch("pullback needs at least two coordinates");
    if (coefficients.size() != m * (m - 1) / 2)
        throw LengthMismatch("pullback needs m(m-1)/2 coefficients, got " +
                             std::to_string(coefficients.size()));
    BiPoly out;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++idx) {
            if (coefficients[idx] == 0) continue;
            const BiPoly& Fi = parametrization[i];
            const BiPoly& Fj = parametrization[j];
            out = out + (Fi.dx() * Fj.dy() - Fi.dy() * Fj.dx()) * coefficients[idx];
        }
    return out;
}

long multiplicity(const BiPoly& p, const Rat& x, const Rat& y) {
    if (p.is_zero()) throw Error("multiplicity of the zero polynomial");
    int ord = p.translate_x(x).translate_y(y).order_origin();
    return ord;
}

BiPoly materialize_form(const FormSpec& form, const BiPoly& f) {
    if (std::holds_alternative<FormStandard>(form)) return BiPoly::one();
    if (const auto* h = std::get_if<FormHessian>(&form)) {
        (void)h;
        return hessian(f);
    }
    if (const auto* p = std::get_if<FormPolar>(&form)) return polar_form(f, p->alpha, p->beta);
    if (const auto* c = std::get_if<FormCustom>(&form)) return c->g;
    const auto& pb = std::get<FormPullback>(form);
    return pullback_two_form(pb.parametrization, pb.coefficients);
}

// ---------------------------------------------------------------------------

namespace {

struct LocalLayer {
    BiPoly strict;
    int mult; // multiplicity of this layer inside g
};

struct Active {
    int exc_u = -1; // component on {x = 0}: creation index, or -1
    int exc_v = -1; // component on {y = 0}
    BiPoly f;
    std::vector<LocalLayer> layers;
};

struct Engine {
    ResolveOptions opts;
    ResolutionGraph graph;
    std::vector<BlowupRecord> audit;
    std::vector<std::string> transcript;
    std::deque<Active> queue;
    int strict_count = 0, form_count = 0;

    // creation index (1-based) -> graph vertex index
    std::vector<int> exc_vertex;

    int vertex_of(int creation) const { return exc_vertex[creation - 1]; }

    int new_exceptional(long N, const Rat& nu) {
        GraphVertex v;
        int k = static_cast<int>(exc_vertex.size()) + 1;
        v.id = "E" + std::to_string(k);
        v.kind = VertexKind::Exceptional;
        v.N = N;
        v.nu = nu;
        v.self_int = -1;
        v.first_blowup = k == 1;
        graph.vertices.push_back(v);
        exc_vertex.push_back(static_cast<int>(graph.vertices.size()) - 1);
        return k;
    }

    void add_edge(int va, int vb, long points) {
        int a = std::min(va, vb), b = std::max(va, vb);
        graph.edges.push_back({a, b, points});
    }

    void remove_exc_edge(int creation_a, int creation_b) {
        int a = vertex_of(creation_a), b = vertex_of(creation_b);
        int e = graph.find_edge(a, b);
        if (e < 0) throw Error("engine: missing exceptional edge");
        graph.edges.erase(graph.edges.begin() + e);
    }

    void record_boundary(VertexKind kind, long N, const Rat& nu, long branches, int carrier,
                         long points) {
        GraphVertex v;
        v.kind = kind;
        v.N = N;
        v.nu = nu;
        v.branches = branches;
        v.id = (kind == VertexKind::StrictF ? "O" : "W") +
               std::to_string(kind == VertexKind::StrictF ? ++strict_count : ++form_count);
        graph.vertices.push_back(v);
        add_edge(vertex_of(carrier), static_cast<int>(graph.vertices.size()) - 1, points);
    }

    // one parsed point class on the new exceptional component
    struct PointClass {
        bool rational = true;
        Rat t;             // rational location (chart A coordinate)
        UniPoly minpoly;   // monic, degree >= 2, for conjugate clusters
        int degree = 1;
        long ord_f = 0;
        std::vector<std::pair<std::size_t, long>> ord_layers;
        long total() const {
            long s = ord_f;
            for (const auto& [k, o] : ord_layers) s += o;
            return s;
        }
    };

    std::vector<PointClass> classify_chart(const Active& p, int chart);

    void process(Active p);
    void blow_up(const Active& p);
    void finish(const BiPoly& f);
};

// restriction of the strict data of `p` to the new exceptional component in
// chart A (x = 0) or chart B (y = 0), already divided by the exceptional
// multiplicities; callers pass the transformed Active.
std::vector<Engine::PointClass> Engine::classify_chart(const Active& p, int chart) {
    std::vector<PointClass> classes;
    auto merge = [&](bool rational, const Rat& t, const UniPoly& mp, int deg, bool is_f,
                     std::size_t layer, long ord) {
        for (PointClass& c : classes) {
            if (rational != c.rational) continue;
            if (rational ? (c.t == t) : (c.minpoly == mp)) {
                if (is_f)
                    c.ord_f += ord;
                else
                    c.ord_layers.emplace_back(layer, ord);
                return;
            }
        }
        PointClass c;
        c.rational = rational;
        c.t = t;
        c.minpoly = mp;
        c.degree = deg;
        if (is_f)
            c.ord_f = ord;
        else
            c.ord_layers.emplace_back(layer, ord);
        classes.push_back(c);
    };
    auto handle = [&](const BiPoly& poly, bool is_f, std::size_t layer) {
        if (poly.is_zero()) return;
        UniPoly r = chart == 0 ? poly.at_x0() : poly.at_y0();
        if (r.is_zero()) throw Error("engine: strict transform contains the exceptional line");
        if (r.is_constant()) return;
        UniFactors fac = factor_rationals(r);
        if (fac.zero_mult > 0) merge(true, Rat(0), UniPoly(), 1, is_f, layer, fac.zero_mult);
        for (const auto& [root, e] : fac.rational_roots)
            merge(true, root, UniPoly(), 1, is_f, layer, e);
        for (const auto& [mp, e] : fac.irreducible)
            merge(false, Rat(0), mp, mp.degree(), is_f, layer, e);
    };
    handle(p.f, true, 0);
    for (std::size_t k = 0; k < p.layers.size(); ++k) handle(p.layers[k].strict, false, k);
    return classes;
}

void Engine::blow_up(const Active& p) {
    if (static_cast<int>(audit.size()) >= opts.max_blowups)
        throw IterationLimit("blow-up limit of " + std::to_string(opts.max_blowups) + " exceeded");
    long mu = p.f.is_zero() ? 0 : std::max(p.f.order_origin(), 0);
    if (!p.f.is_zero() && p.f.coeff(0, 0) != 0) mu = 0;
    long lambda = 0, lambda_red = 0;
    for (const LocalLayer& l : p.layers) {
        if (l.strict.is_zero() || l.strict.coeff(0, 0) != 0) continue;
        long o = l.strict.order_origin();
        lambda += l.mult * o;
        lambda_red += o;
    }
    long N = mu;
    Rat nu = Rat(lambda) + 2;
    std::vector<int> on;
    if (p.exc_u > 0) {
        const GraphVertex& v = graph.vertices[vertex_of(p.exc_u)];
        N += v.N;
        nu += v.nu - 1;
        on.push_back(p.exc_u);
    }
    if (p.exc_v > 0) {
        const GraphVertex& v = graph.vertices[vertex_of(p.exc_v)];
        N += v.N;
        nu += v.nu - 1;
        on.push_back(p.exc_v);
    }
    int created = new_exceptional(N, nu);
    BlowupRecord rec;
    rec.index = created;
    rec.on = on;
    rec.mu = mu;
    rec.lambda = lambda;
    rec.lambda_reduced = lambda_red;
    audit.push_back(rec);
    {
        std::ostringstream os;
        os << "Blow-up " << created << ": centre ";
        if (on.empty())
            os << "at the origin";
        else if (on.size() == 1)
            os << "on E" << on[0];
        else
            os << "on E" << on[0] << " and E" << on[1];
        os << " (mult f = " << mu << ", mult form = " << lambda << ") -> E" << created
           << " with (N, nu) = (" << N << ", " << rat_str(nu)
           << "); charts (u, uv) and (uv, v)";
        transcript.push_back(os.str());
        audit.back().description = os.str();
    }
    // bookkeeping: self-intersections and edges
    for (int c : on)
        if (graph.vertices[vertex_of(c)].self_int) *graph.vertices[vertex_of(c)].self_int -= 1;
    if (on.size() == 2) remove_exc_edge(on[0], on[1]);
    for (int c : on) add_edge(vertex_of(c), vertex_of(created), 1);

    // chart A: (x, y) -> (x, x y); E_new = {x = 0}; old {y=0} survives as {y=0}
    Active a;
    a.exc_u = created;
    a.exc_v = p.exc_v;
    a.f = p.f.is_zero() ? p.f : p.f.subst_chart_a().divide_x(static_cast<int>(mu));
    for (const LocalLayer& l : p.layers) {
        BiPoly s = l.strict.subst_chart_a();
        int o = (l.strict.coeff(0, 0) == 0 && !l.strict.is_zero()) ? l.strict.order_origin() : 0;
        a.layers.push_back({s.divide_x(o), l.mult});
    }
    // chart B: (x, y) -> (x y, y); E_new = {y = 0}; old {x=0} survives as {x=0}
    Active b;
    b.exc_u = p.exc_u;
    b.exc_v = created;
    b.f = p.f.is_zero() ? p.f : p.f.subst_chart_b().divide_y(static_cast<int>(mu));
    for (const LocalLayer& l : p.layers) {
        BiPoly s = l.strict.subst_chart_b();
        int o = (l.strict.coeff(0, 0) == 0 && !l.strict.is_zero()) ? l.strict.order_origin() : 0;
        b.layers.push_back({s.divide_y(o), l.mult});
    }

    // points on E_new in chart A (excluding the B-origin at infinity)
    std::vector<PointClass> classes = classify_chart(a, 0);
    // corner of chart A = E_new meets the old {y=0} component
    for (const PointClass& c : classes) {
        bool at_corner = c.rational && c.t == 0 && p.exc_v > 0;
        long total_f = c.ord_f;
        long total_all = c.total();
        long drive = opts.full ? total_all : total_f;
        if (at_corner) {
            if (drive > 0) {
                Active corner = a; // already centred at the chart-A origin
                queue.push_back(corner);
            }
            continue;
        }
        if (drive >= 2) {
            if (!c.rational) throw NonRationalCenter(c.minpoly.str("t"));
            Active next;
            next.exc_u = created;
            next.exc_v = -1;
            next.f = a.f.translate_y(c.t);
            for (const LocalLayer& l : a.layers) next.layers.push_back({l.strict.translate_y(c.t), l.mult});
            queue.push_back(next);
            continue;
        }
        if (drive == 1) {
            // transverse simple crossing: final
            if (c.ord_f == static_cast<long>(drive) && c.ord_f == 1) {
                record_boundary(VertexKind::StrictF, 1, Rat(1), c.degree, created, c.degree);
            } else {
                std::size_t layer = c.ord_layers.front().first;
                record_boundary(VertexKind::FormOnly, 0, Rat(p.layers[layer].mult + 1), c.degree,
                                created, c.degree);
            }
            continue;
        }
        // drive == 0: only form components in minimal mode; contact comes from
        // the audit, no vertex is recorded
    }
    // chart B origin: corner with old {x=0} or the remaining point of E_new
    {
        long of = 0, oall = 0;
        if (!b.f.is_zero() && b.f.coeff(0, 0) == 0) of = b.f.order_origin() > 0 ? 1 : 0;
        oall = of;
        for (const LocalLayer& l : b.layers)
            if (!l.strict.is_zero() && l.strict.coeff(0, 0) == 0) oall += 1;
        long drive = opts.full ? oall : of;
        if (p.exc_u > 0) {
            if (drive > 0) queue.push_back(b);
        } else if (drive > 0) {
            // plain point of E_new at the far chart; classify it like any other
            long if_ = 0, itot = 0;
            if (!b.f.is_zero()) {
                UniPoly r = b.f.at_y0();
                // order at x = 0
                int k = r.order();
                if_ = k > 0 ? k : 0;
            }
            itot = if_;
            for (const LocalLayer& l : b.layers) {
                UniPoly r = l.strict.at_y0();
                int k = r.order();
                itot += k > 0 ? k : 0;
            }
            long drv = opts.full ? itot : if_;
            if (drv >= 2) {
                queue.push_back(b);
            } else if (drv == 1) {
                if (if_ == 1) {
                    record_boundary(VertexKind::StrictF, 1, Rat(1), 1, created, 1);
                } else {
                    for (std::size_t k = 0; k < b.layers.size(); ++k) {
                        UniPoly r = b.layers[k].strict.at_y0();
                        if (r.order() > 0) {
                            record_boundary(VertexKind::FormOnly, 0, Rat(b.layers[k].mult + 1), 1,
                                            created, 1);
                            break;
                        }
                    }
                }
            }
        }
    }
}

void Engine::process(Active p) { blow_up(p); }

ResolutionResult run_engine(const BiPoly& f, const BiPoly& g, ResolveOptions opts) {
    if (f.is_zero() || f.is_constant()) throw Error("resolve expects a nonconstant f");
    if (f.coeff(0, 0) != 0) throw Error("f does not vanish at the origin");
    if (!is_squarefree(f)) throw NotSquareFree("f has a repeated factor");
    if (g.is_zero()) throw Error("resolve expects a nonzero form polynomial");
    if (!g.is_constant() && !bgcd(f, g).is_constant())
        throw SharedComponent("f and the form polynomial share a component");

    Engine eng;
    eng.opts = opts;
    eng.graph.name = "resolution";

    Active start;
    start.f = f;
    for (const auto& [layer, mult] : squarefree_layers(g)) start.layers.push_back({layer, mult});

    long mu0 = f.order_origin();
    long red0 = mu0;
    for (const LocalLayer& l : start.layers)
        if (l.strict.coeff(0, 0) == 0) red0 += l.strict.order_origin();
    long drive0 = opts.full ? red0 : mu0;
    if (drive0 <= 1) {
        // smooth germ transverse to nothing: the identity resolution
        GraphVertex v;
        v.id = "O1";
        v.kind = VertexKind::StrictF;
        v.N = 1;
        v.nu = 1;
        eng.graph.vertices.push_back(v);
        eng.transcript.push_back("already a simple normal crossings germ; nothing to do");
        ResolutionResult res;
        res.graph = eng.graph;
        res.transcript = eng.transcript;
        return res;
    }
    eng.queue.push_back(start);
    while (!eng.queue.empty()) {
        Active p = eng.queue.front();
        eng.queue.pop_front();
        eng.process(std::move(p));
    }

    ResolutionResult res;
    res.graph = eng.graph;
    res.audit = eng.audit;
    res.transcript = eng.transcript;
    for (const BlowupRecord& rec : res.audit)
        res.creation_order["E" + std::to_string(rec.index)] = rec.index;
    // total contact orders of the carried form curve, by the proximity
    // relations: m_i = mult at the creating centre minus the multiplicities
    // at the later centres lying on E_i
    std::map<std::string, long> form_contacts;
    for (std::size_t i = 0; i < res.audit.size(); ++i) {
        long m = res.audit[i].lambda_reduced;
        for (std::size_t j = i + 1; j < res.audit.size(); ++j)
            for (int c : res.audit[j].on)
                if (c == res.audit[i].index) m -= res.audit[j].lambda_reduced;
        form_contacts["E" + std::to_string(res.audit[i].index)] = m;
    }
    if (opts.want_contacts) res.contacts = form_contacts;

    // independent certificate: identity (1) must give back the tracked
    // self-intersections, and identity (2) must close -- with the contact
    // orders of the carried form standing in for the unrecorded form
    // crossings in minimal mode (they vanish in full mode where every
    // crossing is a recorded transverse vertex).
    ValidationReport rep = validate(eng.graph);
    if (opts.full) {
        if (!rep.ok) throw Error("engine output failed validation:\n" + rep.summary());
    } else {
        for (std::size_t i = 0; i < eng.graph.vertices.size(); ++i) {
            const GraphVertex& v = eng.graph.vertices[i];
            if (v.kind != VertexKind::Exceptional) continue;
            Int sumN = 0;
            Rat sum_nu(0);
            for (const auto& [w, pts] : eng.graph.neighbors(static_cast<int>(i))) {
                sumN += Int(pts) * Int(eng.graph.vertices[w].N);
                sum_nu += Rat(pts) * (eng.graph.vertices[w].nu - 1);
            }
            if (sumN != Int(v.N) * Int(-*v.self_int))
                throw Error("engine: identity (1) fails at " + v.id);
            Rat rhs = sum_nu + 2 + Rat(form_contacts[v.id]);
            if (Rat(-*v.self_int) * v.nu != rhs)
                throw Error("engine: contact-corrected identity (2) fails at " + v.id);
        }
    }
    for (const VertexCheck& c : rep.checks)
        if (c.kappa && eng.graph.vertex(c.id).self_int &&
            *eng.graph.vertex(c.id).self_int != -*c.kappa)
            throw Error("engine: tracked self-intersection disagrees with identity (1) at " + c.id);
    return res;
}

} // namespace

ResolutionResult resolve(const BiPoly& f, const FormSpec& form, ResolveOptions opts) {
    return run_engine(f, materialize_form(form, f), opts);
}

std::map<std::string, long> contact_orders_min_resolution(const BiPoly& f, const BiPoly& polar_g) {
    ResolveOptions opts;
    opts.full = false;
    opts.want_contacts = true;
    return run_engine(f, polar_g, opts).contacts;
}

std::pair<Rat, Rat> sample_generic(int seed) {
    if (seed < 0) throw Error("sample_generic expects seed >= 0");
    return {Rat(nth_prime(2 * seed)), Rat(nth_prime(2 * seed + 1))};
}

std::vector<Rat> sample_generic_vector(int seed, int n) {
    std::vector<Rat> out;
    for (int i = 0; i < n; ++i) out.emplace_back(nth_prime(2 * seed + i));
    return out;
}

bool genericity_stable(const BiPoly& f, const std::function<FormSpec(int)>& family,
                       const std::vector<int>& seeds, ResolveOptions opts) {
    if (seeds.size() < 2) throw Error("genericity_stable needs at least two seeds");
    opts.want_contacts = true;
    std::vector<ResolutionResult> results;
    for (int s : seeds) results.push_back(resolve(f, family(s), opts));
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (!same_decorated_graph(results[0].graph, results[i].graph)) return false;
        if (results[0].contacts != results[i].contacts) return false;
    }
    return true;
}

} // namespace curvezeta
