#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "curvezeta/builder.hpp"
#include "curvezeta/engine.hpp"
#include "curvezeta/corpus.hpp"
#include "curvezeta/errors.hpp"
#include "curvezeta/polar.hpp"
#include "curvezeta/zeta.hpp"

using namespace curvezeta;

TEST_CASE("kappa assignment") {
    // [1,1,2]: s = (1,2,4); interiors kappa = 2 at vertex 3;
    // kappa_{s0=1} = q1 + 2 = 3; kappa_{s1=2} = q2 + 1 = 3
    BranchPlan p = kappa_assignment({1, 1, 2});
    CHECK(p.s == std::vector<long>{1, 2, 4});
    CHECK(p.kappa == std::vector<long>{3, 3, 2, 1});
    CHECK(p.polar == std::vector<long>{0, 2, 0, 0});

    BranchPlan p2 = kappa_assignment({1, 1});
    CHECK(p2.kappa == std::vector<long>{2, 1});

    BranchPlan p3 = kappa_assignment({5, 3, 2, 1});
    CHECK(p3.s == std::vector<long>{5, 8, 10, 11});
    CHECK(p3.kappa[10 - 1] == 2); // q3 + 1
    CHECK(p3.kappa[8 - 1] == 4);  // q2 + 2
    CHECK(p3.kappa[5 - 1] == 5);  // q1 + 2
    for (long j : {1, 2, 3, 4, 6, 7, 9}) CHECK(p3.kappa[j - 1] == 2);
}

TEST_CASE("B(a,b) reproduces the worked examples") {
    ResolutionGraph b32 = build_Bab(3, 2);
    CHECK(same_decorated_graph(b32, corpus_graph("fig1")));
    CHECK(validate(b32).ok);

    ResolutionGraph b53 = build_Bab(5, 3);
    CHECK(same_decorated_graph(b53, corpus_graph("fig10")));
    CHECK(validate(b53).ok);

    ResolutionGraph b = build_Bab(53, 10);
    long exc = 0;
    for (const GraphVertex& v : b.vertices)
        if (v.kind == VertexKind::Exceptional) ++exc;
    CHECK(exc == 11);
    CHECK(b.vertex("E11").N == 530);
    CHECK(b.vertex("E11").nu == Rat(540));
    CHECK(validate(b).ok);

    CHECK_THROWS_AS(build_Bab(4, 2), NonCoprime);
}

TEST_CASE("builder output properties over a sweep") {
    for (long a = 3; a <= 24; ++a)
        for (long b = 2; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ResolutionGraph g = build_Bab(a, b);
            INFO("B(", a, ",", b, ")");
            CHECK(validate(g).ok);
            auto branches = find_dead_branches(g);
            // the polar strict transform meets every dead branch
            for (const DeadBranch& br : branches) {
                long polar_points = 0, kappa_weight = 1;
                for (const std::string& id : br.chain) {
                    int v = g.require(id);
                    for (const auto& [w, pts] : g.neighbors(v))
                        if (g.vertices[w].kind == VertexKind::FormOnly) polar_points += pts;
                }
                for (long k : branch_kappas(g, br)) kappa_weight += k - 2;
                CHECK(polar_points >= 1);
                // attachment counts along a dead branch are determined by the
                // self-intersections: sum (kappa - 2) + 1
                CHECK(polar_points == kappa_weight);
                CHECK(alpha_one_check(g, br).pass);
                CHECK(kappa_identity_check(g, br).pass);
            }
        }
}

TEST_CASE("zariski pair assembly") {
    // single pair degenerates to B(a, b)
    ZariskiSpec single{{{3, 2}}};
    CHECK(same_decorated_graph(assemble_zariski_pairs(single), build_Bab(3, 2)));

    ZariskiSpec two{{{3, 2}, {7, 2}}};
    ResolutionGraph g = assemble_zariski_pairs(two);
    CHECK(validate(g).ok);
    // zeta blow-up invariance on the assembled graph
    RatFun z = topological_zeta(g);
    ResolutionGraph h = blowup_point(g, VertexCenter{g.vertices[0].id});
    CHECK(topological_zeta(h) == z);
    // every dead branch still has alpha_1 = 1
    auto branches = find_dead_branches(g);
    CHECK(!branches.empty());
    for (const DeadBranch& br : branches) CHECK(alpha_one_check(g, br).pass);

    CHECK_THROWS_AS(assemble_zariski_pairs(ZariskiSpec{{{4, 2}}}), NonCoprime);

    // random 2-pair specs: alpha_1 = 1 at every dead branch
    std::mt19937 rng(51);
    int done = 0;
    while (done < 12) {
        long b1 = 2 + rng() % 3, a1 = b1 + 1 + rng() % 6;
        long b2 = 2 + rng() % 3, a2 = b2 + 1 + rng() % 8;
        if (std::gcd(a1, b1) != 1 || std::gcd(a2, b2) != 1) continue;
        ++done;
        ResolutionGraph gg = assemble_zariski_pairs(ZariskiSpec{{{a1, b1}, {a2, b2}}});
        INFO("pairs (", a1, ",", b1, ") (", a2, ",", b2, ")");
        CHECK(validate(gg).ok);
        for (const DeadBranch& br : find_dead_branches(gg)) {
            CHECK(alpha_one_check(gg, br).pass);
            CHECK(kappa_identity_check(gg, br).pass);
        }
    }
}

TEST_CASE("zariski assembly cross-checked against the engine") {
    // curve with Zariski pairs {(a1,2),(a2,2)}: Puiseux y = x^{a1/2} + x^{m/4}
    // with m = a2 + 2 a1, polynomial model (y^2 - x^{a1})^2 - 4 x^{(m+a1*2... }
    struct Instance {
        long a1, a2;
        std::string f;
    };
    std::vector<Instance> instances = {
        {3, 7, "(y^2-x^3)^2 - 4*x^8*y - x^13"},   // m = 13
        {5, 11, "(y^2-x^5)^2 - 4*x^13*y - x^21"}, // m = 21
    };
    for (const Instance& inst : instances) {
        INFO("pairs (", inst.a1, ",2) (", inst.a2, ",2)");
        BiPoly f = parse_bipoly(inst.f);
        ZariskiSpec spec{{{inst.a1, 2}, {inst.a2, 2}}};
        ResolutionGraph cable = assemble_zariski_pairs(spec);
        // the f-part (standard data) equals the engine's minimal resolution
        ResolutionResult std_res = resolve(f, FormStandard{});
        ResolutionGraph fpart = complete_numerical_data(prune_form_vertices(cable));
        CHECK(same_decorated_graph(std_res.graph, fpart));
        // and the polar-decorated data match, circle positions included
        auto [al, be] = sample_generic(0);
        ResolveOptions o;
        o.full = false;
        o.want_contacts = true;
        ResolutionResult pol = resolve(f, FormPolar{al, be}, o);
        long n = 0;
        for (const GraphVertex& v : cable.vertices)
            if (v.kind == VertexKind::Exceptional) ++n;
        std::vector<long> circles(n, 0), contacts(n, 0);
        long idx = 0;
        for (const GraphVertex& v : cable.vertices) {
            if (v.kind != VertexKind::Exceptional) continue;
            for (const auto& [w, pts] : cable.neighbors(cable.require(v.id)))
                if (cable.vertices[w].kind == VertexKind::FormOnly) circles[idx] += pts;
            ++idx;
        }
        for (long k = 1; k <= n; ++k) contacts[k - 1] = pol.contacts.at("E" + std::to_string(k));
        CHECK(circles == contacts);
        std::vector<Rat> nu_engine, nu_builder;
        for (long k = 1; k <= n; ++k) nu_engine.push_back(pol.graph.vertex("E" + std::to_string(k)).nu);
        for (const GraphVertex& v : cable.vertices)
            if (v.kind == VertexKind::Exceptional) nu_builder.push_back(v.nu);
        CHECK(nu_engine == nu_builder);
    }
}
