#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvezeta/corpus.hpp"
#include "curvezeta/monodromy.hpp"

using namespace curvezeta;

namespace {
const std::vector<std::string> kFigures = {"fig1", "fig2",  "fig3",  "fig10", "fig16", "fig17",
                                           "fig18", "fig27", "fig28", "figB4", "figB5"};

CycloVector cv(std::map<long, int> m) { return CycloVector(std::move(m)); }
} // namespace

TEST_CASE("alternating products of the corpus") {
    CHECK(acampo_product(corpus_graph("fig3")) ==
          cv({{13, 1}, {26, 1}, {65, 1}, {130, 1}}));
    CHECK(acampo_product(corpus_graph("fig27")) == cv({{14, 1}, {28, 1}, {1, -1}}));
    CHECK(acampo_product(corpus_graph("fig28")) == cv({{14, 1}, {28, 1}, {1, -1}}));
    CHECK(acampo_product(prune_form_vertices(corpus_graph("fig1"))) == cv({{6, 1}, {1, -1}}));
    CHECK(acampo_product(corpus_graph("fig10")) == cv({{15, 1}, {1, -1}}));
    CHECK(acampo_product(corpus_graph("fig2")) == cv({{8, 1}, {1, -1}}));
    CHECK(acampo_product(corpus_graph("fig17")) == cv({{6, 1}, {12, 1}, {1, -1}}));

    // the product only sees f-components: pruning changes nothing
    for (const std::string& fig : kFigures)
        CHECK(acampo_product(corpus_graph(fig)) ==
              acampo_product(prune_form_vertices(corpus_graph(fig))));
}

TEST_CASE("degree bookkeeping") {
    // sum e_k phi(k) equals sum over vertices of -chi * N
    for (const std::string& fig : kFigures) {
        ResolutionGraph g = prune_form_vertices(corpus_graph(fig));
        long want = 0;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (!g.is_exceptional(static_cast<int>(i))) continue;
            want += -euler_char_open(g, static_cast<int>(i), Counting::FOnly) * g.vertices[i].N;
        }
        CHECK(acampo_product(corpus_graph(fig)).degree() == want);
    }
}

TEST_CASE("origin eigenvalue order") {
    CHECK(origin_d(corpus_graph("fig10"), Ambient::Smooth) == 1);
    CHECK(origin_d(corpus_graph("fig3"), Ambient::Singular) == 1); // gcd(1, 13) = 1 forced
    ResolutionGraph g;
    g.name = "strN24";
    for (long n : {2, 4}) {
        GraphVertex v;
        v.id = "O" + std::to_string(n);
        v.kind = VertexKind::StrictF;
        v.N = n;
        v.nu = 1;
        g.vertices.push_back(v);
    }
    CHECK(origin_d(g, Ambient::Singular) == std::nullopt);
    CHECK(origin_d(g, Ambient::Smooth) == 2);
}

TEST_CASE("eigenvalue membership") {
    EigenvalueContext f3 = eigenvalue_context(corpus_graph("fig3"), Ambient::Singular);
    CHECK(is_eigenvalue(f3, Rat(-1, 5), Scope::Nearby) == TriBool::False);
    EigenvalueContext f2 = eigenvalue_context(corpus_graph("fig2"), Ambient::Singular);
    CHECK(is_eigenvalue(f2, Rat(-7, 8), Scope::Nearby) == TriBool::True);
    CHECK(is_eigenvalue(f2, Rat(-2), Scope::Nearby) == TriBool::True);
    CHECK(is_eigenvalue(f2, Rat(5), Scope::Origin) == TriBool::True);
    EigenvalueContext f17 = eigenvalue_context(corpus_graph("fig17"), Ambient::Singular);
    CHECK(is_eigenvalue(f17, Rat(-4, 3), Scope::Nearby) == TriBool::False);
    // multiplier folds the order: e^{2 pi i * 2 * (-7/8)} has order 4, and
    // Phi_4 does not occur in Phi_8 / Phi_1
    CHECK(is_eigenvalue(f2, Rat(-7, 8), Scope::Nearby, 2) == TriBool::False);
    CHECK(is_eigenvalue(f2, Rat(-7, 8), Scope::Nearby, 8) == TriBool::True);

    // integer s0 is always an eigenvalue, any context and multiplier
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        Rat s0(static_cast<long>(rng() % 13) - 6);
        CHECK(is_eigenvalue(f3, s0, Scope::Origin, 1 + rng() % 5) == TriBool::True);
    }

    // unknown d propagates only when the answer depends on it
    EigenvalueContext unk;
    unk.acampo = CycloVector(std::map<long, int>{{6, 1}});
    unk.d_origin = std::nullopt;
    unk.strict_Ns = {2, 4};
    CHECK(is_eigenvalue(unk, Rat(-1, 6), Scope::Origin) == TriBool::True);   // e_6 != 0
    CHECK(is_eigenvalue(unk, Rat(-1, 2), Scope::Nearby) == TriBool::True);   // 2 | strict N
    CHECK(is_eigenvalue(unk, Rat(-1, 5), Scope::Origin) == TriBool::Unknown);
}

TEST_CASE("verdicts") {
    auto verdict = [&](const std::string& fig) {
        ResolutionGraph g = corpus_graph(fig);
        return conjecture_verdict(g, g.ambient);
    };
    VerdictReport v3 = verdict("fig3");
    CHECK(v3.holds == TriBool::False);
    CHECK(*v3.failing_pole == Rat(-1, 5));
    CHECK(verdict("fig2").holds == TriBool::True);
    VerdictReport v28 = verdict("fig28");
    CHECK(v28.holds == TriBool::False);
    CHECK(*v28.failing_pole == Rat(-15, 8));
    VerdictReport v10 = verdict("fig10");
    CHECK(v10.holds == TriBool::False);
    CHECK(*v10.failing_pole == Rat(-7, 5));
    VerdictReport v17 = verdict("fig17");
    CHECK(v17.holds == TriBool::False);
    CHECK(*v17.failing_pole == Rat(-4, 3));
    CHECK(verdict("fig1").holds == TriBool::True);
    CHECK(verdict("fig16").holds == TriBool::True);
    CHECK(verdict("fig18").holds == TriBool::True);
}

TEST_CASE("blow-up invariance of the alternating product") {
    std::mt19937 rng(77);
    for (const std::string& fig : kFigures) {
        ResolutionGraph g = corpus_graph(fig);
        CycloVector base = acampo_product(g);
        for (int t = 0; t < 4; ++t) {
            std::vector<BlowupCenter> centers;
            for (const GraphVertex& v : g.vertices)
                if (v.kind == VertexKind::Exceptional && v.branches == 1)
                    centers.push_back(VertexCenter{v.id});
            for (const GraphEdge& e : g.edges)
                if (g.vertices[e.a].branches == 1 && g.vertices[e.b].branches == 1)
                    centers.push_back(EdgeCenter{g.vertices[e.a].id, g.vertices[e.b].id});
            ResolutionGraph h = blowup_point(g, centers[rng() % centers.size()]);
            CHECK(acampo_product(h) == base);
        }
    }
}
