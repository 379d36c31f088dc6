#pragma once

#include <vector>

#include "curvezeta/graph.hpp"

namespace curvezeta {

// kappa assignment and polar attachment plan for one even-length continued
// fraction [q0, ..., qw]: kappa = 2 on chain interiors, kappa_{s_k} =
// q_{k+1} + 2 for k <= w-2, kappa_{s_{w-1}} = q_w + 1; the final vertex s_w
// gets kappa 1.  Polar branches: q_{2j} of them at vertex s_{2j-1}.
struct BranchPlan {
    std::vector<long> cf;
    std::vector<long> s;       // s_k = q_0 + ... + q_k
    std::vector<long> kappa;   // kappa[i] for vertex i+1, i = 0..s_w-1
    std::vector<long> polar;   // polar attachment count per vertex (1-based shifted)
};

BranchPlan kappa_assignment(const std::vector<long>& cf);

// Dual graph of the minimal embedded resolution of y^b - x^a together with
// the generic-polar attachments ((0,2) circles) and the strict transform;
// numerical data solved from the kappa assignment.  Vertices are created in
// blow-up order E1..E{s_w}.
ResolutionGraph build_Bab(long a, long b);

struct ZariskiSpec {
    std::vector<std::pair<long, long>> pairs; // coprime (a_i, b_i), a_i > b_i >= 2
};

// Chains B(a_1,b_1), ..., B(a_g,b_g): the strict-transform slot of each piece
// is replaced by the first vertex of the next piece; dead branches and their
// polar attachments are preserved verbatim; data recomputed globally.
ResolutionGraph assemble_zariski_pairs(const ZariskiSpec& spec);

// Shape-only construction (exceptional subgraph + strict transform + polar
// circles with kappa values but no N, nu); used internally and by tests.
ResolutionGraph build_Bab_shape(long a, long b);

// The f-part alone: polar circles dropped, data solved for the standard
// 2-form.  This is the minimal embedded resolution of y^b - x^a itself and
// is independent of any polar genericity assumption.
ResolutionGraph build_Bab_f_part(long a, long b);

} // namespace curvezeta
