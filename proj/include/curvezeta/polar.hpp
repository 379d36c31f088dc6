#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvezeta/graph.hpp"

namespace curvezeta {

// Exceptional vertices meeting other N >= 1 components in at least three
// points.
std::vector<std::string> find_rupture_vertices(const ResolutionGraph& g);

// Chain of exceptional components hanging off a rupture vertex whose far end
// was not created by the first blow-up.  Vertices are ordered from the
// rupture outwards.
struct DeadBranch {
    std::string rupture;
    std::vector<std::string> chain;
    std::vector<long> kappa;   // filled by branch analysis
};

std::vector<DeadBranch> find_dead_branches(const ResolutionGraph& g);

struct BranchVerdict {
    Rat alpha1;
    std::vector<Rat> deltas;   // Delta_{1,r} .. Delta_{r,r}
    Rat lhs, rhs;
    bool pass = false;
};

// alpha_1 = nu_1 - (nu_0/N_0) N_1 over the branch's rupture vertex; passes
// iff it equals 1.
BranchVerdict alpha_one_check(const ResolutionGraph& g, const DeadBranch& branch);

// Trailing chain minors Delta_{k,r} of the branch intersection matrix,
// via the recursion Delta_k = kappa_k Delta_{k+1} - Delta_{k+2}.
std::vector<Rat> branch_determinants(const std::vector<long>& kappa);

// Delta_{1,r} = Delta_{2,r}(kappa_1 - 1) + sum Delta_{j+1,r}(kappa_j - 2)
//               + kappa_r - 1        (single-vertex chains: Delta = kappa).
BranchVerdict kappa_identity_check(const ResolutionGraph& g, const DeadBranch& branch);

// Delta_{1,r} = Delta_{2,r} m_1 + ... + Delta_{r,r} m_{r-1} + m_r + 1 with
// m = total contact orders of the polar strict transform along the chain.
BranchVerdict open_question_check(const ResolutionGraph& g, const DeadBranch& branch,
                                  const std::map<std::string, long>& contact);

// kappa vector of a branch from stored self-intersections or validate().
std::vector<long> branch_kappas(const ResolutionGraph& g, const DeadBranch& branch);

} // namespace curvezeta
