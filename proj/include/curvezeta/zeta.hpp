#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "curvezeta/graph.hpp"
#include "curvezeta/ltexpr.hpp"
#include "curvezeta/ratfun.hpp"

namespace curvezeta {

// Topological zeta function of the decorated graph, as a reduced rational
// function of s.
RatFun topological_zeta(const ResolutionGraph& g);

// Motivic zeta function via the resolution formula, with L^{-s} = T.
// Requires genus 0 on every exceptional vertex (PositiveGenus otherwise).
LTRatExpr motivic_zeta(const ResolutionGraph& g);

// Term-wise specialization of the motivic strata; equals topological_zeta.
RatFun specialize_to_topological(const ResolutionGraph& g);

struct CandidatePole {
    Rat value;                      // -nu/N
    std::set<std::string> witnesses;
    bool trivial = false;           // all witnesses lie on the strict transform
};

std::vector<CandidatePole> candidate_poles(const ResolutionGraph& g);

// alpha_j = nu_j - (nu0/N0) N_j for every neighbour of v.
std::map<std::string, Rat> alpha_values(const ResolutionGraph& g, const std::string& v);

// Residue of the candidate pole s0 = -nu0/N0 contributed by v alone:
// (1/N0)(2 - 2 g0 - r + sum points/alpha_j).  Throws NeighborSameRatio when
// some neighbour shares the ratio (the candidate has order 2 there).
Rat contribution_residue(const ResolutionGraph& g, const std::string& v, const Rat& s0);

// True iff genus 0 and at most two neighbour alphas differ from 1, which
// forces the contribution residue to vanish.
bool non_contribution_check(const ResolutionGraph& g, const std::string& v);

struct PoleReport {
    std::vector<CandidatePole> candidates;
    std::vector<std::pair<Rat, int>> actual;            // value, order
    std::map<std::string, Rat> contributions;           // per-witness residues where defined
    RatFun zeta;
};

PoleReport actual_poles(const ResolutionGraph& g);

struct AllPolesCheck {
    bool ok = false;
    std::set<Rat> predicted;
    std::set<Rat> actual;
};

// For a minimal Standard-form resolution graph: predicted poles (strict
// ratios and exceptional vertices meeting >= 3 points) equal actual poles.
AllPolesCheck veys_all_poles_check(const ResolutionGraph& g);

} // namespace curvezeta
