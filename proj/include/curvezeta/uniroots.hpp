#pragma once

#include <utility>
#include <vector>

#include "curvezeta/unipoly.hpp"

namespace curvezeta {

// Factorisation of a univariate polynomial over Q as
//   unit * x^zero_mult * prod (x - r)^e * prod q_i(x)^e_i,
// where every q_i is monic without rational roots.  Factors of degree <= 4
// are guaranteed irreducible; "certified" is false when a factor of degree
// >= 5 was left unsplit (it may be reducible).
struct UniFactors {
    Rat unit{1};
    int zero_mult = 0;
    std::vector<std::pair<Rat, int>> rational_roots;  // (root, multiplicity)
    std::vector<std::pair<UniPoly, int>> irreducible; // monic, degree >= 2
    bool certified = true;
};

UniFactors factor_rationals(const UniPoly& p);

// Rational roots with multiplicities (no full factorisation of the rest).
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p);

} // namespace curvezeta
