#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvezeta/cyclo.hpp"
#include "curvezeta/graph.hpp"
#include "curvezeta/zeta.hpp"

namespace curvezeta {

enum class TriBool { False, True, Unknown };

// P1/P0 of the local monodromy at the origin as an alternating cyclotomic
// product: form components are pruned first, then each exceptional vertex
// contributes (t^N - 1)^{-chi} with chi counted against N >= 1 neighbours.
CycloVector acampo_product(const ResolutionGraph& g);

// Order d of the eigenvalue-1 block P0 = t^d - 1.  Smooth ambient: gcd of
// the strict-transform N's.  Singular ambient: only forced when that gcd is
// 1; otherwise unknown.
std::optional<long> origin_d(const ResolutionGraph& g, Ambient ambient);

struct EigenvalueContext {
    CycloVector acampo;
    std::optional<long> d_origin;
    std::vector<long> strict_Ns;
};

EigenvalueContext eigenvalue_context(const ResolutionGraph& g, Ambient ambient);

enum class Scope { Origin, Nearby };

// Is e^{2 pi i multiplier s0} a monodromy eigenvalue (at the origin, or at
// some nearby point of the zero locus)?
TriBool is_eigenvalue(const EigenvalueContext& ctx, const Rat& s0, Scope scope,
                      long multiplier = 1);

struct PoleVerdict {
    Rat pole;
    int order = 1;
    bool trivial = false;    // all candidate witnesses on the strict transform
    TriBool eigenvalue = TriBool::Unknown;
};

struct VerdictReport {
    TriBool holds = TriBool::True; // over the non-trivial poles
    std::vector<PoleVerdict> poles;
    std::optional<Rat> failing_pole;
    std::string str() const;
};

VerdictReport conjecture_verdict(const ResolutionGraph& g, Ambient ambient,
                                 long multiplier = 1);

} // namespace curvezeta
