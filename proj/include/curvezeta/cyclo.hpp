#pragma once

#include <map>
#include <string>

#include "curvezeta/ratfun.hpp"

namespace curvezeta {

// Formal product of cyclotomic polynomials Phi_k^{e_k}, stored as the map of
// nonzero integer exponents.  All monodromy arithmetic happens at this level;
// polynomials are only materialised for verification.
class CycloVector {
public:
    CycloVector() = default;
    explicit CycloVector(std::map<long, int> exps) : e_(std::move(exps)) { strip(); }

    static CycloVector one() { return CycloVector(); }
    // t^N - 1 = prod_{k | N} Phi_k
    static CycloVector of_power(long N);

    const std::map<long, int>& exponents() const { return e_; }
    int exponent(long k) const;
    bool is_one() const { return e_.empty(); }

    CycloVector operator*(const CycloVector& o) const;
    CycloVector pow(int e) const;
    bool operator==(const CycloVector& o) const { return e_ == o.e_; }
    bool operator!=(const CycloVector& o) const { return e_ != o.e_; }

    // Total degree of the represented rational function: sum e_k * phi(k).
    long degree() const;

    // Expand into an explicit rational function in t.
    RatFun expand() const;

    // "Phi_14 * Phi_28 / Phi_1" style rendering.
    std::string str() const;

private:
    void strip();
    std::map<long, int> e_;
};

// The k-th cyclotomic polynomial, monic in Z[t].
UniPoly cyclotomic_poly(long k);

} // namespace curvezeta
