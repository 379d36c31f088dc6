#include "curvezeta/uniroots.hpp"

#include <algorithm>

#include "curvezeta/errors.hpp"

namespace curvezeta {

namespace {

// p(x + t)
UniPoly shift(const UniPoly& p, const Rat& t) {
    UniPoly r;
    UniPoly lin(std::vector<Rat>{t, Rat(1)});
    for (int i = p.degree(); i >= 0; --i) r = r * lin + UniPoly(p.coeff(i));
    return r;
}

// Roots of the squarefree primitive integer polynomial W (no zero root).
std::vector<Rat> squarefree_rational_roots(const UniPoly& W) {
    std::vector<Rat> roots;
    if (W.degree() <= 0) return roots;
    if (W.degree() == 1) {
        roots.push_back(-W.coeff(0) / W.coeff(1));
        return roots;
    }
    Int c0 = rat_num(W.coeff(0));
    Int cl = rat_num(W.leading());
    std::vector<Int> ps = divisors(abs(c0));
    std::vector<Int> qs = divisors(abs(cl));
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat cand(p, q);
            cand.canonicalize();
            if (W.eval(cand) == 0) roots.push_back(cand);
            if (W.eval(-cand) == 0) roots.push_back(-cand);
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Split a monic quartic without rational roots into two monic quadratics
// over Q, when possible.
bool split_quartic(const UniPoly& q4, UniPoly* f1, UniPoly* f2) {
    Rat p = q4.coeff(3);
    UniPoly d = shift(q4, -p / 4); // depressed: y^4 + Q y^2 + R y + S
    Rat Q = d.coeff(2), R = d.coeff(1), S = d.coeff(0);
    auto build = [&](const Rat& a, const Rat& b, const Rat& dd) {
        UniPoly g1(std::vector<Rat>{b, a, Rat(1)});
        UniPoly g2(std::vector<Rat>{dd, -a, Rat(1)});
        *f1 = shift(g1, p / 4);
        *f2 = shift(g2, p / 4);
        return true;
    };
    if (R == 0) {
        Rat disc = Q * Q - 4 * S, rt;
        if (rat_is_square(disc, &rt)) return build(Rat(0), (Q - rt) / 2, (Q + rt) / 2);
    }
    // z (Q+z)^2 - 4 S z - R^2 = 0 with z = a^2
    UniPoly res(std::vector<Rat>{-R * R, Q * Q - 4 * S, 2 * Q, Rat(1)});
    for (const auto& [z, mult] : rational_roots(res)) {
        (void)mult;
        if (z <= 0) continue;
        Rat a;
        if (!rat_is_square(z, &a)) continue;
        Rat b = (Q + z - R / a) / 2;
        Rat dd = (Q + z + R / a) / 2;
        return build(a, b, dd);
    }
    return false;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& p) {
    std::vector<std::pair<Rat, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    UniPoly w = p;
    int k = w.order();
    if (k > 0) {
        std::vector<Rat> c(w.coeffs().begin() + k, w.coeffs().end());
        w = UniPoly(std::move(c));
        out.emplace_back(Rat(0), k);
    }
    if (w.degree() >= 1) {
        UniPoly sf = w.exact_div(gcd(w, w.derivative())).primitive_integer();
        for (const Rat& r : squarefree_rational_roots(sf)) {
            UniPoly lin(std::vector<Rat>{-r, Rat(1)});
            int m = 0;
            while (true) {
                auto [q, rem] = w.divrem(lin);
                if (!rem.is_zero()) break;
                w = q;
                ++m;
            }
            out.emplace_back(r, m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

UniFactors factor_rationals(const UniPoly& p) {
    if (p.is_zero()) throw Error("cannot factor the zero polynomial");
    UniFactors f;
    UniPoly rest = p;
    for (const auto& [root, mult] : rational_roots(p)) {
        if (root == 0) {
            f.zero_mult = mult;
            std::vector<Rat> c(rest.coeffs().begin() + mult, rest.coeffs().end());
            rest = UniPoly(std::move(c));
        } else {
            f.rational_roots.emplace_back(root, mult);
            UniPoly lin(std::vector<Rat>{-root, Rat(1)});
            for (int i = 0; i < mult; ++i) rest = rest.exact_div(lin);
        }
    }
    // rest has no rational roots; peel repeated factors via gcd chains
    while (rest.degree() >= 1) {
        UniPoly g = gcd(rest, rest.derivative());
        UniPoly sqfree = rest.exact_div(g).monic(); // product of distinct factors
        std::vector<UniPoly> pieces;
        UniPoly w = sqfree;
        while (w.degree() >= 2) {
            if (w.degree() <= 3) {
                pieces.push_back(w.monic());
                break;
            }
            if (w.degree() == 4) {
                UniPoly a, b;
                if (split_quartic(w.monic(), &a, &b)) {
                    pieces.push_back(a);
                    pieces.push_back(b);
                } else {
                    pieces.push_back(w.monic());
                }
                break;
            }
            // degree >= 5: try quartic-or-lower splits off? keep whole
            pieces.push_back(w.monic());
            f.certified = false;
            break;
        }
        for (const UniPoly& piece : pieces) {
            int m = 0;
            while (true) {
                auto [q, rem] = rest.divrem(piece);
                if (!rem.is_zero()) break;
                rest = q;
                ++m;
            }
            f.irreducible.emplace_back(piece, m);
        }
        if (pieces.empty()) break;
    }
    if (rest.degree() >= 1) throw Error("internal: unfactored remainder");
    f.unit = rest.coeff(0);
    return f;
}

} // namespace curvezeta
