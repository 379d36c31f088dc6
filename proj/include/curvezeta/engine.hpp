#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "curvezeta/bipoly.hpp"
#include "curvezeta/graph.hpp"

namespace curvezeta {

// -- differential 2-forms g dx^dy -------------------------------------------

struct FormStandard {};
struct FormHessian {};
struct FormPolar { Rat alpha, beta; };
struct FormCustom { BiPoly g; };
struct FormPullback {
    std::vector<BiPoly> parametrization;
    std::vector<Rat> coefficients; // lex over pairs (i, j), i < j
};
using FormSpec = std::variant<FormStandard, FormHessian, FormPolar, FormCustom, FormPullback>;

// f_xx f_yy - f_xy^2
BiPoly hessian(const BiPoly& f);
// beta f_x - alpha f_y; (alpha, beta) != (0, 0)
BiPoly polar_form(const BiPoly& f, const Rat& alpha, const Rat& beta);
// coefficient of dx^dy in sum alpha_ij dF_i ^ dF_j
BiPoly pullback_two_form(const std::vector<BiPoly>& parametrization,
                         const std::vector<Rat>& coefficients);
// order of vanishing at a point
long multiplicity(const BiPoly& p, const Rat& x, const Rat& y);

BiPoly materialize_form(const FormSpec& form, const BiPoly& f);

// -- resolution ---------------------------------------------------------------

struct ResolveOptions {
    bool full = true;       // false: minimal embedded resolution of f alone
    int max_blowups = 500;
    bool want_contacts = false;
};

struct BlowupRecord {
    int index = 0;              // creation index, 1-based
    std::vector<int> on;        // creation indices of components through the centre
    long mu = 0;                // multiplicity of the f strict transform at the centre
    long lambda = 0;            // multiplicity of the form divisor (with layer multiplicities)
    long lambda_reduced = 0;    // multiplicity of the reduced form curve
    std::string description;    // centre and substitution summary
};

struct ResolutionResult {
    ResolutionGraph graph;
    std::vector<BlowupRecord> audit;
    std::map<std::string, int> creation_order;  // exceptional id -> blow-up number
    std::map<std::string, long> contacts;       // exceptional id -> total contact order m
    std::vector<std::string> transcript;
};

// Embedded resolution of V(f * g) at the origin by iterated point blow-ups
// (full mode), or the minimal embedded resolution of f with the form only
// carried along for numerical data and contact orders (minimal mode).
ResolutionResult resolve(const BiPoly& f, const FormSpec& form, ResolveOptions opts = {});

// Contact orders of the polar strict transform with each exceptional
// component of the minimal embedded resolution of f.
std::map<std::string, long> contact_orders_min_resolution(const BiPoly& f, const BiPoly& polar_g);

// Deterministic generic direction samples with distinct small-prime structure.
std::pair<Rat, Rat> sample_generic(int seed);
std::vector<Rat> sample_generic_vector(int seed, int n);

// True iff resolve() gives the same decorated graph (and contact orders) for
// every seed of the family.
bool genericity_stable(const BiPoly& f, const std::function<FormSpec(int)>& family,
                       const std::vector<int>& seeds, ResolveOptions opts = {});

} // namespace curvezeta
