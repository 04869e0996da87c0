#pragma once

#include <cstdint>
#include <vector>

#include "hbf/vectorial.hpp"

namespace hbf {

/// g: U -> F_2^k as an array over the U index, values[j] = g(u_j).
struct GFunction {
    const UGroup* U = nullptr;
    unsigned k = 0;
    std::vector<std::uint32_t> values;  // length 2^m + 1

    bool operator==(const GFunction& o) const { return k == o.k && values == o.values; }
};

/// Everything the constructions need for one even-degree field: the group U,
/// a standalone GF(2^m), and the canonical isomorphism onto the subfield.
/// Word encodings of F_{2^m} values are the element bits of the standalone
/// field, i.e. coordinates in its polynomial basis.
struct PsapContext {
    const Field* big;
    UGroup U;
    Field small;
    SubfieldIso iso;

    explicit PsapContext(const Field& f);
    PsapContext(const PsapContext&) = delete;
    PsapContext& operator=(const PsapContext&) = delete;

    unsigned m() const { return U.m; }
    /// u0 = (gamma^(2^m-1))^exp; exp in [1, 2^m] avoids u0 = 1.
    Field::Elt u0_from_exponent(std::uint64_t exp) const;
};

/// sum_{u in U} (-1)^f(u); equals 1 exactly for the hyper-bent members of
/// the coset-invariant class.
std::int64_t restriction_sum(const BooleanFunction& f, const UGroup& U);

/// f(gamma^(2^m+1) x) = f(x) for all x, and f(0) = 0.
bool check_psap_symmetry(const BooleanFunction& f);
bool check_psap_symmetry(const VectorialFunction& F);

/// F(0) = 0 and F(x) = g(x^(2^m-1)) elsewhere.
VectorialFunction lift_g_to_f(const GFunction& g);

/// values[j] = F(u_j^s); inverse of the lift on symmetric functions, which
/// is checked as a precondition.
GFunction restrict_f_to_g(const VectorialFunction& F, const UGroup& U);

/// Field-valued core of T_{u0}: g(u) = Tr_m^n(u0 * sum_{i=1}^{2^(m-1)} u^i)
/// for each u in U, expressed in the standalone GF(2^m). u0 must lie in
/// U \ {1}; m >= 2 (the closed form below needs g(1) = 0, which fails at
/// m = 1). Evaluated by the direct geometric sum.
std::vector<Field::Elt> t_construction_core(const PsapContext& ctx, Field::Elt u0);

/// Same values through the squared closed form
///   g(u)^2 = u0^2/(1 + u^-1) + u0^-2/(1 + u)   (u != 1)
/// followed by the subfield square root z -> z^(2^(m-1)). Kept as a second
/// route; tests require pointwise agreement with the geometric sum.
std::vector<Field::Elt> t_construction_core_squared(const PsapContext& ctx, Field::Elt u0);

/// T_{u0} as a k = m word-valued function on all of GF(2^n).
VectorialFunction t_construction(const PsapContext& ctx, Field::Elt u0);
GFunction t_construction_g(const PsapContext& ctx, Field::Elt u0);

/// Every fiber of h: F_{2^m} -> F_2^k (table of 2^m words) has size 2^(m-k).
bool is_balanced(const std::vector<std::uint32_t>& h, unsigned m, unsigned k);

/// h(T(x)) for balanced h with h(0) = 0; T must be a k = m construction
/// output (its word values index h directly).
VectorialFunction balanced_compose(const std::vector<std::uint32_t>& h, unsigned k,
                                   const VectorialFunction& T);

/// Binary Dickson polynomial D_r as coefficient bits over F_2
/// (coeffs[e] = coefficient of x^e). D_0 = 0, D_1 = x,
/// D_{r+2} = x * D_{r+1} + D_r.
struct DicksonPoly {
    std::uint32_t r = 0;
    std::vector<bool> coeffs;

    bool operator==(const DicksonPoly&) const = default;
};

/// By the recurrence. r <= 2^20.
DicksonPoly dickson_poly(std::uint32_t r);
/// By the closed-form binomial coefficients (r/(r-i)) C(r-i, i) mod 2,
/// evaluated through Lucas' theorem; the independent route.
DicksonPoly dickson_poly_closed(std::uint32_t r);
/// Horner evaluation of D at a field point.
Field::Elt dickson_eval(const DicksonPoly& D, const Field& f, Field::Elt x);
/// Polynomial composition outer(inner) over F_2.
DicksonPoly dickson_compose(const DicksonPoly& outer, const DicksonPoly& inner);
/// Noebauer's criterion: D_r permutes F_{2^m} iff gcd(r, 2^(2m) - 1) = 1.
bool dickson_is_pp(std::uint64_t r, unsigned m);

/// D_r applied to the field-valued T_{u0} core, re-encoded as m-bit words.
/// Requires gcd(r, 2^(2m) - 1) = 1.
VectorialFunction dickson_construction(const PsapContext& ctx, Field::Elt u0, std::uint32_t r);

/// Coefficient matrix of the canonical form: row i holds a_{i,0} .. a_{i,2^m}
/// and evaluates to Tr_1^n(sum_{j>=1} a_{i,j} x^(j(2^m-1)) + a_{i,0}).
struct TraceForm {
    const Field* ctx = nullptr;
    unsigned k = 0;
    std::vector<std::vector<Field::Elt>> rows;  // k rows of length 2^m + 1
};

/// Evaluates the form on every x. Exponents j(2^m-1) are >= 1, so at x = 0
/// only the constant term contributes: F_i(0) = Tr(a_{i,0}).
VectorialFunction trace_form_eval(const TraceForm& tf);

/// pi: word-valued F with dual-basis data -> F_{2^k}-valued table
/// sum_j f_j(x) alpha_j, values in the standalone field `value_field`.
std::vector<Field::Elt> pi_map(const VectorialFunction& F, const Field& value_field,
                               const DualBasis& basis);

/// sigma: F_{2^k}-valued table -> word components Tr_1^k(beta_j * Ftilde(x)).
/// Inverse of pi for a basis and its dual.
VectorialFunction sigma_map(const Field& domain, const std::vector<Field::Elt>& f_tilde,
                            const Field& value_field, const DualBasis& basis);

} // namespace hbf
