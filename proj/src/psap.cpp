#include "hbf/psap.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace hbf {

namespace {

void require_g(const GFunction& g) {
    if (g.U == nullptr || g.values.size() != g.U->size())
        throw std::invalid_argument("GFunction: needs 2^m + 1 values");
    if (g.k == 0 || g.k > 27)
        throw std::invalid_argument("GFunction: dimension out of range");
}

void require_u0(const PsapContext& ctx, Field::Elt u0) {
    if (u0 == 1 || !ctx.U.contains(u0))
        throw std::invalid_argument("u0 must lie in U \\ {1}");
}

} // namespace

PsapContext::PsapContext(const Field& f)
    : big(&f), U(make_ugroup(f)), small(f.degree() / 2), iso(f, small) {}

Field::Elt PsapContext::u0_from_exponent(std::uint64_t exp) const {
    const std::uint64_t q = std::uint64_t{1} << m();
    if (exp < 1 || exp > q)
        throw std::invalid_argument("u0 exponent must be in [1, 2^m]");
    return U.elements[exp];
}

std::int64_t restriction_sum(const BooleanFunction& f, const UGroup& U) {
    if (f.ctx == nullptr || f.table.size() != f.ctx->size())
        throw std::invalid_argument("BooleanFunction: table length must be 2^n");
    require_same_field(*f.ctx, *U.ctx);
    std::int64_t sum = 0;
    for (Field::Elt u : U.elements)
        sum += f.table[u] ? -1 : 1;
    return sum;
}

bool check_psap_symmetry(const BooleanFunction& f) {
    if (f.ctx == nullptr || f.table.size() != f.ctx->size())
        throw std::invalid_argument("BooleanFunction: table length must be 2^n");
    const Field& F = *f.ctx;
    if (F.degree() % 2 != 0)
        throw std::invalid_argument("check_psap_symmetry: n must be even");
    if (f.table[0] != 0)
        return false;
    const Field::Elt c = F.pow_gamma((std::uint64_t{1} << (F.degree() / 2)) + 1);
    for (std::size_t x = 1; x < F.size(); ++x)
        if (f.table[F.mul(c, static_cast<Field::Elt>(x))] != f.table[x])
            return false;
    return true;
}

bool check_psap_symmetry(const VectorialFunction& F) {
    require_function(F);
    const Field& f = *F.ctx;
    if (f.degree() % 2 != 0)
        throw std::invalid_argument("check_psap_symmetry: n must be even");
    if (F.table[0] != 0)
        return false;
    const Field::Elt c = f.pow_gamma((std::uint64_t{1} << (f.degree() / 2)) + 1);
    for (std::size_t x = 1; x < f.size(); ++x)
        if (F.table[f.mul(c, static_cast<Field::Elt>(x))] != F.table[x])
            return false;
    return true;
}

VectorialFunction lift_g_to_f(const GFunction& g) {
    require_g(g);
    const UGroup& U = *g.U;
    const Field& f = *U.ctx;
    VectorialFunction F = zero_vectorial(f, g.k);
    // x = gamma^e has x^(2^m-1) = u_{e mod (2^m+1)}
    for (std::uint32_t e = 0; e < f.order(); ++e)
        F.table[f.pow_gamma(e)] = g.values[e % U.size()];
    return F;
}

GFunction restrict_f_to_g(const VectorialFunction& F, const UGroup& U) {
    require_function(F);
    require_same_field(*F.ctx, *U.ctx);
    if (!check_psap_symmetry(F))
        throw std::invalid_argument("restrict_f_to_g: function is not coset-invariant with F(0) = 0");
    GFunction g{&U, F.k, std::vector<std::uint32_t>(U.size())};
    for (std::size_t j = 0; j < U.size(); ++j)
        g.values[j] = F.table[F.ctx->pow(U.elements[j], U.s)];
    return g;
}

std::vector<Field::Elt> t_construction_core(const PsapContext& ctx, Field::Elt u0) {
    require_u0(ctx, u0);
    if (ctx.m() < 2)
        throw std::invalid_argument("t_construction: requires m >= 2");
    const Field& f = *ctx.big;
    const unsigned m = ctx.m();
    std::vector<Field::Elt> out(ctx.U.size());
    for (std::size_t j = 0; j < ctx.U.size(); ++j) {
        const Field::Elt u = ctx.U.elements[j];
        Field::Elt partial = 0, p = 1;
        for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (m - 1)); ++i) {
            p = f.mul(p, u);
            partial = f.add(partial, p);
        }
        out[j] = ctx.iso.project(f.trace_to(f.mul(u0, partial), m));
    }
    return out;
}

std::vector<Field::Elt> t_construction_core_squared(const PsapContext& ctx, Field::Elt u0) {
    require_u0(ctx, u0);
    if (ctx.m() < 2)
        throw std::invalid_argument("t_construction: requires m >= 2");
    const Field& f = *ctx.big;
    const unsigned m = ctx.m();
    const Field::Elt u0_sq = f.square(u0);
    const Field::Elt u0_inv_sq = f.square(f.inv(u0));
    std::vector<Field::Elt> out(ctx.U.size());
    for (std::size_t j = 0; j < ctx.U.size(); ++j) {
        const Field::Elt u = ctx.U.elements[j];
        if (u == 1) {
            out[j] = 0;
            continue;
        }
        const Field::Elt sq = f.add(f.mul(u0_sq, f.inv(f.add(1, f.inv(u)))),
                                    f.mul(u0_inv_sq, f.inv(f.add(1, u))));
        assert(f.in_subfield(sq, m));
        // square root inside the subfield
        Field::Elt root = sq;
        for (unsigned i = 0; i + 1 < m; ++i)
            root = f.square(root);
        out[j] = ctx.iso.project(root);
    }
    return out;
}

GFunction t_construction_g(const PsapContext& ctx, Field::Elt u0) {
    const std::vector<Field::Elt> core = t_construction_core(ctx, u0);
    GFunction g{&ctx.U, ctx.m(), std::vector<std::uint32_t>(core.begin(), core.end())};
    return g;
}

VectorialFunction t_construction(const PsapContext& ctx, Field::Elt u0) {
    return lift_g_to_f(t_construction_g(ctx, u0));
}

bool is_balanced(const std::vector<std::uint32_t>& h, unsigned m, unsigned k) {
    if (k == 0 || k > m)
        throw std::invalid_argument("is_balanced: requires 1 <= k <= m");
    if (h.size() != (std::size_t{1} << m))
        throw std::invalid_argument("is_balanced: table length must be 2^m");
    std::vector<std::uint64_t> fibers(std::size_t{1} << k, 0);
    for (std::uint32_t w : h) {
        if (w >> k)
            throw std::invalid_argument("is_balanced: value wider than k bits");
        fibers[w] += 1;
    }
    const std::uint64_t want = std::uint64_t{1} << (m - k);
    for (std::uint64_t c : fibers)
        if (c != want)
            return false;
    return true;
}

VectorialFunction balanced_compose(const std::vector<std::uint32_t>& h, unsigned k,
                                   const VectorialFunction& T) {
    require_function(T);
    const unsigned m = T.ctx->degree() / 2;
    if (T.k != m)
        throw std::invalid_argument("balanced_compose: T must map onto F_{2^m} (k = m)");
    if (!is_balanced(h, m, k))
        throw std::invalid_argument("balanced_compose: h is not balanced");
    if (h[0] != 0)
        throw std::invalid_argument("balanced_compose: h(0) must be 0");
    VectorialFunction out{T.ctx, k, std::vector<std::uint32_t>(T.table.size())};
    for (std::size_t x = 0; x < T.table.size(); ++x)
        out.table[x] = h[T.table[x]];
    return out;
}

DicksonPoly dickson_poly(std::uint32_t r) {
    if (r > (std::uint32_t{1} << 20))
        throw std::invalid_argument("dickson_poly: r exceeds the 2^20 guard");
    if (r == 0)
        return DicksonPoly{0, {false}};
    // word-packed recurrence: D_{r+2} = (D_{r+1} << 1) ^ D_r
    const std::size_t words = (r + 1 + 63) / 64;
    std::vector<std::uint64_t> prev(words, 0), cur(words, 0), next(words, 0);
    cur[0] = 2;  // D_1 = x
    for (std::uint32_t i = 2; i <= r; ++i) {
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t shifted = (cur[w] << 1) | carry;
            carry = cur[w] >> 63;
            next[w] = shifted ^ prev[w];
        }
        prev.swap(cur);
        cur.swap(next);
    }
    DicksonPoly D{r, std::vector<bool>(r + 1, false)};
    for (std::uint32_t e = 0; e <= r; ++e)
        D.coeffs[e] = (cur[e / 64] >> (e % 64)) & 1u;
    return D;
}

DicksonPoly dickson_poly_closed(std::uint32_t r) {
    if (r > (std::uint32_t{1} << 20))
        throw std::invalid_argument("dickson_poly: r exceeds the 2^20 guard");
    if (r == 0)
        return DicksonPoly{0, {false}};
    DicksonPoly D{r, std::vector<bool>(r + 1, false)};
    // (r/(r-i)) C(r-i, i) = C(r-i, i) + C(r-i-1, i-1); a binomial is odd iff
    // the subtrahend's bits are covered (Lucas)
    const auto odd_binom = [](std::uint64_t a, std::uint64_t b) -> unsigned {
        if (b > a)
            return 0;
        return ((a - b) & b) == 0 ? 1u : 0u;
    };
    for (std::uint32_t i = 0; i <= r / 2; ++i) {
        unsigned c = odd_binom(r - i, i);
        if (i >= 1)
            c ^= odd_binom(r - i - 1, i - 1);
        D.coeffs[r - 2 * i] = c & 1u;
    }
    return D;
}

Field::Elt dickson_eval(const DicksonPoly& D, const Field& f, Field::Elt x) {
    Field::Elt acc = 0;
    for (std::size_t e = D.coeffs.size(); e-- > 0;)
        acc = f.add(f.mul(acc, x), D.coeffs[e] ? 1u : 0u);
    return acc;
}

namespace {

std::vector<bool> poly_mul_f2(const std::vector<bool>& a, const std::vector<bool>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<bool> out(a.size() + b.size() - 1, false);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j])
                    out[i + j] = !out[i + j];
    return out;
}

} // namespace

DicksonPoly dickson_compose(const DicksonPoly& outer, const DicksonPoly& inner) {
    // Horner over polynomials: result = sum coeffs[e] * inner^e
    std::vector<bool> acc;
    for (std::size_t e = outer.coeffs.size(); e-- > 0;) {
        acc = poly_mul_f2(acc, inner.coeffs);
        if (outer.coeffs[e]) {
            if (acc.empty())
                acc.assign(1, false);
            acc[0] = !acc[0];
        }
    }
    DicksonPoly out;
    out.r = outer.r * inner.r;
    out.coeffs = std::move(acc);
    while (!out.coeffs.empty() && !out.coeffs.back())
        out.coeffs.pop_back();
    // normalize to length r+1 so equal polynomials compare equal
    out.coeffs.resize(out.r + 1, false);
    return out;
}

bool dickson_is_pp(std::uint64_t r, unsigned m) {
    if (r == 0)
        throw std::invalid_argument("dickson_is_pp: r must be positive");
    const std::uint64_t mod = (std::uint64_t{1} << (2 * m)) - 1;
    return std::gcd(r, mod) == 1;
}

VectorialFunction dickson_construction(const PsapContext& ctx, Field::Elt u0, std::uint32_t r) {
    if (!dickson_is_pp(r, ctx.m()))
        throw std::invalid_argument("dickson_construction: gcd(r, 2^(2m) - 1) != 1");
    const DicksonPoly D = dickson_poly(r);
    std::vector<Field::Elt> core = t_construction_core(ctx, u0);
    GFunction g{&ctx.U, ctx.m(), std::vector<std::uint32_t>(core.size())};
    for (std::size_t j = 0; j < core.size(); ++j)
        g.values[j] = dickson_eval(D, ctx.small, core[j]);
    return lift_g_to_f(g);
}

VectorialFunction trace_form_eval(const TraceForm& tf) {
    if (tf.ctx == nullptr || tf.ctx->degree() % 2 != 0)
        throw std::invalid_argument("trace_form_eval: needs an even-degree field");
    const Field& f = *tf.ctx;
    const unsigned m = f.degree() / 2;
    const std::size_t ucount = (std::size_t{1} << m) + 1;
    if (tf.k == 0 || tf.rows.size() != tf.k)
        throw std::invalid_argument("trace_form_eval: needs k coefficient rows");
    for (const auto& row : tf.rows)
        if (row.size() != ucount)
            throw std::invalid_argument("trace_form_eval: each row needs 2^m + 1 coefficients");

    const UGroup U = make_ugroup(f);
    VectorialFunction F = zero_vectorial(f, tf.k);
    // the form is constant on cosets u F_{2^m}^*, so evaluate once per u
    std::vector<std::uint32_t> coset_word(ucount, 0);
    for (std::size_t j = 0; j < ucount; ++j) {
        const Field::Elt u = U.elements[j];
        std::uint32_t word = 0;
        for (unsigned i = 0; i < tf.k; ++i) {
            Field::Elt acc = tf.rows[i][0];
            Field::Elt p = 1;
            for (std::size_t jj = 1; jj < ucount; ++jj) {
                p = f.mul(p, u);
                acc = f.add(acc, f.mul(tf.rows[i][jj], p));
            }
            word |= static_cast<std::uint32_t>(f.abs_trace(acc)) << i;
        }
        coset_word[j] = word;
    }
    for (std::uint32_t e = 0; e < f.order(); ++e)
        F.table[f.pow_gamma(e)] = coset_word[e % ucount];
    std::uint32_t zero_word = 0;
    for (unsigned i = 0; i < tf.k; ++i)
        zero_word |= static_cast<std::uint32_t>(f.abs_trace(tf.rows[i][0])) << i;
    F.table[0] = zero_word;
    return F;
}

std::vector<Field::Elt> pi_map(const VectorialFunction& F, const Field& value_field,
                               const DualBasis& basis) {
    require_function(F);
    if (basis.k != F.k || value_field.degree() % basis.k != 0)
        throw std::invalid_argument("pi_map: basis dimension must match k");
    std::vector<Field::Elt> out(F.table.size(), 0);
    for (std::size_t x = 0; x < F.table.size(); ++x) {
        Field::Elt acc = 0;
        for (unsigned j = 0; j < F.k; ++j)
            if (F.table[x] >> j & 1u)
                acc = value_field.add(acc, basis.primal[j]);
        out[x] = acc;
    }
    return out;
}

VectorialFunction sigma_map(const Field& domain, const std::vector<Field::Elt>& f_tilde,
                            const Field& value_field, const DualBasis& basis) {
    if (f_tilde.size() != domain.size())
        throw std::invalid_argument("sigma_map: table length must be 2^n");
    if (basis.k == 0 || value_field.degree() % basis.k != 0)
        throw std::invalid_argument("sigma_map: basis does not fit the value field");
    VectorialFunction F = zero_vectorial(domain, basis.k);
    for (std::size_t x = 0; x < f_tilde.size(); ++x) {
        std::uint32_t word = 0;
        for (unsigned j = 0; j < basis.k; ++j)
            word |= static_cast<std::uint32_t>(
                        subfield_trace(value_field, value_field.mul(basis.dual[j], f_tilde[x]), basis.k))
                    << j;
        F.table[x] = word;
    }
    return F;
}

} // namespace hbf
