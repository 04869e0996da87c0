#include "hbf/vectorial.hpp"

#include <bit>
#include <stdexcept>

namespace hbf {

namespace {

void require_dimension(unsigned k) {
    if (k == 0 || k > 27)
        throw std::invalid_argument("dimension k must be in [1, 27]");
}

void require_on_u(const VectorialFunction& F, const UGroup& U) {
    require_function(F);
    require_same_field(*F.ctx, *U.ctx);
}

unsigned dot(std::uint32_t v, std::uint32_t w) {
    return static_cast<unsigned>(std::popcount(v & w)) & 1u;
}

} // namespace

VectorialFunction zero_vectorial(const Field& f, unsigned k) {
    require_dimension(k);
    return VectorialFunction{&f, k, std::vector<std::uint32_t>(f.size(), 0)};
}

void require_function(const VectorialFunction& F) {
    if (F.ctx == nullptr || F.table.size() != F.ctx->size())
        throw std::invalid_argument("VectorialFunction: table length must be 2^n");
    require_dimension(F.k);
    if (F.k > F.ctx->degree())
        throw std::invalid_argument("VectorialFunction: k must not exceed n");
}

BooleanFunction component(const VectorialFunction& F, std::uint32_t v) {
    require_function(F);
    if (v == 0 || v >> F.k)
        throw std::invalid_argument("component: selector must be a nonzero k-bit word");
    BooleanFunction f{F.ctx, std::vector<std::uint8_t>(F.table.size())};
    for (std::size_t x = 0; x < F.table.size(); ++x)
        f.table[x] = static_cast<std::uint8_t>(dot(v, F.table[x]));
    return f;
}

GroupRingElement zero_group_ring(unsigned k) {
    require_dimension(k);
    return GroupRingElement{k, std::vector<std::int64_t>(std::size_t{1} << k, 0)};
}

GroupRingElement psap_target(unsigned m, unsigned k) {
    if (k > m)
        throw std::invalid_argument("dimension exceeds m: 2^(m-k) is not an integer");
    GroupRingElement t = zero_group_ring(k);
    const std::int64_t fiber = std::int64_t{1} << (m - k);
    for (auto& c : t.coeffs)
        c = fiber;
    t.coeffs[0] += 1;
    return t;
}

std::int64_t character_sum(const GroupRingElement& A, std::uint32_t v) {
    std::int64_t sum = 0;
    for (std::size_t b = 0; b < A.coeffs.size(); ++b)
        sum += dot(v, static_cast<std::uint32_t>(b)) ? -A.coeffs[b] : A.coeffs[b];
    return sum;
}

GroupRingElement invert_characters(const std::vector<std::int64_t>& values, unsigned k) {
    require_dimension(k);
    const std::size_t size = std::size_t{1} << k;
    if (values.size() != size)
        throw std::invalid_argument("invert_characters: need one value per character");
    GroupRingElement A = zero_group_ring(k);
    for (std::size_t g = 0; g < size; ++g) {
        // a_g = (1/|H|) sum_v chi_v(A) chi_v(g^-1); every element is its own
        // inverse here and chi_v(g) = (-1)^<v,g>
        std::int64_t acc = 0;
        for (std::size_t v = 0; v < size; ++v)
            acc += dot(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(g)) ? -values[v] : values[v];
        if (acc % static_cast<std::int64_t>(size) != 0)
            throw std::invalid_argument("invert_characters: values are not the character sums of an integer element");
        A.coeffs[g] = acc / static_cast<std::int64_t>(size);
    }
    return A;
}

GroupRingElement restriction_multiset(const VectorialFunction& F, const UGroup& U) {
    require_on_u(F, U);
    GroupRingElement A = zero_group_ring(F.k);
    for (Field::Elt u : U.elements)
        A.coeffs[F.table[u]] += 1;
    return A;
}

bool check_condition2(const VectorialFunction& F, const UGroup& U) {
    require_on_u(F, U);
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << F.k); ++v) {
        std::int64_t sum = 0;
        for (Field::Elt u : U.elements)
            sum += dot(v, F.table[u]) ? -1 : 1;
        if (sum != 1)
            return false;
    }
    return true;
}

bool check_condition3(const VectorialFunction& F, const UGroup& U) {
    require_on_u(F, U);
    if (F.k > U.m)
        throw std::invalid_argument("dimension exceeds m: 2^(m-k) is not an integer");
    return restriction_multiset(F, U) == psap_target(U.m, F.k);
}

bool is_vectorial_hyperbent_oracle(const VectorialFunction& F, bool override_guard,
                                   VectorialWitness* witness) {
    require_function(F);
    for (std::uint32_t v = 1; v < (std::uint32_t{1} << F.k); ++v) {
        HyperbentWitness inner;
        if (!is_hyperbent_oracle(component(F, v), override_guard, &inner)) {
            if (witness)
                *witness = VectorialWitness{v, inner};
            return false;
        }
    }
    return true;
}

} // namespace hbf
