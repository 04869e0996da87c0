#include "hbf/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <utility>
#include <stdexcept>
#include <string>

namespace hbf {

namespace {

// Shipped moduli, indexed by degree. Each is irreducible over F_2 with the
// residue class of x primitive; both properties are re-verified at
// construction time.
constexpr std::uint64_t kModulusTable[Field::kMaxDegree + 1] = {
    0,         0,         0x7,       0xB,       0x13,      0x25,
    0x43,      0x89,      0x11D,     0x211,     0x409,     0x805,
    0x1053,    0x201B,    0x4443,    0x8003,    0x1100B,   0x20009,
    0x40081,   0x80027,   0x100009,  0x200005,  0x400003,  0x800021,
    0x100001B,
};

unsigned poly_degree(std::uint64_t p) {
    return p ? 63u - static_cast<unsigned>(std::countl_zero(p)) : 0u;
}

std::uint64_t poly_rem(std::uint64_t a, std::uint64_t b) {
    const unsigned db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db)
        a ^= b << (poly_degree(a) - db);
    return a;
}

bool poly_irreducible(std::uint64_t p, unsigned n) {
    for (unsigned d = 1; d <= n / 2; ++d)
        for (std::uint64_t q = std::uint64_t{1} << d; q < std::uint64_t{1} << (d + 1); ++q)
            if (poly_rem(p, q) == 0)
                return false;
    return true;
}

} // namespace

std::uint64_t Field::shipped_modulus(unsigned n) {
    if (n < kMinDegree || n > kMaxDegree)
        throw std::out_of_range("GF(2^n): degree must be in [2, 24], got " + std::to_string(n));
    return kModulusTable[n];
}

Field::Field(unsigned n) { build(n, shipped_modulus(n)); }

Field::Field(unsigned n, std::uint64_t modulus) { build(n, modulus); }

void Field::build(unsigned n, std::uint64_t modulus) {
    if (n < kMinDegree || n > kMaxDegree)
        throw std::out_of_range("GF(2^n): degree must be in [2, 24], got " + std::to_string(n));
    if (poly_degree(modulus) != n)
        throw std::invalid_argument("GF(2^n): modulus degree does not match n");
    if (!poly_irreducible(modulus, n))
        throw std::invalid_argument("GF(2^n): modulus is reducible");

    n_ = n;
    modulus_ = modulus;
    size_ = std::size_t{1} << n;
    order_ = static_cast<std::uint32_t>(size_ - 1);

    // Powers of x fill the antilog table; hitting every nonzero residue
    // exactly once is equivalent to x having order 2^n - 1.
    antilog_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    std::vector<bool> seen(size_, false);
    Elt v = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (seen[v])
            throw std::invalid_argument("GF(2^n): x is not primitive for this modulus");
        seen[v] = true;
        antilog_[i] = v;
        log_[v] = i;
        v <<= 1;
        if (v >> n)
            v ^= static_cast<Elt>(modulus);
    }
    if (v != 1)
        throw std::invalid_argument("GF(2^n): x is not primitive for this modulus");

    trace_mask_ = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Elt b = Elt{1} << i;
        Elt acc = 0, p = b;
        for (unsigned j = 0; j < n_; ++j) {
            acc ^= p;
            p = mul(p, p);
        }
        // trace of a basis element is 0 or 1
        trace_mask_ |= (acc & 1u) << i;
    }
}

Field::Elt Field::checked(Elt a) const {
    if (a >= size_)
        throw std::invalid_argument("GF(2^n): element index out of range (context mismatch?)");
    return a;
}

Field::Elt Field::mul(Elt a, Elt b) const {
    checked(a);
    checked(b);
    if (a == 0 || b == 0)
        return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_)
        s -= order_;
    return antilog_[s];
}

Field::Elt Field::inv(Elt a) const {
    checked(a);
    if (a == 0)
        throw std::domain_error("GF(2^n): inverse of zero");
    return antilog_[(order_ - log_[a]) % order_];
}

Field::Elt Field::pow(Elt a, std::uint64_t e) const {
    checked(a);
    if (a == 0)
        return e == 0 ? 1 : 0;
    return antilog_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % order_)) % order_)];
}

std::uint32_t Field::log(Elt a) const {
    checked(a);
    if (a == 0)
        throw std::domain_error("GF(2^n): log of zero");
    return log_[a];
}

Field::Elt Field::frobenius(Elt a, unsigned k) const {
    Elt r = checked(a);
    for (unsigned i = 0; i < k; ++i)
        r = mul(r, r);
    return r;
}

unsigned Field::abs_trace(Elt a) const {
    return static_cast<unsigned>(std::popcount(checked(a) & trace_mask_)) & 1u;
}

Field::Elt Field::trace_to(Elt a, unsigned k) const {
    checked(a);
    if (k == 0 || n_ % k != 0)
        throw std::invalid_argument("trace_to: subfield degree must divide n");
    Elt acc = 0, p = a;
    for (unsigned i = 0; i < n_ / k; ++i) {
        acc ^= p;
        p = frobenius(p, k);
    }
    return acc;
}

bool Field::in_subfield(Elt a, unsigned k) const {
    return frobenius(checked(a), k) == a;
}

void require_same_field(const Field& a, const Field& b) {
    if (!a.same(b))
        throw std::invalid_argument("field context mismatch");
}

unsigned subfield_trace(const Field& f, Field::Elt a, unsigned k) {
    if (k == 0 || f.degree() % k != 0)
        throw std::invalid_argument("subfield_trace: k must divide n");
    if (!f.in_subfield(a, k))
        throw std::invalid_argument("subfield_trace: element not in the degree-k subfield");
    Field::Elt acc = 0, p = a;
    for (unsigned i = 0; i < k; ++i) {
        acc ^= p;
        p = f.mul(p, p);
    }
    // sum over the subfield's Galois orbit lands in F_2
    return acc & 1u;
}

DualBasis dual_basis(const Field& f, const std::vector<Field::Elt>& A) {
    const unsigned k = static_cast<unsigned>(A.size());
    if (k == 0 || k > f.degree() || f.degree() % k != 0)
        throw std::invalid_argument("dual_basis: basis size must be a divisor of n");
    for (Field::Elt a : A)
        if (!f.in_subfield(a, k))
            throw std::invalid_argument("dual_basis: element not in the degree-k subfield");

    // Linear independence over F_2, elements as bit vectors.
    {
        std::vector<std::uint32_t> rows(A.begin(), A.end());
        unsigned rank = 0;
        for (unsigned bit = 0; bit < 32 && rank < k; ++bit) {
            unsigned pivot = rank;
            while (pivot < k && !(rows[pivot] >> bit & 1u))
                ++pivot;
            if (pivot == k)
                continue;
            std::swap(rows[rank], rows[pivot]);
            for (unsigned r = 0; r < k; ++r)
                if (r != rank && (rows[r] >> bit & 1u))
                    rows[r] ^= rows[rank];
            ++rank;
        }
        if (rank != k)
            throw std::invalid_argument("dual_basis: elements are linearly dependent");
    }

    // Gram matrix G[i][l] = SubTr(alpha_i * alpha_l); writing beta_j in the
    // A coordinates reduces the defining relations to solving G c = e_j.
    std::vector<std::uint32_t> gram(k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned l = 0; l < k; ++l)
            gram[i] |= static_cast<std::uint32_t>(subfield_trace(f, f.mul(A[i], A[l]), k)) << l;

    // Invert G over F_2 (rows augmented with the identity).
    std::vector<std::uint64_t> aug(k);
    for (unsigned i = 0; i < k; ++i)
        aug[i] = gram[i] | (std::uint64_t{1} << (32 + i));
    for (unsigned col = 0; col < k; ++col) {
        unsigned pivot = col;
        while (pivot < k && !(aug[pivot] >> col & 1u))
            ++pivot;
        if (pivot == k)
            throw std::invalid_argument("dual_basis: degenerate trace form (not a basis)");
        std::swap(aug[col], aug[pivot]);
        for (unsigned r = 0; r < k; ++r)
            if (r != col && (aug[r] >> col & 1u))
                aug[r] ^= aug[col];
    }

    DualBasis out;
    out.k = k;
    out.primal = A;
    out.dual.resize(k);
    for (unsigned j = 0; j < k; ++j) {
        // column j of G^-1 gives the coordinates of beta_j
        Field::Elt beta = 0;
        for (unsigned l = 0; l < k; ++l)
            if (aug[l] >> (32 + j) & 1u)
                beta = f.add(beta, A[l]);
        out.dual[j] = beta;
    }
    return out;
}

SubfieldIso::SubfieldIso(const Field& big, const Field& small)
    : big_(&big), small_(&small) {
    const unsigned n = big.degree(), k = small.degree();
    if (k == 0 || n % k != 0)
        throw std::invalid_argument("SubfieldIso: small degree must divide big degree");
    spread_ = big.order() / small.order();

    // Roots of the small modulus inside the big field are the conjugates of
    // any one of them; scan the subfield in element-index order and keep the
    // first, which pins the isomorphism down uniquely.
    std::vector<Field::Elt> subfield;
    subfield.reserve(small.size());
    for (std::uint32_t j = 0; j < small.order(); ++j)
        subfield.push_back(big.pow_gamma(static_cast<std::uint64_t>(j) * spread_));
    std::sort(subfield.begin(), subfield.end());

    beta_ = 0;
    const std::uint64_t p = small.modulus();
    for (Field::Elt cand : subfield) {
        Field::Elt acc = 0;
        for (int bit = static_cast<int>(k); bit >= 0; --bit)
            acc = big.add(big.mul(acc, cand), (p >> bit & 1u) ? 1u : 0u);
        if (acc == 0) {
            beta_ = cand;
            break;
        }
    }
    if (beta_ == 0)
        throw std::logic_error("SubfieldIso: no root of the small modulus found");

    cofactor_ = big.log(beta_) / spread_;
    // beta has order 2^k - 1, so cofactor is invertible mod 2^k - 1
    std::int64_t t0 = 0, t1 = 1, r0 = small.order(), r1 = cofactor_;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        t0 = std::exchange(t1, t0 - q * t1);
        r0 = std::exchange(r1, r0 - q * r1);
    }
    if (r0 != 1)
        throw std::logic_error("SubfieldIso: root exponent not invertible");
    cofactor_inv_ = static_cast<std::uint32_t>(((t0 % small.order()) + small.order()) % small.order());
}

Field::Elt SubfieldIso::embed(Field::Elt z) const {
    if (z == 0)
        return 0;
    const std::uint64_t j = small_->log(z);
    return big_->pow_gamma(j * spread_ * cofactor_);
}

Field::Elt SubfieldIso::project(Field::Elt y) const {
    if (y == 0)
        return 0;
    const std::uint32_t e = big_->log(y);
    if (e % spread_ != 0)
        throw std::invalid_argument("SubfieldIso::project: element not in the subfield");
    const std::uint64_t j = static_cast<std::uint64_t>(e / spread_) * cofactor_inv_ % small_->order();
    return small_->pow_gamma(j);
}

} // namespace hbf
