#include "hbf/walsh.hpp"

#include <cassert>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace hbf {

namespace {

unsigned g_workers = std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1;

void require_function(const BooleanFunction& f) {
    if (f.ctx == nullptr || f.table.size() != f.ctx->size())
        throw std::invalid_argument("BooleanFunction: table length must be 2^n");
}

void require_coprime(const Field& f, std::uint32_t t) {
    if (t == 0 || std::gcd(t, f.order()) != 1)
        throw std::invalid_argument("exponent t must be coprime with 2^n - 1");
}

std::int64_t target_magnitude(const Field& f) {
    return std::int64_t{1} << (f.degree() / 2);
}

// in-place Walsh-Hadamard butterfly over the dot-product characters
void fwht(std::vector<std::int64_t>& v) {
    const std::size_t size = v.size();
    for (std::size_t half = 1; half < size; half <<= 1)
        for (std::size_t i = 0; i < size; ++i)
            if ((i & half) == 0) {
                const std::int64_t a = v[i], b = v[i | half];
                v[i] = a + b;
                v[i | half] = a - b;
            }
}

} // namespace

BooleanFunction zero_boolean(const Field& f) {
    return BooleanFunction{&f, std::vector<std::uint8_t>(f.size(), 0)};
}

bool WalshSpectrum::all_plus_minus(std::int64_t mag) const {
    for (std::int64_t v : values)
        if (v != mag && v != -mag)
            return false;
    return true;
}

std::uint64_t WalshSpectrum::energy() const {
    std::uint64_t e = 0;
    for (std::int64_t v : values)
        e += static_cast<std::uint64_t>(v * v);
    return e;
}

std::int64_t extended_walsh(const BooleanFunction& f, Field::Elt lambda, std::uint32_t t) {
    require_function(f);
    const Field& F = *f.ctx;
    require_coprime(F, t);
    std::int64_t sum = 0;
    for (std::size_t x = 0; x < F.size(); ++x) {
        const Field::Elt xt = F.pow(static_cast<Field::Elt>(x), t);
        const unsigned e = (f.table[x] ^ F.abs_trace(F.mul(lambda, xt))) & 1u;
        sum += e ? -1 : 1;
    }
    return sum;
}

WalshSpectrum full_spectrum(const BooleanFunction& f, std::uint32_t t) {
    require_function(f);
    const Field& F = *f.ctx;
    require_coprime(F, t);
    const unsigned n = F.degree();
    const std::size_t size = F.size();

    // signs of the permuted function g(x^t) = f(x)
    std::vector<std::int64_t> buf(size, 0);
#ifndef NDEBUG
    std::vector<bool> hit(size, false);
#endif
    for (std::size_t x = 0; x < size; ++x) {
        const Field::Elt y = F.pow(static_cast<Field::Elt>(x), t);
#ifndef NDEBUG
        assert(!hit[y] && "x -> x^t must be a bijection");
        hit[y] = true;
        if (x == 0) assert(y == 0);
#endif
        buf[y] = f.table[x] ? -1 : 1;
    }
    fwht(buf);

    // The butterfly pairs indices by dot product; the transform kernel is
    // Tr(lambda * y) = <c(lambda), y> with c linear, so relabel through the
    // bilinear-form masks of the basis elements.
    std::vector<std::uint32_t> basis_mask(n, 0);
    for (unsigned j = 0; j < n; ++j) {
        const Field::Elt ej = Field::Elt{1} << j;
        for (unsigned i = 0; i < n; ++i)
            basis_mask[j] |= static_cast<std::uint32_t>(F.abs_trace(F.mul(ej, Field::Elt{1} << i))) << i;
    }
    WalshSpectrum out;
    out.values.resize(size);
    for (std::size_t lambda = 0; lambda < size; ++lambda) {
        std::uint32_t idx = 0;
        std::uint32_t bits = static_cast<std::uint32_t>(lambda);
        while (bits) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(bits));
            idx ^= basis_mask[j];
            bits &= bits - 1;
        }
        out.values[lambda] = buf[idx];
    }
    return out;
}

bool is_bent(const BooleanFunction& f) {
    require_function(f);
    if (f.ctx->degree() % 2 != 0)
        throw std::invalid_argument("is_bent: n must be even");
    return full_spectrum(f, 1).all_plus_minus(target_magnitude(*f.ctx));
}

void set_worker_count(unsigned workers) { g_workers = workers ? workers : 1; }

unsigned worker_count() { return g_workers; }

std::vector<std::uint32_t> coprime_exponents(unsigned n) {
    const std::uint32_t order = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 1; t < order; ++t)
        if (std::gcd(t, order) == 1)
            out.push_back(t);
    return out;
}

std::vector<std::uint32_t> coset_leader_exponents(unsigned n) {
    const std::uint32_t order = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 1; t < order; ++t) {
        if (std::gcd(t, order) != 1)
            continue;
        bool leader = true;
        std::uint64_t c = t;
        for (unsigned i = 1; i < n; ++i) {
            c = c * 2 % order;
            if (c < t) {
                leader = false;
                break;
            }
        }
        if (leader)
            out.push_back(t);
    }
    return out;
}

namespace {

// shared sweep body; returns the lexicographically smallest failing witness
std::optional<HyperbentWitness> sweep_exponents(const BooleanFunction& f,
                                                const std::vector<std::uint32_t>& ts) {
    const std::int64_t mag = target_magnitude(*f.ctx);
    auto run_range = [&](std::size_t lo, std::size_t hi) -> std::optional<HyperbentWitness> {
        for (std::size_t i = lo; i < hi; ++i) {
            const WalshSpectrum s = full_spectrum(f, ts[i]);
            for (std::size_t lambda = 0; lambda < s.values.size(); ++lambda)
                if (s.values[lambda] != mag && s.values[lambda] != -mag)
                    return HyperbentWitness{ts[i], static_cast<Field::Elt>(lambda), s.values[lambda]};
        }
        return std::nullopt;
    };

    const unsigned workers = std::min<std::size_t>(g_workers, ts.size());
    if (workers <= 1)
        return run_range(0, ts.size());

    std::vector<std::future<std::optional<HyperbentWitness>>> parts;
    parts.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = ts.size() * w / workers;
        const std::size_t hi = ts.size() * (w + 1) / workers;
        parts.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    // first chunk with a failure holds the smallest t
    std::optional<HyperbentWitness> first;
    for (auto& p : parts) {
        auto r = p.get();
        if (!first && r)
            first = r;
    }
    return first;
}

void check_oracle_guard(const BooleanFunction& f, bool override_guard) {
    require_function(f);
    if (f.ctx->degree() % 2 != 0)
        throw std::invalid_argument("hyper-bent check: n must be even");
    if (f.ctx->degree() > 16 && !override_guard)
        throw std::invalid_argument("hyper-bent oracle: n > 16 needs an explicit override");
}

} // namespace

bool is_hyperbent_oracle(const BooleanFunction& f, bool override_guard, HyperbentWitness* witness) {
    check_oracle_guard(f, override_guard);
    const auto fail = sweep_exponents(f, coprime_exponents(f.ctx->degree()));
    if (fail && witness)
        *witness = *fail;
    return !fail;
}

bool is_hyperbent_cosets(const BooleanFunction& f, bool override_guard) {
    check_oracle_guard(f, override_guard);
    return !sweep_exponents(f, coset_leader_exponents(f.ctx->degree()));
}

} // namespace hbf
