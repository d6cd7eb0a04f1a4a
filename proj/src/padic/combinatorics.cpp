// Copyright 2026 The padic-cartan Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "padic_cartan/combinatorics.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <utility>

#include "padic_cartan/errors.hpp"

namespace pcartan {

std::uint64_t val_factorial(std::uint64_t n, std::uint64_t p)
{
    if (p < 2)
        throw DomainError("val_factorial needs a prime");
    std::uint64_t v = 0;
    while (n > 0) {
        n /= p;
        v += n;
    }
    return v;
}

std::uint64_t val_binomial_prime_power(unsigned j, std::uint64_t a, std::uint64_t p)
{
    Integer pj = prime_power(p, j);
    if (a < 1 || Integer(static_cast<unsigned long>(a)) > pj)
        throw DomainError("val_binomial_prime_power: a must lie in [1, p^j]");
    return j - static_cast<std::uint64_t>(valuation_u64(a, p));
}

namespace {

// Products of the integers <= r coprime to p, modulo p^m, for r < p^m.
// Checkpoints every kStride entries keep memory flat; a query costs at most
// kStride multiplications.  Built lazily, one table per thread and (p, m).
constexpr std::uint64_t kStride = 1024;

class U64Table {
public:
    U64Table(std::uint64_t p, std::uint64_t mod) : p_(p), mod_(mod) { checkpoints_.push_back(1); }

    std::uint64_t partial(std::uint64_t r)
    {
        std::uint64_t block = r / kStride;
        while (checkpoints_.size() <= block) {
            std::uint64_t start = (checkpoints_.size() - 1) * kStride;
            checkpoints_.push_back(run(checkpoints_.back(), start, start + kStride));
        }
        return run(checkpoints_[block], block * kStride, r);
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod_);
    }

    std::uint64_t modulus() const { return mod_; }

private:
    // acc * prod of units in (start, end].
    std::uint64_t run(std::uint64_t acc, std::uint64_t start, std::uint64_t end) const
    {
        for (std::uint64_t x = start + 1; x <= end; ++x)
            if (x % p_ != 0)
                acc = mul(acc, x % mod_);
        return acc;
    }

    std::uint64_t p_;
    std::uint64_t mod_;
    std::vector<std::uint64_t> checkpoints_;
};

U64Table& u64_table(std::uint64_t p, unsigned m, std::uint64_t mod)
{
    thread_local std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<U64Table>> cache;
    auto& slot = cache[{p, m}];
    if (!slot)
        slot = std::make_unique<U64Table>(p, mod);
    return *slot;
}

// F(r) mod p^m for any r, by generalized Wilson: F(p^m) = -1 mod p^m.
std::uint64_t wilson_u64(std::uint64_t r, std::uint64_t p, unsigned m, std::uint64_t mod)
{
    U64Table& t = u64_table(p, m, mod);
    std::uint64_t f = t.partial(r % mod);
    if ((r / mod) % 2 == 1)
        f = (mod - f) % mod;
    return f;
}

Integer wilson_mpz(std::uint64_t r, std::uint64_t p, const Integer& mod)
{
    // Only reached when p^m does not fit in 62 bits, where r < p^m always
    // holds for the arguments we see; a plain loop suffices.
    Integer acc = 1;
    Integer rr(static_cast<unsigned long>(r));
    bool flip = false;
    if (rr >= mod) {
        Integer q = rr / mod;
        flip = mpz_odd_p(q.get_mpz_t()) != 0;
        rr = rr % mod;
    }
    unsigned long lim = rr.get_ui();
    for (unsigned long x = 2; x <= lim; ++x) {
        if (x % p == 0)
            continue;
        acc *= x;
        if ((x & 63U) == 0)
            acc %= mod;
    }
    acc %= mod;
    if (flip)
        acc = (mod - acc) % mod;
    return acc;
}

bool fits_u64(std::uint64_t p, unsigned m, std::uint64_t& mod)
{
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < m; ++i) {
        acc *= p;
        if (acc >= (static_cast<unsigned __int128>(1) << 62))
            return false;
    }
    mod = static_cast<std::uint64_t>(acc);
    return true;
}

}  // namespace

Integer factorial_unit(std::uint64_t n, std::uint64_t p, unsigned m)
{
    if (m == 0)
        return Integer(0);
    std::uint64_t mod = 0;
    if (fits_u64(p, m, mod)) {
        std::uint64_t acc = 1 % mod;
        const U64Table& t = u64_table(p, m, mod);
        for (std::uint64_t x = n; x > 0; x /= p)
            acc = t.mul(acc, wilson_u64(x, p, m, mod));
        return Integer(static_cast<unsigned long>(acc));
    }
    Integer big_mod = prime_power(p, m);
    Integer acc = 1;
    for (std::uint64_t x = n; x > 0; x /= p) {
        acc *= wilson_mpz(x, p, big_mod);
        acc %= big_mod;
    }
    return acc;
}

namespace {

void check_parts(std::uint64_t n, const std::vector<std::uint64_t>& parts)
{
    unsigned __int128 sum = 0;
    for (auto x : parts)
        sum += x;
    if (sum != n)
        throw DomainError("multinomial parts do not sum to n");
}

}  // namespace

PadicScalar multinomial_padic(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                              std::uint64_t p, unsigned m)
{
    check_parts(n, parts);
    if (m < 1)
        throw DomainError("multinomial_padic needs m >= 1");
    std::int64_t v = static_cast<std::int64_t>(val_factorial(n, p));
    Integer num = factorial_unit(n, p, m);
    Integer den = 1;
    Integer mod = prime_power(p, m);
    for (auto x : parts) {
        v -= static_cast<std::int64_t>(val_factorial(x, p));
        den = den * factorial_unit(x, p, m) % mod;
    }
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    return PadicScalar::from_unit(p, num * inv, v, m);
}

Integer multinomial_exact(std::uint64_t n, const std::vector<std::uint64_t>& parts)
{
    check_parts(n, parts);
    Integer num;
    mpz_fac_ui(num.get_mpz_t(), n);
    for (auto x : parts) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), x);
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), f.get_mpz_t());
    }
    return num;
}

PadicScalar multinomial(std::uint64_t n, const std::vector<std::uint64_t>& parts,
                        std::uint64_t p, unsigned m, MultinomialBackend backend)
{
    bool exact = backend == MultinomialBackend::exact ||
                 (backend == MultinomialBackend::automatic && n <= kExactMultinomialLimit);
    if (!exact)
        return multinomial_padic(n, parts, p, m);
    Integer c = multinomial_exact(n, parts);
    std::int64_t v = padic_valuation(c, p).to_int();
    return PadicScalar::from_integer(p, c, v + static_cast<std::int64_t>(m));
}

}  // namespace pcartan
