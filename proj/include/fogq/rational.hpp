#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "fogq/errors.hpp"

namespace fogq {

using Int = mpz_class;
using Rat = mpq_class; // always canonical: gcd(num,den)=1, den >= 1

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat rat_pow(const Int& b, long e) {
    if (e >= 0) return Rat(pow_int(b, (unsigned long)e));
    return Rat(1) / Rat(pow_int(b, (unsigned long)(-e)));
}

// p-adic valuation of a nonzero integer; cap = answer for a == 0
long valuation(const Int& a, const Int& p, long cap);

// the unique integer x = residue (mod modulus) with |x| <= bound, or nullopt
// when none or several fit in the window
std::optional<Int> pin_residue(const Int& residue, const Int& modulus, const Int& bound);

bool is_prime(const Int& n);

// q = p^k with p prime, k >= 1; returns p or nullopt
std::optional<Int> prime_power_base(const Int& q);

std::string rat_str(const Rat& r);      // "a/b", or "a" when b = 1
Rat parse_rat(const std::string& s);    // inverse of rat_str; throws input_error
Int parse_int(const std::string& s);

// rational reconstruction of r mod m: a/b with |a| <= B, 0 < b <= B,
// gcd(b, m) = 1 and a = b r (mod m), if the Euclidean search finds one.
// Unique when 2 B^2 < m; the caller owns that choice of B.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& m, const Int& B);

// largest B usable against modulus m: floor(sqrt(m/2)) - 1
Int default_recon_bound(const Int& m);

} // namespace fogq
