#include "fogq/rational.hpp"

namespace fogq {

long valuation(const Int& a, const Int& p, long cap) {
    if (a == 0) return cap;
    Int r = a;
    long v = 0;
    while (v < cap && mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        r /= p;
        ++v;
    }
    return v;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<Int> prime_power_base(const Int& q) {
    if (q < 2) return std::nullopt;
    if (is_prime(q)) return q;
    // smallest prime factor, then check q is a pure power of it
    for (Int p = 2; p * p <= q; p = (p == 2 ? Int(3) : p + 2)) {
        if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
            Int r = q;
            while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) r /= p;
            if (r == 1) return p;
            return std::nullopt;
        }
    }
    return std::nullopt; // unreachable for q >= 2
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw input_error("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw input_error("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw input_error("bad integer literal '" + s + "'");
    return Int(s);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw input_error("bad rational literal '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::optional<Int> pin_residue(const Int& residue, const Int& modulus, const Int& bound) {
    if (modulus <= 0) throw input_error("pin_residue: modulus must be positive");
    Int r = residue % modulus;
    if (r < 0) r += modulus;
    std::optional<Int> hit;
    for (Int x = r - 2 * modulus; x <= bound; x += modulus) {
        if (x < -bound) continue;
        if (hit) return std::nullopt; // window too wide to pin a single lift
        hit = x;
    }
    return hit;
}

Int default_recon_bound(const Int& m) {
    Int b = isqrt(m / 2) - 1;
    return b < 0 ? Int(0) : b;
}

std::optional<Rat> rational_reconstruct(const Int& r, const Int& m, const Int& B) {
    if (r < 0 || r >= m) throw input_error("rational_reconstruct: residue out of range");
    if (B <= 0) throw input_error("rational_reconstruct: bound must be positive");
    // half extended euclid on (m, r); invariant r_i = s_i m + t_i r
    Int r0 = m, t0 = 0, r1 = r, t1 = 1;
    while (r1 > B) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; t0 = t1; r1 = r2; t1 = t2;
    }
    Int a = r1, b = t1;
    if (b < 0) { a = -a; b = -b; }
    if (b == 0 || b > B) return std::nullopt;
    if (gcd(a, b) != 1) return std::nullopt;
    if (gcd(b, m) != 1) return std::nullopt;
    Rat q(a, b);
    q.canonicalize();
    return q;
}

} // namespace fogq
