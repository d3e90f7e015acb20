#include "fogq/curve.hpp"

#include <algorithm>

#include "json.hpp"

#include "fogq/errors.hpp"

namespace fogq {

std::string HyperCurve::str() const { return "y^2 = " + f.str("x"); }

HyperCurve make_curve(IntPoly f) {
    if (f.deg() < 3 || f.deg() % 2 == 0)
        throw input_error("f must have odd degree at least 3");
    if (!f.is_monic()) throw input_error("f must be monic");
    HyperCurve c{std::move(f)};
    if (curve_disc(c) == 0) throw input_error("f must be squarefree");
    return c;
}

Int curve_disc(const HyperCurve& c) {
    long d = c.f.deg();
    Rat r = resultant(c.f, c.f.derivative());
    Int ri = r.get_num(); // integral for integer input
    return (d * (d - 1) / 2) % 2 == 0 ? ri : Int(-ri);
}

namespace {

// one term of "y^2 = ..." input: [+-] [coeff] [x [^ exp]]
struct TermParser {
    std::string s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool eat(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) == 0) { i += w.size(); return true; }
        return false;
    }
    std::optional<Int> number() {
        skip_ws();
        size_t j = i;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        if (j == i) return std::nullopt;
        Int n(s.substr(i, j - i));
        i = j;
        return n;
    }
};

IntPoly parse_equation(const std::string& text) {
    TermParser t{text};
    // "y^2 = f(x)" or just the right-hand side
    if (t.eat("y^2") || t.eat("y²")) {
        if (!t.eat('=')) throw input_error("expected '=' after y^2");
    }
    std::vector<Int> coeffs;
    auto bump = [&](long e, const Int& c) {
        if (long(coeffs.size()) <= e) coeffs.resize(size_t(e) + 1, Int(0));
        coeffs[size_t(e)] += c;
    };
    bool first = true;
    for (;;) {
        t.skip_ws();
        if (t.i == t.s.size()) break;
        Int sign(1);
        if (t.eat('-')) sign = -1;
        else if (!t.eat('+') && !first)
            throw input_error("expected '+' or '-' between terms");
        first = false;
        auto n = t.number();
        Int coeff = n ? *n : Int(1);
        long exp = 0;
        if (t.eat('*')) {
            if (!t.eat('x')) throw input_error("expected x after '*'");
            exp = 1;
        } else if (t.eat('x')) {
            exp = 1;
        } else if (!n) {
            throw input_error("expected a term");
        }
        if (exp == 1 && t.eat('^')) {
            auto e = t.number();
            if (!e || *e < 0 || *e > 64) throw input_error("bad exponent");
            exp = e->get_si();
        }
        bump(exp, sign * coeff);
    }
    if (coeffs.empty()) throw input_error("empty right-hand side");
    return IntPoly(coeffs);
}

IntPoly parse_coeff_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("invalid JSON curve: ") + e.what());
    }
    if (!j.is_object() || !j.contains("f") || !j["f"].is_array())
        throw input_error("curve JSON needs an \"f\" coefficient array");
    std::vector<Int> coeffs;
    for (const auto& c : j["f"]) {
        if (c.is_number_integer()) coeffs.push_back(Int(c.get<long>()));
        else if (c.is_string()) coeffs.push_back(parse_int(c.get<std::string>()));
        else throw input_error("coefficients must be integers or decimal strings");
    }
    return IntPoly(coeffs);
}

} // namespace

HyperCurve parse_curve(const std::string& text) {
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw input_error("empty curve specification");
    IntPoly f = text[start] == '{' ? parse_coeff_json(text) : parse_equation(text);
    return make_curve(std::move(f));
}

std::vector<Int> good_primes(const HyperCurve& c, const Int& lo, const Int& hi) {
    Int disc = curve_disc(c);
    std::vector<Int> out;
    Int p = lo < 3 ? Int(3) : lo;
    if (p % 2 == 0) p += 1;
    for (; p <= hi; p += 2)
        if (is_prime(p) && disc % p != 0) out.push_back(p);
    return out;
}

std::vector<std::string> dr_basis(const HyperCurve& c, BasisKind kind) {
    const int g = c.genus();
    std::vector<std::string> labels;
    auto mono = [](int i) {
        return i == 0 ? std::string() : i == 1 ? std::string("x ") : "x^" + std::to_string(i) + " ";
    };
    for (int i = 0; i < 2 * g; ++i) labels.push_back(mono(i) + "dx/y");
    if (kind == BasisKind::open)
        for (int i = 0; i <= 2 * g; ++i) labels.push_back(mono(i) + "dx/y^2");
    return labels;
}

namespace {

// arithmetic in F_{p^r}, elements encoded as base-p integers in [0, p^r)
struct Fq {
    long p;
    int r;
    long q;
    std::vector<long> h; // monic irreducible of degree r, ascending, h[r] = 1

    explicit Fq(long p_, int r_) : p(p_), r(r_) {
        q = 1;
        for (int i = 0; i < r; ++i) q *= p;
        if (r > 1) find_modulus();
    }

    std::vector<long> decode(long e) const {
        std::vector<long> d(size_t(r), 0);
        for (int i = 0; i < r; ++i) { d[size_t(i)] = e % p; e /= p; }
        return d;
    }
    long encode(const std::vector<long>& d) const {
        long e = 0;
        for (int i = r; i-- > 0;) e = e * p + d[size_t(i)];
        return e;
    }

    std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b) const {
        std::vector<long> c(size_t(2 * r - 1), 0);
        for (int i = 0; i < r; ++i) {
            if (!a[size_t(i)]) continue;
            for (int j = 0; j < r; ++j)
                c[size_t(i + j)] = (c[size_t(i + j)] + a[size_t(i)] * b[size_t(j)]) % p;
        }
        for (int k = 2 * r - 2; k >= r; --k) {
            long v = c[size_t(k)];
            if (!v) continue;
            for (int i = 0; i < r; ++i)
                c[size_t(k - r + i)] = ((c[size_t(k - r + i)] - v * h[size_t(i)]) % p + p) % p;
            c[size_t(k)] = 0;
        }
        c.resize(size_t(r));
        return c;
    }

    long mul(long a, long b) const {
        if (r == 1) return a * b % p;
        return encode(poly_mul_mod(decode(a), decode(b)));
    }
    long add(long a, long b) const {
        if (r == 1) return (a + b) % p;
        auto da = decode(a), db = decode(b);
        for (int i = 0; i < r; ++i) da[size_t(i)] = (da[size_t(i)] + db[size_t(i)]) % p;
        return encode(da);
    }

    // x^p mod h for a residue polynomial x, by square-and-multiply on exponent p
    std::vector<long> pth_power(std::vector<long> base) const {
        std::vector<long> acc(size_t(r), 0);
        acc[0] = 1;
        long e = p;
        while (e) {
            if (e & 1) acc = poly_mul_mod(acc, base);
            base = poly_mul_mod(base, base);
            e >>= 1;
        }
        return acc;
    }

    static std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
        auto deg = [](const std::vector<long>& v) {
            int d = int(v.size()) - 1;
            while (d >= 0 && !v[size_t(d)]) --d;
            return d;
        };
        while (deg(b) >= 0) {
            int da = deg(a), db = deg(b);
            if (da < db) { std::swap(a, b); continue; }
            // a -= lead(a)/lead(b) x^(da-db) b
            long inv = 1, base = b[size_t(db)] % p, e = p - 2;
            while (e) { if (e & 1) inv = inv * base % p; base = base * base % p; e >>= 1; }
            long f = a[size_t(da)] * inv % p;
            for (int i = 0; i <= db; ++i)
                a[size_t(da - db + i)] = ((a[size_t(da - db + i)] - f * b[size_t(i)]) % p + p) % p;
        }
        return a;
    }

    void find_modulus() {
        std::vector<long> primes_of_r;
        for (long d = 2, n = r; d <= n; ++d)
            if (n % d == 0) { primes_of_r.push_back(d); while (n % d == 0) n /= d; }
        long span = 1;
        for (int i = 0; i < r; ++i) span *= p;
        for (long tail = 0; tail < span; ++tail) {
            h.assign(size_t(r) + 1, 0);
            h[size_t(r)] = 1;
            long e = tail;
            for (int i = 0; i < r; ++i) { h[size_t(i)] = e % p; e /= p; }
            // t^(p^r) = t mod h, and t^(p^(r/l)) != t for prime l | r
            std::vector<long> t(size_t(r), 0);
            t[1] = 1;
            std::vector<long> u = t;
            bool ok = true;
            for (int k = 1; k <= r; ++k) {
                u = pth_power(u);
                bool is_t = (u == t);
                if (k == r) {
                    if (!is_t) ok = false;
                } else if (r % k == 0 &&
                           std::find(primes_of_r.begin(), primes_of_r.end(), r / k) !=
                               primes_of_r.end()) {
                    std::vector<long> diff = u;
                    diff[1] = ((diff[1] - 1) % p + p) % p;
                    auto g = poly_gcd(h, diff, p);
                    int dg = int(g.size()) - 1;
                    while (dg >= 0 && !g[size_t(dg)]) --dg;
                    if (dg != 0) ok = false;
                }
                if (!ok) break;
            }
            if (ok) return;
        }
        throw error("no irreducible modulus found"); // unreachable for prime p
    }
};

} // namespace

PointCount point_count_oracle(const HyperCurve& c, const Int& p, long r) {
    if (p < 3 || !is_prime(p)) throw input_error("p must be an odd prime");
    if (r < 1) throw input_error("r must be positive");
    Int q = pow_int(p, (unsigned long)r);
    if (q > 1000000) throw input_error("field too large for enumeration (p^r > 10^6)");

    Fq F(p.get_si(), int(r));
    std::vector<int> sq_count(size_t(F.q), 0);
    for (long y = 0; y < F.q; ++y) ++sq_count[size_t(F.mul(y, y))];

    // coefficients of f reduced into F_p (constants in F_q)
    std::vector<long> coeffs;
    for (long i = 0; i <= c.f.deg(); ++i) {
        Int v = c.f.coeff(i) % p;
        if (v < 0) v += p;
        coeffs.push_back(v.get_si());
    }
    long affine = 0;
    for (long x = 0; x < F.q; ++x) {
        long acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i]);
        affine += sq_count[size_t(acc)];
    }
    return {p, r, Int(affine) + 1};
}

} // namespace fogq
