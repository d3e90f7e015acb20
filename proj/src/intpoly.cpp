#include "fogq/intpoly.hpp"

#include "fogq/qmatrix.hpp"

namespace fogq {

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::derivative() const {
    QPoly d;
    for (int i = 1; i <= deg(); ++i) d.c.push_back(Rat(i) * c[i]);
    d.trim();
    return d;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / lead();
    QPoly r = *this;
    for (auto& x : r.c) x *= inv;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

QPoly operator*(const Rat& s, const QPoly& a) {
    QPoly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw invariant_error("polynomial division by zero");
    QPoly rem = a, quo;
    quo.c.assign(std::max(0, a.deg() - b.deg() + 1), Rat(0));
    Rat inv = 1 / b.lead();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int k = rem.deg() - b.deg();
        Rat f = rem.lead() * inv;
        quo.c[k] += f;
        for (int i = 0; i <= b.deg(); ++i) rem.c[i + k] -= f * b.c[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

XgcdResult xgcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly u0({Rat(1)}), u1, v0, v1({Rat(1)});
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        QPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat inv = 1 / r0.lead();
    return {inv * r0, inv * u0, inv * v0};
}

IntPoly IntPoly::from_q(const QPoly& q) {
    IntPoly r;
    for (const auto& x : q.c) {
        if (x.get_den() != 1) throw invariant_error("polynomial is not integral");
        r.c.push_back(x.get_num());
    }
    r.trim();
    return r;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const { return to_q().eval(x); }

IntPoly IntPoly::derivative() const {
    IntPoly d;
    for (int i = 1; i <= deg(); ++i) d.c.push_back(Int(i) * c[i]);
    d.trim();
    return d;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c) g = gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    if (lead() < 0) g = -g;
    IntPoly r = *this;
    for (auto& x : r.c) x /= g;
    return r;
}

QPoly IntPoly::to_q() const {
    QPoly q;
    for (const auto& x : c) q.c.push_back(Rat(x));
    q.trim();
    return q;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool show_coeff = (a != 1) || i == 0;
        if (show_coeff) out += a.get_str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

IntPoly pow(const IntPoly& a, unsigned long e) {
    IntPoly r(std::vector<Int>{Int(1)});
    IntPoly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    auto [q, rem] = divmod(a.to_q(), b.to_q());
    if (!rem.is_zero()) throw invariant_error("divexact: division not exact");
    return IntPoly::from_q(q);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
    if (a.is_zero()) throw invariant_error("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    QPoly f = a.primitive().to_q();
    if (f.deg() < 1) return out;
    // Yun over Q, primitive integer parts recovered at the end of each step
    QPoly fp = f.derivative();
    QPoly a0 = gcd(f, fp);
    QPoly b = divmod(f, a0).first;
    QPoly c = divmod(fp, a0).first;
    QPoly d = c - b.derivative();
    auto int_primitive = [](const QPoly& q) {
        Int den(1);
        for (const auto& x : q.c) den = lcm(den, x.get_den());
        IntPoly r;
        for (const auto& x : q.c) r.c.push_back(Int(x.get_num() * (den / x.get_den())));
        r.trim();
        return r.primitive();
    };
    int i = 1;
    while (b.deg() > 0) {
        QPoly s = gcd(b, d);
        if (s.deg() > 0) out.emplace_back(int_primitive(s), i);
        b = divmod(b, s).first;
        c = divmod(d, s).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Rat resultant(const IntPoly& a, const IntPoly& b) {
    int m = a.deg(), n = b.deg();
    if (m < 0 || n < 0) return Rat(0);
    if (m == 0) return Rat(pow_int(a.lead(), n));
    if (n == 0) return Rat(pow_int(b.lead(), m));
    QMat syl(m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl.at(i, i + j) = Rat(a.c[m - j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl.at(n + i, i + j) = Rat(b.c[n - j]);
    return syl.det();
}

} // namespace fogq
