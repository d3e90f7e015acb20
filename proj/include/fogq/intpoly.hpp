#pragma once
#include <string>
#include <vector>

#include "fogq/rational.hpp"

namespace fogq {

// dense univariate polynomials, coefficients ascending (c[i] * T^i)

struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> cc) : c(std::move(cc)) { trim(); }

    void trim();
    int deg() const { return static_cast<int>(c.size()) - 1; } // deg(0) = -1
    bool is_zero() const { return c.empty(); }
    Rat coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Rat(0); }
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    QPoly monic() const; // leading coefficient scaled to 1; zero stays zero
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(const Rat& s, const QPoly& a);
bool operator==(const QPoly& a, const QPoly& b);

// euclidean division, remainder degree < deg(b); b != 0
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b); // monic
// g = gcd(a,b) monic with g = u*a + v*b
struct XgcdResult { QPoly g, u, v; };
XgcdResult xgcd(const QPoly& a, const QPoly& b);

struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> cc) : c(std::move(cc)) { trim(); }
    static IntPoly from_q(const QPoly& q); // throws if any coefficient non-integral

    void trim();
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Int coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Int(0); }
    Int lead() const { return c.empty() ? Int(0) : c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    IntPoly derivative() const;
    Int content() const;                       // gcd of coefficients, >= 0
    IntPoly primitive() const;                 // content 1, positive leading coeff
    QPoly to_q() const;

    std::string str(const std::string& var = "T") const; // "T^2 + 2T + 5"
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
bool operator==(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& a, unsigned long e);
// exact division; throws invariant_error when b does not divide a over Z
IntPoly divexact(const IntPoly& a, const IntPoly& b);

// squarefree decomposition a = prod s_i^{m_i} (Yun); a nonzero.
// returned parts are primitive with positive leading coefficient.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

// resultant via Sylvester determinant (exact); used for discriminants
Rat resultant(const IntPoly& a, const IntPoly& b);

} // namespace fogq
