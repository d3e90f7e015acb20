#pragma once
#include <string>
#include <vector>

#include "fogq/intpoly.hpp"

namespace fogq {

enum class BasisKind { projective, open };

// y^2 = f(x) with f monic, odd degree 2g+1, squarefree
struct HyperCurve {
    IntPoly f;
    int genus() const { return (f.deg() - 1) / 2; }
    std::string str() const;
};

HyperCurve make_curve(IntPoly f); // input_error unless monic, odd degree >= 3, squarefree
// "y^2 = x^3 - x" or {"f": ["0","-1","0","1"]} (coefficients by ascending degree)
HyperCurve parse_curve(const std::string& text);

Int curve_disc(const HyperCurve& c);
// odd primes in [lo, hi] not dividing disc(f)
std::vector<Int> good_primes(const HyperCurve& c, const Int& lo, const Int& hi);
// projective: x^i dx/y (i < 2g); open appends x^i dx/y^2 (i <= 2g)
std::vector<std::string> dr_basis(const HyperCurve& c, BasisKind kind);

struct PointCount {
    Int p;
    long r = 1;
    Int count; // projective points over F_{p^r}, one point at infinity
};
PointCount point_count_oracle(const HyperCurve& c, const Int& p, long r);

} // namespace fogq
