#pragma once
#include <vector>

#include "fogq/curve.hpp"
#include "fogq/object.hpp"

namespace fogq {

struct FrobeniusResult {
    PadicMat matrix; // on the dr_basis columns, accurate mod p^N
    BasisKind kind;
    Int p;
    long N = 1;
};

// Frobenius on H^1 of y^2 = f(x) at a good prime, by lifting x -> x^p and
// reducing the sigma(1/y) series exactly over Q before truncating mod p^N.
// p > 2g+1 unless allow_small_p (p = 3, g = 1 with an enlarged margin).
FrobeniusResult kedlaya_frobenius(const HyperCurve& c, const Int& p, long N,
                                  BasisKind kind, bool allow_small_p = false);

// exact integer characteristic polynomial of Frobenius on projective H^1,
// every coefficient pinned inside its Weil window
IntPoly zeta_charpoly(const HyperCurve& c, const Int& p, long N,
                      bool allow_small_p = false);

// assemble the filtered object: dr_basis labels, Frobenius per prime, and the
// weight filtration (projective: pure weight 1; open: W_1 = odd part, W_2 all)
OgusObject realise_h1(const HyperCurve& c, const std::vector<Int>& primes, long N,
                      BasisKind kind, bool allow_small_p = false);

} // namespace fogq
