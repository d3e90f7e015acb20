#pragma once
#include <string>
#include <utility>
#include <vector>

#include "fogq/intpoly.hpp"
#include "fogq/rational.hpp"

namespace fogq {

// multiset of Frobenius eigenvalue weights relative to q: |alpha| = q^{w/2}
struct WeilProfile {
    std::vector<std::pair<long, int>> entries; // (weight, multiplicity), weights increasing

    bool operator==(const WeilProfile& o) const { return entries == o.entries; }
    int total() const;
    bool has_weight(long w) const;
    int multiplicity(long w) const;
    WeilProfile shifted(long delta) const; // every weight += delta
    std::string str() const;               // "[(1, 2), (2, 3)]"
};

// cluster root magnitudes of cp and assign each the unique integer w with
// q^w inside the certified square-magnitude interval. cp monic, cp(0) != 0,
// q a prime power. Halves eps up to 5 times when a cluster straddles two
// candidate weights; no candidate weight at all means cp is not a Weil
// polynomial for this q (invariant_error).
WeilProfile weight_profile(const IntPoly& cp, const Int& q, const Rat& eps);
WeilProfile weight_profile(const IntPoly& cp, const Int& q); // derived default eps

struct PurityResult {
    bool profile_pure = false; // weight_profile == [(w, deg)]
    bool palindrome = false;   // root multiset stable under a -> q^w / a
    bool pure() const { return profile_pure && palindrome; }
};

PurityResult is_pure(const IntPoly& cp, const Int& q, long w);

// the monic integer factor of cp carrying exactly the weight-w roots.
// Found by rounding products of approximated root subsets, then certified
// exactly: cp = factor * cofactor over Z and factor is pure of weight w.
IntPoly weight_factor(const IntPoly& cp, const Int& q, long w);

} // namespace fogq
