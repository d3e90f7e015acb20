#pragma once
#include <optional>
#include <vector>

#include "fogq/rational.hpp"

namespace fogq {

// rectangular matrix over Z/p^N, the workhorse behind kernels and module
// comparisons at a prime. Entries stored reduced to [0, p^N).
struct ModMatrix {
    Int p;
    long N = 1;
    int rows = 0, cols = 0;
    std::vector<Int> a;

    ModMatrix() = default;
    ModMatrix(const Int& p_, long N_, int r, int c)
        : p(p_), N(N_), rows(r), cols(c), a(size_t(r) * c, Int(0)) {}

    Int modulus() const { return pow_int(p, (unsigned long)N); }
    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }
    void reduce();
    bool is_zero() const;
};

// canonical Howell form of the row span of m: row-echelon with p-power
// pivots, shadow rows expanded so membership testing is a single reduction,
// entries above a pivot reduced modulo the pivot, zero rows dropped.
// Two submodules of (Z/p^N)^c are equal iff their Howell forms are identical.
ModMatrix howell_form(ModMatrix m);

// is the row vector v in the row span of H (a Howell form)?
bool howell_contains(const ModMatrix& H, std::vector<Int> v);

// Howell-normalized generating set of the right kernel {x : m x = 0 mod p^N},
// one generator per row; includes torsion generators p^{N-e} u
ModMatrix kernel_mod(const ModMatrix& m);

// particular solution of m x = b mod p^N
std::optional<std::vector<Int>> solve_mod(const ModMatrix& m, const std::vector<Int>& b);

// inverse of a unit mod p^N
Int inv_mod(const Int& u, const Int& pN);

} // namespace fogq
