#pragma once
#include <vector>

#include "fogq/howell.hpp"
#include "fogq/rational.hpp"

namespace fogq {

// truncated p-adic integer: residue mod p^N
struct PadicInt {
    Int p;
    long N = 1;
    Int r;

    PadicInt(const Int& p_, long N_, const Int& value);
    Int modulus() const { return pow_int(p, (unsigned long)N); }
};

PadicInt padic_add(const PadicInt& x, const PadicInt& y);
PadicInt padic_mul(const PadicInt& x, const PadicInt& y);
PadicInt padic_inv(const PadicInt& x); // unit residues only

// square matrix over Z/p^N representing p^{val_shift} * (stored entries);
// the shift keeps negative Tate twists and p-divisible inverses exact
class PadicMat {
  public:
    PadicMat() = default;
    PadicMat(const Int& p, long N, int n, long val_shift = 0);
    static PadicMat identity(const Int& p, long N, int n);

    const Int& p() const { return p_; }
    long prec() const { return N_; }
    int dim() const { return n_; }
    long shift() const { return shift_; }
    Int modulus() const { return pow_int(p_, (unsigned long)N_); }

    Int& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    void reduce();                       // entries into [0, p^N)
    PadicMat reduce_to(long N2) const;   // lower the precision
    PadicMat with_shift(long ds) const;  // multiply by p^{ds}
    PadicMat transpose() const;
    PadicMat kron(const PadicMat& o) const;

    // stored determinant = p^v * unit; v (< N required) and the unit mod p^{N-v}
    std::pair<long, Int> det_val_unit() const;

    // inverse with unit stored determinant; shift negates (invariant_error
    // on non-unit determinant)
    PadicMat inv_unit() const;
    // valuation-aware inverse: divides out det valuation v, losing v digits
    // of precision and lowering the shift by v
    PadicMat inv_general() const;

    // monic characteristic polynomial of the stored entries mod p^N,
    // ascending coefficients
    std::vector<Int> charpoly_mod() const;

    ModMatrix to_mod() const; // stored entries, shift dropped

    bool operator==(const PadicMat& o) const;

  private:
    Int p_;
    long N_ = 1;
    int n_ = 0;
    long shift_ = 0;
    std::vector<Int> a_;
};

PadicMat padic_mat_mul(const PadicMat& a, const PadicMat& b);
PadicMat padic_mat_add(const PadicMat& a, const PadicMat& b);
PadicMat padic_mat_sub(const PadicMat& a, const PadicMat& b);
PadicMat padic_mat_scale(const Int& s, const PadicMat& a);

// same represented matrix, compared at the common precision
bool padic_mat_agree(const PadicMat& a, const PadicMat& b);

// Howell-normalized generators of {v : m v = 0 mod p^N}; requires shift 0
ModMatrix howell_kernel(const PadicMat& m);

} // namespace fogq
