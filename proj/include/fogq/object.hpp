#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fogq/padic.hpp"
#include "fogq/qmatrix.hpp"
#include "fogq/weil.hpp"

namespace fogq {

// one step of the weight filtration: everything of weight <= this
struct FiltStep {
    long weight = 0;
    QMat basis; // dim x r, columns span W_weight
};

struct WeightFiltration {
    std::vector<FiltStep> steps; // strictly increasing weights and ranks;
                                 // only jumps are stored; last step is full

    std::vector<long> jump_weights() const;
    // basis of W_k: the last step with weight <= k (dim x 0 when below all)
    QMat space_at(long k, int dim) const;
    int rank_at(long k) const;
};

struct LocalDatum {
    Int p;
    long N = 1;
    PadicMat frob; // invertible over Q_p; val_shift carries Tate twists
};

struct OgusObject {
    int dim = 0;
    std::vector<std::string> labels; // documentation only, size = dim
    WeightFiltration filt;
    std::vector<LocalDatum> locals; // ascending primes, one per prime

    const LocalDatum* local_at(const Int& p) const;
    std::vector<Int> primes() const;
    long min_prec() const;
};

// --- constructors -----------------------------------------------------------

OgusObject unit_object(const std::vector<Int>& primes, long N);
OgusObject tate_twist(const OgusObject& m, long n);
OgusObject direct_sum(const OgusObject& a, const OgusObject& b);
OgusObject tensor(const OgusObject& a, const OgusObject& b);
OgusObject dual(const OgusObject& a);

// --- invariant checking ------------------------------------------------------

enum class CheckStatus { pass, fail, indeterminate };

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool ok() const;    // no failures (indeterminate tolerated)
    bool clean() const; // no failures, nothing indeterminate
    std::string str() const;
};

// verifies dimensions, filtration nesting, Frobenius invertibility, and
// per-prime graded purity; eps feeds the root certification
CheckReport check(const OgusObject& m, std::optional<Rat> eps = std::nullopt);

// --- graded structure --------------------------------------------------------

// [(weight, dim Gr_w)] read off the declared filtration
WeilProfile filtration_profile(const OgusObject& m);

// columns: bases of the steps completed left to right into a full rational
// basis adapted to the filtration (throws on a degenerate filtration)
QMat adapted_basis(const WeightFiltration& filt, int dim);

// stored-Frobenius block on Gr_k in an adapted basis, mod p^N; nullopt when
// p divides det of the adapted basis (block not p-integral)
std::optional<PadicMat> graded_block(const OgusObject& m, const Int& p, long k);

// integer lift of charpoly(graded block) pinned coefficientwise by the Weil
// window |e_j| <= C(d,j) q^{wj/2} for stored weight w; nullopt when p^N is
// too small to pin every coefficient (after dividing out p^{w/2} on even
// weights when the block allows it)
std::optional<IntPoly> pinned_block_charpoly(const PadicMat& block, long stored_weight);

// exact integer floor(C(d,j) * q^{w j / 2}) used for the pinning windows
Int weil_coeff_bound(int d, int j, const Int& q, long w);

} // namespace fogq
