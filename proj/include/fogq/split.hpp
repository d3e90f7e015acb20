#pragma once
#include <string>
#include <vector>

#include "fogq/object.hpp"

namespace fogq {

struct SplitPart {
    long weight;
    PadicMat projector; // idempotent mod p^prec, commutes with Frobenius
    int rank;           // rank of the image, counted by unit pivots mod p^prec
};

struct SplitResult {
    Int p;
    long prec; // below the stored N when integrality forced a precision drop
    std::vector<SplitPart> parts; // ascending weight; projectors sum to 1
    std::string str() const;
};

// canonical splitting of the weight filtration on the Frobenius lattice at p:
// one projector per filtration jump, block-diagonalizing Frobenius mod p^prec
SplitResult canonical_split(const OgusObject& m, const Int& p);

} // namespace fogq
