#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fogq/object.hpp"

namespace fogq {

struct MorphismCandidate {
    QMat f; // dst.dim x src.dim, primitive integer entries
    std::vector<Int> verified_primes;
    bool filtration_compatible = true;
    std::string status; // "verified" (>= 2 primes) or "unconfirmed"
};

struct HomResult {
    std::vector<MorphismCandidate> basis;
    Int pin_prime;     // prime whose residues were lifted to Q
    long pin_prec = 0;
    int rank() const { return int(basis.size()); }
    std::string str() const;
};

// rational basis of the morphisms a -> b that commute with Frobenius modulo
// every shared prime power and respect the weight filtration over Q. The
// result is a truncated Hom: sound for what it reports, certified only up to
// the stored precision. height_bound caps reconstructed entry heights.
HomResult hom_space(const OgusObject& a, const OgusObject& b,
                    std::optional<Int> height_bound = std::nullopt);

// Hom(1, m) realised inside m: Frobenius-fixed vectors lying in weight <= 0
QMat invariants(const OgusObject& m, std::optional<Int> height_bound = std::nullopt);

} // namespace fogq
