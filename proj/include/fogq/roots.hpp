#pragma once
#include <optional>
#include <vector>

#include "fogq/intpoly.hpp"
#include "fogq/rational.hpp"

namespace fogq {

// rigorous bounds on the magnitude of a batch of complex roots
struct RootCluster {
    Rat magnitude_low;
    Rat magnitude_high;
    int multiplicity = 0;
};

// number of complex roots of f with |z| < r, counted with multiplicity.
// Exact integer arithmetic (Schur-Cohn chain on the radius-scaled polynomial);
// nullopt when the chain degenerates at this radius (e.g. a root sits on the
// circle), in which case the caller should move the radius.
std::optional<int> try_count_roots_in_disk(const IntPoly& f, const Rat& r);

// as above but throws precision_error on a degenerate radius
int count_roots_in_disk(const IntPoly& f, const Rat& r);

// covers all complex roots of f by magnitude intervals of width <= eps,
// sorted by magnitude; multiplicities sum to deg f. A non-degenerate counting
// radius certifies that no root lies on the circle, so every root strictly
// inside its reported interval. Roots at 0 get the [0,0] cluster.
std::vector<RootCluster> certified_root_clusters(const IntPoly& f, const Rat& eps);

} // namespace fogq
