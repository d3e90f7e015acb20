#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fogq/hom.hpp"
#include "fogq/kedlaya.hpp"

namespace fogq {

struct TrailEntry {
    Int p;
    std::string note;
    std::vector<bool> supersingular; // one flag per input curve
};

// every reported rank carries the prime set and precision that produced it;
// ranks are upper bounds for the untruncated category
struct ExperimentReport {
    std::string experiment;
    std::vector<std::string> curves;
    std::vector<Int> primes;
    long prec = 0;
    std::optional<Int> bound;
    long rank = 0;
    std::optional<long> expected; // classical expectation, when the report has one
    std::string status;
    std::vector<TrailEntry> trail;
    long wall_ms = 0;
    std::string str() const;
    std::string json() const;
};

// H^2(E1 x E2) = 1(-1) + 1(-1) + h1(E1) x h1(E2); inputs must be dim-2
// pure-weight-1 realisations over the same primes
OgusObject kunneth_h2(const OgusObject& e1, const OgusObject& e2);

// rank of Hom(h1(c1), h1(c2)) at the stored primes. Rank 0 upgrades to
// "proved" when the charpolys at some prime share no root.
ExperimentReport isogeny_detect(const HyperCurve& c1, const HyperCurve& c2,
                                const std::vector<Int>& primes, long N,
                                std::optional<Int> bound = std::nullopt);

// dimension of Hom(1, H^2(c1 x c2)(1)) -- the divisor-class avatar. Reports
// the Kunneth cross-check 2 + hom rank as the expectation.
ExperimentReport tate_rank(const HyperCurve& c1, const HyperCurve& c2,
                           const std::vector<Int>& primes, long N,
                           std::optional<Int> bound = std::nullopt);

} // namespace fogq
