#include "fogq/experiments.hpp"

#include <chrono>
#include <sstream>

#include "fogq/errors.hpp"
#include "fogq/version.hpp"
#include "json.hpp"

namespace fogq {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string prime_list(const std::vector<Int>& ps) {
    std::string s = "{";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += ps[i].get_str();
    }
    return s + "}";
}

bool is_supersingular(const IntPoly& cp, const Int& p) {
    // genus 1: trace = 0 mod p forces trace = 0 for p >= 5
    return cp.coeff(1) % p == 0;
}

} // namespace

OgusObject kunneth_h2(const OgusObject& e1, const OgusObject& e2) {
    for (const OgusObject* e : {&e1, &e2}) {
        if (e->dim != 2 || e->filt.steps.size() != 1 || e->filt.steps[0].weight != 1 ||
            e->filt.steps[0].basis.cols() != 2)
            throw input_error("Kunneth inputs must be dim-2 pure weight-1 objects");
    }
    if (e1.primes() != e2.primes())
        throw input_error("Kunneth inputs must share their prime set");
    long N = std::min(e1.min_prec(), e2.min_prec());
    OgusObject one = tate_twist(unit_object(e1.primes(), N), -1);
    return direct_sum(direct_sum(one, one), tensor(e1, e2));
}

ExperimentReport isogeny_detect(const HyperCurve& c1, const HyperCurve& c2,
                                const std::vector<Int>& primes, long N,
                                std::optional<Int> bound) {
    auto t0 = Clock::now();
    ExperimentReport rep;
    rep.experiment = "isogeny";
    rep.curves = {c1.str(), c2.str()};
    rep.primes = primes;
    rep.prec = N;
    rep.bound = bound;

    auto a = realise_h1(c1, primes, N, BasisKind::projective);
    auto b = realise_h1(c2, primes, N, BasisKind::projective);
    auto h = hom_space(a, b, bound);
    rep.rank = h.rank();

    std::optional<Int> coprime_at;
    for (const Int& p : primes) {
        auto cpa = zeta_charpoly(c1, p, N);
        auto cpb = zeta_charpoly(c2, p, N);
        bool coprime = resultant(cpa, cpb) != 0; // no shared root over Q-bar
        TrailEntry e;
        e.p = p;
        e.supersingular = {is_supersingular(cpa, p), is_supersingular(cpb, p)};
        e.note = cpa.str() + " vs " + cpb.str() + (coprime ? " (coprime)" : "");
        rep.trail.push_back(std::move(e));
        if (coprime && !coprime_at) coprime_at = p;
    }
    if (rep.rank > 0) {
        rep.status = "isogeny evidence at " + prime_list(primes);
    } else if (coprime_at) {
        rep.status = "proved 0 (coprime charpolys at " + coprime_at->get_str() + ")";
    } else {
        rep.status = "computed 0 (not certified)";
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

ExperimentReport tate_rank(const HyperCurve& c1, const HyperCurve& c2,
                           const std::vector<Int>& primes, long N,
                           std::optional<Int> bound) {
    if (primes.size() < 2) throw input_error("tate rank needs at least two primes");
    auto t0 = Clock::now();
    ExperimentReport rep;
    rep.experiment = "tate-rank";
    rep.curves = {c1.str(), c2.str()};
    rep.primes = primes;
    rep.prec = N;
    rep.bound = bound;

    auto a = realise_h1(c1, primes, N, BasisKind::projective);
    auto b = realise_h1(c2, primes, N, BasisKind::projective);
    auto h2 = tate_twist(kunneth_h2(a, b), 1);
    rep.rank = invariants(h2, bound).cols();

    auto h = hom_space(a, b, bound);
    rep.expected = 2 + h.rank();
    rep.status = rep.rank == *rep.expected
                     ? "Kunneth identity holds"
                     : "Kunneth identity violated (rank != 2 + hom rank)";

    for (const Int& p : primes) {
        auto cpa = zeta_charpoly(c1, p, N);
        auto cpb = zeta_charpoly(c2, p, N);
        TrailEntry e;
        e.p = p;
        e.supersingular = {is_supersingular(cpa, p), is_supersingular(cpb, p)};
        e.note = "a_p = " + Int(-cpa.coeff(1)).get_str() + " / " + Int(-cpb.coeff(1)).get_str();
        if (e.supersingular[0] || e.supersingular[1])
            e.note += " (supersingular prime inflates single-prime invariants)";
        rep.trail.push_back(std::move(e));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

std::string ExperimentReport::str() const {
    std::ostringstream os;
    os << experiment << ": " << curves[0];
    for (size_t i = 1; i < curves.size(); ++i) os << "  x  " << curves[i];
    os << "\n  primes " << prime_list(primes) << ", precision " << prec;
    if (bound) os << ", height bound " << bound->get_str();
    os << "\n";
    for (const auto& e : trail) {
        os << "  p=" << e.p.get_str() << ": " << e.note;
        for (size_t i = 0; i < e.supersingular.size(); ++i)
            if (e.supersingular[i]) os << " [ss:" << curves[i] << "]";
        os << "\n";
    }
    os << "  rank " << rank;
    if (expected) os << "  (expected " << *expected << ", " << status << ")";
    else if (!status.empty()) os << "  (" << status << ")";
    os << "\n  wall " << wall_ms << " ms, version " << version << "\n";
    return os.str();
}

std::string ExperimentReport::json() const {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["version"] = version;
    j["curves"] = curves;
    j["primes"] = nlohmann::ordered_json::array();
    for (const Int& p : primes) j["primes"].push_back(p.get_si());
    j["prec"] = prec;
    if (bound) j["bound"] = bound->get_str();
    j["rank"] = rank;
    if (expected) j["expected"] = *expected;
    j["status"] = status;
    j["trail"] = nlohmann::ordered_json::array();
    for (const auto& e : trail) {
        nlohmann::ordered_json t;
        t["p"] = e.p.get_si();
        t["note"] = e.note;
        t["supersingular"] = e.supersingular;
        j["trail"].push_back(std::move(t));
    }
    j["wall_ms"] = wall_ms;
    return j.dump(2) + "\n";
}

} // namespace fogq
