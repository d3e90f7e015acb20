#include "fogq/object.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fogq/errors.hpp"
#include "fogq/howell.hpp"

namespace fogq {

std::vector<long> WeightFiltration::jump_weights() const {
    std::vector<long> w;
    for (const auto& s : steps) w.push_back(s.weight);
    return w;
}

QMat WeightFiltration::space_at(long k, int dim) const {
    const FiltStep* best = nullptr;
    for (const auto& s : steps)
        if (s.weight <= k) best = &s;
    return best ? best->basis : QMat(dim, 0);
}

int WeightFiltration::rank_at(long k) const {
    const FiltStep* best = nullptr;
    for (const auto& s : steps)
        if (s.weight <= k) best = &s;
    return best ? best->basis.cols() : 0;
}

const LocalDatum* OgusObject::local_at(const Int& p) const {
    for (const auto& l : locals)
        if (l.p == p) return &l;
    return nullptr;
}

std::vector<Int> OgusObject::primes() const {
    std::vector<Int> ps;
    for (const auto& l : locals) ps.push_back(l.p);
    return ps;
}

long OgusObject::min_prec() const {
    long n = 0;
    for (const auto& l : locals) n = (n == 0) ? l.N : std::min(n, l.N);
    return n;
}

OgusObject unit_object(const std::vector<Int>& primes, long N) {
    if (primes.empty()) throw input_error("need at least one prime");
    if (N < 1) throw input_error("precision must be >= 1");
    std::vector<Int> ps = primes;
    std::sort(ps.begin(), ps.end());
    for (size_t i = 0; i < ps.size(); ++i) {
        if (ps[i] < 3 || !is_prime(ps[i]))
            throw input_error("bad prime " + ps[i].get_str());
        if (i > 0 && ps[i] == ps[i - 1])
            throw input_error("duplicate prime " + ps[i].get_str());
    }
    OgusObject m;
    m.dim = 1;
    m.labels = {"1"};
    QMat b(1, 1);
    b.at(0, 0) = 1;
    m.filt.steps = {{0, b}};
    for (const Int& p : ps) m.locals.push_back({p, N, PadicMat::identity(p, N, 1)});
    return m;
}

OgusObject tate_twist(const OgusObject& m, long n) {
    OgusObject t = m;
    for (auto& l : t.locals) l.frob = l.frob.with_shift(-n);
    for (auto& s : t.filt.steps) s.weight -= 2 * n;
    return t;
}

namespace {

struct CommonLocal {
    const LocalDatum* a;
    const LocalDatum* b;
};

std::vector<CommonLocal> common_locals(const OgusObject& a, const OgusObject& b) {
    std::vector<CommonLocal> out;
    for (const auto& la : a.locals) {
        const LocalDatum* lb = b.local_at(la.p);
        if (lb) out.push_back({&la, lb});
    }
    if (out.empty()) throw input_error("objects share no primes");
    return out;
}

} // namespace

OgusObject direct_sum(const OgusObject& a, const OgusObject& b) {
    auto common = common_locals(a, b);
    OgusObject m;
    m.dim = a.dim + b.dim;
    m.labels = a.labels;
    m.labels.insert(m.labels.end(), b.labels.begin(), b.labels.end());
    for (const auto& [la, lb] : common) {
        long s = std::min(la->frob.shift(), lb->frob.shift());
        long prec = std::min(la->frob.shift() + la->frob.prec(),
                             lb->frob.shift() + lb->frob.prec()) - s;
        if (prec < 1) throw precision_error("no overlapping precision in direct sum");
        PadicMat f(la->p, prec, m.dim, s);
        Int mod = f.modulus();
        Int fa = pow_int(la->p, (unsigned long)(la->frob.shift() - s));
        Int fb = pow_int(la->p, (unsigned long)(lb->frob.shift() - s));
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) f.at(i, j) = fa * la->frob.at(i, j) % mod;
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                f.at(a.dim + i, a.dim + j) = fb * lb->frob.at(i, j) % mod;
        m.locals.push_back({la->p, prec, f});
    }
    std::set<long> weights;
    for (const auto& s : a.filt.steps) weights.insert(s.weight);
    for (const auto& s : b.filt.steps) weights.insert(s.weight);
    for (long k : weights) {
        QMat ba = a.filt.space_at(k, a.dim), bb = b.filt.space_at(k, b.dim);
        QMat j(m.dim, ba.cols() + bb.cols());
        for (int c = 0; c < ba.cols(); ++c)
            for (int i = 0; i < a.dim; ++i) j.at(i, c) = ba.at(i, c);
        for (int c = 0; c < bb.cols(); ++c)
            for (int i = 0; i < b.dim; ++i) j.at(a.dim + i, ba.cols() + c) = bb.at(i, c);
        m.filt.steps.push_back({k, j.column_space()});
    }
    return m;
}

OgusObject tensor(const OgusObject& a, const OgusObject& b) {
    auto common = common_locals(a, b);
    OgusObject m;
    m.dim = a.dim * b.dim;
    for (const auto& la : a.labels)
        for (const auto& lb : b.labels) m.labels.push_back(la + "*" + lb);
    for (const auto& [la, lb] : common)
        m.locals.push_back({la->p, std::min(la->N, lb->N), la->frob.kron(lb->frob)});
    std::set<long> weights;
    for (const auto& sa : a.filt.steps)
        for (const auto& sb : b.filt.steps) weights.insert(sa.weight + sb.weight);
    for (long k : weights) {
        QMat acc(m.dim, 0);
        for (const auto& sa : a.filt.steps)
            for (const auto& sb : b.filt.steps) {
                if (sa.weight + sb.weight > k) continue;
                acc = QMat::hjoin(acc, sa.basis.kron(sb.basis));
            }
        QMat basis = acc.column_space();
        if (!m.filt.steps.empty() && m.filt.steps.back().basis.cols() == basis.cols())
            continue; // no jump at this weight
        m.filt.steps.push_back({k, basis});
    }
    return m;
}

OgusObject dual(const OgusObject& a) {
    OgusObject m;
    m.dim = a.dim;
    for (const auto& l : a.labels) m.labels.push_back(l + "*");
    for (const auto& l : a.locals)
        m.locals.push_back({l.p, l.N, l.frob.inv_general().transpose()});
    // W_k(dual) = annihilator of W_{-k-1}: one step per step of a, reversed
    for (size_t i = a.filt.steps.size(); i-- > 0;) {
        long w = -a.filt.steps[i].weight;
        QMat below = (i == 0) ? QMat(a.dim, 0) : a.filt.steps[i - 1].basis;
        QMat ann = below.transpose().kernel();
        m.filt.steps.push_back({w, ann.column_space()});
    }
    for (auto& l : m.locals) l.N = l.frob.prec();
    return m;
}

bool CheckReport::ok() const {
    for (const auto& i : items)
        if (i.status == CheckStatus::fail) return false;
    return true;
}

bool CheckReport::clean() const {
    for (const auto& i : items)
        if (i.status != CheckStatus::pass) return false;
    return true;
}

std::string CheckReport::str() const {
    std::ostringstream os;
    for (const auto& i : items) {
        const char* s = i.status == CheckStatus::pass ? "PASS"
                        : i.status == CheckStatus::fail ? "FAIL" : "INDETERMINATE";
        os << s << "  " << i.name;
        if (!i.detail.empty()) os << "  (" << i.detail << ")";
        os << "\n";
    }
    return os.str();
}

WeilProfile filtration_profile(const OgusObject& m) {
    WeilProfile p;
    int prev = 0;
    for (const auto& s : m.filt.steps) {
        int d = s.basis.cols() - prev;
        if (d > 0) p.entries.push_back({s.weight, d});
        prev = s.basis.cols();
    }
    return p;
}

QMat adapted_basis(const WeightFiltration& filt, int dim) {
    QMat acc(dim, 0);
    for (const auto& s : filt.steps) {
        for (int c = 0; c < s.basis.cols(); ++c) {
            QMat cand = QMat::hjoin(acc, s.basis.col(c));
            if (cand.rank() > acc.cols()) acc = cand;
        }
        if (acc.cols() != s.basis.rank())
            throw invariant_error("filtration step basis is not independent");
    }
    if (acc.cols() != dim) throw invariant_error("filtration does not span the space");
    return acc.primitive_columns();
}

std::optional<PadicMat> graded_block(const OgusObject& m, const Int& p, long k) {
    const LocalDatum* ld = m.local_at(p);
    if (!ld) throw input_error("prime " + p.get_str() + " not stored");
    int lo = 0, hi = -1;
    {
        int prev = 0;
        for (const auto& s : m.filt.steps) {
            if (s.weight == k) {
                lo = prev;
                hi = s.basis.cols();
                break;
            }
            prev = s.basis.cols();
        }
    }
    if (hi < 0) throw input_error("weight " + std::to_string(k) + " is not a filtration jump");
    QMat A = adapted_basis(m.filt, m.dim);
    Rat det = A.det();
    Int dnum = det.get_num() * det.get_den(); // sign-carrying integer content
    if (dnum % p == 0) return std::nullopt;
    QMat lift(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) lift.at(i, j) = Rat(ld->frob.at(i, j));
    QMat conj = A.inverse() * lift * A;
    int d = hi - lo;
    PadicMat block(p, ld->frob.prec(), d, ld->frob.shift());
    Int mod = block.modulus();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rat& x = conj.at(lo + i, lo + j);
            Int num = x.get_num() % mod, den = x.get_den() % mod;
            if (num < 0) num += mod;
            block.at(i, j) = num * inv_mod(den, mod) % mod;
        }
    return block;
}

Int weil_coeff_bound(int d, int j, const Int& q, long w) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), (unsigned long)d, (unsigned long)j);
    long e = w * j;
    if (e < 0) return Int(0);
    if (e % 2 == 0) return binom * pow_int(q, (unsigned long)(e / 2));
    return isqrt(binom * binom * pow_int(q, (unsigned long)e));
}

std::optional<IntPoly> pinned_block_charpoly(const PadicMat& block, long stored_weight) {
    if (stored_weight < 0) return std::nullopt;
    const long w = stored_weight;
    const int d = block.dim();
    const Int p = block.p();
    // even weight: when the whole block is divisible by p^{w/2}, pin the
    // normalized unit-root block against the far tighter weight-0 windows
    if (w > 0 && w % 2 == 0 && block.prec() > w / 2) {
        Int pw = pow_int(p, (unsigned long)(w / 2));
        bool divisible = true;
        for (int i = 0; i < d && divisible; ++i)
            for (int j = 0; j < d && divisible; ++j)
                if (block.at(i, j) % pw != 0) divisible = false;
        if (divisible) {
            PadicMat nb(p, block.prec() - w / 2, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) nb.at(i, j) = block.at(i, j) / pw;
            nb.reduce();
            auto res = nb.charpoly_mod();
            Int mod = nb.modulus();
            std::vector<Int> g(size_t(d) + 1);
            bool ok = true;
            for (int j = 1; j <= d && ok; ++j) {
                auto pinned = pin_residue(res[size_t(d - j)], mod, weil_coeff_bound(d, j, p, 0));
                if (!pinned) ok = false;
                else g[size_t(d - j)] = *pinned;
            }
            if (ok) {
                g[size_t(d)] = 1;
                std::vector<Int> c(size_t(d) + 1);
                for (int i = 0; i <= d; ++i)
                    c[size_t(i)] = g[size_t(i)] * pow_int(p, (unsigned long)((w / 2) * (d - i)));
                return IntPoly(c);
            }
        }
    }
    auto res = block.charpoly_mod();
    Int mod = block.modulus();
    std::vector<Int> c(size_t(d) + 1);
    c[size_t(d)] = 1;
    for (int j = 1; j <= d; ++j) {
        auto pinned = pin_residue(res[size_t(d - j)], mod, weil_coeff_bound(d, j, p, w));
        if (!pinned) return std::nullopt;
        c[size_t(d - j)] = *pinned;
    }
    return IntPoly(c);
}

namespace {

void check_purity_at(CheckReport& rep, const OgusObject& m, const LocalDatum& l,
                     const std::optional<Rat>& eps) {
    int prev = 0;
    for (const auto& s : m.filt.steps) {
        int d = s.basis.cols() - prev;
        prev = s.basis.cols();
        if (d <= 0) continue;
        long k = s.weight;
        std::string name =
            "graded-purity@" + l.p.get_str() + "/w=" + std::to_string(k);
        long w = k - 2 * l.frob.shift();
        std::optional<PadicMat> block;
        try {
            block = graded_block(m, l.p, k);
        } catch (const error& e) {
            rep.items.push_back({name, CheckStatus::fail, e.what()});
            continue;
        }
        if (!block) {
            rep.items.push_back(
                {name, CheckStatus::indeterminate, "adapted basis not p-integral"});
            continue;
        }
        if (w < 0) {
            rep.items.push_back(
                {name, CheckStatus::fail, "stored weight negative for an integral block"});
            continue;
        }
        auto pinned = pinned_block_charpoly(*block, w);
        if (pinned) {
            try {
                auto prof = eps ? weight_profile(*pinned, l.p, *eps)
                                : weight_profile(*pinned, l.p);
                auto pr = is_pure(*pinned, l.p, w);
                if (pr.pure())
                    rep.items.push_back({name, CheckStatus::pass,
                                         "charpoly " + pinned->str() + " pure, pinned"});
                else
                    rep.items.push_back({name, CheckStatus::fail,
                                         "charpoly " + pinned->str() + " profile " +
                                             prof.str() + " not pure of weight " +
                                             std::to_string(w)});
            } catch (const precision_error& e) {
                rep.items.push_back({name, CheckStatus::indeterminate, e.what()});
            } catch (const error& e) {
                // not a Weil polynomial at all, or impure: both are failures
                rep.items.push_back({name, CheckStatus::fail, e.what()});
            }
            continue;
        }
        // p^N too small to pin the integer charpoly: verify every condition
        // that is decidable modulo p^N
        if ((w * d) % 2 != 0) {
            rep.items.push_back({name, CheckStatus::fail,
                                 "odd weight times odd dimension has no rational block"});
            continue;
        }
        bool pass = true;
        std::string why;
        long want_v = w * long(d) / 2;
        try {
            auto [v, unit] = block->det_val_unit();
            if (want_v >= block->prec() || v != want_v) {
                pass = false;
                why = "det valuation " + std::to_string(v) + " != " + std::to_string(want_v);
            }
        } catch (const precision_error&) {
            // det = 0 mod p^N: consistent iff the expected valuation >= N
            if (want_v < block->prec()) {
                pass = false;
                why = "determinant vanishes below the expected valuation";
            }
        }
        if (pass) {
            auto res = block->charpoly_mod();
            Int mod = block->modulus();
            for (int j = 0; j <= d && pass; ++j) {
                Int lhs = res[0] * res[size_t(d - j)] % mod;
                Int rhs = res[size_t(j)] * pow_int(l.p, (unsigned long)(w * j)) % mod;
                if ((lhs - rhs) % mod != 0) {
                    pass = false;
                    why = "functional equation fails mod p^N";
                }
            }
        }
        rep.items.push_back({name, pass ? CheckStatus::pass : CheckStatus::fail,
                             pass ? "verified modulo p^N (integer lift not pinned)" : why});
    }
}

} // namespace

CheckReport check(const OgusObject& m, std::optional<Rat> eps) {
    CheckReport rep;
    // shape
    {
        bool ok = int(m.labels.size()) == m.dim && !m.locals.empty();
        std::string why = ok ? "" : (m.locals.empty() ? "no local data" : "label count");
        for (const auto& l : m.locals) {
            if (l.frob.dim() != m.dim) { ok = false; why = "local dimension mismatch"; }
            if (l.N < 1 || l.frob.prec() != l.N) { ok = false; why = "precision mismatch"; }
        }
        for (size_t i = 1; i < m.locals.size(); ++i)
            if (m.locals[i].p <= m.locals[i - 1].p) { ok = false; why = "primes not ascending"; }
        rep.items.push_back({"shape", ok ? CheckStatus::pass : CheckStatus::fail, why});
        if (!ok) return rep;
    }
    // filtration nesting
    {
        bool ok = true;
        std::string why;
        int prev_rank = 0;
        for (size_t i = 0; i < m.filt.steps.size(); ++i) {
            const auto& s = m.filt.steps[i];
            if (s.basis.rows() != m.dim) { ok = false; why = "basis row count"; break; }
            if (s.basis.rank() != s.basis.cols()) { ok = false; why = "dependent basis columns"; break; }
            if (s.basis.cols() <= prev_rank) { ok = false; why = "rank does not increase"; break; }
            if (i > 0 && s.weight <= m.filt.steps[i - 1].weight) { ok = false; why = "weights not increasing"; break; }
            if (i > 0 && !QMat::span_contains(s.basis, m.filt.steps[i - 1].basis)) {
                ok = false;
                why = "steps not nested";
                break;
            }
            prev_rank = s.basis.cols();
        }
        if (ok && m.dim > 0 && (m.filt.steps.empty() || m.filt.steps.back().basis.cols() != m.dim)) {
            ok = false;
            why = "top step does not span";
        }
        rep.items.push_back({"filtration", ok ? CheckStatus::pass : CheckStatus::fail, why});
        if (!ok) return rep;
    }
    for (const auto& l : m.locals) {
        std::string name = "frobenius-invertible@" + l.p.get_str();
        try {
            auto [v, unit] = l.frob.det_val_unit();
            rep.items.push_back({name, CheckStatus::pass,
                                 "det valuation " + std::to_string(v) + " at shift " +
                                     std::to_string(l.frob.shift())});
        } catch (const precision_error& e) {
            rep.items.push_back({name, CheckStatus::indeterminate, e.what()});
        }
    }
    for (const auto& l : m.locals) check_purity_at(rep, m, l, eps);
    return rep;
}

} // namespace fogq
