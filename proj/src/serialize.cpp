#include "fogq/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fogq/errors.hpp"

namespace fogq {

using ordered_json = nlohmann::ordered_json;

namespace {

Int int_from_json(const ordered_json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw input_error(std::string("bad integer for ") + what);
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw input_error(std::string("bad integer for ") + what);
        return Int(s);
    }
    throw input_error(std::string("expected integer for ") + what);
}

long long_from_json(const ordered_json& j, const char* what) {
    if (!j.is_number_integer()) throw input_error(std::string("expected integer for ") + what);
    return j.get<long>();
}

} // namespace

std::string serialize(const OgusObject& m) {
    ordered_json j;
    j["dim"] = m.dim;
    j["labels"] = m.labels;
    j["epsilon"] = "identity";
    auto filt = ordered_json::array();
    for (const auto& s : m.filt.steps) {
        ordered_json step;
        step["weight"] = s.weight;
        auto basis = ordered_json::array();
        for (int c = 0; c < s.basis.cols(); ++c) {
            auto vec = ordered_json::array();
            for (int i = 0; i < s.basis.rows(); ++i) vec.push_back(rat_str(s.basis.at(i, c)));
            basis.push_back(vec);
        }
        step["basis"] = basis;
        filt.push_back(step);
    }
    j["filtration"] = filt;
    auto loc = ordered_json::array();
    for (const auto& l : m.locals) {
        ordered_json d;
        d["p"] = l.p.get_si();
        d["prec"] = l.N;
        d["val_shift"] = l.frob.shift();
        auto rows = ordered_json::array();
        for (int i = 0; i < l.frob.dim(); ++i) {
            auto row = ordered_json::array();
            for (int k = 0; k < l.frob.dim(); ++k) row.push_back(l.frob.at(i, k).get_str());
            rows.push_back(row);
        }
        d["frobenius"] = rows;
        loc.push_back(d);
    }
    j["local"] = loc;
    return j.dump() + "\n";
}

OgusObject parse_object(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("expected a JSON object");
    for (const char* key : {"dim", "labels", "epsilon", "filtration", "local"})
        if (!j.contains(key)) throw input_error(std::string("missing field '") + key + "'");

    OgusObject m;
    m.dim = int(long_from_json(j["dim"], "dim"));
    if (m.dim < 1) throw input_error("dim must be positive");
    if (!j["labels"].is_array() || int(j["labels"].size()) != m.dim)
        throw input_error("labels must list one name per basis vector");
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw input_error("labels must be strings");
        m.labels.push_back(l.get<std::string>());
    }
    if (!j["epsilon"].is_string() || j["epsilon"].get<std::string>() != "identity")
        throw input_error("only epsilon = \"identity\" is supported");

    if (!j["filtration"].is_array()) throw input_error("filtration must be an array");
    for (const auto& step : j["filtration"]) {
        if (!step.is_object() || !step.contains("weight") || !step.contains("basis"))
            throw input_error("filtration steps need 'weight' and 'basis'");
        FiltStep fs;
        fs.weight = long_from_json(step["weight"], "weight");
        const auto& basis = step["basis"];
        if (!basis.is_array() || basis.empty())
            throw input_error("filtration step basis must be a nonempty array");
        fs.basis = QMat(m.dim, int(basis.size()));
        int c = 0;
        for (const auto& vec : basis) {
            if (!vec.is_array() || int(vec.size()) != m.dim)
                throw input_error("basis vectors must have 'dim' entries");
            for (int i = 0; i < m.dim; ++i) {
                if (!vec[size_t(i)].is_string())
                    throw input_error("basis entries must be rational strings");
                fs.basis.at(i, c) = parse_rat(vec[size_t(i)].get<std::string>());
            }
            ++c;
        }
        m.filt.steps.push_back(std::move(fs));
    }
    for (size_t i = 1; i < m.filt.steps.size(); ++i) {
        if (m.filt.steps[i].weight <= m.filt.steps[i - 1].weight)
            throw input_error("filtration weights must strictly increase");
        if (m.filt.steps[i].basis.cols() < m.filt.steps[i - 1].basis.cols())
            throw input_error("filtration steps must be nested");
    }

    if (!j["local"].is_array() || j["local"].empty())
        throw input_error("need at least one local datum");
    for (const auto& d : j["local"]) {
        if (!d.is_object())
            throw input_error("local data must be objects");
        for (const char* key : {"p", "prec", "val_shift", "frobenius"})
            if (!d.contains(key)) throw input_error(std::string("local datum missing '") + key + "'");
        Int p = int_from_json(d["p"], "p");
        long N = long_from_json(d["prec"], "prec");
        long shift = long_from_json(d["val_shift"], "val_shift");
        if (p < 3 || !is_prime(p)) throw input_error("p must be an odd prime");
        if (N < 1) throw input_error("prec must be >= 1");
        PadicMat f(p, N, m.dim, shift);
        const auto& rows = d["frobenius"];
        if (!rows.is_array() || int(rows.size()) != m.dim)
            throw input_error("frobenius must be a dim x dim matrix");
        Int mod = f.modulus();
        for (int i = 0; i < m.dim; ++i) {
            const auto& row = rows[size_t(i)];
            if (!row.is_array() || int(row.size()) != m.dim)
                throw input_error("frobenius must be a dim x dim matrix");
            for (int k = 0; k < m.dim; ++k) {
                Int e = int_from_json(row[size_t(k)], "frobenius entry") % mod;
                if (e < 0) e += mod;
                f.at(i, k) = e;
            }
        }
        m.locals.push_back({p, N, f});
    }
    for (size_t i = 1; i < m.locals.size(); ++i)
        if (m.locals[i].p <= m.locals[i - 1].p)
            throw input_error("local data must be listed by ascending prime");
    return m;
}

OgusObject load_object(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_object(ss.str());
}

void save_object(const OgusObject& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << serialize(m);
}

} // namespace fogq
