#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "fogq/experiments.hpp"
#include "fogq/hom.hpp"
#include "fogq/kedlaya.hpp"
#include "fogq/serialize.hpp"
#include "fogq/split.hpp"
#include "fogq/version.hpp"

namespace py = pybind11;
using namespace fogq;

namespace {

std::vector<Int> to_primes(const std::vector<long>& ps) {
    std::vector<Int> out;
    out.reserve(ps.size());
    for (long p : ps) out.push_back(Int(p));
    return out;
}

BasisKind to_kind(const std::string& kind) {
    if (kind == "projective") return BasisKind::projective;
    if (kind == "open") return BasisKind::open;
    throw input_error("kind must be 'projective' or 'open'");
}

std::optional<Int> to_bound(const std::optional<long>& b) {
    if (!b) return std::nullopt;
    return Int(*b);
}

py::dict hom_dict(const HomResult& h) {
    py::dict d;
    d["rank"] = h.rank();
    d["pin"] = h.pin_prime.get_str() + "^" + std::to_string(h.pin_prec);
    py::list basis;
    for (const auto& cand : h.basis) {
        py::dict e;
        py::list rows;
        for (int i = 0; i < cand.f.rows(); ++i) {
            py::list row;
            for (int j = 0; j < cand.f.cols(); ++j)
                row.append(rat_str(cand.f.at(i, j)));
            rows.append(std::move(row));
        }
        e["matrix"] = std::move(rows);
        py::list vp;
        for (const Int& q : cand.verified_primes) vp.append(q.get_si());
        e["verified_primes"] = std::move(vp);
        e["status"] = cand.status;
        basis.append(std::move(e));
    }
    d["basis"] = std::move(basis);
    return d;
}

} // namespace

PYBIND11_MODULE(_fogq, m) {
    m.doc() = "filtered objects with Frobenius structures from hyperelliptic curves";
    m.attr("__version__") = version;

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception<invariant_error>(m, "InvariantError", PyExc_RuntimeError);

    m.def("zeta", [](const std::string& curve, long p, long prec, bool small_p) {
              return zeta_charpoly(parse_curve(curve), Int(p), prec, small_p).str();
          },
          py::arg("curve"), py::arg("p"), py::arg("prec") = 2,
          py::arg("small_p") = false,
          "integer Frobenius charpoly on projective H^1, as a string");

    m.def("point_count", [](const std::string& curve, long p, long r) {
              return point_count_oracle(parse_curve(curve), Int(p), r).count.get_si();
          },
          py::arg("curve"), py::arg("p"), py::arg("r") = 1);

    m.def("good_primes", [](const std::string& curve, long lo, long hi) {
              std::vector<long> out;
              for (const Int& p : good_primes(parse_curve(curve), Int(lo), Int(hi)))
                  out.push_back(p.get_si());
              return out;
          },
          py::arg("curve"), py::arg("lo"), py::arg("hi"));

    m.def("realise", [](const std::string& curve, const std::vector<long>& primes,
                        long prec, const std::string& kind, bool small_p) {
              return serialize(realise_h1(parse_curve(curve), to_primes(primes),
                                          prec, to_kind(kind), small_p));
          },
          py::arg("curve"), py::arg("primes"), py::arg("prec") = 2,
          py::arg("kind") = "projective", py::arg("small_p") = false,
          "serialized filtered H^1 realisation");

    m.def("check", [](const std::string& obj, const std::string& eps) {
              std::optional<Rat> e;
              if (!eps.empty()) e = parse_rat(eps);
              auto rep = check(parse_object(obj), e);
              py::dict d;
              d["ok"] = rep.ok();
              d["clean"] = rep.clean();
              d["report"] = rep.str();
              return d;
          },
          py::arg("obj"), py::arg("eps") = "");

    m.def("profile", [](const std::string& obj) {
              return filtration_profile(parse_object(obj)).str();
          },
          py::arg("obj"), "weight profile of the declared filtration");

    m.def("twist", [](const std::string& obj, long n) {
              return serialize(tate_twist(parse_object(obj), n));
          },
          py::arg("obj"), py::arg("n") = 1);

    m.def("tensor", [](const std::string& a, const std::string& b) {
              return serialize(tensor(parse_object(a), parse_object(b)));
          });

    m.def("direct_sum", [](const std::string& a, const std::string& b) {
              return serialize(direct_sum(parse_object(a), parse_object(b)));
          });

    m.def("dual", [](const std::string& a) {
              return serialize(dual(parse_object(a)));
          });

    m.def("hom", [](const std::string& a, const std::string& b,
                    const std::optional<long>& bound) {
              return hom_dict(hom_space(parse_object(a), parse_object(b),
                                        to_bound(bound)));
          },
          py::arg("a"), py::arg("b"), py::arg("bound") = py::none(),
          "rational morphism basis with verification status per candidate");

    m.def("split", [](const std::string& obj, long p) {
              auto sp = canonical_split(parse_object(obj), Int(p));
              py::dict d;
              d["p"] = sp.p.get_si();
              d["prec"] = sp.prec;
              py::list parts;
              for (const auto& part : sp.parts)
                  parts.append(py::make_tuple(part.weight, part.rank));
              d["parts"] = std::move(parts);
              return d;
          },
          py::arg("obj"), py::arg("p"));

    m.def("tate_rank_json", [](const std::string& c1, const std::string& c2,
                               const std::vector<long>& primes, long prec,
                               const std::optional<long>& bound) {
              return tate_rank(parse_curve(c1), parse_curve(c2), to_primes(primes),
                               prec, to_bound(bound)).json();
          },
          py::arg("c1"), py::arg("c2"), py::arg("primes"), py::arg("prec") = 3,
          py::arg("bound") = py::none());

    m.def("isogeny_detect_json", [](const std::string& c1, const std::string& c2,
                                    const std::vector<long>& primes, long prec,
                                    const std::optional<long>& bound) {
              return isogeny_detect(parse_curve(c1), parse_curve(c2),
                                    to_primes(primes), prec, to_bound(bound)).json();
          },
          py::arg("c1"), py::arg("c2"), py::arg("primes"), py::arg("prec") = 3,
          py::arg("bound") = py::none());
}
