#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secint/bn_core.hpp"
#include "secint/certifier.hpp"
#include "secint/cli.hpp"
#include "secint/counting.hpp"
#include "secint/errors.hpp"
#include "secint/json_io.hpp"
#include "secint/lls.hpp"
#include "secint/secant_oracle.hpp"

#include <sstream>

namespace py = pybind11;
using namespace secint;

// Python int <-> mpz_class through the decimal string form.
namespace pybind11::detail {
template <> struct type_caster<Integer> {
    PYBIND11_TYPE_CASTER(Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr()))
            return false;
        value = Integer(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Integer& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
} // namespace pybind11::detail

namespace {

// Anything whose str() parses as "p" or "p/q", so Fraction works too.
Rational to_rational(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

py::object to_python(const json_io::Json& j) {
    return py::module_::import("json").attr("loads")(json_io::dump(j, -1));
}

RationalSeries make_series(unsigned long d, const std::vector<std::vector<py::object>>& basis) {
    std::vector<Polynomial> polys;
    for (const auto& coeffs : basis) {
        std::vector<Rational> c;
        for (const auto& x : coeffs)
            c.push_back(to_rational(x));
        polys.emplace_back(std::move(c));
    }
    return RationalSeries::make(d, std::move(polys));
}

CertifyOptions make_options(const std::optional<std::vector<std::string>>& constraints, std::size_t witness_cap,
                            std::uint64_t search_cap) {
    CertifyOptions o;
    o.witness_cap = witness_cap;
    o.search_cap = search_cap;
    if (constraints) {
        ConstraintFlags flags = ConstraintFlags::none();
        for (const auto& id : *constraints) {
            auto c = parse_constraint_id(id);
            if (!c)
                throw InvalidArgument("unknown constraint id '" + id + "'");
            flags = flags.with(*c);
        }
        o.constraints = flags;
    }
    return o;
}

} // namespace

PYBIND11_MODULE(_secint, m) {
    m.doc() = "Brill-Noether numerics, incidence counts and emptiness certificates";
    m.attr("__version__") = std::string(json_io::kToolVersion);

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
    auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<NotApplicable>(m, "NotApplicable", precondition.ptr());
    py::register_exception<ResidualNotEffective>(m, "ResidualNotEffective", precondition.ptr());
    py::register_exception<SearchSpaceTooLarge>(m, "SearchSpaceTooLarge", error.ptr());
    py::register_exception<InternalError>(m, "InternalError", error.ptr());

    m.def("rho", &rho, py::arg("g"), py::arg("r"), py::arg("d"));
    m.def(
        "residual",
        [](Integer g, Integer r, Integer d) {
            auto l = residual(SeriesParams::make(std::move(g), std::move(r), std::move(d)));
            return py::make_tuple(l.g(), l.r(), l.d());
        },
        py::arg("g"), py::arg("r"), py::arg("d"));
    m.def("expected_dim_secant", &expected_dim_secant, py::arg("e"), py::arg("f"), py::arg("r"));
    m.def("emptiness_condition_holds", &emptiness_condition_holds, py::arg("g"), py::arg("r1"), py::arg("d1"),
          py::arg("e"), py::arg("f"));

    m.def("gen_binomial", &gen_binomial, py::arg("n"), py::arg("k"));
    m.def(
        "incidence_count",
        [](Integer g, std::pair<Integer, Integer> l1, std::pair<Integer, Integer> l2) {
            return incidence_count(CountInputs::make(g, SeriesParams::make(g, l1.first, l1.second),
                                                     SeriesParams::make(g, l2.first, l2.second)));
        },
        py::arg("g"), py::arg("l1"), py::arg("l2"));
    m.def(
        "chow_count",
        [](Integer g, std::pair<Integer, Integer> l1, std::pair<Integer, Integer> l2) {
            Integer e = l1.first + l2.first;
            return chow_product_evaluate(gamma_class(g, l1.first, l1.second, e), gamma_class(g, l2.first, l2.second, e),
                                         g, e);
        },
        py::arg("g"), py::arg("l1"), py::arg("l2"));
    m.def("severi_count", &severi_count, py::arg("g"), py::arg("r1"), py::arg("d1"), py::arg("d2"));
    m.def("adjunction_nodes", &adjunction_nodes, py::arg("g"), py::arg("d1"), py::arg("d2"));
    m.def("plucker_total", &plucker_total, py::arg("g"), py::arg("r"), py::arg("d"));

    m.def(
        "certify",
        [](Integer g, Integer r1, Integer d1, Integer e, Integer f, std::optional<std::vector<std::string>> constraints,
           std::size_t witness_cap, std::uint64_t search_cap) {
            auto inst = CertifierInstance::make(g, r1, d1, e, f);
            auto options = make_options(constraints, witness_cap, search_cap);
            Certificate cert;
            {
                py::gil_scoped_release release;
                cert = certify_empty(inst, options);
            }
            return to_python(json_io::to_json(cert));
        },
        py::arg("g"), py::arg("r1"), py::arg("d1"), py::arg("e"), py::arg("f"), py::arg("constraints") = py::none(),
        py::arg("witness_cap") = kDefaultWitnessCap, py::arg("search_cap") = kDefaultSearchCap);
    m.def(
        "classify_incidence_zero",
        [](Integer g, Integer r1, Integer d1, bool bpf) {
            return to_python(json_io::to_json(classify_incidence_zero(g, r1, d1, bpf)));
        },
        py::arg("g"), py::arg("r1"), py::arg("d1"), py::arg("l2_base_point_free") = true);
    m.def(
        "counterexample_report",
        [](Integer d1) { return to_python(json_io::to_json(remark_counterexample_report(d1))); }, py::arg("d1"));

    m.def(
        "is_secant_divisor",
        [](unsigned long d, const std::vector<std::vector<py::object>>& basis, const std::vector<py::object>& points,
           std::vector<unsigned long> multiplicities, unsigned long f) {
            std::vector<Rational> pts;
            for (const auto& p : points)
                pts.push_back(to_rational(p));
            return is_secant_divisor(make_series(d, basis), MultiDivisor::make(std::move(pts), std::move(multiplicities)),
                                     f);
        },
        py::arg("d"), py::arg("basis"), py::arg("points"), py::arg("multiplicities"), py::arg("f"));
    m.def(
        "ramification_weight_total",
        [](unsigned long d, const std::vector<std::vector<py::object>>& basis) {
            return ramification_weight_total(make_series(d, basis));
        },
        py::arg("d"), py::arg("basis"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
