#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringcert/certio.hpp"
#include "ringcert/irred_int.hpp"
#include "ringcert/pipeline.hpp"
#include "ringcert/resultants.hpp"

namespace py = pybind11;
using namespace ringcert;

namespace {

BigInt to_big(py::handle h) { return parse_bigint(std::string(py::str(h))); }

py::int_ to_py(const BigInt& x)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

ZPoly to_zpoly(const std::vector<py::int_>& coeffs)
{
    std::vector<BigInt> c;
    for (const auto& x : coeffs)
        c.push_back(to_big(x));
    return ZPoly(std::move(c));
}

ZMatrix to_zmatrix(const std::vector<std::vector<py::int_>>& rows)
{
    std::vector<std::vector<BigInt>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (const auto& x : r)
            out.back().push_back(to_big(x));
    }
    return ZMatrix::from_rows(out);
}

py::dict outcome_dict(const VerifyOutcome& o)
{
    py::dict d;
    d["status"] = o.status == VerifyOutcome::Status::Accepted   ? "accepted"
                  : o.status == VerifyOutcome::Status::Rejected ? "rejected"
                                                                : "malformed";
    d["kind"] = o.kind;
    d["reason"] = o.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact certificates for irreducibility and maximal orders";

    static py::exception<std::runtime_error> generation_error(m, "GenerationError");

    m.def(
        "verify_bytes",
        [](const py::bytes& data, unsigned threads) {
            std::string s = data;
            VerifyOutcome o;
            {
                py::gil_scoped_release release;
                o = verify_bytes(s, threads);
            }
            return outcome_dict(o);
        },
        py::arg("data"), py::arg("threads") = 1);

    m.def(
        "verdict_json",
        [](const py::bytes& data, unsigned threads) {
            std::string s = data;
            py::gil_scoped_release release;
            return verdict_json(verify_bytes(s, threads));
        },
        py::arg("data"), py::arg("threads") = 1);

    m.def(
        "generate_bundle",
        [](const std::vector<py::int_>& T, const py::int_& d, const std::vector<std::vector<py::int_>>& basis,
           std::uint64_t seed, py::object claim) {
            ZPoly t = to_zpoly(T);
            BigInt dd = to_big(d);
            ZMatrix b = to_zmatrix(basis);
            BundleOptions opts;
            opts.seed = opts.irred.seed = opts.pmax.seed = seed;
            BundleResult r;
            {
                py::gil_scoped_release release;
                r = generate_bundle(t, dd, b, opts);
            }
            if (auto* f = std::get_if<BundleFailure>(&r)) {
                std::string msg = f->message;
                if (!f->kernel_element.empty()) {
                    msg += "; kernel element [";
                    for (std::size_t i = 0; i < f->kernel_element.size(); ++i)
                        msg += (i ? ", " : "") + to_string(f->kernel_element[i]);
                    msg += "]";
                }
                PyErr_SetString(generation_error.ptr(), msg.c_str());
                throw py::error_already_set();
            }
            CertificateBundle bundle = std::get<CertificateBundle>(std::move(r));
            if (!claim.is_none())
                bundle.claimed_discriminant = to_big(claim);
            return py::bytes(serialize(bundle));
        },
        py::arg("T"), py::arg("d"), py::arg("basis"), py::arg("seed") = 1, py::arg("claim") = py::none());

    m.def("bundle_discriminant", [](const py::bytes& data) {
        CertificateFile f = parse(std::string(data));
        auto* b = std::get_if<CertificateBundle>(&f);
        if (!b)
            throw py::value_error("not a bundle");
        return to_py(disc_order(b->order).value);
    });

    m.def(
        "generate_irreducibility",
        [](const std::vector<py::int_>& coeffs, std::uint64_t seed) -> py::object {
            IntIrredOptions opts;
            opts.seed = seed;
            IntIrredResult r = generate_int_irred(to_zpoly(coeffs), opts);
            if (auto* red = std::get_if<ReducibleZ>(&r)) {
                py::list factor;
                for (const BigInt& c : red->factor.coeffs())
                    factor.append(to_py(c));
                return py::make_tuple("reducible", factor);
            }
            if (auto* ex = std::get_if<SearchExhausted>(&r))
                return py::make_tuple("exhausted", ex->message);
            const IntIrredCertificate& c = std::get<IntIrredCertificate>(r);
            std::string bytes = std::holds_alternative<DegreeAnalysisCertificate>(c)
                                    ? serialize(std::get<DegreeAnalysisCertificate>(c))
                                    : serialize(std::get<LPFWCertificate>(c));
            return py::make_tuple("certificate", py::bytes(bytes));
        },
        py::arg("coeffs"), py::arg("seed") = 1);

    m.def("resultant", [](const std::vector<py::int_>& f, const std::vector<py::int_>& g) {
        return to_py(resultant(to_zpoly(f), to_zpoly(g)));
    });

    m.def("disc_poly", [](const std::vector<py::int_>& f) { return to_py(disc_poly(to_zpoly(f))); });

    m.def("cauchy_bound_scaled", [](const std::vector<py::int_>& f, const py::int_& num, const py::int_& den) {
        Rat r = cauchy_bound_scaled(to_zpoly(f), make_rat(to_big(num), to_big(den)));
        return py::make_tuple(to_py(r.get_num()), to_py(r.get_den()));
    });

    m.attr("SCHEMA_VERSION") = std::string(kSchemaVersion);
}
