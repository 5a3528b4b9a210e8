// Python module maycalc._core. Structured results cross as JSON text and are
// decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "maycalc/certify.hpp"
#include "maycalc/claims.hpp"
#include "maycalc/differential.hpp"
#include "maycalc/expr.hpp"
#include "maycalc/greek.hpp"
#include "maycalc/les.hpp"
#include "maycalc/serialize.hpp"

namespace py = pybind11;
using namespace maycalc;

namespace {

// One engine per prime for the life of the interpreter.
const SphereExt& engine(int p)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SphereExt>> engines;
    std::lock_guard lk(mu);
    auto& e = engines[p];
    if (!e)
        e = std::make_unique<SphereExt>(PrimeContext(p));
    return *e;
}

template <class T>
std::vector<std::string> texts(const std::vector<T>& xs)
{
    std::vector<std::string> r;
    for (const auto& x : xs)
        r.push_back(to_string(x));
    return r;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "May spectral sequence E1/E2 engine, Ext certificates and Greek-letter bookkeeping";

    static py::exception<Error> exc(m, "MaycalcError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep)
                std::rethrow_exception(ep);
        }
        catch (const Error& e) {
            py::set_error(exc, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    m.def("eval_degree", [](const std::string& text, int p, const std::map<std::string, Int>& vars) {
        return eval_expr(text, PrimeContext(p), vars);
    }, py::arg("text"), py::arg("p"), py::arg("vars") = std::map<std::string, Int>{});

    m.def("basis", [](int p, Int s, Int t) { return texts(enumerate_basis(PrimeContext(p), s, t)); },
          py::arg("p"), py::arg("s"), py::arg("t"));

    m.def("d1", [](int p, const std::string& element) {
        PrimeContext c(p);
        return to_string(d1(parse_element(element, c), c));
    }, py::arg("p"), py::arg("element"));

    m.def("multiply", [](int p, const std::string& x, const std::string& y) {
        PrimeContext c(p);
        return to_string(multiply(parse_element(x, c), parse_element(y, c), c));
    }, py::arg("p"), py::arg("x"), py::arg("y"));

    m.def("e2_json", [](int p, Int s, Int t, bool reversed) {
        PrimeContext c(p);
        py::gil_scoped_release nogil;
        return to_json(e2_at(c, s, t, {reversed}), c).dump();
    }, py::arg("p"), py::arg("s"), py::arg("t"), py::arg("reversed") = false);

    m.def("certificate_json", [](int p, Int s, Int t, bool with_basis) {
        py::gil_scoped_release nogil;
        return to_json(engine(p).dim(s, t), with_basis).dump();
    }, py::arg("p"), py::arg("s"), py::arg("t"), py::arg("with_basis") = false);

    m.def("window_json", [](int p, Int s, Int t, int r_min, int r_max) {
        py::gil_scoped_release nogil;
        return to_json(adams_dr_window(engine(p), s, t, r_min, r_max)).dump();
    }, py::arg("p"), py::arg("s"), py::arg("t"), py::arg("r_min"), py::arg("r_max"));

    m.def("les_json", [](int p, const std::string& spectrum, Int s, Int t, const std::string& column) {
        const Spectrum x = parse_spectrum(spectrum);
        const Column col = parse_column(column);
        py::gil_scoped_release nogil;
        const SphereExt& ext = engine(p);
        return to_json(ext_dims(table_for(ext, x, col, s, t), x, col, s, t), x, s, t).dump();
    }, py::arg("p"), py::arg("spectrum"), py::arg("s"), py::arg("t"), py::arg("column") = "cohomology");

    m.def("product_nonzero", [](int p, const std::vector<std::pair<std::string, std::vector<Int>>>& factors) {
        const SphereExt& ext = engine(p);
        std::vector<NamedClass> cs;
        for (const auto& [name, params] : factors)
            cs.push_back(resolve_named(name, params, ext.ctx()));
        ProductResult r = product_nonzero_at_e2(ext, cs);
        return py::make_tuple(r.nonzero, r.s, r.t, to_string(r.rep));
    }, py::arg("p"), py::arg("factors"));

    m.def("beta_list", [](int p, Int t, bool strict) { return texts(enumerate_beta(PrimeContext(p), t, {strict})); },
          py::arg("p"), py::arg("t"), py::arg("strict") = false);
    m.def("ext0_list", [](int p, int n, Int t) { return texts(enumerate_ext0_KR(PrimeContext(p), n, t)); },
          py::arg("p"), py::arg("n"), py::arg("t") = 1);
    m.def("ext1_bpk_list", [](int p, int n) { return texts(enumerate_ext1_BPK(PrimeContext(p), n).generators); },
          py::arg("p"), py::arg("n"));

    m.def("thom", [](int p, const std::string& index) -> py::object {
        PrimeContext c(p);
        try {
            NamedClass k = index.rfind("gamma", 0) == 0 ? thom_image(parse_gamma(index), c)
                                                        : thom_image(parse_beta(index), c);
            return py::make_tuple(k.display(), k.s, k.t);
        }
        catch (const Error& e) {
            if (e.code() != ErrorCode::NoDictionaryEntry)
                throw;
            return py::none();
        }
    }, py::arg("p"), py::arg("index"));

    m.def("stem_families", &stem_families);
    m.def("stem", [](int p, const std::string& family, const std::map<std::string, Int>& params) {
        StemResult r = stem_of(family, params, PrimeContext(p));
        return py::make_tuple(r.stem, r.bidegree, r.conjectural);
    }, py::arg("p"), py::arg("family"), py::arg("params"));

    m.def("verify_text", [](const std::string& text, bool include_conjectures, unsigned workers) {
        nlohmann::json claims = parse_claims_text(text);
        py::gil_scoped_release nogil;
        ClaimsReport r = run_claims(claims, {include_conjectures, workers, nullptr});
        return std::make_pair(r.exit_code(), r.text());
    }, py::arg("text"), py::arg("include_conjectures") = false, py::arg("workers") = 0);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
