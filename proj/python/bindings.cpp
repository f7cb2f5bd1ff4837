#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vnw/experiments.hpp"

namespace py = pybind11;
using namespace vnw;

namespace {

PolySpec makePoly(int n, Complex a0, const CVector& linear, const CMatrix& quad) {
    return PolySpec(n, a0, linear, SymCoeffMatrix::symmetrized(quad));
}

PolySpec polyOfMatrix(const CMatrix& a) {
    return polyFromMatrix(SymCoeffMatrix::symmetrized(a));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Witnesses for von Neumann inequality violations: polydisc sup norms, "
        "sign/Gram maxima and Varopoulos operator norms.";

    py::register_exception<BudgetError>(m, "BudgetError");

    py::class_<PolySpec>(m, "Poly")
        .def(py::init(&makePoly), py::arg("n"), py::arg("a0"), py::arg("linear"),
             py::arg("quad"))
        .def_static("from_matrix", &polyOfMatrix, py::arg("quad"))
        .def_readonly("n", &PolySpec::n)
        .def_readonly("a0", &PolySpec::a0)
        .def_readonly("linear", &PolySpec::linear)
        .def_property_readonly("quad",
                               [](const PolySpec& p) { return p.quad.mat(); })
        .def("is_homogeneous", [](const PolySpec& p) { return p.isHomogeneous(); })
        .def("__call__",
             [](const PolySpec& p, const CVector& z) { return evaluate(p, z); });

    py::class_<SupResult>(m, "SupResult")
        .def_readonly("value", &SupResult::value)
        .def_property_readonly(
            "argmax", [](const SupResult& r) { return r.argmax.angles; })
        .def_readonly("certificate_residual", &SupResult::certificate_residual)
        .def_readonly("upper_bound", &SupResult::upper_bound)
        .def_readonly("grid_resolution", &SupResult::grid_resolution)
        .def_readonly("refinements", &SupResult::refinements)
        .def_readonly("degenerate", &SupResult::degenerate)
        .def("__repr__", [](const SupResult& r) {
            return "SupResult(value=" + formatNumber(r.value) + ")";
        });

    py::class_<SignWitness>(m, "SignWitness")
        .def_readonly("signs", &SignWitness::signs)
        .def_readonly("value", &SignWitness::value);

    py::class_<GramWitness>(m, "GramWitness")
        .def_readonly("rank", &GramWitness::rank)
        .def_readonly("vectors", &GramWitness::vectors)
        .def_readonly("value", &GramWitness::value)
        .def("recompute", &GramWitness::recompute, py::arg("a"));

    py::class_<RatioReport>(m, "RatioReport")
        .def_readonly("poly", &RatioReport::poly)
        .def_readonly("sup", &RatioReport::sup)
        .def_readonly("operator_value", &RatioReport::operator_value)
        .def_readonly("ratio", &RatioReport::ratio)
        .def_readonly("gram_vectors", &RatioReport::gram_vectors)
        .def_readonly("method", &RatioReport::method);

    m.def("symmetrize",
          [](const CMatrix& a) { return symmetrize(a).mat(); }, py::arg("a"));
    m.def("homogenize",
          [](const PolySpec& p) { return homogenize(p).mat(); }, py::arg("p"));
    m.def("evaluate", &evaluate, py::arg("p"), py::arg("z"));
    m.def("is_psd",
          [](const CMatrix& a, double tol) {
              return isPsd(SymCoeffMatrix::symmetrized(a), tol);
          },
          py::arg("a"), py::arg("tol") = 1e-10);

    m.def("torus_sup",
          [](const PolySpec& p, int resolution, int multistarts, double tol) {
              TorusConfig cfg;
              cfg.resolution = resolution;
              cfg.multistarts = multistarts;
              cfg.tol = tol;
              return torusSup(p, cfg);
          },
          py::arg("p"), py::arg("resolution") = 0, py::arg("multistarts") = 32,
          py::arg("tol") = 1e-10);
    m.def("sign_sup", &signSup, py::arg("a"));
    m.def("collinearity_certificate",
          [](const PolySpec& p, const RVector& angles) {
              return collinearityCertificate(p, TorusPoint{angles});
          },
          py::arg("p"), py::arg("angles"));
    m.def("balpha_matrix",
          [](double alpha) { return balphaMatrix(alpha).mat(); }, py::arg("alpha"));
    m.def("balpha_sup_norm", &balphaSupNorm, py::arg("alpha"));
    m.def("balpha_gram_max", &balphaGramMax, py::arg("alpha"));

    m.def("bracket", &bracket, py::arg("x"), py::arg("y"));
    m.def("make_varopoulos",
          [](const CVector& x, const CVector& y) {
              return makeVaropoulos(VaropoulosPair(x, y));
          },
          py::arg("x"), py::arg("y"));
    m.def("realify", &realify, py::arg("x"));
    m.def("operator_norm", &operatorNorm, py::arg("t"), py::arg("seed") = 0);
    m.def("vn_ratio",
          [](const PolySpec& p, const std::vector<CVector>& xs, bool realified) {
              return vnRatio(p, CommutingTuple::fromVectors(xs, realified));
          },
          py::arg("p"), py::arg("xs"), py::arg("realified") = false,
          "von Neumann ratio of p on the symmetric Varopoulos tuple built "
          "from the given vectors");

    m.def("gram_max",
          [](const RMatrix& a, int rank, int multistarts, std::uint64_t seed) {
              GramConfig cfg;
              cfg.rank = rank;
              cfg.multistarts = multistarts;
              cfg.seed = seed;
              return gramMax(a, cfg);
          },
          py::arg("a"), py::arg("rank") = 0, py::arg("multistarts") = 64,
          py::arg("seed") = 1);
    m.def("inf_to_one_norm",
          [](const CMatrix& a, const std::string& field) {
              const auto f = field == "real" ? Field::Real : Field::Complex;
              const auto r = infToOneNorm(SymCoeffMatrix::symmetrized(a), f);
              return py::make_tuple(r.value, r.v, r.w);
          },
          py::arg("a"), py::arg("field") = "complex");
    m.def("beta_rank1",
          [](const CMatrix& a) {
              return betaRank1(SymCoeffMatrix::symmetrized(a));
          },
          py::arg("a"));
    m.def("fj_matrix",
          [](int k) {
              const FJFamily f = fjMatrix(k);
              return py::make_tuple(f.vectors, f.matrix);
          },
          py::arg("k"));
    m.def("fj_ratio",
          [](int k) {
              const FJRatioReport r = fjRatio(k);
              return py::make_tuple(r.ratio, r.closed_form, r.gap);
          },
          py::arg("k"));
    m.def("cplus_witness",
          [](const CMatrix& a) { return cplusWitness(SymCoeffMatrix::symmetrized(a)); },
          py::arg("a"));
}
