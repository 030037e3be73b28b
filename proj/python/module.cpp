#include <pybind11/pybind11.h>
#include <pybind11/eigen.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "qsl21/suites.hpp"
#include "qsl21/linalg.hpp"

namespace py = pybind11;
using namespace qsl21;

namespace {

DeformParams params_from(py::object q, py::object mu, int omega) {
    return derive_params(q.cast<cplx>(), mu.cast<cplx>(), omega);
}

py::dict check_dict(const CheckReport& c) {
    py::dict d;
    d["name"] = c.name;
    d["residual"] = c.residual;
    d["tolerance"] = c.tolerance;
    d["pass"] = c.pass;
    d["informative"] = c.informative;
    d["note"] = c.note;
    return d;
}

} // namespace

PYBIND11_MODULE(_qsl21, m) {
    m.doc() = "U_q(sl(2|1)) pair-hopping chains: operators and integrability checks";

    py::class_<DeformParams>(m, "DeformParams")
        .def_readonly("q", &DeformParams::q)
        .def_readonly("mu", &DeformParams::mu)
        .def_readonly("omega", &DeformParams::omega)
        .def_readonly("lam", &DeformParams::lambda)
        .def_readonly("x", &DeformParams::x)
        .def_readonly("y", &DeformParams::y)
        .def_readonly("tl_mode", &DeformParams::tl_mode);

    m.def("derive_params",
          [](py::object q, py::object mu, int omega) { return params_from(q, mu, omega); },
          py::arg("q"), py::arg("mu"), py::arg("omega") = 1);

    m.def("qbracket",
          [](py::object q, py::object n) { return qbracket(q.cast<cplx>(), n.cast<cplx>()); });

    m.def("representation", [](const DeformParams& p) {
        GeneratorSet g = build_rep(p);
        py::dict d;
        d["e1"] = g.e1; d["e2"] = g.e2; d["f1"] = g.f1;
        d["f2"] = g.f2; d["k1"] = g.k1; d["k2"] = g.k2;
        return d;
    });

    m.def("casimir", [](const DeformParams& p, long pp) {
        return casimir_c(pp, build_rep(p), p);
    }, py::arg("params"), py::arg("p") = 0);

    m.def("projectors", [](const DeformParams& p) {
        ProjectorTriple t = projectors_from_casimirs(build_rep(p), p, 0);
        return py::make_tuple(t.o0, t.o1, t.o2);
    });

    m.def("braid_pair", [](const DeformParams& p) {
        BraidPair b = p.tl_mode ? braid_pair_explicit(p) : braid_pair(build_rep(p), p);
        return py::make_tuple(b.b, b.binv);
    });

    m.def("rcheck", [](py::object u, const DeformParams& p) {
        BraidPair b = braid_pair_explicit(p);
        return rcheck(u.cast<cplx>(), b, p);
    });

    m.def("zeta", [](py::object u, const DeformParams& p) { return zeta(u.cast<cplx>(), p); });

    m.def("k_minus", [](const std::string& family, py::object c, py::object u,
                        const DeformParams& p) {
        KFamily f = family == "a" ? KFamily::a : family == "b" ? KFamily::b : KFamily::trivial;
        return k_minus({KSide::minus, f, c.cast<cplx>()}, u.cast<cplx>(), p);
    });

    m.def("k_plus", [](const std::string& family, py::object c, py::object u,
                       const DeformParams& p) {
        KFamily f = family == "a" ? KFamily::a : family == "b" ? KFamily::b : KFamily::trivial;
        return k_plus({KSide::plus, f, c.cast<cplx>()}, u.cast<cplx>(), p,
                      make_crossing_data(p));
    });

    m.def("h_two_site", [](const std::string& model, const DeformParams& p) {
        ChainModel cm = model == "ferm" ? ChainModel::ferm
                      : model == "tl" ? ChainModel::tl : ChainModel::dist;
        return h_two_site(cm, p);
    });

    m.def("h_open", [](const std::string& model, int sites, const DeformParams& p) {
        ChainModel cm = model == "ferm" ? ChainModel::ferm
                      : model == "tl" ? ChainModel::tl : ChainModel::dist;
        ChainSpec spec{sites, cm, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
        return h_open(spec, p).mat;
    }, py::arg("model"), py::arg("sites"), py::arg("params"));

    m.def("h_periodic", [](int sites, const DeformParams& p) {
        return h_periodic(sites, braid_pair(build_rep(p), p), p).mat;
    });

    m.def("h_tl", [](const DeformParams& p) { return h_tl(p); });

    m.def("spectrum", [](const Mat& h, int sites) {
        SpectrumResult s = spectrum(ChainOperator{sites, h}, {});
        return s.eigenvalues;
    }, py::arg("h"), py::arg("sites") = 1);

    m.def("double_row_transfer", [](py::object u, int sites, const DeformParams& p) {
        ChainSpec spec{sites, ChainModel::dist, KFamily::trivial, 0.0, KFamily::trivial, 0.0};
        return double_row_transfer(u.cast<cplx>(), spec, braid_pair(build_rep(p), p), p,
                                   make_crossing_data(p));
    });

    m.def("run_suite", [](const std::string& suite, py::object q, py::object mu, int omega,
                          unsigned seed) {
        RunConfig cfg;
        cfg.suite = suite;
        cfg.q = q.cast<cplx>();
        cfg.mu = mu.cast<cplx>();
        cfg.omega = omega;
        cfg.tol.seed = seed;
        Report rep = run_suite(cfg);
        py::list checks;
        for (const auto& c : rep.checks) checks.append(check_dict(c));
        py::dict d;
        d["suite"] = rep.suite;
        d["overall_pass"] = rep.overall_pass;
        d["checks"] = checks;
        return d;
    }, py::arg("suite") = "all", py::arg("q") = 1.2, py::arg("mu") = 0.3,
       py::arg("omega") = 1, py::arg("seed") = 7);

    py::register_exception<Error>(m, "QslError");
}
