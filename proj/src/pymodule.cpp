// Python bindings for the main operations.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rslab/arith.hpp"
#include "rslab/bessel.hpp"
#include "rslab/cache.hpp"
#include "rslab/circle.hpp"
#include "rslab/fit.hpp"
#include "rslab/forms.hpp"
#include "rslab/gamma.hpp"
#include "rslab/lfunc.hpp"
#include "rslab/phase.hpp"
#include "rslab/spectral.hpp"
#include "rslab/voronoi.hpp"
#include "rslab/zeta.hpp"

namespace py = pybind11;
using namespace rslab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rankin-Selberg moment and shifted-convolution laboratory";

    // arith
    m.def("kloosterman", &arith::kloosterman, py::arg("m"), py::arg("n"), py::arg("c"));
    m.def("ramanujan_sum", &arith::ramanujan_sum, py::arg("q"), py::arg("c"));
    m.def("weil_bound_margin", &arith::weil_bound_margin);

    // special functions
    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("bessel_k_imag", &bessel_k_imag);
    m.def("bessel_y_imag_pair", &bessel_y_imag_pair);
    m.def("gamma_ratio", &gamma_ratio, py::arg("u"), py::arg("k"), py::arg("ell"));
    m.def("zeta", [](std::complex<double> s) { return zeta(s); });
    m.def("afe_weight", &afe_weight, py::arg("y"), py::arg("k"), py::arg("ell"));

    // windows
    py::class_<SmoothWindow>(m, "SmoothWindow")
        .def_static("bump", &SmoothWindow::bump, py::arg("a"), py::arg("b"), py::arg("amp") = 1.0)
        .def_static("plateau", &SmoothWindow::plateau, py::arg("a"), py::arg("b"), py::arg("c"),
                    py::arg("d"), py::arg("amp") = 1.0)
        .def("__call__", &SmoothWindow::operator())
        .def("integral", &SmoothWindow::integral)
        .def("derivative", &SmoothWindow::derivative)
        .def_property_readonly("lo", &SmoothWindow::lo)
        .def_property_readonly("hi", &SmoothWindow::hi);

    // forms
    py::class_<HeckeEigenform>(m, "HeckeEigenform")
        .def_readonly("weight", &HeckeEigenform::weight)
        .def_readonly("index", &HeckeEigenform::index)
        .def_readonly("lam", &HeckeEigenform::lam)
        .def_property_readonly("omega_inv",
                               [](const HeckeEigenform& g) {
                                   return g.omega_inv ? py::cast(*g.omega_inv) : py::none().cast<py::object>();
                               })
        .def("lambda_", &HeckeEigenform::lambda);
    py::class_<FormTable>(m, "FormTable")
        .def_property_readonly("label", &FormTable::label)
        .def_property_readonly("n_max", &FormTable::n_max)
        .def("__call__", &FormTable::operator())
        .def_readonly("lam", &FormTable::lam);
    m.def("hecke_eigenforms", &hecke_eigenforms, py::arg("k"), py::arg("n_max"));
    m.def("eisenstein_coeffs", &eisenstein_coeffs, py::arg("r"), py::arg("n_max"));
    m.def("eisenstein_table", &eisenstein_table);
    m.def("table_of", &table_of);
    m.def("load_maass_file", &load_maass_file);
    m.def("maass_table", &maass_table);
    m.def("rankin_selberg_coeffs",
          [](const FormTable& f, const FormTable& g, std::int64_t mmax) {
              return rankin_selberg_coeffs(f, g, mmax).coeff;
          });
    m.def("hecke_relation_residual", &hecke_relation_residual);
    m.def("cached_eigenforms", &cache::cached_eigenforms, py::arg("k"), py::arg("n_max"),
          py::arg("cache_dir"));

    // voronoi
    py::class_<VoronoiCheck>(m, "VoronoiCheck")
        .def_readonly("lhs", &VoronoiCheck::lhs)
        .def_readonly("rhs", &VoronoiCheck::rhs)
        .def_readonly("polar", &VoronoiCheck::polar)
        .def_readonly("scale", &VoronoiCheck::scale)
        .def_readonly("residual", &VoronoiCheck::residual)
        .def_readonly("dual_terms", &VoronoiCheck::dual_terms);
    m.def("voronoi_kernel", &voronoi_kernel, py::arg("f"), py::arg("sign"), py::arg("x"));
    m.def("voronoi_identity_check", &voronoi_identity_check, py::arg("f"), py::arg("a"),
          py::arg("c"), py::arg("F"));

    // lfunc
    py::class_<LValue>(m, "LValue")
        .def_readonly("value", &LValue::value)
        .def_readonly("trunc_bound", &LValue::trunc_bound)
        .def_readonly("terms", &LValue::terms);
    m.def("central_lvalue", &central_lvalue, py::arg("f"), py::arg("g"), py::arg("eps") = 1e-8);
    py::enum_<LOneMode>(m, "LOneMode")
        .value("rankin", LOneMode::kRankin)
        .value("sym2", LOneMode::kSym2);
    m.def("l_one", [](const FormTable& f, const FormTable& h, const std::string& mode) {
        auto v = l_one(f, h, mode == "sym2" ? LOneMode::kSym2 : LOneMode::kRankin);
        return py::make_tuple(v.value, v.error_estimate);
    });
    py::class_<DiagonalValue>(m, "DiagonalValue")
        .def_readonly("value", &DiagonalValue::value)
        .def_readonly("tail_bound", &DiagonalValue::tail_bound)
        .def_readonly("a_cut", &DiagonalValue::a_cut);
    m.def("diagonal_dk", &diagonal_dk, py::arg("f"), py::arg("h"), py::arg("k"),
          py::arg("eps") = 1e-8);
    py::class_<LeadingConstant>(m, "LeadingConstant")
        .def_readonly("lemma_value", &LeadingConstant::lemma_value)
        .def_readonly("theorem_value", &LeadingConstant::theorem_value)
        .def_readonly("degree", &LeadingConstant::degree)
        .def_property_readonly("case_", [](const LeadingConstant& c) { return std::string(c.kase); });
    m.def("leading_constant", &leading_constant);

    // spectral
    m.def("petersson_geometric", &petersson_geometric, py::arg("m"), py::arg("n"), py::arg("k"),
          py::arg("tol") = 1e-9);
    m.def("solve_harmonic_weights", [](int k, std::vector<HeckeEigenform> forms) {
        auto w = solve_harmonic_weights(k, forms);
        return py::make_tuple(w.omega_inv, w.heldout_residual, forms);
    });
    py::class_<BesselAverage>(m, "BesselAverage")
        .def_readonly("sum_side", &BesselAverage::sum_side)
        .def_readonly("integral_side", &BesselAverage::integral_side)
        .def_readonly("diff", &BesselAverage::diff);
    m.def("bessel_k_average", &bessel_k_average);
    m.def("poisson_even_check", &poisson_even_check);
    py::class_<MomentRow>(m, "MomentRow")
        .def_readonly("k", &MomentRow::k)
        .def_readonly("index", &MomentRow::index)
        .def_readonly("omega_inv", &MomentRow::omega_inv)
        .def_readonly("lf", &MomentRow::lf)
        .def_readonly("lh", &MomentRow::lh)
        .def_readonly("window", &MomentRow::window);
    py::class_<MomentReport>(m, "MomentReport")
        .def_readonly("K", &MomentReport::K)
        .def_readonly("rows", &MomentReport::rows)
        .def_readonly("total", &MomentReport::total)
        .def_readonly("diagonal", &MomentReport::diagonal)
        .def_readonly("offdiag", &MomentReport::offdiag)
        .def_readonly("conjugate_pair", &MomentReport::conjugate_pair);
    m.def("moment", &moment, py::arg("f"), py::arg("h"), py::arg("K"), py::arg("u"),
          py::arg("cache_dir"), py::arg("eps") = 1e-8);
    py::class_<Witness>(m, "Witness")
        .def_readonly("k", &Witness::k)
        .def_readonly("index", &Witness::index)
        .def_readonly("product", &Witness::product);
    py::class_<NonvanishingReport>(m, "NonvanishingReport")
        .def_readonly("witnesses", &NonvanishingReport::witnesses)
        .def_readonly("weights_without", &NonvanishingReport::weights_without)
        .def_readonly("weights_skipped", &NonvanishingReport::weights_skipped);
    m.def("nonvanishing_scan", &nonvanishing_scan);

    // circle
    py::class_<DeltaDecomposition>(m, "DeltaDecomposition")
        .def(py::init<std::int64_t>())
        .def_property_readonly("M", &DeltaDecomposition::M)
        .def_property_readonly("Q", &DeltaDecomposition::Q)
        .def("g", &DeltaDecomposition::g)
        .def("delta", &DeltaDecomposition::delta)
        .def("worst_defect",
             [](const DeltaDecomposition& dd, std::int64_t range) {
                 std::int64_t wn = 0;
                 double w = dd.worst_defect(range, &wn);
                 return py::make_tuple(w, wn);
             },
             py::arg("range") = 0);
    py::class_<GPropertiesReport>(m, "GPropertiesReport")
        .def_readonly("worst_l1l2", &GPropertiesReport::worst_l1l2)
        .def_readonly("l1l2_over_log2q", &GPropertiesReport::l1l2_over_log2q)
        .def_readonly("flatness_small_qu", &GPropertiesReport::flatness_small_qu)
        .def_readonly("tail_decay_at_10", &GPropertiesReport::tail_decay_at_10);
    m.def("g_properties_check", &g_properties_check);
    m.def("shifted_sum_direct", &shifted_sum_direct);
    py::class_<DecomposedSum>(m, "DecomposedSum")
        .def_readonly("value", &DecomposedSum::value)
        .def_readonly("direct", &DecomposedSum::direct)
        .def_readonly("defect_bound", &DecomposedSum::defect_bound)
        .def_readonly("M", &DecomposedSum::M);
    m.def("shifted_sum_decomposed", &shifted_sum_decomposed);
    py::class_<ShiftedSumReport>(m, "ShiftedSumReport")
        .def_readonly("h", &ShiftedSumReport::h)
        .def_readonly("N", &ShiftedSumReport::N)
        .def_readonly("S", &ShiftedSumReport::S)
        .def_readonly("slope", &ShiftedSumReport::slope)
        .def_readonly("residual", &ShiftedSumReport::residual)
        .def_readonly("used_points", &ShiftedSumReport::used_points);
    m.def("shifted_exponent", &shifted_exponent);
    py::class_<TransformProbe>(m, "TransformProbe")
        .def_readonly("magnitude", &TransformProbe::magnitude)
        .def_readonly("bound_qQ", &TransformProbe::bound_qQ)
        .def_readonly("kernel_mass_outside", &TransformProbe::kernel_mass_outside)
        .def_readonly("flat_vs_closed", &TransformProbe::flat_vs_closed);
    m.def("integral_transform_probe", &integral_transform_probe);

    // phase
    py::class_<PhaseProblem>(m, "PhaseProblem")
        .def(py::init<>())
        .def_readwrite("lo", &PhaseProblem::lo)
        .def_readwrite("hi", &PhaseProblem::hi)
        .def_readwrite("Y", &PhaseProblem::Y)
        .def_readwrite("Z", &PhaseProblem::Z)
        .def_readwrite("Q", &PhaseProblem::Q)
        .def_readwrite("X", &PhaseProblem::X)
        .def_property("amp", nullptr,
                      [](PhaseProblem& p, std::function<double(double)> f) { p.amp = std::move(f); })
        .def_property("phase", nullptr,
                      [](PhaseProblem& p, std::function<double(double)> f) { p.phase = std::move(f); })
        .def_property("dphase", nullptr,
                      [](PhaseProblem& p, std::function<double(double)> f) { p.dphase = std::move(f); })
        .def_property("d2phase", nullptr, [](PhaseProblem& p, std::function<double(double)> f) {
            p.d2phase = std::move(f);
        });
    py::class_<PhaseResult>(m, "PhaseResult")
        .def_readonly("value", &PhaseResult::value)
        .def_readonly("error_bound", &PhaseResult::error_bound)
        .def_readonly("stationary", &PhaseResult::stationary)
        .def_readonly("t0", &PhaseResult::t0);
    m.def("stationary_phase_eval", &stationary_phase_eval, py::arg("problem"), py::arg("order"));
    m.def("oscillatory_integral_direct", &oscillatory_integral_direct, py::arg("problem"),
          py::arg("atol") = 1e-12);

    m.attr("__version__") = "0.1.0";
}
