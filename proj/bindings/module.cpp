#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include "iwg/divisor.hpp"
#include "iwg/errors.hpp"
#include "iwg/graph.hpp"
#include "iwg/iwasawa.hpp"
#include "iwg/jacobian.hpp"
#include "iwg/matrix.hpp"
#include "iwg/numutil.hpp"
#include "iwg/snf.hpp"
#include "iwg/tower.hpp"
#include "iwg/voltage.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact two-way conversion between python ints and mpz_class via decimal
// strings; no precision limit.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s) return false;
        value = mpz_class(PyUnicode_AsUTF8(s), 10);
        Py_DECREF(s);
        return true;
    }

    static handle cast(const mpz_class& z, return_value_policy, handle) {
        return PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<mpz_class>> matrix_rows(const iwg::IntMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

iwg::IntMatrix matrix_from_rows(const std::vector<std::vector<mpz_class>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    iwg::IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw iwg::input_error("matrix rows have unequal lengths");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::map<long long, mpz_class> term_dict(const iwg::GroupRingElement& e) {
    return e.terms();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Jacobians of graphs along cyclic voltage p-towers of covers";

    auto input_error = py::register_exception<iwg::input_error>(m, "InputError", PyExc_ValueError);
    auto math_error = py::register_exception<iwg::math_error>(m, "MathError", PyExc_RuntimeError);
    py::register_exception<iwg::guard_error>(m, "GuardError", math_error);

    py::class_<iwg::Graph>(m, "Graph")
        .def(py::init<int, std::vector<iwg::Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &iwg::Graph::vertex_count)
        .def_property_readonly("edges", &iwg::Graph::edges)
        .def("degree", &iwg::Graph::degree, py::arg("v"))
        .def("has_edge", &iwg::Graph::has_edge, py::arg("i"), py::arg("j"))
        .def("__eq__", [](const iwg::Graph& a, const iwg::Graph& b) { return a == b; })
        .def("__repr__", [](const iwg::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("is_connected", &iwg::is_connected, py::arg("g"));
    m.def("component_count", &iwg::component_count, py::arg("g"));
    m.def("complete_graph", &iwg::complete_graph, py::arg("n"));
    m.def("parse_graph", &iwg::parse_graph_string, py::arg("text"));
    m.def("format_graph", &iwg::format_graph, py::arg("g"));

    py::class_<iwg::Divisor>(m, "Divisor")
        .def(py::init<>())
        .def(py::init<std::map<int, mpz_class>>(), py::arg("coefficients"))
        .def_property_readonly("coefficients", &iwg::Divisor::coefficients)
        .def("coefficient", &iwg::Divisor::coefficient, py::arg("v"))
        .def("degree", &iwg::Divisor::degree)
        .def("__add__", [](const iwg::Divisor& a, const iwg::Divisor& b) { return a + b; })
        .def("__sub__", [](const iwg::Divisor& a, const iwg::Divisor& b) { return a - b; })
        .def("__eq__", [](const iwg::Divisor& a, const iwg::Divisor& b) { return a == b; });

    m.def("principal_divisor", &iwg::principal_divisor, py::arg("g"), py::arg("v"));
    m.def("laplacian_image", &iwg::laplacian_image, py::arg("g"), py::arg("d"));

    m.def("laplacian", [](const iwg::Graph& g) { return matrix_rows(iwg::laplacian(g)); },
          py::arg("g"));
    m.def(
        "reduced_laplacian",
        [](const iwg::Graph& g, int removed) { return matrix_rows(iwg::reduced_laplacian(g, removed)); },
        py::arg("g"), py::arg("removed") = 1);

    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<mpz_class>>& rows, bool with_transforms) {
            iwg::SnfResult r = iwg::smith_normal_form(matrix_from_rows(rows), with_transforms);
            py::dict out;
            out["diag"] = r.diag;
            if (r.left) out["left"] = matrix_rows(*r.left);
            if (r.right) out["right"] = matrix_rows(*r.right);
            return out;
        },
        py::arg("rows"), py::arg("with_transforms") = false,
        "Reference Smith normal form; dict with 'diag' and optional transforms");

    py::class_<iwg::InvariantFactors>(m, "InvariantFactors")
        .def_readonly("factors", &iwg::InvariantFactors::factors)
        .def_readonly("rank_of_free_part", &iwg::InvariantFactors::rank_of_free_part)
        .def("group_order", &iwg::InvariantFactors::group_order)
        .def("__repr__", [](const iwg::InvariantFactors& f) {
            std::string s = "InvariantFactors([";
            for (size_t i = 0; i < f.factors.size(); ++i)
                s += (i ? ", " : "") + f.factors[i].get_str();
            return s + "])";
        });

    py::class_<iwg::PSylow>(m, "PSylow")
        .def_readonly("order_exponent", &iwg::PSylow::order_exponent)
        .def_readonly("p_rank", &iwg::PSylow::p_rank)
        .def_readonly("p_part_factors", &iwg::PSylow::p_part_factors);

    py::enum_<iwg::SnfStrategy>(m, "SnfStrategy")
        .value("automatic", iwg::SnfStrategy::automatic)
        .value("reference", iwg::SnfStrategy::reference)
        .value("modular", iwg::SnfStrategy::modular);
    m.def("jacobian", &iwg::jacobian, py::arg("g"), py::arg("removed") = 1,
          py::arg("strategy") = iwg::SnfStrategy::automatic);
    m.def("spanning_tree_count", &iwg::spanning_tree_count, py::arg("g"));
    m.def("brute_force_tree_count", &iwg::brute_force_tree_count, py::arg("g"));
    m.def("p_sylow", &iwg::p_sylow, py::arg("factors"), py::arg("p"));

    py::class_<iwg::VoltageAssignment>(m, "VoltageAssignment")
        .def(py::init([](iwg::Graph base, std::map<iwg::Edge, long long> volts, long long p) {
                 return iwg::make_voltage_assignment(std::move(base), std::move(volts), p);
             }),
             py::arg("base"), py::arg("volts"), py::arg("prime"))
        .def_readonly("base", &iwg::VoltageAssignment::base)
        .def_readonly("volts", &iwg::VoltageAssignment::volts)
        .def_readonly("prime", &iwg::VoltageAssignment::prime)
        .def("voltage_on", &iwg::VoltageAssignment::voltage_on, py::arg("i"), py::arg("j"));

    m.def("parse_voltages", &iwg::parse_voltages_string, py::arg("base"), py::arg("text"),
          py::arg("prime"));
    m.def("format_voltages", &iwg::format_voltages, py::arg("va"));

    py::class_<iwg::DerivedGraph>(m, "DerivedGraph")
        .def_readonly("graph", &iwg::DerivedGraph::graph)
        .def_readonly("base_n", &iwg::DerivedGraph::base_n)
        .def_readonly("level", &iwg::DerivedGraph::level)
        .def_readonly("sheets", &iwg::DerivedGraph::sheets)
        .def("vertex_label", &iwg::DerivedGraph::vertex_label, py::arg("i"), py::arg("g"))
        .def("project", &iwg::DerivedGraph::project, py::arg("label"))
        .def("sheet_of", &iwg::DerivedGraph::sheet_of, py::arg("label"));

    m.def("derive", &iwg::derive, py::arg("va"), py::arg("m"),
          py::arg("max_vertices") = iwg::kDefaultMaxVertices);
    m.def("intermediate_cover", &iwg::intermediate_cover, py::arg("va"), py::arg("m"), py::arg("k"),
          py::arg("max_vertices") = iwg::kDefaultMaxVertices);
    m.def("galois_action", &iwg::galois_action, py::arg("derived"), py::arg("g"));
    m.def(
        "voltage_laplacian",
        [](const iwg::VoltageAssignment& va) {
            auto L = iwg::voltage_laplacian(va);
            std::vector<std::vector<std::map<long long, mpz_class>>> out(L.size());
            for (size_t i = 0; i < L.size(); ++i)
                for (const auto& entry : L[i]) out[i].push_back(term_dict(entry));
            return out;
        },
        py::arg("va"), "n x n matrix of Laurent polynomials as {exponent: coefficient} dicts");

    py::class_<iwg::LevelRecord>(m, "LevelRecord")
        .def_readonly("m", &iwg::LevelRecord::m)
        .def_readonly("vertices", &iwg::LevelRecord::vertices)
        .def_readonly("connected", &iwg::LevelRecord::connected)
        .def_readonly("e_m", &iwg::LevelRecord::e_m)
        .def_readonly("p_rank", &iwg::LevelRecord::p_rank)
        .def_readonly("p_part_factors", &iwg::LevelRecord::p_part_factors)
        .def_readonly("total_order", &iwg::LevelRecord::total_order);

    py::class_<iwg::TowerReport>(m, "TowerReport")
        .def_readonly("p", &iwg::TowerReport::p)
        .def_readonly("base_vertices", &iwg::TowerReport::base_vertices)
        .def_readonly("max_level", &iwg::TowerReport::max_level)
        .def_readonly("levels", &iwg::TowerReport::levels)
        .def_readonly("first_disconnected_level", &iwg::TowerReport::first_disconnected_level)
        .def_readonly("truncated_at_level", &iwg::TowerReport::truncated_at_level)
        .def("to_json", [](const iwg::TowerReport& r, int indent) { return iwg::tower_report_json(r, indent); },
             py::arg("indent") = -1)
        .def("to_csv", &iwg::tower_report_csv);

    m.def(
        "analyze_tower",
        [](const iwg::VoltageAssignment& va, long long max_level, std::size_t max_vertices,
           bool include_total_order) {
            return iwg::analyze_tower(iwg::TowerSpec{va, max_level, max_vertices, include_total_order});
        },
        py::arg("va"), py::arg("max_level"), py::arg("max_vertices") = iwg::kDefaultMaxVertices,
        py::arg("include_total_order") = false);
    m.def(
        "level_graph",
        [](const iwg::VoltageAssignment& va, long long max_level, long long level,
           std::size_t max_vertices) {
            return iwg::level_graph(iwg::TowerSpec{va, max_level, max_vertices}, level);
        },
        py::arg("va"), py::arg("max_level"), py::arg("level"),
        py::arg("max_vertices") = iwg::kDefaultMaxVertices);

    py::class_<iwg::IwasawaFit>(m, "IwasawaFit")
        .def_readonly("mu", &iwg::IwasawaFit::mu)
        .def_readonly("lambda_", &iwg::IwasawaFit::lambda)
        .def_readonly("nu", &iwg::IwasawaFit::nu)
        .def_readonly("m0", &iwg::IwasawaFit::m0)
        .def_readonly("verified_levels", &iwg::IwasawaFit::verified_levels)
        .def("to_json", [](const iwg::IwasawaFit& f) { return iwg::fit_json(f); })
        .def("__repr__", [](const iwg::IwasawaFit& f) { return iwg::fit_json(f); });

    m.def("fit_invariants", &iwg::fit_invariants, py::arg("e"), py::arg("p"));

    py::class_<iwg::StickelbergerReport>(m, "StickelbergerReport")
        .def_readonly("p", &iwg::StickelbergerReport::p)
        .def_property_readonly("theta",
                               [](const iwg::StickelbergerReport& r) { return term_dict(r.theta); })
        .def_property_readonly("theta_str",
                               [](const iwg::StickelbergerReport& r) { return r.theta.to_string(); })
        .def_readonly("content_valuation", &iwg::StickelbergerReport::content_valuation)
        .def_property_readonly(
            "verdict", [](const iwg::StickelbergerReport& r) { return iwg::to_string(r.verdict); })
        .def_property_readonly("level_reductions",
                               [](const iwg::StickelbergerReport& r) {
                                   std::map<long long, std::map<long long, mpz_class>> out;
                                   for (const auto& [lvl, theta] : r.level_reductions)
                                       out[lvl] = term_dict(theta);
                                   return out;
                               })
        .def("to_json",
             [](const iwg::StickelbergerReport& r, int indent) { return iwg::stickelberger_json(r, indent); },
             py::arg("indent") = -1);

    m.def("stickelberger", &iwg::stickelberger, py::arg("va"),
          py::arg("reduction_levels") = std::vector<long long>{});

    py::class_<iwg::RankTrajectory>(m, "RankTrajectory")
        .def_property_readonly(
            "outcome", [](const iwg::RankTrajectory& r) { return iwg::to_string(r.outcome); })
        .def_readonly("observed_ranks", &iwg::RankTrajectory::observed_ranks)
        .def_readonly("note", &iwg::RankTrajectory::note);

    m.def("rank_trajectory_check", &iwg::rank_trajectory_check, py::arg("report"), py::arg("sr"));

    m.def(
        "example1_expected",
        [](long long n, long long p) {
            auto e = iwg::example1_expected(n, p);
            return py::make_tuple(e.mu, e.lambda);
        },
        py::arg("n"), py::arg("p"), "(mu, lambda) for the K_n single-voltage tower");

    py::class_<iwg::Example1Result>(m, "Example1Result")
        .def_readonly("pass_", &iwg::Example1Result::pass)
        .def_readonly("n", &iwg::Example1Result::n)
        .def_readonly("p", &iwg::Example1Result::p)
        .def_readonly("max_level", &iwg::Example1Result::max_level)
        .def_property_readonly("expected_mu",
                               [](const iwg::Example1Result& r) { return r.expected.mu; })
        .def_property_readonly("expected_lambda",
                               [](const iwg::Example1Result& r) { return r.expected.lambda; })
        .def_readonly("fit", &iwg::Example1Result::fit)
        .def_readonly("difference_check", &iwg::Example1Result::difference_check)
        .def_readonly("exponents", &iwg::Example1Result::exponents)
        .def_readonly("detail", &iwg::Example1Result::detail);

    m.def("verify_example1", &iwg::verify_example1, py::arg("n"), py::arg("p"), py::arg("max_level"),
          py::arg("max_vertices") = iwg::kDefaultMaxVertices);
}
