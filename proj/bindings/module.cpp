#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgraphs/charpoly.hpp"
#include "cgraphs/construct.hpp"
#include "cgraphs/graph_io.hpp"
#include "cgraphs/quotient.hpp"
#include "cgraphs/recognize.hpp"
#include "cgraphs/spectra.hpp"
#include "cgraphs/sweep.hpp"

namespace py = pybind11;
using namespace cgraphs;

namespace {

py::object py_int(const Integer& v) {
    std::string dec = v.get_str();
    PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

Integer to_integer(const py::handle& obj) {
    return Integer(py::str(obj).cast<std::string>());
}

py::list py_coeffs(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(py_int(c));
    return out;
}

py::list py_matrix(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(py_int(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list py_adjacency(const Graph& g) {
    py::list rows;
    for (int u = 0; u < g.order(); ++u) {
        py::list row;
        for (int v = 0; v < g.order(); ++v) row.append(g.adjacent(u, v) ? 1 : 0);
        rows.append(row);
    }
    return rows;
}

Graph graph_from_adjacency(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(adj[static_cast<std::size_t>(u)].size()) != n)
            throw std::invalid_argument("adjacency matrix must be square");
        for (int v = 0; v < n; ++v) {
            int bit = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (bit != 0 && bit != 1) throw std::invalid_argument("adjacency entries must be 0/1");
            if (u == v) {
                if (bit) throw std::invalid_argument("loops not allowed");
                continue;
            }
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != bit)
                throw std::invalid_argument("adjacency matrix must be symmetric");
            if (bit && u < v) g.add_edge(u, v);
        }
    }
    return g;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<py::object>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = to_integer(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

py::dict build_report(const Composition& c, bool direct) {
    auto [g, part] = direct ? build_cgraph_direct(c) : build_cgraph(c);
    py::dict out;
    out["n"] = g.order();
    out["adjacency"] = py_adjacency(g);
    out["class_of"] = part.class_of;
    out["sizes"] = part.sizes;
    return out;
}

py::dict interval_dict(const IntervalReport& r) {
    py::dict out;
    out["lambda_minus_ub"] = r.lambda_minus_ub.get_str();
    out["lambda_plus_lb"] = r.lambda_plus_lb.get_str();
    out["count_in_gap"] = r.count_in_gap;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectral toolkit for the sequence-defined cograph family";

    m.def(
        "build",
        [](const std::vector<int>& alpha) { return build_report(Composition(alpha), false); },
        py::arg("alpha"),
        "Build the graph of an even-length composition; returns adjacency and class data.");
    m.def(
        "build_direct",
        [](const std::vector<int>& alpha) { return build_report(Composition(alpha), true); },
        py::arg("alpha"), "Same graph through the direct adjacency rule.");
    m.def(
        "antiregular",
        [](int n) { return py_adjacency(antiregular(n)); }, py::arg("n"),
        "Adjacency matrix of the antiregular graph on n vertices.");

    m.def(
        "quotient_matrix",
        [](const std::vector<int>& alpha) { return py_matrix(quotient_matrix(Composition(alpha)).mat); },
        py::arg("alpha"), "Quotient matrix of the class partition.");

    m.def(
        "psi_pi",
        [](const std::vector<int>& alpha) { return py_coeffs(psi_pi(Composition(alpha))); },
        py::arg("alpha"),
        "Characteristic polynomial of the quotient matrix, ascending coefficients.");
    m.def(
        "psi",
        [](const std::vector<int>& alpha) { return py_coeffs(psi_full(Composition(alpha))); },
        py::arg("alpha"),
        "Characteristic polynomial of the adjacency matrix, ascending coefficients.");
    m.def(
        "charpoly_exact",
        [](const std::vector<std::vector<py::object>>& rows) {
            return py_coeffs(charpoly_oracle(matrix_from_rows(rows)));
        },
        py::arg("matrix"),
        "Exact characteristic polynomial of an integer matrix (fraction-free elimination plus "
        "interpolation).");

    m.def(
        "inertia",
        [](const std::vector<int>& alpha) {
            Inertia in = inertia_formula(Composition(alpha));
            return py::make_tuple(in.n_minus, in.n_zero, in.n_plus);
        },
        py::arg("alpha"), "Inertia (n_minus, n_zero, n_plus) of the adjacency matrix.");
    m.def(
        "multiplicities",
        [](const std::vector<int>& alpha) {
            MultiplicityReport r = multiplicity_formula(Composition(alpha));
            return py::make_tuple(r.m0, r.m_minus1);
        },
        py::arg("alpha"), "Multiplicities (m0, m_minus1) of the eigenvalues 0 and -1.");
    m.def(
        "interval_check",
        [](const std::vector<int>& alpha) { return interval_dict(interval_check(Composition(alpha))); },
        py::arg("alpha"), "Root count of the nontrivial factor inside the eigenvalue-free interval.");

    m.def(
        "recognize",
        [](const std::vector<std::vector<int>>& adjacency) {
            PeelReport r = recognize(graph_from_adjacency(adjacency));
            py::dict out;
            out["sequence"] = r.sequence;
            out["parity"] = r.even_length ? "even" : "odd";
            out["verdict"] = std::string(verdict_name(r.verdict));
            out["class_of"] = r.class_of;
            return out;
        },
        py::arg("adjacency"), "Membership verdict and recovered composition of a graph.");

    m.def(
        "graph6_loads",
        [](const std::string& text) { return py_adjacency(parse_graph6(text)); }, py::arg("text"),
        "Parse a graph6 string into an adjacency matrix.");
    m.def(
        "graph6_dumps",
        [](const std::vector<std::vector<int>>& adjacency) {
            return emit_graph6(graph_from_adjacency(adjacency));
        },
        py::arg("adjacency"), "Encode an adjacency matrix as canonical graph6.");

    m.def(
        "verify",
        [](int max_n, const std::vector<std::string>& checks, int jobs) {
            std::vector<Check> parsed;
            for (const auto& name : checks) {
                auto c = parse_check_name(name);
                if (!c) throw std::invalid_argument("unknown check: " + name);
                parsed.push_back(*c);
            }
            SweepReport report = run_sweep(max_n, std::move(parsed), jobs);
            py::dict out;
            out["max_n"] = report.max_n;
            out["compositions"] = report.composition_count;
            py::list failures;
            for (const auto& f : report.failures) {
                py::dict jf;
                jf["alpha"] = f.alpha;
                jf["check"] = std::string(check_name(f.check));
                jf["detail"] = f.detail;
                failures.append(jf);
            }
            out["failures"] = failures;
            out["pass"] = report.pass();
            return out;
        },
        py::arg("max_n"), py::arg("checks") = std::vector<std::string>{}, py::arg("jobs") = 1,
        "Exhaustive verification sweep over all even compositions with n <= max_n.");

#ifdef CGRAPHS_VERSION
    m.attr("__version__") = CGRAPHS_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
