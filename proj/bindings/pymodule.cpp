// Python bindings for the main operations: polygon combinatorics,
// configurations, graded quivers and the truncated-polynomial AR quiver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyw/emit.hpp"

namespace py = pybind11;
using namespace cyw;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

brauer_relation to_relation(const std::vector<std::pair<int, int>>& pairs) {
    brauer_relation B;
    for (auto& [a, b] : pairs) B.push_back(diagonal::make(a, b));
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    return B;
}

std::vector<std::pair<int, int>> from_relation(const brauer_relation& B) {
    std::vector<std::pair<int, int>> out;
    for (auto& dg : B) out.emplace_back(dg.a, dg.b);
    return out;
}

struct context_bundle {
    quotient_context ctx;
    hom_table table;

    context_bundle(const std::string& diagram, int d)
        : ctx(dynkin_diagram::parse(diagram), d), table(ctx) {}

    configuration parse_set(const std::vector<std::string>& labels) const {
        configuration S;
        for (auto& l : labels) S.push_back(ctx.parse_vertex(l));
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        return S;
    }
};

} // namespace

PYBIND11_MODULE(_cyw, m) {
    m.doc() = "Configurations on quotient translation quivers, maximal d-Brauer relations, "
              "graded Brauer quivers and Cohen-Macaulay AR quivers";

    py::register_exception<error>(m, "CywError", PyExc_ValueError);

    m.def("count_formula", &count_formula, py::arg("n"), py::arg("d"),
          "Number of maximal d-Brauer relations on the ((d+1)n+d-1)-gon");

    m.def(
        "enumerate_brauer",
        [](int n, int d, std::uint64_t max_states) {
            polygon P = polygon::from_nd(n, d);
            std::vector<std::vector<std::pair<int, int>>> out;
            for (auto& B : enumerate_brauer(P, max_states)) out.push_back(from_relation(B));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("max_states") = 0);

    m.def(
        "is_maximal_brauer",
        [](int n, int d, const std::vector<std::pair<int, int>>& B) {
            return is_maximal_brauer(polygon::from_nd(n, d), to_relation(B));
        },
        py::arg("n"), py::arg("d"), py::arg("relation"));

    m.def(
        "delta",
        [](int n, int d, std::pair<int, int> X, std::pair<int, int> Y) {
            return delta(polygon::from_nd(n, d), diagonal::make(X.first, X.second),
                         diagonal::make(Y.first, Y.second));
        },
        py::arg("n"), py::arg("d"), py::arg("x"), py::arg("y"),
        "Least m >= 1 with theta^{-m}(x) meeting y");

    m.def(
        "b_cycles",
        [](int n, int d, const std::vector<std::pair<int, int>>& B) {
            polygon P = polygon::from_nd(n, d);
            py::list out;
            for (auto& c : b_cycles(P, to_relation(B))) out.append(json_to_py(to_json(c)));
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("relation"));

    m.def(
        "theta_map",
        [](int n, int d, const std::vector<int>& V) {
            return from_relation(theta_map(polygon::from_nd(n, d), V));
        },
        py::arg("n"), py::arg("d"), py::arg("vertices"));

    m.def(
        "rotation_equivalent",
        [](int n, int d, const std::vector<std::pair<int, int>>& B1,
           const std::vector<std::pair<int, int>>& B2) -> py::object {
            auto t = rotation_equivalent(polygon::from_nd(n, d), to_relation(B1), to_relation(B2));
            return t ? py::cast(*t) : py::none();
        },
        py::arg("n"), py::arg("d"), py::arg("relation1"), py::arg("relation2"));

    m.def(
        "build_quiver",
        [](int n, int d, const std::vector<std::pair<int, int>>& B) {
            return json_to_py(to_json(build_quiver(polygon::from_nd(n, d), to_relation(B))));
        },
        py::arg("n"), py::arg("d"), py::arg("relation"),
        "Graded Brauer quiver with its minimal cycle structure");

    m.def(
        "build_presentation",
        [](int n, int d, const std::vector<std::pair<int, int>>& B) {
            auto Q = build_quiver(polygon::from_nd(n, d), to_relation(B));
            return json_to_py(to_json(build_presentation(Q)));
        },
        py::arg("n"), py::arg("d"), py::arg("relation"));

    m.def(
        "enumerate_configurations",
        [](const std::string& diagram, int d, std::uint64_t max_states) {
            context_bundle b(diagram, d);
            std::vector<std::vector<std::string>> out;
            for (auto& c : enumerate_configurations(b.table, max_states))
                out.push_back(configuration_labels(b.ctx, c));
            return out;
        },
        py::arg("diagram"), py::arg("d"), py::arg("max_states") = 0);

    m.def(
        "is_configuration",
        [](const std::string& diagram, int d, const std::vector<std::string>& labels) {
            context_bundle b(diagram, d);
            return is_configuration(b.table, b.parse_set(labels));
        },
        py::arg("diagram"), py::arg("d"), py::arg("set"));

    m.def(
        "configuration_classes",
        [](const std::string& diagram, int d) {
            context_bundle b(diagram, d);
            auto classes = rotation_classes(b.ctx, enumerate_configurations(b.table));
            std::vector<std::vector<std::vector<std::string>>> out;
            for (auto& cls : classes) {
                std::vector<std::vector<std::string>> c;
                for (auto& cfg : cls) c.push_back(configuration_labels(b.ctx, cfg));
                out.push_back(std::move(c));
            }
            return out;
        },
        py::arg("diagram"), py::arg("d"));

    m.def(
        "h_bar",
        [](const std::string& diagram, int d, const std::string& x, const std::string& y) {
            context_bundle b(diagram, d);
            return b.table.hbar(b.ctx.parse_vertex(x), b.ctx.parse_vertex(y));
        },
        py::arg("diagram"), py::arg("d"), py::arg("x"), py::arg("y"),
        "Hom dimension between two quotient vertices");

    m.def(
        "predicted_cm_quiver",
        [](int n, int d, const std::vector<std::pair<int, int>>& B) {
            context_bundle b("A" + std::to_string(n), d);
            return json_to_py(to_json(predicted_cm_quiver(b.ctx, b.table, to_relation(B))));
        },
        py::arg("n"), py::arg("d"), py::arg("relation"));

    m.def(
        "stable_normalize",
        [](int i, std::int64_t p, int n, int d) {
            auto s = stable_normalize(i, p, n, d);
            return std::make_pair(s.index, s.shift);
        },
        py::arg("i"), py::arg("p"), py::arg("n"), py::arg("d"));

    m.def(
        "cm_indecomposables",
        [](int n, int d) {
            std::vector<std::string> out;
            for (auto& o : cm_indecomposables(n, d)) out.push_back(to_string(o));
            return out;
        },
        py::arg("n"), py::arg("d"));

    m.def(
        "ar_quiver_cm",
        [](int n, int d) { return json_to_py(to_json(ar_quiver_cm(n, d))); }, py::arg("n"),
        py::arg("d"));

    m.def(
        "ar_triangle",
        [](int i, int n, int d) {
            auto tri = ar_triangle(i, n, d);
            py::dict out;
            out["left"] = to_string(tri.left);
            py::list mid;
            for (auto& o : tri.middle) mid.append(to_string(o));
            out["middle"] = mid;
            out["right"] = to_string(tri.right);
            return out;
        },
        py::arg("i"), py::arg("n"), py::arg("d"));

    m.def(
        "approx_normal_form",
        [](std::int64_t p, int n, int d) -> py::object {
            auto o = approx_normal_form(p, n, d);
            return o ? py::cast(to_string(*o)) : py::none();
        },
        py::arg("p"), py::arg("n"), py::arg("d"),
        "Approximation class of A[p]: 'A', 'T(i,t)' or None for zero");
}
