#include "cyw/emit.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace cyw {

json to_json(const polygon& P) { return json{{"n", P.n}, {"d", P.d}, {"N", P.N}}; }

json to_json(const brauer_relation& B) {
    json arr = json::array();
    for (auto& dg : B) arr.push_back(json::array({dg.a, dg.b}));
    return arr;
}

json to_json(const b_cycle& c) {
    json members = json::array();
    for (auto& dg : c.members) members.push_back(json::array({dg.a, dg.b}));
    return json{{"members", members}, {"deltas", c.deltas}};
}

json to_json(const graded_quiver& Q) {
    json vertices = json::array(), arrows = json::array(), cycles = json::array();
    for (auto& v : Q.vertices) vertices.push_back(to_string(v));
    for (auto& a : Q.arrows)
        arrows.push_back(json{{"source", a.src}, {"target", a.dst}, {"degree", a.degree}});
    for (auto& c : Q.cycles) cycles.push_back(c);
    return json{{"vertices", vertices}, {"arrows", arrows}, {"cycles", cycles}};
}

json to_json(const algebra_presentation& A) {
    json relations = json::array();
    for (auto& r : A.relations) {
        json terms = json::array();
        for (auto& t : r.terms) terms.push_back(json{{"coeff", t.coeff}, {"arrows", t.arrows}});
        relations.push_back(json{{"kind", r.kind}, {"terms", terms}});
    }
    return json{{"quiver", to_json(A.quiver)}, {"relations", relations}};
}

json to_json(const augmented_quiver& Q) {
    json arrows = json::array(), translation = json::array(), projectives = json::array();
    for (auto& [s, t] : Q.arrows) arrows.push_back(json::array({s, t}));
    for (auto& [v, tv] : Q.translation) translation.push_back(json::array({v, tv}));
    for (auto& [c, pc] : Q.projective_for) projectives.push_back(json::array({c, pc}));
    return json{{"vertices", Q.vertex_names},
                {"base_size", Q.base_size},
                {"arrows", arrows},
                {"translation", translation},
                {"projectives", projectives}};
}

json to_json(const cm_quiver& Q) {
    json vertices = json::array(), arrows = json::array(), translation = json::array();
    for (auto& v : Q.vertices) vertices.push_back(to_string(v));
    for (auto& [s, t] : Q.arrows) arrows.push_back(json::array({s, t}));
    for (auto& [v, tv] : Q.translation) translation.push_back(json::array({v, tv}));
    return json{{"vertices", vertices}, {"arrows", arrows}, {"translation", translation}};
}

json config_to_json(const quotient_context& ctx, const configuration& S) {
    json arr = json::array();
    for (auto& name : configuration_labels(ctx, S)) arr.push_back(name);
    return arr;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string dot_graph(const std::vector<std::string>& names,
                      const std::vector<std::tuple<int, int, std::string>>& edges) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(names[i]) << "\"];\n";
    for (auto& [s, t, label] : edges) {
        os << "  n" << s << " -> n" << t;
        if (!label.empty()) os << " [label=\"" << dot_escape(label) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string to_dot(const graded_quiver& Q) {
    std::vector<std::string> names;
    for (auto& v : Q.vertices) names.push_back(to_string(v));
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& a : Q.arrows) edges.emplace_back(a.src, a.dst, std::to_string(a.degree));
    return dot_graph(names, edges);
}

std::string to_dot(const augmented_quiver& Q) {
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& [s, t] : Q.arrows) edges.emplace_back(s, t, "");
    return dot_graph(Q.vertex_names, edges);
}

std::string to_dot(const cm_quiver& Q) {
    std::vector<std::string> names;
    for (auto& v : Q.vertices) names.push_back(to_string(v));
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& [s, t] : Q.arrows) edges.emplace_back(s, t, "");
    return dot_graph(names, edges);
}

namespace {

// Vertex k of the N-gon sits at angle -2*pi*(k-1)/N (clockwise numbering
// starting at angle 0).
std::pair<double, double> polygon_xy(int k, int N, double radius) {
    double ang = -2.0 * M_PI * (k - 1) / N;
    return {radius * std::cos(ang), radius * std::sin(ang)};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << (std::abs(x) < 5e-4 ? 0.0 : x);
    return os.str();
}

std::string tikz_wrap(const std::string& body) {
    return "\\begin{tikzpicture}\n" + body + "\\end{tikzpicture}\n";
}

std::string tikz_quiver(const std::vector<std::string>& names,
                        const std::vector<std::pair<double, double>>& pos,
                        const std::vector<std::tuple<int, int, std::string>>& edges) {
    std::ostringstream os;
    for (std::size_t i = 0; i < names.size(); ++i)
        os << "  \\node (n" << i << ") at (" << fmt(pos[i].first) << "," << fmt(pos[i].second)
           << ") {$" << names[i] << "$};\n";
    for (auto& [s, t, label] : edges) {
        os << "  \\draw[->] (n" << s << ") -- (n" << t << ")";
        if (!label.empty()) os << " node[midway,above] {$" << label << "$}";
        os << ";\n";
    }
    return tikz_wrap(os.str());
}

// Circle layout for quivers without intrinsic coordinates.
std::vector<std::pair<double, double>> circle_layout(std::size_t n, double radius) {
    std::vector<std::pair<double, double>> pos;
    for (std::size_t i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * double(i) / double(n ? n : 1);
        pos.emplace_back(radius * std::cos(ang), radius * std::sin(ang));
    }
    return pos;
}

std::string tikz_sanitize(std::string s) {
    for (auto& c : s)
        if (c == '[' || c == ']') c = c == '[' ? '(' : ')';
    return s;
}

} // namespace

std::string to_tikz(const polygon& P, const brauer_relation& B) {
    std::ostringstream os;
    for (int k = 1; k <= P.N; ++k) {
        auto [x, y] = polygon_xy(k, P.N, 2.0);
        os << "  \\node (v" << k << ") at (" << fmt(x) << "," << fmt(y) << ") {$" << k << "$};\n";
    }
    os << "  \\draw[dotted] ";
    for (int k = 1; k <= P.N; ++k) os << "(v" << k << ") -- ";
    os << "(v1);\n";
    for (auto& dg : B) os << "  \\draw (v" << dg.a << ") -- (v" << dg.b << ");\n";
    return tikz_wrap(os.str());
}

std::string to_tikz(const graded_quiver& Q) {
    std::vector<std::string> names;
    for (auto& v : Q.vertices) names.push_back(to_string(v));
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& a : Q.arrows) edges.emplace_back(a.src, a.dst, std::to_string(a.degree));
    return tikz_quiver(names, circle_layout(names.size(), 2.0), edges);
}

std::string to_tikz(const augmented_quiver& Q) {
    std::vector<std::string> names;
    for (auto& n : Q.vertex_names) names.push_back(tikz_sanitize(n));
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& [s, t] : Q.arrows) edges.emplace_back(s, t, "");
    return tikz_quiver(names, circle_layout(names.size(), 3.0), edges);
}

std::string to_tikz(const cm_quiver& Q) {
    std::vector<std::string> names;
    std::vector<std::pair<double, double>> pos;
    for (auto& v : Q.vertices) {
        names.push_back(to_string(v));
        if (v.projective)
            pos.emplace_back(-1.0, 1.0);
        else
            pos.emplace_back(double(v.t) * 2.0 + double(v.i), double(v.i));
    }
    std::vector<std::tuple<int, int, std::string>> edges;
    for (auto& [s, t] : Q.arrows) edges.emplace_back(s, t, "");
    return tikz_quiver(names, pos, edges);
}

bool validate_dot(const std::string& doc) {
    static const std::regex node_re(R"(^\s*n\d+ \[label="[^"]*"\];$)");
    static const std::regex edge_re(R"(^\s*n\d+ -> n\d+( \[label="[^"]*"\])?;$)");
    std::istringstream is(doc);
    std::string line;
    if (!std::getline(is, line) || line != "digraph quiver {") return false;
    bool closed = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line == "}") {
            closed = true;
            continue;
        }
        if (closed) return false;
        if (!std::regex_match(line, node_re) && !std::regex_match(line, edge_re)) return false;
    }
    return closed;
}

bool validate_tikz(const std::string& doc) {
    if (doc.rfind("\\begin{tikzpicture}\n", 0) != 0) return false;
    if (doc.find("\\end{tikzpicture}\n") != doc.size() - 18) return false;
    int braces = 0;
    bool in_math = false;
    for (char c : doc) {
        if (c == '{') ++braces;
        if (c == '}') {
            if (--braces < 0) return false;
        }
        if (c == '$') in_math = !in_math;
    }
    return braces == 0 && !in_math;
}

} // namespace cyw
