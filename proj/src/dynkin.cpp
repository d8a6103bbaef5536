#include "cyw/dynkin.hpp"

#include <algorithm>
#include <cctype>

namespace cyw {

void dynkin_diagram::validate() const {
    switch (fam) {
        case family::A:
            if (rank < 1) fail(errc::bad_input, "A_n requires rank >= 1", code());
            return;
        case family::D:
            if (rank < 4) fail(errc::bad_input, "D_n requires rank >= 4", code());
            return;
        case family::E:
            if (rank < 6 || rank > 8) fail(errc::bad_input, "E_n requires rank in {6,7,8}", code());
            return;
    }
    fail(errc::bad_input, "unknown family");
}

dynkin_diagram dynkin_diagram::parse(const std::string& s) {
    if (s.size() < 2) fail(errc::bad_input, "diagram code must look like A3, D4, E6", s);
    char f = char(std::toupper(static_cast<unsigned char>(s[0])));
    if (f != 'A' && f != 'D' && f != 'E') fail(errc::bad_input, "unknown family letter", s);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(errc::bad_input, "rank must be a positive integer", s);
    return dynkin_diagram(family(f), std::stoi(s.substr(1)));
}

std::vector<std::pair<int, int>> dynkin_diagram::arrows() const {
    std::vector<std::pair<int, int>> out;
    switch (fam) {
        case family::A:
            for (int i = 1; i < rank; ++i) out.emplace_back(i, i + 1);
            break;
        case family::D:
            for (int i = 1; i < rank - 2; ++i) out.emplace_back(i, i + 1);
            out.emplace_back(rank - 1, rank - 2);
            out.emplace_back(rank, rank - 2);
            break;
        case family::E:
            out.emplace_back(2, 1);
            out.emplace_back(3, 2);
            out.emplace_back(3, 4);
            out.emplace_back(3, 5);
            for (int i = 5; i < rank; ++i) out.emplace_back(i, i + 1);
            break;
    }
    return out;
}

std::vector<std::vector<int>> dynkin_diagram::neighbors() const {
    std::vector<std::vector<int>> adj(std::size_t(rank) + 1);
    for (auto [a, b] : arrows()) {
        adj[std::size_t(a)].push_back(b);
        adj[std::size_t(b)].push_back(a);
    }
    return adj;
}

int dynkin_diagram::coxeter_number() const {
    switch (fam) {
        case family::A: return rank + 1;
        case family::D: return 2 * rank - 2;
        case family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    }
    return 0;
}

std::string to_string(const zvertex& v) {
    return "(" + std::to_string(v.level) + "," + std::to_string(v.node) + ")";
}

zvertex parse_zvertex(const std::string& s) {
    auto l = s.find('('), c = s.find(','), r = s.find(')');
    if (l == std::string::npos || c == std::string::npos || r == std::string::npos || !(l < c && c < r))
        fail(errc::bad_input, "vertex must look like (p,q)", s);
    try {
        return {std::stoll(s.substr(l + 1, c - l - 1)), std::stoi(s.substr(c + 1, r - c - 1))};
    } catch (const std::exception&) {
        fail(errc::bad_input, "vertex must look like (p,q)", s);
    }
}

mesh_neighborhood mesh_neighbors(const dynkin_diagram& diagram, const zvertex& v) {
    if (v.node < 1 || v.node > diagram.rank)
        fail(errc::bad_input, "node index outside diagram", to_string(v));
    mesh_neighborhood nb;
    for (auto [x, y] : diagram.arrows()) {
        // (p,x) -> (p,y)
        if (x == v.node) nb.successors.push_back({v.level, y});
        if (y == v.node) nb.predecessors.push_back({v.level, x});
        // (p,y) -> (p+1,x)
        if (y == v.node) nb.successors.push_back({v.level + 1, x});
        if (x == v.node) nb.predecessors.push_back({v.level - 1, y});
    }
    std::sort(nb.predecessors.begin(), nb.predecessors.end());
    std::sort(nb.successors.begin(), nb.successors.end());
    return nb;
}

namespace {

// Diagram automorphism entering the Nakayama permutation: exchanges the two
// fork tips of D_n, and for E6 the two long-arm pairs (1,6) and (2,5).
int nakayama_node_twist(const dynkin_diagram& d, int q) {
    if (d.fam == family::D && d.rank % 2 == 1) {
        if (q == d.rank - 1) return d.rank;
        if (q == d.rank) return d.rank - 1;
    }
    if (d.fam == family::E && d.rank == 6) {
        if (q == 1) return 6;
        if (q == 6) return 1;
        if (q == 2) return 5;
        if (q == 5) return 2;
    }
    return q;
}

std::int64_t nakayama_tau_power(const dynkin_diagram& d) {
    switch (d.fam) {
        case family::D: return d.rank - 2;
        case family::E: return d.rank == 6 ? 5 : d.rank == 7 ? 8 : 14;
        case family::A: break;
    }
    return 0;
}

} // namespace

zvertex nakayama(const dynkin_diagram& diagram, const zvertex& v) {
    if (diagram.fam == family::A)
        return {v.level + v.node - 1, diagram.rank + 1 - v.node};
    return {v.level + nakayama_tau_power(diagram), nakayama_node_twist(diagram, v.node)};
}

zvertex nakayama_inv(const dynkin_diagram& diagram, const zvertex& v) {
    if (diagram.fam == family::A) {
        int q = diagram.rank + 1 - v.node;
        return {v.level - q + 1, q};
    }
    return {v.level - nakayama_tau_power(diagram), nakayama_node_twist(diagram, v.node)};
}

zvertex shift(const dynkin_diagram& diagram, const zvertex& v) {
    return nakayama(diagram, tau_inv(v));
}

zvertex shift_inv(const dynkin_diagram& diagram, const zvertex& v) {
    return tau(nakayama_inv(diagram, v));
}

zvertex shift_pow(const dynkin_diagram& diagram, zvertex v, std::int64_t k) {
    for (; k > 0; --k) v = shift(diagram, v);
    for (; k < 0; ++k) v = shift_inv(diagram, v);
    return v;
}

} // namespace cyw
