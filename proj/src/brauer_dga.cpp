#include "cyw/brauer_dga.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace cyw {

graded_quiver quiver_from_cycles(const brauer_relation& B, const std::vector<b_cycle>& cycles) {
    graded_quiver Q;
    Q.vertices = B;
    std::map<diagonal, int> vid;
    for (std::size_t i = 0; i < B.size(); ++i) vid[B[i]] = int(i);
    for (auto& cyc : cycles) {
        std::vector<int> arrow_ids;
        const std::size_t s = cyc.members.size();
        for (std::size_t i = 0; i < s; ++i) {
            arrow_ids.push_back(int(Q.arrows.size()));
            Q.arrows.push_back({vid.at(cyc.members[i]), vid.at(cyc.members[(i + 1) % s]),
                                1 - cyc.deltas[i]});
        }
        Q.cycles.push_back(std::move(arrow_ids));
    }
    return Q;
}

graded_quiver build_quiver(const polygon& P, const brauer_relation& B) {
    if (P.n < 2) fail(errc::bad_input, "graded quiver needs n >= 2", std::to_string(P.n));
    if (!is_maximal_brauer(P, B))
        fail(errc::bad_input, "relation is not a maximal d-Brauer relation", to_string(B));
    return quiver_from_cycles(B, b_cycles(P, B));
}

algebra_presentation build_presentation(const graded_quiver& Q) {
    algebra_presentation P;
    P.quiver = Q;
    for (auto& cyc : Q.cycles) {
        const std::size_t m = cyc.size();
        for (std::size_t i = 0; i < m; ++i) {
            // once around the cycle starting at arrow i, plus arrow i again
            path_term t{1, {}};
            for (std::size_t k = 0; k <= m; ++k) t.arrows.push_back(cyc[(i + k) % m]);
            P.relations.push_back({"cycle_rotation", {std::move(t)}});
        }
    }
    // Shared vertices: both cycles rebased to start there.
    auto rotate_to = [&](const std::vector<int>& cyc, int v) {
        std::vector<int> out = cyc;
        auto it = std::find_if(out.begin(), out.end(),
                               [&](int a) { return Q.arrows[std::size_t(a)].src == v; });
        std::rotate(out.begin(), it, out.end());
        return out;
    };
    for (std::size_t c1 = 0; c1 < Q.cycles.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < Q.cycles.size(); ++c2) {
            std::vector<int> shared;
            for (int a : Q.cycles[c1])
                for (int b : Q.cycles[c2])
                    if (Q.arrows[std::size_t(a)].src == Q.arrows[std::size_t(b)].src)
                        shared.push_back(Q.arrows[std::size_t(a)].src);
            for (int v : shared) {
                auto alpha = rotate_to(Q.cycles[c1], v);
                auto beta = rotate_to(Q.cycles[c2], v);
                P.relations.push_back({"mixed_product", {{1, {beta.back(), alpha.front()}}}});
                P.relations.push_back({"mixed_product", {{1, {alpha.back(), beta.front()}}}});
                P.relations.push_back({"cycle_difference", {{1, alpha}, {-1, beta}}});
            }
        }
    return P;
}

graded_quiver degree_twist(const graded_quiver& Q, int vertex, int a) {
    if (vertex < 0 || std::size_t(vertex) >= Q.vertices.size())
        fail(errc::vertex_not_found, "twist vertex outside quiver", std::to_string(vertex));
    graded_quiver out = Q;
    for (auto& ar : out.arrows) {
        if (ar.dst == vertex) ar.degree += a;
        if (ar.src == vertex) ar.degree -= a;
    }
    return out;
}

bool is_admissible(const graded_quiver& Q, int d) {
    for (auto& cyc : Q.cycles) {
        int lows = 0;
        for (int a : cyc) {
            int deg = Q.arrows[std::size_t(a)].degree;
            if (deg == 1 - d)
                ++lows;
            else if (deg != 0)
                return false;
        }
        // for d = 1 the marked degree is itself 0, so the cycle is just all
        // zero; otherwise exactly one arrow carries -d+1
        if (d > 1 && lows != 1) return false;
    }
    return true;
}

std::pair<graded_quiver, std::vector<std::pair<int, int>>> make_admissible(const graded_quiver& Q, int d) {
    graded_quiver cur = Q;
    std::vector<std::pair<int, int>> twists;
    if (is_admissible(cur, d)) return {cur, twists};

    const std::size_t C = Q.cycles.size();
    std::vector<std::vector<char>> on_cycle(C, std::vector<char>(Q.vertices.size(), 0));
    for (std::size_t c = 0; c < C; ++c)
        for (int a : Q.cycles[c]) on_cycle[c][std::size_t(Q.arrows[std::size_t(a)].src)] = 1;

    // BFS over the cycle-adjacency tree; each cycle is normalized without
    // touching the vertex it shares with its parent.
    std::vector<int> base(C, -1);
    std::vector<int> order;
    std::vector<char> seen(C, 0);
    for (std::size_t root = 0; root < C; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        base[root] = cur.arrows[std::size_t(Q.cycles[root].front())].src;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t c = queue.front();
            queue.pop_front();
            order.push_back(int(c));
            for (std::size_t c2 = 0; c2 < C; ++c2) {
                if (seen[c2]) continue;
                for (std::size_t v = 0; v < Q.vertices.size(); ++v)
                    if (on_cycle[c][v] && on_cycle[c2][v]) {
                        seen[c2] = 1;
                        base[c2] = int(v);
                        queue.push_back(c2);
                        break;
                    }
            }
        }
    }

    for (int c : order) {
        auto cyc = cur.cycles[std::size_t(c)];
        auto it = std::find_if(cyc.begin(), cyc.end(), [&](int a) {
            return cur.arrows[std::size_t(a)].src == base[std::size_t(c)];
        });
        std::rotate(cyc.begin(), it, cyc.end());
        // Zero the first m-1 arrows by twisting at each arrow head in turn
        // (never at the base); the cycle sum lands on the last arrow.
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
            int g = cur.arrows[std::size_t(cyc[k])].degree;
            if (g == 0) continue;
            int v = cur.arrows[std::size_t(cyc[k])].dst;
            cur = degree_twist(cur, v, -g);
            twists.emplace_back(v, -g);
        }
    }
    if (!is_admissible(cur, d))
        fail(errc::validation_failure, "twist normalization failed to reach admissible form", "");
    return {cur, twists};
}

bool graded_quivers_isomorphic(const graded_quiver& Q1, const graded_quiver& Q2) {
    const std::size_t n = Q1.vertices.size();
    if (n != Q2.vertices.size() || Q1.arrows.size() != Q2.arrows.size() ||
        Q1.cycles.size() != Q2.cycles.size())
        return false;
    if (n > 8) fail(errc::bad_input, "isomorphism test limited to 8 vertices", std::to_string(n));

    // Cycles as cyclic (src, degree) sequences for membership tests.
    auto cycle_seqs = [](const graded_quiver& Q) {
        std::vector<std::vector<std::pair<int, int>>> seqs;
        for (auto& cyc : Q.cycles) {
            std::vector<std::pair<int, int>> s;
            for (int a : cyc) s.emplace_back(Q.arrows[std::size_t(a)].src, Q.arrows[std::size_t(a)].degree);
            seqs.push_back(std::move(s));
        }
        return seqs;
    };
    auto seqs1 = cycle_seqs(Q1), seqs2 = cycle_seqs(Q2);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::set<std::tuple<int, int, int>> a2;
        for (auto& ar : Q2.arrows) a2.insert({ar.src, ar.dst, ar.degree});
        bool ok = true;
        for (auto& ar : Q1.arrows)
            if (!a2.count({perm[std::size_t(ar.src)], perm[std::size_t(ar.dst)], ar.degree})) {
                ok = false;
                break;
            }
        // Image of every minimal cycle must be a minimal cycle up to rotation.
        for (auto& s : seqs1) {
            if (!ok) break;
            std::vector<std::pair<int, int>> img;
            for (auto& [v, deg] : s) img.emplace_back(perm[std::size_t(v)], deg);
            bool matched = false;
            for (auto& t : seqs2) {
                if (t.size() != img.size()) continue;
                for (std::size_t r = 0; r < t.size() && !matched; ++r) {
                    bool eq = true;
                    for (std::size_t k = 0; k < t.size(); ++k)
                        if (img[k] != t[(r + k) % t.size()]) { eq = false; break; }
                    matched = eq;
                }
                if (matched) break;
            }
            ok = matched;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

augmented_quiver predicted_cm_quiver(const quotient_context& ctx, const hom_table& table,
                                     const brauer_relation& B) {
    return augment(ctx, brauer_to_config(ctx, table, B));
}

} // namespace cyw
