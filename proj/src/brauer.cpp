#include "cyw/brauer.hpp"

#include <algorithm>
#include <sstream>

#include "cyw/config.hpp"

namespace cyw {

polygon polygon::from_nd(int n, int d) {
    if (n < 1 || d < 1) fail(errc::bad_input, "need n >= 1 and d >= 1",
                             "n=" + std::to_string(n) + ",d=" + std::to_string(d));
    int N = (d + 1) * n + d - 1;
    if (N < 3) fail(errc::degenerate, "polygon needs at least 3 vertices",
                    "n=" + std::to_string(n) + ",d=" + std::to_string(d));
    return polygon{n, d, N};
}

int polygon::normalize(std::int64_t vertex) const {
    std::int64_t m = (vertex - 1) % N;
    if (m < 0) m += N;
    return int(m + 1);
}

diagonal diagonal::make(int x, int y) {
    if (x == y) fail(errc::bad_input, "diagonal endpoints must differ", std::to_string(x));
    return x < y ? diagonal{x, y} : diagonal{y, x};
}

std::string to_string(const diagonal& dg) { return std::to_string(dg.a) + "-" + std::to_string(dg.b); }

std::string to_string(const brauer_relation& B) {
    std::string out;
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (i) out += ",";
        out += to_string(B[i]);
    }
    return out;
}

brauer_relation parse_relation(const std::string& csv) {
    brauer_relation B;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        label_pair l = parse_label_pair(tok);
        B.push_back(diagonal::make(l.lo, l.hi));
    }
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    return B;
}

bool is_d_diagonal(const polygon& P, const diagonal& dg) {
    if (dg.a < 1 || dg.b > P.N) return false;
    return (dg.b - dg.a - P.d) % (P.d + 1) == 0;
}

std::vector<diagonal> all_d_diagonals(const polygon& P) {
    std::vector<diagonal> out;
    for (int a = 1; a < P.N; ++a)
        for (int b = a + 1; b <= P.N; ++b)
            if (is_d_diagonal(P, {a, b})) out.push_back({a, b});
    return out;
}

namespace {

// x strictly inside the clockwise arc from s to e.
bool in_open_arc(const polygon& P, int x, int s, int e) {
    int span = (e - s + P.N) % P.N;
    int rel = (x - s + P.N) % P.N;
    return rel > 0 && rel < span;
}

} // namespace

bool diagonals_intersect(const polygon& P, const diagonal& X, const diagonal& Y) {
    if (X.a == Y.a || X.a == Y.b || X.b == Y.a || X.b == Y.b) return true;
    return in_open_arc(P, Y.a, X.a, X.b) != in_open_arc(P, Y.b, X.a, X.b);
}

bool is_maximal_brauer(const polygon& P, const brauer_relation& B) {
    for (auto& dg : B)
        if (!is_d_diagonal(P, dg)) return false;
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (diagonals_intersect(P, B[i], B[j])) return false;
    for (auto& cand : all_d_diagonals(P)) {
        if (std::binary_search(B.begin(), B.end(), cand)) continue;
        bool free = true;
        for (auto& dg : B)
            if (diagonals_intersect(P, dg, cand)) { free = false; break; }
        if (free) return false;
    }
    return true;
}

diagonal theta_rotate(const polygon& P, const diagonal& dg, std::int64_t t) {
    return diagonal::make(P.normalize(dg.a + t), P.normalize(dg.b + t));
}

brauer_relation theta_rotate(const polygon& P, const brauer_relation& B, std::int64_t t) {
    brauer_relation out;
    out.reserve(B.size());
    for (auto& dg : B) out.push_back(theta_rotate(P, dg, t));
    std::sort(out.begin(), out.end());
    return out;
}

int delta(const polygon& P, const diagonal& X, const diagonal& Y) {
    if (X == Y || diagonals_intersect(P, X, Y))
        fail(errc::not_disjoint, "delta needs disjoint diagonals", to_string(X) + " vs " + to_string(Y));
    for (int m = 1; m <= P.N; ++m)
        if (diagonals_intersect(P, theta_rotate(P, X, -m), Y)) return m;
    fail(errc::validation_failure, "no rotation of X meets Y", to_string(X) + " vs " + to_string(Y));
}

namespace {

struct face_walker {
    const polygon& P;
    const brauer_relation& B;
    std::vector<b_cycle>& out;

    // Diagonals of B with both endpoints strictly inside the clockwise arc
    // (s, e), top level only (not nested inside another such diagonal),
    // ordered clockwise from s.
    std::vector<diagonal> top_level(int s, int e) const {
        std::vector<std::pair<int, diagonal>> inside;
        for (auto& dg : B) {
            if (!in_open_arc(P, dg.a, s, e) || !in_open_arc(P, dg.b, s, e)) continue;
            int ra = (dg.a - s + P.N) % P.N, rb = (dg.b - s + P.N) % P.N;
            inside.emplace_back(std::min(ra, rb), dg);
        }
        std::sort(inside.begin(), inside.end());
        std::vector<diagonal> top;
        int covered_to = 0;
        for (auto& [rel, dg] : inside) {
            if (rel < covered_to) continue;
            top.push_back(dg);
            int ra = (dg.a - s + P.N) % P.N, rb = (dg.b - s + P.N) % P.N;
            covered_to = std::max(ra, rb);
        }
        return top;
    }

    // Face adjacent to base on the side of the clockwise arc from s to e,
    // where {s,e} are the endpoints of base.
    void visit(const diagonal& base, int s, int e) {
        auto children = top_level(s, e);
        if (!children.empty()) {
            // Clockwise boundary order is children then base; the cycle is
            // recorded anti-clockwise.
            b_cycle cyc;
            cyc.members.push_back(base);
            for (auto it = children.rbegin(); it != children.rend(); ++it) cyc.members.push_back(*it);
            auto smallest = std::min_element(cyc.members.begin(), cyc.members.end());
            std::rotate(cyc.members.begin(), smallest, cyc.members.end());
            for (std::size_t i = 0; i < cyc.members.size(); ++i)
                cyc.deltas.push_back(delta(P, cyc.members[i], cyc.members[(i + 1) % cyc.members.size()]));
            out.push_back(std::move(cyc));
        }
        for (auto& c : children) {
            // Recurse into the far side of each child: the arc of (c.a, c.b)
            // not containing the base endpoints.
            if (in_open_arc(P, s, c.a, c.b))
                visit(c, c.b, c.a);
            else
                visit(c, c.a, c.b);
        }
    }
};

} // namespace

std::vector<b_cycle> b_cycles(const polygon& P, const brauer_relation& B) {
    for (auto& dg : B)
        if (!is_d_diagonal(P, dg)) fail(errc::not_a_diagonal, "relation member is not a d-diagonal", to_string(dg));
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (diagonals_intersect(P, B[i], B[j]))
                fail(errc::bad_input, "relation members must be pairwise disjoint",
                     to_string(B[i]) + " vs " + to_string(B[j]));
    std::vector<b_cycle> cycles;
    if (B.empty()) return cycles;
    face_walker walker{P, B, cycles};
    walker.visit(B[0], B[0].a, B[0].b);
    walker.visit(B[0], B[0].b, B[0].a);
    std::sort(cycles.begin(), cycles.end(),
              [](const b_cycle& x, const b_cycle& y) { return x.members < y.members; });
    return cycles;
}

void for_each_brauer(const polygon& P, const std::function<void(const brauer_relation&)>& visit,
                     std::uint64_t max_states) {
    auto diags = all_d_diagonals(P);
    const std::size_t D = diags.size();
    std::vector<std::vector<char>> conflict(D, std::vector<char>(D, 0));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = i + 1; j < D; ++j)
            conflict[i][j] = conflict[j][i] = diagonals_intersect(P, diags[i], diags[j]);

    std::uint64_t states = 0;
    brauer_relation chosen;
    std::vector<std::size_t> picked;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        if (max_states && ++states > max_states)
            fail(errc::size_limit, "enumeration exceeded state cap", std::to_string(max_states));
        if (chosen.size() == std::size_t(P.n)) {
            visit(chosen);
            return;
        }
        std::size_t need = std::size_t(P.n) - chosen.size();
        for (std::size_t i = from; i + need <= D; ++i) {
            bool ok = true;
            for (std::size_t p : picked)
                if (conflict[p][i]) { ok = false; break; }
            if (!ok) continue;
            picked.push_back(i);
            chosen.push_back(diags[i]);
            self(self, i + 1);
            chosen.pop_back();
            picked.pop_back();
        }
    };
    dfs(dfs, 0);
}

std::vector<brauer_relation> enumerate_brauer(const polygon& P, std::uint64_t max_states) {
    std::vector<brauer_relation> out;
    for_each_brauer(P, [&](const brauer_relation& B) { out.push_back(B); }, max_states);
    return out;
}

std::uint64_t count_brauer(const polygon& P, std::uint64_t max_states) {
    std::uint64_t c = 0;
    for_each_brauer(P, [&](const brauer_relation&) { ++c; }, max_states);
    return c;
}

std::uint64_t count_formula(int n, int d) {
    polygon P = polygon::from_nd(n, d); // rejects degenerate sizes
    unsigned __int128 num = 1;
    for (int k = 1; k <= n; ++k) {
        num = num * (unsigned __int128)(P.N - n + k);
        num /= (unsigned __int128)k; // exact: running product is C(N-n+k, k)
        if (num > (unsigned __int128)1 << 100)
            fail(errc::bad_input, "count does not fit in 64 bits",
                 "n=" + std::to_string(n) + ",d=" + std::to_string(d));
    }
    num /= (unsigned __int128)(n + 1);
    if (num > ~std::uint64_t(0))
        fail(errc::bad_input, "count does not fit in 64 bits", "n=" + std::to_string(n));
    return std::uint64_t(num);
}

brauer_relation theta_map(const polygon& P, const std::vector<int>& V) {
    if (int(V.size()) != P.n)
        fail(errc::wrong_size, "vertex set must have exactly n elements",
             "got " + std::to_string(V.size()) + ", need " + std::to_string(P.n));
    std::vector<char> in_v(std::size_t(P.N) + 1, 0);
    for (int v : V) {
        if (v < 1 || v > P.N) fail(errc::bad_input, "vertex outside polygon", std::to_string(v));
        if (in_v[std::size_t(v)]) fail(errc::bad_input, "duplicate vertex", std::to_string(v));
        in_v[std::size_t(v)] = 1;
    }
    brauer_relation B;
    for (int v : V) {
        bool found = false;
        for (int a = 0; a < P.n && !found; ++a) {
            int w = P.normalize(v + P.d + (P.d + 1) * std::int64_t(a));
            if (in_v[std::size_t(w)]) continue;
            int cnt = 0;
            for (int u : V)
                if (in_open_arc(P, u, v, w)) ++cnt;
            if (cnt == a) {
                B.push_back(diagonal::make(v, w));
                found = true;
            }
        }
        if (!found) fail(errc::validation_failure, "no admissible diagonal at vertex", std::to_string(v));
    }
    std::sort(B.begin(), B.end());
    return B;
}

std::optional<int> rotation_equivalent(const polygon& P, const brauer_relation& B, const brauer_relation& B2) {
    if (B.size() != B2.size()) return std::nullopt;
    for (int t = 0; t < P.N; ++t)
        if (theta_rotate(P, B, t) == B2) return t;
    return std::nullopt;
}

brauer_relation config_to_brauer(const quotient_context& ctx, const std::vector<int>& config_ids) {
    if (ctx.diagram().fam != family::A)
        fail(errc::bad_input, "label transport is defined for family A only", ctx.diagram().code());
    polygon P = polygon::from_nd(ctx.diagram().rank, ctx.d());
    brauer_relation B;
    for (int id : config_ids) {
        auto l = *ctx.vertices()[std::size_t(id)].label;
        B.push_back(diagonal::make(l.lo, l.hi));
    }
    std::sort(B.begin(), B.end());
    if (!is_maximal_brauer(P, B))
        fail(errc::validation_failure, "image is not a maximal d-Brauer relation", to_string(B));
    return B;
}

std::vector<int> brauer_to_config(const quotient_context& ctx, const hom_table& table,
                                  const brauer_relation& B) {
    if (ctx.diagram().fam != family::A)
        fail(errc::bad_input, "label transport is defined for family A only", ctx.diagram().code());
    std::vector<int> ids;
    for (auto& dg : B) ids.push_back(ctx.index_of_label(label_pair::make(dg.a, dg.b)));
    std::sort(ids.begin(), ids.end());
    if (!is_configuration(table, ids))
        fail(errc::validation_failure, "image is not a configuration", to_string(B));
    return ids;
}

bool hbar_disjointness_oracle(const hom_table& table, const label_pair& X, const label_pair& Y) {
    const auto& ctx = table.ctx();
    int x = ctx.index_of_label(X), y = ctx.index_of_label(Y);
    return !table.covers(x, y) && !table.covers(y, x);
}

std::optional<std::pair<diagonal, int>> coverage_oracle(const hom_table& table, const brauer_relation& B,
                                                        const diagonal& M) {
    const auto& ctx = table.ctx();
    int m = ctx.index_of_label(label_pair::make(M.a, M.b));
    for (auto& dg : B) {
        int x = ctx.index_of_label(label_pair::make(dg.a, dg.b));
        for (int i = 0; i < ctx.d(); ++i)
            if (table.hbar_shifted(x, m, i) != 0) return std::make_pair(dg, i);
    }
    return std::nullopt;
}

} // namespace cyw
