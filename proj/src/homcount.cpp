#include "cyw/homcount.hpp"

#include <algorithm>
#include <deque>

namespace cyw {

vertex_multiset::vertex_multiset(map_type entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
        if (it->second < 0)
            fail(errc::negative_multiplicity, "multiset entry below zero", to_string(it->first));
        it = it->second == 0 ? entries_.erase(it) : std::next(it);
    }
}

std::int64_t vertex_multiset::at(const zvertex& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

void vertex_multiset::add(const zvertex& v, std::int64_t m) {
    auto& slot = entries_[v];
    slot += m;
    if (slot < 0) fail(errc::negative_multiplicity, "multiset entry below zero", to_string(v));
    if (slot == 0) entries_.erase(v);
}

int f_seq_default_cap(const dynkin_diagram& diagram) { return 10 * diagram.coxeter_number(); }

std::vector<vertex_multiset> f_seq(const zvertex& x, const dynkin_diagram& diagram, int max_steps) {
    if (max_steps < 1) fail(errc::bad_input, "max_steps must be >= 1");
    std::vector<vertex_multiset> seq;
    vertex_multiset f0;
    f0.add(x, 1);
    seq.push_back(f0);
    if (max_steps == 1) fail(errc::cap_exceeded, "f-sequence did not reach zero", to_string(x));

    auto one_step = [&](const vertex_multiset& f) {
        vertex_multiset out;
        for (auto& [v, m] : f.entries())
            for (auto& s : mesh_neighbors(diagram, v).successors) out.add(s, m);
        return out;
    };

    seq.push_back(one_step(f0));
    while (!seq.back().empty()) {
        if (int(seq.size()) > max_steps)
            fail(errc::cap_exceeded, "f-sequence did not reach zero within cap", to_string(x));
        vertex_multiset next = one_step(seq[seq.size() - 1]);
        for (auto& [v, m] : seq[seq.size() - 2].entries()) next.add(tau_inv(v), -m);
        seq.push_back(std::move(next));
    }
    return seq;
}

vertex_multiset h(const zvertex& x, const dynkin_diagram& diagram) {
    vertex_multiset acc;
    for (auto& f : f_seq(x, diagram, f_seq_default_cap(diagram)))
        for (auto& [v, m] : f.entries()) acc.add(v, m);
    return acc;
}

std::map<zvertex, std::int64_t> additive_slice_function(const zvertex& x, const dynkin_diagram& diagram,
                                                        std::int64_t lo, std::int64_t hi) {
    if (x.level < lo || x.level > hi) fail(errc::bad_input, "seed vertex outside window", to_string(x));

    // Place the slice starting at x: BFS over the tree; an edge used in the
    // source direction keeps the level, one used against it raises it by 1.
    std::vector<std::int64_t> slice_level(std::size_t(diagram.rank) + 1);
    std::vector<bool> placed(std::size_t(diagram.rank) + 1, false);
    auto arrows = diagram.arrows();
    auto adj = diagram.neighbors();
    slice_level[std::size_t(x.node)] = x.level;
    placed[std::size_t(x.node)] = true;
    std::deque<int> queue{x.node};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[std::size_t(u)]) {
            if (placed[std::size_t(v)]) continue;
            bool forward = std::find(arrows.begin(), arrows.end(), std::make_pair(u, v)) != arrows.end();
            slice_level[std::size_t(v)] = slice_level[std::size_t(u)] + (forward ? 0 : 1);
            placed[std::size_t(v)] = true;
            queue.push_back(v);
        }
    }

    std::map<zvertex, std::int64_t> f;
    for (int q = 1; q <= diagram.rank; ++q) f[{slice_level[std::size_t(q)], q}] = 1;

    // Extend by additivity in both directions until the window is filled.
    // Forward: f(tau^{-1} z) = sum_{y in z+} f(y) - f(z); backward dually.
    auto extend = [&](bool forward) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int q = 1; q <= diagram.rank; ++q) {
                bool any = false;
                std::int64_t p = 0;
                for (auto& [v, val] : f)
                    if (v.node == q && (!any || (forward ? v.level > p : v.level < p))) {
                        p = v.level;
                        any = true;
                    }
                if (!any) continue;
                zvertex z{p, q};
                zvertex target = forward ? tau_inv(z) : tau(z);
                if (target.level < lo || target.level > hi || f.count(target)) continue;
                auto nb = mesh_neighbors(diagram, z);
                auto& mid = forward ? nb.successors : nb.predecessors;
                std::int64_t sum = 0;
                bool ready = true;
                for (auto& y : mid) {
                    auto it = f.find(y);
                    if (it == f.end()) { ready = false; break; }
                    sum += it->second;
                }
                if (!ready) continue;
                f[target] = sum - f[z];
                progress = true;
            }
        }
    };
    extend(true);
    extend(false);

    std::map<zvertex, std::int64_t> out;
    for (auto& [v, val] : f)
        if (v.level >= lo && v.level <= hi) out[v] = val;
    return out;
}

std::pair<std::int64_t, std::int64_t> type_a_label(const zvertex& v, int d) {
    std::int64_t x1 = 1 + v.level * (d + 1);
    return {x1, x1 + d + std::int64_t(v.node - 1) * (d + 1)};
}

int h_closed_form_A(std::pair<std::int64_t, std::int64_t> X, std::pair<std::int64_t, std::int64_t> Y,
                    int n, int d) {
    auto gap_index = [&](std::pair<std::int64_t, std::int64_t> L) {
        std::int64_t g = L.second - L.first - d;
        if (g < 0 || g % (d + 1) != 0 || g / (d + 1) > n - 1)
            fail(errc::not_a_diagonal, "label pair is not d-diagonal shaped",
                 std::to_string(L.first) + "-" + std::to_string(L.second));
        return g / (d + 1);
    };
    std::int64_t m = gap_index(X);
    gap_index(Y);
    std::int64_t di = Y.first - X.first;
    std::int64_t dj = Y.second - X.first - d;
    if (di % (d + 1) != 0 || dj % (d + 1) != 0) return 0;
    std::int64_t i = di / (d + 1), j = dj / (d + 1);
    return (0 <= i && i <= m && m <= j && j <= n - 1) ? 1 : 0;
}

} // namespace cyw
