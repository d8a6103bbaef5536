#include "cyw/config.hpp"

#include <algorithm>
#include <set>

namespace cyw {

bool is_preconfiguration(const hom_table& table, const configuration& S) {
    const int d = table.ctx().d();
    for (int x : S)
        for (int y : S) {
            if (table.hbar(x, y) != (x == y ? 1 : 0)) return false;
            for (int j = 1; j <= d - 1; ++j)
                if (table.hbar_shifted(x, y, j) != 0) return false;
        }
    return true;
}

bool is_configuration(const hom_table& table, const configuration& S) {
    if (!is_preconfiguration(table, S)) return false;
    const std::size_t n = table.ctx().size();
    for (std::size_t z = 0; z < n; ++z) {
        bool covered = false;
        for (int x : S)
            if (table.covers(x, int(z))) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

std::vector<configuration> enumerate_configurations(const hom_table& table, std::uint64_t max_states) {
    const quotient_context& ctx = table.ctx();
    const int V = int(ctx.size());
    const bool type_a = ctx.diagram().fam == family::A;
    const std::size_t size_cap = type_a ? std::size_t(ctx.diagram().rank) : std::size_t(V);

    std::vector<char> self_ok(std::size_t(V), 0);
    for (int x = 0; x < V; ++x) {
        bool ok = table.hbar(x, x) == 1;
        for (int j = 1; ok && j <= ctx.d() - 1; ++j) ok = table.hbar_shifted(x, x, j) == 0;
        self_ok[std::size_t(x)] = ok;
    }
    std::vector<std::vector<char>> pair_ok(std::size_t(V), std::vector<char>(std::size_t(V), 0));
    for (int x = 0; x < V; ++x)
        for (int y = x + 1; y < V; ++y) {
            bool ok = self_ok[std::size_t(x)] && self_ok[std::size_t(y)] && table.hbar(x, y) == 0 &&
                      table.hbar(y, x) == 0;
            for (int j = 1; ok && j <= ctx.d() - 1; ++j)
                ok = table.hbar_shifted(x, y, j) == 0 && table.hbar_shifted(y, x, j) == 0;
            pair_ok[std::size_t(x)][std::size_t(y)] = pair_ok[std::size_t(y)][std::size_t(x)] = ok;
        }

    std::vector<configuration> found;
    std::uint64_t states = 0;
    configuration chosen;
    std::vector<char> banned(std::size_t(V), 0);
    std::vector<char> covered(std::size_t(V), 0);

    auto compatible = [&](int x) {
        if (!self_ok[std::size_t(x)]) return false;
        for (int c : chosen)
            if (!pair_ok[std::size_t(c)][std::size_t(x)]) return false;
        return true;
    };

    auto tick = [&]() {
        if (max_states && ++states > max_states)
            fail(errc::size_limit, "configuration search exceeded state cap", std::to_string(max_states));
    };

    // Once everything is covered, optionally extend with remaining compatible
    // candidates (increasing index keeps each set unique).
    auto extend = [&](auto&& self, int from) -> void {
        tick();
        configuration out = chosen;
        std::sort(out.begin(), out.end());
        found.push_back(std::move(out));
        if (chosen.size() >= size_cap) return;
        for (int x = from; x < V; ++x) {
            if (banned[std::size_t(x)] || !compatible(x)) continue;
            chosen.push_back(x);
            self(self, x + 1);
            chosen.pop_back();
        }
    };

    // Branch on the first uncovered vertex; candidate ordering plus the
    // banned set makes every configuration reachable exactly once.
    auto search = [&](auto&& self) -> void {
        tick();
        int z = -1;
        for (int v = 0; v < V; ++v)
            if (!covered[std::size_t(v)]) { z = v; break; }
        if (z < 0) {
            extend(extend, 0);
            return;
        }
        if (chosen.size() >= size_cap) return;
        std::vector<int> cands;
        for (int x = 0; x < V; ++x)
            if (!banned[std::size_t(x)] && table.covers(x, z) && compatible(x)) cands.push_back(x);
        std::vector<char> saved_banned = banned;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int x = cands[i];
            chosen.push_back(x);
            std::vector<char> saved_cov = covered;
            const auto& row = table.covered_row(x);
            for (int v = 0; v < V; ++v)
                if (row[std::size_t(v)]) covered[std::size_t(v)] = 1;
            self(self);
            covered = saved_cov;
            chosen.pop_back();
            banned[std::size_t(x)] = 1; // later branches must not reuse x
        }
        banned = saved_banned;
    };
    search(search);

    std::sort(found.begin(), found.end(), [](const configuration& a, const configuration& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<zvertex> lift(const quotient_context& ctx, const configuration& S, int w) {
    if (w < 0) fail(errc::bad_input, "window must be non-negative", std::to_string(w));
    std::vector<zvertex> out;
    for (int id : S) {
        zvertex v = ctx.vertices()[std::size_t(id)].rep;
        for (int m = 0; m < w; ++m) {
            out.push_back(v);
            v = ctx.group_gen(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

configuration shift_configuration(const quotient_context& ctx, const configuration& S) {
    configuration out;
    out.reserve(S.size());
    for (int id : S) out.push_back(ctx.qshift(id));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<configuration>> rotation_classes(const quotient_context& ctx,
                                                         const std::vector<configuration>& configs) {
    std::set<configuration> pool(configs.begin(), configs.end());
    std::set<configuration> seen;
    std::vector<std::vector<configuration>> classes;
    for (const auto& start : configs) {
        if (seen.count(start)) continue;
        std::vector<configuration> orbit;
        configuration cur = start;
        do {
            if (!seen.count(cur) && pool.count(cur)) {
                orbit.push_back(cur);
                seen.insert(cur);
            }
            cur = shift_configuration(ctx, cur);
        } while (cur != start);
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::vector<std::string> configuration_labels(const quotient_context& ctx, const configuration& S) {
    if (ctx.diagram().fam == family::A) {
        std::vector<label_pair> labels;
        for (int id : S) labels.push_back(*ctx.vertices()[std::size_t(id)].label);
        std::sort(labels.begin(), labels.end());
        std::vector<std::string> out;
        for (auto& l : labels) out.push_back(to_string(l));
        return out;
    }
    std::vector<std::string> out;
    for (int id : S) out.push_back(ctx.vertex_name(id)); // ids are sorted by representative
    return out;
}

std::string configuration_name(const quotient_context& ctx, const configuration& S) {
    std::string out;
    auto labels = configuration_labels(ctx, S);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out;
}

} // namespace cyw
