#include "cyw/truncpoly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyw {

namespace {

void check_nd(int n, int d) {
    if (n < 1) fail(errc::index_out_of_range, "need n >= 1", std::to_string(n));
    if (d < 1) fail(errc::bad_input, "need d >= 1", std::to_string(d));
}

std::int64_t period(int n, int d) { return std::int64_t(n + 1) * d + 2; }

} // namespace

stable_object stable_normalize(int i, std::int64_t p, int n, int d) {
    check_nd(n, d);
    if (i < 1 || i > n) fail(errc::index_out_of_range, "module index outside 1..n", std::to_string(i));

    // Orbit closure under R1 (both directions) and R2; the orbit modulo R1
    // has at most two i-classes, so it is tiny.
    const std::int64_t r = period(n, d);
    std::set<stable_object> orbit;
    std::vector<stable_object> todo{{i, ((p % r) + r) % r}};
    while (!todo.empty()) {
        stable_object cur = todo.back();
        todo.pop_back();
        if (!orbit.insert(cur).second) continue;
        std::int64_t q = cur.shift;
        // R2 applied at cur and the R2 move landing on cur.
        std::int64_t fwd = q - std::int64_t(n + 1 - cur.index) * d - 1;
        std::int64_t bwd = q + std::int64_t(cur.index) * d + 1;
        todo.push_back({n + 1 - cur.index, ((fwd % r) + r) % r});
        todo.push_back({n + 1 - cur.index, ((bwd % r) + r) % r});
    }
    return *orbit.begin();
}

std::string to_string(const cm_object& o) {
    if (o.projective) return "A";
    return "T(" + std::to_string(o.i) + "," + std::to_string(o.t) + ")";
}

namespace {

cm_object make_T(int i, int t, int n, int d) {
    return cm_object{false, i, t, stable_normalize(i, std::int64_t(t) * d, n, d)};
}

std::int64_t t_range_max(int i, int n, int d) {
    if (d % 2 == 0) return std::int64_t(n + 1) * d / 2;
    return (std::int64_t(n + 1) * d + n - 2 * i + 1) / 2;
}

// Canonical stable form -> display coordinates (i,t).
std::map<stable_object, cm_object> display_table(int n, int d) {
    std::map<stable_object, cm_object> table;
    for (int i = 1; i <= n; ++i)
        for (std::int64_t t = 0; t <= t_range_max(i, n, d); ++t) {
            cm_object o = make_T(i, int(t), n, d);
            if (!table.emplace(o.stable, o).second)
                fail(errc::validation_failure, "fundamental ranges produced a duplicate", to_string(o));
        }
    return table;
}

} // namespace

std::vector<cm_object> cm_indecomposables(int n, int d) {
    check_nd(n, d);
    std::vector<cm_object> out;
    for (int i = 1; i <= n; ++i)
        for (std::int64_t t = 0; t <= t_range_max(i, n, d); ++t) out.push_back(make_T(i, int(t), n, d));
    out.push_back(cm_object{true, 0, 0, {}});
    return out;
}

cm_quiver ar_quiver_cm(int n, int d) {
    check_nd(n, d);
    cm_quiver q;
    q.vertices = cm_indecomposables(n, d);
    const int projective_id = int(q.vertices.size()) - 1;

    auto table = display_table(n, d);
    std::map<stable_object, int> id_of;
    for (int v = 0; v < projective_id; ++v) id_of[q.vertices[std::size_t(v)].stable] = v;
    auto lookup = [&](int i, std::int64_t shift_amount) {
        return id_of.at(stable_normalize(i, shift_amount, n, d));
    };

    std::set<std::pair<int, int>> arrows;
    for (int v = 0; v < projective_id; ++v) {
        const cm_object& X = q.vertices[std::size_t(v)];
        std::int64_t s = std::int64_t(X.t) * d;
        // Middle terms of the almost split extension ending in X.
        if (X.i > 1) arrows.emplace(lookup(X.i - 1, s + d), v);
        if (X.i < n) arrows.emplace(lookup(X.i + 1, s), v);
        q.translation.emplace_back(v, lookup(X.i, s + d));
    }
    arrows.emplace(lookup(n, d), projective_id); // T(n,1) -> A
    arrows.emplace(projective_id, lookup(n, 0)); // A -> T(n,0)
    q.arrows.assign(arrows.begin(), arrows.end());
    return q;
}

ar_triangle_data ar_triangle(int i, int n, int d) {
    check_nd(n, d);
    if (i < 1 || i > n) fail(errc::index_out_of_range, "module index outside 1..n", std::to_string(i));
    auto table = display_table(n, d);
    auto as_cm = [&](int j, std::int64_t shift_amount) {
        return table.at(stable_normalize(j, shift_amount, n, d));
    };
    ar_triangle_data tri;
    tri.left = as_cm(i, d);
    tri.right = as_cm(i, 0);
    if (i > 1) tri.middle.push_back(as_cm(i - 1, d));
    if (i < n) tri.middle.push_back(as_cm(i + 1, 0));
    if (i == n) tri.middle.push_back(cm_object{true, 0, 0, {}});
    return tri;
}

std::optional<cm_object> approx_normal_form(std::int64_t p, int n, int d) {
    check_nd(n, d);
    if (p < 0) fail(errc::bad_input, "shift must be non-negative", std::to_string(p));
    if (p == 0) return cm_object{true, 0, 0, {}};
    if (p > std::int64_t(n) * d) return std::nullopt;

    std::int64_t t = (p - 1) / d; // the unique t with td < p <= (t+1)d
    std::int64_t rem = (t + 1) * d - p;
    auto table = display_table(n, d);
    cm_object out;
    if (rem % 2 == 0) {
        std::int64_t q = rem / 2;
        out = table.at(stable_normalize(n - int(t), ((n + 1) * q + t + 1) * d, n, d));
    } else {
        std::int64_t q = (rem - 1) / 2;
        out = table.at(stable_normalize(int(t) + 1, (n + 1) * (q + 1) * d, n, d));
    }
    if (out.stable != stable_normalize(n - int(t), p, n, d))
        fail(errc::validation_failure, "approximation normal form mismatch", std::to_string(p));
    return out;
}

} // namespace cyw
