#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyw/errors.hpp"

namespace cyw {

/// Shift class of the module A_i = k[X]/(X^i) over k[X]/(X^{n+1}) with
/// deg X = -d, canonical under
///   R1: (i, p) ~ (i, p + (n+1)d + 2)
///   R2: (j, p) ~ (n+1-j, p - (n+1-j)d - 1).
struct stable_object {
    int index;         // 1..n
    std::int64_t shift;

    auto operator<=>(const stable_object&) const = default;
};

/// Canonical form: smallest index, then smallest non-negative shift reachable
/// under R1/R2, computed by closing the orbit.
stable_object stable_normalize(int i, std::int64_t p, int n, int d);

/// Either the projective A or an indecomposable T(i,t) = A_i[t d] in its
/// fundamental range, carried together with the canonical stable form.
struct cm_object {
    bool projective = false;
    int i = 0, t = 0;          // meaningful when !projective
    stable_object stable{};    // canonical form of A_i[t d]

    bool operator==(const cm_object&) const = default;
};

std::string to_string(const cm_object& o); // "T(i,t)" or "A"

/// T(i,t) ranges: d even gives 0 <= t <= (n+1)d/2 for every i; d odd gives
/// 0 <= t <= ((n+1)d + n - 2i + 1)/2.  The projective A is listed last.
std::vector<cm_object> cm_indecomposables(int n, int d);

/// The AR quiver of the Cohen-Macaulay category: mesh arrows between the
/// T(i,t) plus the arrows T(n,1) -> A -> T(n,0).
struct cm_quiver {
    std::vector<cm_object> vertices;
    std::vector<std::pair<int, int>> arrows;       // indices into vertices
    std::vector<std::pair<int, int>> translation;  // non-projective (x, tau x)
};

cm_quiver ar_quiver_cm(int n, int d);

/// The almost split extension ending in A_i, at the Cohen-Macaulay level:
/// A_i[d] -> A_{i-1}[d] (+) A_{i+1} -> A_i with A_0 = 0, and with the
/// projective A appearing in the middle when i = n.
struct ar_triangle_data {
    cm_object left;
    std::vector<cm_object> middle;
    cm_object right;
};

ar_triangle_data ar_triangle(int i, int n, int d);

/// Minimal Cohen-Macaulay approximation class of A[p]: A for p = 0, zero for
/// p > nd, a T(i,t) otherwise.  nullopt encodes the zero object.
std::optional<cm_object> approx_normal_form(std::int64_t p, int n, int d);

} // namespace cyw
