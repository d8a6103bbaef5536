#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyw/homtable.hpp"
#include "cyw/quotient.hpp"

namespace cyw {

/// The N-gon with N = (d+1)n + d - 1, vertices numbered clockwise 1..N.
struct polygon {
    int n, d, N;

    static polygon from_nd(int n, int d);
    int normalize(std::int64_t vertex) const; // into 1..N
};

/// Unordered vertex pair of the polygon; endpoints kept sorted.
struct diagonal {
    int a, b; // 1 <= a < b <= N

    static diagonal make(int x, int y);
    auto operator<=>(const diagonal&) const = default;
};

std::string to_string(const diagonal& dg);

using brauer_relation = std::vector<diagonal>; // kept sorted

std::string to_string(const brauer_relation& B);
brauer_relation parse_relation(const std::string& csv);

bool is_d_diagonal(const polygon& P, const diagonal& dg);
std::vector<diagonal> all_d_diagonals(const polygon& P);

/// Shared endpoint or strictly interleaved endpoints.
bool diagonals_intersect(const polygon& P, const diagonal& X, const diagonal& Y);

bool is_maximal_brauer(const polygon& P, const brauer_relation& B);

diagonal theta_rotate(const polygon& P, const diagonal& dg, std::int64_t t);
brauer_relation theta_rotate(const polygon& P, const brauer_relation& B, std::int64_t t);

/// Least m >= 1 with theta^{-m}(X) meeting Y; X, Y must be disjoint.
int delta(const polygon& P, const diagonal& X, const diagonal& Y);

/// One face of the polygon subdivision bounded by >= 2 diagonals, with its
/// members in anti-clockwise cyclic order and the consecutive deltas.
/// Every cycle satisfies sum(deltas) == d + size - 1.
struct b_cycle {
    std::vector<diagonal> members;
    std::vector<int> deltas; // deltas[i] = delta(members[i], members[i+1 mod s])
};

std::vector<b_cycle> b_cycles(const polygon& P, const brauer_relation& B);

/// Complete enumeration of maximal d-Brauer relations, in lexicographic
/// order.  The streaming form feeds each relation to the visitor without
/// storing; max_states caps the number of search nodes (0 = unlimited).
void for_each_brauer(const polygon& P, const std::function<void(const brauer_relation&)>& visit,
                     std::uint64_t max_states = 0);
std::vector<brauer_relation> enumerate_brauer(const polygon& P, std::uint64_t max_states = 0);
std::uint64_t count_brauer(const polygon& P, std::uint64_t max_states = 0);

/// (1/(n+1)) * C((d+1)n+d-1, n).
std::uint64_t count_formula(int n, int d);

/// The surjection from n-element vertex sets onto maximal relations.
brauer_relation theta_map(const polygon& P, const std::vector<int>& V);

/// Some t with theta^t(B) = B2, if one exists.
std::optional<int> rotation_equivalent(const polygon& P, const brauer_relation& B, const brauer_relation& B2);

/// Label-identity transport between configurations on Z A_n / S[d] and
/// maximal d-Brauer relations (family A only); both directions validate
/// their output.
brauer_relation config_to_brauer(const quotient_context& ctx, const std::vector<int>& config_ids);
std::vector<int> brauer_to_config(const quotient_context& ctx, const hom_table& table,
                                  const brauer_relation& B);

/// hbar-vanishing test equivalent to geometric disjointness: true iff
/// hbar_X(Y[-s]) = 0 and hbar_Y(X[-s]) = 0 for all 0 <= s <= d-1.
bool hbar_disjointness_oracle(const hom_table& table, const label_pair& X, const label_pair& Y);

/// Witness (X in B, 0 <= i <= d-1) with hbar_X(M[-i]) != 0; always exists for
/// maximal B.
std::optional<std::pair<diagonal, int>> coverage_oracle(const hom_table& table, const brauer_relation& B,
                                                        const diagonal& M);

} // namespace cyw
