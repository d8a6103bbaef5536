#pragma once

#include <string>
#include <vector>

#include "cyw/brauer.hpp"

namespace cyw {

struct graded_arrow {
    int src, dst; // vertex indices
    int degree;

    bool operator==(const graded_arrow&) const = default;
};

/// Graded quiver on the diagonals of a maximal relation, with its minimal
/// cycle structure: no loops, non-positive degrees, each minimal cycle sums
/// to -d+1, every vertex in one or two minimal cycles.
struct graded_quiver {
    std::vector<diagonal> vertices;
    std::vector<graded_arrow> arrows;
    std::vector<std::vector<int>> cycles; // arrow ids, cyclic order per minimal cycle
};

graded_quiver build_quiver(const polygon& P, const brauer_relation& B);

/// Assembles the quiver from precomputed cycles; B must be maximal and the
/// cycles must be b_cycles(P, B).
graded_quiver quiver_from_cycles(const brauer_relation& B, const std::vector<b_cycle>& cycles);

struct path_term {
    int coeff;               // +1 or -1
    std::vector<int> arrows; // arrow ids, composition order
};

struct algebra_relation {
    std::string kind; // "cycle_rotation", "mixed_product", "cycle_difference"
    std::vector<path_term> terms;
};

struct algebra_presentation {
    graded_quiver quiver;
    std::vector<algebra_relation> relations;
};

/// Relations of the Brauer tree presentation: full cycle rotations, the two
/// mixed products at each shared vertex, and the difference of the two full
/// cycles based there.
algebra_presentation build_presentation(const graded_quiver& Q);

/// Degree twist at Y: +a on every arrow into Y, -a on every arrow out of Y.
/// Leaves all minimal-cycle degree sums unchanged.
graded_quiver degree_twist(const graded_quiver& Q, int vertex, int a);

/// One arrow of degree -d+1 and the rest 0 on every minimal cycle.
bool is_admissible(const graded_quiver& Q, int d);

/// Twist sequence (vertex, amount) turning Q admissible, processing cycles
/// outward along a spanning tree of the cycle-adjacency graph.
std::pair<graded_quiver, std::vector<std::pair<int, int>>> make_admissible(const graded_quiver& Q, int d);

/// Exact isomorphism of graded quivers respecting the minimal cycle
/// partition (cyclic order included).  Brute force over vertex bijections.
bool graded_quivers_isomorphic(const graded_quiver& Q1, const graded_quiver& Q2);

/// The predicted AR quiver of the Cohen-Macaulay category attached to B:
/// the quotient quiver augmented at the configuration matching B.
augmented_quiver predicted_cm_quiver(const quotient_context& ctx, const hom_table& table,
                                     const brauer_relation& B);

} // namespace cyw
