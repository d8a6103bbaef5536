#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyw/errors.hpp"

namespace cyw {

enum class family : char { A = 'A', D = 'D', E = 'E' };

/// A simply-laced Dynkin tree with a fixed numbering and orientation:
///   A_n : 1 -> 2 -> ... -> n
///   D_n : 1 -> 2 -> ... -> n-2,  n-1 -> n-2,  n -> n-2
///   E_n : 2 -> 1, 3 -> 2, 3 -> 4, 3 -> 5, 5 -> 6 -> ... -> n
struct dynkin_diagram {
    family fam;
    int rank;

    dynkin_diagram(family f, int r) : fam(f), rank(r) { validate(); }

    static dynkin_diagram parse(const std::string& code);
    std::string code() const { return std::string(1, char(fam)) + std::to_string(rank); }

    /// Oriented edges of the tree, as (source node, target node).
    std::vector<std::pair<int, int>> arrows() const;

    /// Unoriented neighbour lists, indexed 1..rank.
    std::vector<std::vector<int>> neighbors() const;

    int coxeter_number() const;

    bool operator==(const dynkin_diagram&) const = default;

private:
    void validate() const;
};

/// Vertex (level, node) of the repetition quiver Z\Delta.
struct zvertex {
    std::int64_t level;
    int node;

    auto operator<=>(const zvertex&) const = default;
};

std::string to_string(const zvertex& v);
zvertex parse_zvertex(const std::string& s);

/// Arrow neighbourhoods of v in Z\Delta.  For each tree arrow x -> y the
/// repetition quiver has (p,x) -> (p,y) and (p,y) -> (p+1,x).
struct mesh_neighborhood {
    std::vector<zvertex> predecessors;
    std::vector<zvertex> successors;
};
mesh_neighborhood mesh_neighbors(const dynkin_diagram& diagram, const zvertex& v);

/// Translation: (p,q) -> (p-1,q).
inline zvertex tau(const zvertex& v) { return {v.level - 1, v.node}; }
inline zvertex tau_inv(const zvertex& v) { return {v.level + 1, v.node}; }

/// The Nakayama permutation S of Z\Delta (family specific).
zvertex nakayama(const dynkin_diagram& diagram, const zvertex& v);
zvertex nakayama_inv(const dynkin_diagram& diagram, const zvertex& v);

/// The shift permutation [1] = S tau^{-1} and its inverse.
zvertex shift(const dynkin_diagram& diagram, const zvertex& v);
zvertex shift_inv(const dynkin_diagram& diagram, const zvertex& v);
zvertex shift_pow(const dynkin_diagram& diagram, zvertex v, std::int64_t k);

} // namespace cyw
