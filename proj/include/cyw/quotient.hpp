#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyw/dynkin.hpp"

namespace cyw {

/// Unordered residue pair (type A labels live in Z/NZ, stored in 1..N).
struct label_pair {
    int lo, hi; // lo <= hi

    static label_pair make(int a, int b) { return a <= b ? label_pair{a, b} : label_pair{b, a}; }
    auto operator<=>(const label_pair&) const = default;
};

std::string to_string(const label_pair& l);
label_pair parse_label_pair(const std::string& s);

/// Canonical representative of a <S[d]>-orbit of Z\Delta, plus the Z/NZ pair
/// label for family A.
struct orbit_vertex {
    zvertex rep;
    std::optional<label_pair> label;

    auto operator<=>(const orbit_vertex& o) const { return rep <=> o.rep; }
    bool operator==(const orbit_vertex& o) const { return rep == o.rep; }
};

/// The quotient Z\Delta / S[d]: canonicalization, the finite vertex set,
/// mesh structure and labels.  Immutable after construction.
class quotient_context {
public:
    quotient_context(dynkin_diagram diagram, int d);

    const dynkin_diagram& diagram() const { return diagram_; }
    int d() const { return d_; }
    /// Polygon size for family A: N = (d+1) rank + d - 1.
    int label_modulus() const;

    zvertex group_gen(const zvertex& v) const;     // S[d]
    zvertex group_gen_inv(const zvertex& v) const; // (S[d])^{-1}

    /// Canonical orbit element: minimal level >= 0 (ties impossible; node
    /// index would break them).
    zvertex canonicalize(const zvertex& v) const;
    orbit_vertex orbit_canonical(const zvertex& v) const;

    std::size_t size() const { return vertices_.size(); }
    const std::vector<orbit_vertex>& vertices() const { return vertices_; }
    int index_of(const zvertex& canonical_rep) const;
    int index_of_label(const label_pair& l) const; // family A only

    // Induced structure maps on vertex indices.
    int qtau(int id) const { return tau_[std::size_t(id)]; }
    int qtau_inv(int id) const { return tau_inv_[std::size_t(id)]; }
    int qshift(int id) const { return shift_[std::size_t(id)]; }
    int qshift_inv(int id) const { return shift_inv_[std::size_t(id)]; }
    const std::vector<int>& qsucc(int id) const { return succ_[std::size_t(id)]; }
    const std::vector<int>& qpred(int id) const { return pred_[std::size_t(id)]; }

    std::string vertex_name(int id) const; // "i-j" for family A, "(p,q)" otherwise
    int parse_vertex(const std::string& token) const;

private:
    dynkin_diagram diagram_;
    int d_;
    std::vector<orbit_vertex> vertices_;
    std::map<zvertex, int> index_;
    std::map<label_pair, int> label_index_;
    std::vector<int> tau_, tau_inv_, shift_, shift_inv_;
    std::vector<std::vector<int>> succ_, pred_;
};

/// Quotient quiver with one extra vertex p_c and arrows c -> p_c -> tau^{-1}c
/// per element of C; translation stays undefined on the added vertices.
struct augmented_quiver {
    std::vector<std::string> vertex_names;            // base vertices then added ones
    std::vector<std::pair<int, int>> arrows;          // indices into vertex_names
    std::vector<std::pair<int, int>> translation;     // (vertex, tau vertex), base only
    std::vector<std::pair<int, int>> projective_for;  // (config vertex, added vertex)
    std::size_t base_size = 0;
};

augmented_quiver augment(const quotient_context& ctx, const std::vector<int>& config_vertex_ids);

} // namespace cyw
