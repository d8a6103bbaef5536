#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyw/dynkin.hpp"

namespace cyw {

/// Finitely supported non-negative function on vertices of Z\Delta.
class vertex_multiset {
public:
    using map_type = std::map<zvertex, std::int64_t>;

    vertex_multiset() = default;
    explicit vertex_multiset(map_type entries);

    std::int64_t at(const zvertex& v) const;
    void add(const zvertex& v, std::int64_t m);
    bool empty() const { return entries_.empty(); }
    const map_type& entries() const { return entries_; }

    bool operator==(const vertex_multiset&) const = default;

private:
    map_type entries_; // strictly positive entries only
};

/// The sequence f_0(x) = x, f_1(x) = sum of arrow targets,
/// f_n = f_1(f_{n-1}) - tau^{-1}(f_{n-2}), up to and including the first
/// all-zero term.  A negative intermediate multiplicity or a sequence longer
/// than max_steps is an error.
std::vector<vertex_multiset> f_seq(const zvertex& x, const dynkin_diagram& diagram, int max_steps);

/// Default iteration cap: 10 x Coxeter number.
int f_seq_default_cap(const dynkin_diagram& diagram);

/// Hom-count function h_x: accumulated multiplicities of the f-sequence.
vertex_multiset h(const zvertex& x, const dynkin_diagram& diagram);

/// The additive function with value 1 on the slice starting at x, evaluated
/// on the level window [lo, hi].  Satisfies f(v) + f(tau v) = sum over arrows
/// y -> v of f(y) wherever all terms lie in the window.
std::map<zvertex, std::int64_t> additive_slice_function(const zvertex& x, const dynkin_diagram& diagram,
                                                        std::int64_t lo, std::int64_t hi);

/// Integer label pair of a Z A_n vertex on the (n,d) grid:
/// (p,q) -> (1 + p(d+1), 1 + p(d+1) + d + (q-1)(d+1)).
std::pair<std::int64_t, std::int64_t> type_a_label(const zvertex& v, int d);

/// Closed-form hom membership test on Z A_n, in integer label coordinates:
/// with X = (x, x+d+(d+1)m), h_X(Y) = 1 iff Y = (x+(d+1)i, x+d+(d+1)j) for
/// some 0 <= i <= m <= j <= n-1.  Both arguments must be d-diagonal shaped.
int h_closed_form_A(std::pair<std::int64_t, std::int64_t> X, std::pair<std::int64_t, std::int64_t> Y,
                    int n, int d);

} // namespace cyw
