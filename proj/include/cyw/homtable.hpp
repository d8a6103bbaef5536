#pragma once

#include <map>
#include <vector>

#include "cyw/homcount.hpp"
#include "cyw/quotient.hpp"

namespace cyw {

/// Fibre sum of h over the quotient projection: hbar_x(y) = sum of h_x over
/// the preimage of y.  Computed by projecting the finite support of h.
std::int64_t h_bar(const quotient_context& ctx, const orbit_vertex& x, const orbit_vertex& y);

/// Memoized hbar rows and coverage sets for one quotient.
class hom_table {
public:
    explicit hom_table(const quotient_context& ctx);

    const quotient_context& ctx() const { return *ctx_; }

    std::int64_t hbar(int x, int y) const;
    /// hbar_x(y[-j]) for j >= 0.
    std::int64_t hbar_shifted(int x, int y, int j) const;
    /// True iff hbar_x(z[-j]) != 0 for some 0 <= j <= d-1.
    bool covers(int x, int z) const { return covered_[std::size_t(x)][std::size_t(z)] != 0; }
    const std::vector<char>& covered_row(int x) const { return covered_[std::size_t(x)]; }

private:
    const quotient_context* ctx_;
    std::vector<std::map<int, std::int64_t>> rows_;
    std::vector<std::vector<char>> covered_;
};

} // namespace cyw
