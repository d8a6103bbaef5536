#include "cyw/homtable.hpp"

namespace cyw {

namespace {

std::map<int, std::int64_t> projected_row(const quotient_context& ctx, const zvertex& rep) {
    std::map<int, std::int64_t> row;
    const vertex_multiset support = h(rep, ctx.diagram());
    for (auto& [z, m] : support.entries()) row[ctx.index_of(ctx.canonicalize(z))] += m;
    return row;
}

} // namespace

std::int64_t h_bar(const quotient_context& ctx, const orbit_vertex& x, const orbit_vertex& y) {
    auto row = projected_row(ctx, x.rep);
    auto it = row.find(ctx.index_of(y.rep));
    return it == row.end() ? 0 : it->second;
}

hom_table::hom_table(const quotient_context& ctx) : ctx_(&ctx) {
    const std::size_t n = ctx.size();
    rows_.reserve(n);
    covered_.assign(n, std::vector<char>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        rows_.push_back(projected_row(ctx, ctx.vertices()[x].rep));
        for (auto& [z, m] : rows_.back()) {
            int w = z;
            for (int j = 0; j < ctx.d(); ++j) {
                covered_[x][std::size_t(w)] = 1; // hbar_x(w[-j]) = hbar_x(z) != 0
                w = ctx.qshift(w);
            }
        }
    }
}

std::int64_t hom_table::hbar(int x, int y) const {
    const auto& row = rows_[std::size_t(x)];
    auto it = row.find(y);
    return it == row.end() ? 0 : it->second;
}

std::int64_t hom_table::hbar_shifted(int x, int y, int j) const {
    for (int k = 0; k < j; ++k) y = ctx_->qshift_inv(y);
    return hbar(x, y);
}

} // namespace cyw
