#include "cyw/quotient.hpp"

#include <algorithm>

#include "cyw/homcount.hpp"

namespace cyw {

std::string to_string(const label_pair& l) {
    return std::to_string(l.lo) + "-" + std::to_string(l.hi);
}

label_pair parse_label_pair(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= s.size())
        fail(errc::bad_input, "label must look like i-j", s);
    try {
        return label_pair::make(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
    } catch (const std::exception&) {
        fail(errc::bad_input, "label must look like i-j", s);
    }
}

quotient_context::quotient_context(dynkin_diagram diagram, int d) : diagram_(diagram), d_(d) {
    if (d < 1) fail(errc::bad_input, "d must be >= 1", std::to_string(d));

    // Collect canonical vertices: v is canonical iff level >= 0 and the
    // previous orbit element has negative level.  S[d] strictly raises
    // levels, so scanning a bounded level window finds them all.
    std::int64_t max_step = 0;
    for (int q = 1; q <= diagram_.rank; ++q) {
        zvertex v{0, q};
        max_step = std::max(max_step, group_gen(v).level);
    }
    for (std::int64_t p = 0; p <= max_step; ++p)
        for (int q = 1; q <= diagram_.rank; ++q) {
            zvertex v{p, q};
            if (group_gen_inv(v).level < 0) vertices_.push_back(orbit_canonical(v));
        }
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i].rep] = int(i);
    if (diagram_.fam == family::A)
        for (std::size_t i = 0; i < vertices_.size(); ++i) label_index_[*vertices_[i].label] = int(i);

    auto id_of = [&](const zvertex& v) { return index_.at(canonicalize(v)); };
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const zvertex& v = vertices_[i].rep;
        tau_.push_back(id_of(tau(v)));
        tau_inv_.push_back(id_of(tau_inv(v)));
        shift_.push_back(id_of(shift(diagram_, v)));
        shift_inv_.push_back(id_of(shift_inv(diagram_, v)));
        auto nb = mesh_neighbors(diagram_, v);
        std::vector<int> s, p;
        for (auto& w : nb.successors) s.push_back(id_of(w));
        for (auto& w : nb.predecessors) p.push_back(id_of(w));
        std::sort(s.begin(), s.end());
        std::sort(p.begin(), p.end());
        succ_.push_back(std::move(s));
        pred_.push_back(std::move(p));
    }
}

int quotient_context::label_modulus() const { return (d_ + 1) * diagram_.rank + d_ - 1; }

zvertex quotient_context::group_gen(const zvertex& v) const {
    return nakayama(diagram_, shift_pow(diagram_, v, d_));
}

zvertex quotient_context::group_gen_inv(const zvertex& v) const {
    return shift_pow(diagram_, nakayama_inv(diagram_, v), -d_);
}

zvertex quotient_context::canonicalize(const zvertex& v) const {
    zvertex c = v;
    while (c.level < 0) c = group_gen(c);
    for (zvertex prev = group_gen_inv(c); prev.level >= 0; prev = group_gen_inv(c)) c = prev;
    return c;
}

orbit_vertex quotient_context::orbit_canonical(const zvertex& v) const {
    orbit_vertex o{canonicalize(v), std::nullopt};
    if (diagram_.fam == family::A) {
        const std::int64_t N = label_modulus();
        auto residue = [&](std::int64_t x) {
            std::int64_t m = (x - 1) % N;
            if (m < 0) m += N;
            return int(m + 1);
        };
        auto [a, b] = type_a_label(o.rep, d_);
        o.label = label_pair::make(residue(a), residue(b));
    }
    return o;
}

int quotient_context::index_of(const zvertex& canonical_rep) const {
    auto it = index_.find(canonical_rep);
    if (it == index_.end()) fail(errc::vertex_not_found, "not a canonical vertex", to_string(canonical_rep));
    return it->second;
}

int quotient_context::index_of_label(const label_pair& l) const {
    auto it = label_index_.find(l);
    if (it == label_index_.end()) fail(errc::vertex_not_found, "no vertex with this label", to_string(l));
    return it->second;
}

std::string quotient_context::vertex_name(int id) const {
    const auto& v = vertices_[std::size_t(id)];
    return v.label ? to_string(*v.label) : to_string(v.rep);
}

int quotient_context::parse_vertex(const std::string& token) const {
    if (!token.empty() && token.front() == '(') {
        zvertex v = parse_zvertex(token);
        if (v.node < 1 || v.node > diagram_.rank) fail(errc::bad_input, "node outside diagram", token);
        return index_.at(canonicalize(v));
    }
    return index_of_label(parse_label_pair(token));
}

augmented_quiver augment(const quotient_context& ctx, const std::vector<int>& config_vertex_ids) {
    augmented_quiver q;
    q.base_size = ctx.size();
    for (std::size_t i = 0; i < ctx.size(); ++i) q.vertex_names.push_back(ctx.vertex_name(int(i)));
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        for (int s : ctx.qsucc(int(i))) q.arrows.emplace_back(int(i), s);
        q.translation.emplace_back(int(i), ctx.qtau(int(i)));
    }
    std::vector<int> sorted = config_vertex_ids;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int c : sorted) {
        if (c < 0 || std::size_t(c) >= ctx.size())
            fail(errc::vertex_not_found, "configuration vertex outside quotient", std::to_string(c));
        int pc = int(q.vertex_names.size());
        q.vertex_names.push_back("p[" + ctx.vertex_name(c) + "]");
        q.arrows.emplace_back(c, pc);
        q.arrows.emplace_back(pc, ctx.qtau_inv(c));
        q.projective_for.emplace_back(c, pc);
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

} // namespace cyw
