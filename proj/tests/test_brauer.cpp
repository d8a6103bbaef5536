#include <doctest.h>

#include <map>
#include <set>

#include "cyw/brauer.hpp"

using namespace cyw;

TEST_SUITE_BEGIN("brauer");

namespace {

brauer_relation rel(const std::string& csv) { return parse_relation(csv); }

// Independent maximality oracle: enumerate every inclusion-maximal pairwise
// disjoint set of d-diagonals by brute force over subsets.
std::set<brauer_relation> brute_force_maximal(const polygon& P) {
    auto diags = all_d_diagonals(P);
    std::set<brauer_relation> out;
    const std::size_t D = diags.size();
    REQUIRE(D <= 20);
    for (std::uint32_t mask = 1; mask < (1u << D); ++mask) {
        brauer_relation B;
        for (std::size_t i = 0; i < D; ++i)
            if (mask & (1u << i)) B.push_back(diags[i]);
        bool disjoint = true;
        for (std::size_t i = 0; i < B.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j)
                if (diagonals_intersect(P, B[i], B[j])) { disjoint = false; break; }
        if (!disjoint) continue;
        bool extendable = false;
        for (std::size_t i = 0; i < D && !extendable; ++i) {
            if (mask & (1u << i)) continue;
            bool ok = true;
            for (auto& dg : B)
                if (diagonals_intersect(P, dg, diags[i])) { ok = false; break; }
            extendable = ok;
        }
        if (!extendable) out.insert(B);
    }
    return out;
}

} // namespace

TEST_CASE("polygon construction") {
    CHECK(polygon::from_nd(2, 2).N == 7);
    CHECK(polygon::from_nd(3, 2).N == 10);
    CHECK(polygon::from_nd(1, 2).N == 4);
    CHECK_THROWS_AS(polygon::from_nd(1, 1), error);
    CHECK_THROWS_AS(polygon::from_nd(0, 2), error);
}

TEST_CASE("d-diagonal recognition") {
    polygon P = polygon::from_nd(3, 2); // 10-gon, gaps 2, 5, 8
    CHECK(is_d_diagonal(P, {1, 3}));
    CHECK(is_d_diagonal(P, {1, 6}));
    CHECK(is_d_diagonal(P, {1, 9}));
    CHECK(is_d_diagonal(P, {2, 7}));
    CHECK_FALSE(is_d_diagonal(P, {1, 2}));
    CHECK_FALSE(is_d_diagonal(P, {1, 5}));
    CHECK(all_d_diagonals(P).size() == std::size_t(P.n * P.N / 2));
}

TEST_CASE("intersection predicate") {
    polygon P = polygon::from_nd(3, 2);
    CHECK(diagonals_intersect(P, {1, 3}, {1, 6}));       // shared endpoint
    CHECK_FALSE(diagonals_intersect(P, {1, 6}, {2, 4})); // nested
    CHECK(diagonals_intersect(P, {1, 6}, {2, 8}));       // crossing
    CHECK_FALSE(diagonals_intersect(P, {1, 3}, {4, 6}));
}

TEST_CASE("maximality") {
    polygon P = polygon::from_nd(3, 2);
    CHECK(is_maximal_brauer(P, rel("1-6,2-4,8-10")));
    CHECK_FALSE(is_maximal_brauer(P, rel("2-4")));
    CHECK_FALSE(is_maximal_brauer(P, rel("1-3,2-6")));
}

TEST_CASE("delta worked examples") {
    polygon P10 = polygon::from_nd(3, 2);
    CHECK(delta(P10, {4, 6}, {1, 3}) == 1);
    CHECK(delta(P10, {1, 3}, {7, 9}) == 2);
    polygon P7 = polygon::from_nd(2, 2);
    CHECK(delta(P7, {2, 7}, {4, 6}) == 1);
    CHECK(delta(P7, {4, 6}, {2, 7}) == 2);
    CHECK_THROWS_AS(delta(P10, {1, 3}, {1, 3}), error);
    CHECK_THROWS_AS(delta(P10, {1, 6}, {2, 8}), error);
}

TEST_CASE("cycles of the fan relation") {
    polygon P = polygon::from_nd(3, 2);
    auto cycles = b_cycles(P, rel("1-3,4-6,7-9"));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].members == std::vector<diagonal>{{1, 3}, {7, 9}, {4, 6}});
    CHECK(cycles[0].deltas == std::vector<int>{2, 1, 1});
}

TEST_CASE("cycles of a relation with a shared diagonal") {
    polygon P = polygon::from_nd(3, 2);
    auto cycles = b_cycles(P, rel("1-6,2-4,8-10"));
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].members == std::vector<diagonal>{{1, 6}, {2, 4}});
    CHECK(cycles[0].deltas == std::vector<int>{2, 1});
    CHECK(cycles[1].members == std::vector<diagonal>{{1, 6}, {8, 10}});
    CHECK(cycles[1].deltas == std::vector<int>{1, 2});
}

TEST_CASE("two-diagonal relation has a single cycle") {
    polygon P = polygon::from_nd(2, 2);
    auto cycles = b_cycles(P, rel("7-2,4-6"));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].members == std::vector<diagonal>{{2, 7}, {4, 6}});
    CHECK(cycles[0].deltas == std::vector<int>{1, 2});
}

TEST_CASE("cycle laws over full small enumerations") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 1}}) {
        polygon P = polygon::from_nd(n, d);
        for (auto& B : enumerate_brauer(P)) {
            auto cycles = b_cycles(P, B);
            std::set<diagonal> covered;
            for (auto& c : cycles) {
                int sum = 0;
                for (int dv : c.deltas) sum += dv;
                CHECK(sum == P.d + int(c.members.size()) - 1);
                for (auto& m : c.members) covered.insert(m);
            }
            CHECK(covered == std::set<diagonal>(B.begin(), B.end()));
            for (std::size_t i = 0; i < cycles.size(); ++i)
                for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                    std::set<diagonal> s1(cycles[i].members.begin(), cycles[i].members.end());
                    int common = 0;
                    for (auto& m : cycles[j].members) common += int(s1.count(m));
                    CHECK(common <= 1);
                }
        }
    }
}

TEST_CASE("wrong cycle orderings never beat the boundary ordering") {
    polygon P = polygon::from_nd(3, 2);
    auto cycles = b_cycles(P, rel("1-3,4-6,7-9"));
    REQUIRE(cycles.size() == 1);
    auto& cyc = cycles[0];
    std::vector<std::size_t> perm{0, 1, 2};
    const int best = P.d + int(cyc.members.size()) - 1;
    do {
        int sum = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            sum += delta(P, cyc.members[perm[i]], cyc.members[perm[(i + 1) % perm.size()]]);
        CHECK(sum >= best);
        if (sum == best) {
            bool rotation = false;
            for (std::size_t r = 0; r < perm.size() && !rotation; ++r) {
                bool eq = true;
                for (std::size_t i = 0; i < perm.size(); ++i)
                    if (cyc.members[perm[(r + i) % perm.size()]] != cyc.members[i]) { eq = false; break; }
                rotation = eq;
            }
            CHECK(rotation);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("enumeration of the 7-gon relations matches the known list") {
    polygon P = polygon::from_nd(2, 2);
    auto all = enumerate_brauer(P);
    std::vector<brauer_relation> expected{rel("1-3,4-6"), rel("1-3,5-7"), rel("1-6,2-4"),
                                          rel("1-6,3-5"), rel("2-4,5-7"), rel("2-7,3-5"),
                                          rel("2-7,4-6")};
    CHECK(all == expected);
}

TEST_CASE("enumeration agrees with the brute force maximality oracle") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {1, 3}, {4, 1}}) {
        polygon P = polygon::from_nd(n, d);
        auto fast = enumerate_brauer(P);
        auto brute = brute_force_maximal(P);
        CHECK(std::set<brauer_relation>(fast.begin(), fast.end()) == brute);
        for (auto& B : fast) CHECK(is_maximal_brauer(P, B));
    }
}

TEST_CASE("counting formula") {
    CHECK(count_formula(2, 2) == 7);
    CHECK(count_formula(3, 2) == 30);
    CHECK(count_formula(1, 2) == 2);
    CHECK(count_formula(1, 5) == 5);
    CHECK(count_formula(12, 1) == 208012);
    CHECK_THROWS_AS(count_formula(1, 1), error);
}

TEST_CASE("size limit is enforced") {
    polygon P = polygon::from_nd(3, 2);
    CHECK_THROWS_AS(enumerate_brauer(P, 5), error);
    try {
        enumerate_brauer(P, 5);
    } catch (const error& e) {
        CHECK(e.code() == errc::size_limit);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("theta map basics") {
    polygon P1 = polygon::from_nd(1, 2);
    CHECK(theta_map(P1, {2}) == rel("2-4"));
    polygon P = polygon::from_nd(2, 2);
    CHECK_THROWS_AS(theta_map(P, {1}), error);
    CHECK_THROWS_AS(theta_map(P, {1, 1}), error);
    for (int a = 1; a <= P.N; ++a)
        for (int b = a + 1; b <= P.N; ++b) CHECK(is_maximal_brauer(P, theta_map(P, {a, b})));
}

TEST_CASE("theta fibers have size n+1") {
    polygon P = polygon::from_nd(2, 2);
    std::map<brauer_relation, int> fibers;
    for (int a = 1; a <= P.N; ++a)
        for (int b = a + 1; b <= P.N; ++b) ++fibers[theta_map(P, {a, b})];
    CHECK(fibers.size() == 7);
    for (auto& [B, count] : fibers) CHECK(count == P.n + 1);
}

TEST_CASE("rotation equivalence") {
    polygon P = polygon::from_nd(3, 2);
    brauer_relation B = rel("1-3,4-6,7-9");
    CHECK(rotation_equivalent(P, B, theta_rotate(P, B, 1)) == 1);
    CHECK(rotation_equivalent(P, B, B) == 0);
    CHECK_FALSE(rotation_equivalent(P, B, rel("1-6,2-4,8-10")).has_value());

    polygon P7 = polygon::from_nd(2, 2);
    auto all = enumerate_brauer(P7);
    for (auto& B2 : all) CHECK(rotation_equivalent(P7, all[0], B2).has_value());
}

TEST_CASE("rotation classes of the 10-gon") {
    polygon P = polygon::from_nd(3, 2);
    auto all = enumerate_brauer(P);
    CHECK(all.size() == 30);
    std::set<brauer_relation> canon;
    for (auto& B : all) {
        brauer_relation best = B;
        for (int t = 1; t < P.N; ++t) best = std::min(best, theta_rotate(P, B, t));
        canon.insert(best);
    }
    CHECK(canon.size() == 4);
}

TEST_CASE("hbar disjointness oracle equals geometry") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 1}, {3, 1}}) {
        quotient_context ctx(dynkin_diagram(family::A, n), d);
        hom_table table(ctx);
        polygon P = polygon::from_nd(n, d);
        auto diags = all_d_diagonals(P);
        for (auto& X : diags)
            for (auto& Y : diags) {
                bool geo = !(X == Y) && !diagonals_intersect(P, X, Y);
                bool om = hbar_disjointness_oracle(table, label_pair::make(X.a, X.b),
                                                   label_pair::make(Y.a, Y.b));
                CHECK(geo == om);
            }
    }
}

TEST_CASE("joint pairs follow the crossing pattern") {
    // For strictly crossing pairs x1 < y1 < x2 < y2 the hom count is nonzero
    // exactly when (y1, x2) is again a d-diagonal.
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 1}}) {
        quotient_context ctx(dynkin_diagram(family::A, n), d);
        hom_table table(ctx);
        polygon P = polygon::from_nd(n, d);
        int checked = 0;
        for (auto& X : all_d_diagonals(P))
            for (auto& Y : all_d_diagonals(P)) {
                if (!(X.a < Y.a && Y.a < X.b && X.b < Y.b)) continue;
                int x = ctx.index_of_label(label_pair::make(X.a, X.b));
                int y = ctx.index_of_label(label_pair::make(Y.a, Y.b));
                bool pattern = is_d_diagonal(P, diagonal::make(Y.a, X.b));
                CHECK((table.hbar(x, y) != 0) == pattern);
                ++checked;
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("delta equals the first non-vanishing shifted hom count") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 1}}) {
        quotient_context ctx(dynkin_diagram(family::A, n), d);
        hom_table table(ctx);
        polygon P = polygon::from_nd(n, d);
        auto diags = all_d_diagonals(P);
        for (auto& X : diags)
            for (auto& Y : diags) {
                if (X == Y || diagonals_intersect(P, X, Y)) continue;
                int x = ctx.index_of_label(label_pair::make(X.a, X.b));
                int y = ctx.index_of_label(label_pair::make(Y.a, Y.b));
                int first = 0;
                int cursor = y;
                for (int i = 1; i <= P.N && first == 0; ++i) {
                    cursor = ctx.qshift(cursor);
                    if (table.hbar(x, cursor) != 0) first = i;
                }
                CHECK(first == delta(P, X, Y));
            }
    }
}

TEST_CASE("coverage oracle finds witnesses for maximal relations") {
    quotient_context ctx(dynkin_diagram(family::A, 3), 2);
    hom_table table(ctx);
    polygon P = polygon::from_nd(3, 2);
    brauer_relation B = rel("1-3,4-6,7-9");
    for (auto& M : all_d_diagonals(P)) {
        auto witness = coverage_oracle(table, B, M);
        REQUIRE(witness.has_value());
        int x = ctx.index_of_label(label_pair::make(witness->first.a, witness->first.b));
        int m = ctx.index_of_label(label_pair::make(M.a, M.b));
        CHECK(table.hbar_shifted(x, m, witness->second) != 0);
    }
    auto self_witness = coverage_oracle(table, B, {1, 3});
    REQUIRE(self_witness.has_value());
    CHECK(self_witness->first == diagonal{1, 3});
    CHECK(self_witness->second == 0);

    brauer_relation smaller = rel("1-3,4-6");
    bool gap_found = false;
    for (auto& M : all_d_diagonals(P))
        if (!coverage_oracle(table, smaller, M)) gap_found = true;
    CHECK(gap_found);
}

TEST_CASE("label transport round trips") {
    quotient_context ctx(dynkin_diagram(family::A, 3), 2);
    hom_table table(ctx);
    polygon P = polygon::from_nd(3, 2);
    for (auto& B : enumerate_brauer(P)) {
        auto S = brauer_to_config(ctx, table, B);
        CHECK(config_to_brauer(ctx, S) == B);
    }
}

TEST_SUITE_END();
