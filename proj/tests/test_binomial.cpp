#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gorbetti/binomial.hpp"
#include "oracles.hpp"

using namespace gorbetti;

TEST_CASE("binom basics") {
    CHECK(binom(6L, 4L) == 15);
    CHECK(binom(7L, 5L) == 21);
    CHECK(binom(17L, 0L) == 1);
    CHECK(binom(0L, 0L) == 1);
    CHECK(binom(3L, 5L) == 0);
    CHECK_THROWS_AS(binom(-1L, 2L), std::invalid_argument);

    // far beyond 64 bits
    Integer big = binom(200L, 100L);
    CHECK(big > Integer("18446744073709551615"));
    CHECK(big == binom(199L, 99L) + binom(199L, 100L)); // Pascal
}

TEST_CASE("macaulay_rep greedy expansion") {
    auto rep = macaulay_rep(15, 4);
    REQUIRE(rep.terms.size() == 1);
    CHECK(rep.terms[0] == MacaulayTerm{6, 4});

    rep = macaulay_rep(3, 5);
    REQUIRE(rep.terms.size() == 3);
    CHECK(rep.terms[0] == MacaulayTerm{5, 5});
    CHECK(rep.terms[1] == MacaulayTerm{4, 4});
    CHECK(rep.terms[2] == MacaulayTerm{3, 3});

    rep = macaulay_rep(13, 4);
    REQUIRE(rep.terms.size() == 4);
    CHECK(rep.terms[0] == MacaulayTerm{5, 4});
    CHECK(rep.terms[1] == MacaulayTerm{4, 3});
    CHECK(rep.terms[2] == MacaulayTerm{3, 2});
    CHECK(rep.terms[3] == MacaulayTerm{1, 1});
    CHECK(rep.min_index() == 1);

    // brute force: (5,4),(4,3),(3,2),(1,1) is the only strictly-decreasing-top
    // expansion of 13 at degree 4
    auto all = oracle::all_expansions(13, 4);
    REQUIRE(all.size() == 1);
    REQUIRE(all[0].size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(all[0][i].first == rep.terms[i].top);
        CHECK(all[0][i].second == rep.terms[i].index);
    }

    CHECK_THROWS_AS(macaulay_rep(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_rep(5, 0), std::invalid_argument);
}

TEST_CASE("macaulay_rep uniqueness and invariants") {
    for (int j = 1; j <= 30; ++j) {
        for (long h = 1; h <= 10000; ++h) {
            auto rep = macaulay_rep(h, j);
            REQUIRE(rep.reconstruct() == h);
            REQUIRE(rep.terms.front().index == j);
            for (std::size_t i = 0; i < rep.terms.size(); ++i) {
                const auto& t = rep.terms[i];
                REQUIRE(t.top >= t.index);
                REQUIRE(t.index >= 1);
                if (i > 0) {
                    REQUIRE(rep.terms[i - 1].top > t.top);
                    REQUIRE(rep.terms[i - 1].index == t.index + 1);
                }
            }
        }
    }
}

TEST_CASE("macaulay_bound values") {
    CHECK(macaulay_bound(15, 4) == 21);
    CHECK(macaulay_bound(3, 5) == 3);  // h <= j collapses to h
    CHECK(macaulay_bound(10, 4) == 12);
    CHECK(macaulay_bound(0, 7) == 0);
    CHECK(macaulay_bound(13, 4) == 16);
}

TEST_CASE("macaulay_bound agrees with the lex-segment oracle") {
    for (int n = 2; n <= 5; ++n) {
        for (int j = 1; j <= 5; ++j) {
            for (long h = 1; h <= 60; ++h) {
                long brute = oracle::lex_segment_growth(h, j, n);
                if (brute < 0)
                    continue; // h exceeds dim R_j in n variables
                CHECK(macaulay_bound(h, j) == brute);
            }
        }
    }
}

TEST_CASE("macaulay_bound monotone in h") {
    for (int j : {1, 2, 3, 4, 7, 12}) {
        Integer prev = macaulay_bound(1, j);
        for (long h = 2; h <= 2000; ++h) {
            Integer cur = macaulay_bound(h, j);
            REQUIRE(cur >= prev);
            prev = std::move(cur);
        }
    }
}

TEST_CASE("grouped_rep") {
    auto grp = grouped_rep(macaulay_rep(13, 4));
    REQUIRE(grp.groups.size() == 2);
    CHECK(grp.groups[0] == MacaulayGroup{1, 4, 2});
    CHECK(grp.groups[0].length_minus_one() == 2);
    CHECK(grp.groups[1] == MacaulayGroup{0, 1, 1});
    CHECK(grp.reconstruct() == 13);

    grp = grouped_rep(macaulay_rep(15, 4));
    REQUIRE(grp.groups.size() == 1);
    CHECK(grp.groups[0] == MacaulayGroup{2, 4, 4});
    CHECK(grp.reconstruct() == 15);

    grp = grouped_rep(macaulay_rep(3, 5));
    REQUIRE(grp.groups.size() == 1);
    CHECK(grp.groups[0] == MacaulayGroup{0, 5, 3});
    CHECK(grp.groups[0].length_minus_one() == 2);
    CHECK(grp.reconstruct() == 3);
}

TEST_CASE("grouped_rep round-trips and invariants") {
    for (int j : {2, 3, 4, 6, 11}) {
        for (long h = 1; h <= 3000; h += 7) {
            auto rep = macaulay_rep(h, j);
            auto grp = grouped_rep(rep);
            REQUIRE(grp.reconstruct() == h);
            // expand groups back into consecutive terms
            std::vector<MacaulayTerm> expanded;
            for (const auto& g : grp.groups)
                for (int l = g.top_index; l >= g.bottom_index; --l)
                    expanded.push_back({g.diff + l, l});
            REQUIRE(expanded == rep.terms);
            for (std::size_t s = 0; s + 1 < grp.groups.size(); ++s) {
                REQUIRE(grp.groups[s].diff > grp.groups[s + 1].diff);
                REQUIRE(grp.groups[s + 1].top_index == grp.groups[s].bottom_index - 1);
            }
            REQUIRE(grp.groups.front().top_index == j);
            REQUIRE(grp.groups.back().diff >= 0);
            REQUIRE(grp.groups.back().bottom_index == rep.min_index());
        }
    }
}

TEST_CASE("is_o_sequence") {
    auto seq = [](std::initializer_list<long> v) {
        std::vector<Integer> out;
        for (long x : v)
            out.emplace_back(x);
        return out;
    };

    CHECK(is_o_sequence(seq({1, 4, 9, 13, 13, 9, 4, 1})));
    CHECK_FALSE(is_o_sequence(seq({1, 3, 15})));
    CHECK(is_o_sequence(seq({1, 4, 10, 20, 10, 4, 1})));
    CHECK(is_o_sequence(seq({1})));
    CHECK(is_o_sequence(seq({1, 1000000}))); // the step at j = 0 is unconstrained
    CHECK_FALSE(is_o_sequence(seq({2, 1})));
    CHECK(is_o_sequence(seq({1, 3, 0, 0})));
    CHECK_FALSE(is_o_sequence(seq({1, 3, 0, 1}))); // nonzero after a zero

    auto v = o_sequence_violation(seq({1, 3, 15}));
    REQUIRE(v.has_value());
    CHECK(v->position == 2);
    CHECK(v->value == 15);
    CHECK(v->max_allowed == 6);

    CHECK_THROWS_AS(is_o_sequence(std::vector<Integer>{}), std::invalid_argument);
    CHECK_THROWS_AS(is_o_sequence(seq({1, -2})), std::invalid_argument);
}
