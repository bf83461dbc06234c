#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gorbetti/hvector.hpp"

using namespace gorbetti;

namespace {

HVector hv(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v)
        out.emplace_back(x);
    return HVector::from_entries(std::move(out));
}

std::vector<Integer> ints(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("nu0") {
    CHECK(nu0(4, 4) == 25);
    CHECK(nu0(4, 2) == 9);
    for (int p = 2; p <= 10; ++p)
        CHECK(nu0(3, p) == 2 * p + 1);
    for (int p = 2; p <= 6; ++p)
        CHECK(nu0(4, p) == Integer(p + 1) * (p + 1));
    CHECK_THROWS_AS(nu0(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(nu0(4, 1), std::invalid_argument);
}

TEST_CASE("extremal multiplicity and h-vector") {
    CHECK(extremal_multiplicity(4, 2) == 6);
    CHECK(extremal_multiplicity(4, 4) == 50);
    CHECK(extremal_multiplicity(3, 2) == 5);

    CHECK(extremal_hvector(4, 2) == hv({1, 4, 1}));
    CHECK(extremal_hvector(3, 2) == hv({1, 3, 1}));
    CHECK(extremal_hvector(4, 4) == hv({1, 4, 10, 20, 10, 4, 1}));

    for (int g = 3; g <= 5; ++g) {
        for (int p = 2; p <= 5; ++p) {
            auto h = extremal_hvector(g, p);
            CHECK(is_o_sequence(h.entries));
            CHECK(h.multiplicity() == extremal_multiplicity(g, p));
            auto prof = profile(h);
            CHECK(prof.g == g);
            CHECK(prof.p == p);
            CHECK(prof.sigma == 2 * p - 2);
            CHECK(prof.symmetric);
            CHECK(prof.nu_p == nu0(g, p));
        }
    }
}

TEST_CASE("pure_resolution_betti") {
    CHECK(pure_resolution_betti({0, 2, 3, 4, 6}) ==
          std::vector<Integer>(ints({1, 9, 16, 9, 1})));
    for (int p = 2; p <= 6; ++p) {
        auto b = pure_resolution_betti({0, p, p + 1, 2 * p + 1});
        CHECK(b == std::vector<Integer>(ints({1, 2 * p + 1, 2 * p + 1, 1})));
    }
    CHECK(pure_resolution_betti({0, 2, 4}) == std::vector<Integer>(ints({1, 2, 1})));

    for (int g = 3; g <= 5; ++g) {
        for (int p = 2; p <= 5; ++p) {
            auto degs = extremal_degree_sequence(g, p);
            REQUIRE(static_cast<int>(degs.size()) == g + 1);
            auto b = pure_resolution_betti(degs);
            CHECK(b[1] == nu0(g, p));
            CHECK(b[static_cast<std::size_t>(g)] == 1);
        }
    }

    CHECK_THROWS_AS(pure_resolution_betti({0, 1, 3}), std::domain_error);
    CHECK_THROWS_AS(pure_resolution_betti({0, 2, 3, 4, 8}), std::domain_error);
    CHECK_THROWS_AS(pure_resolution_betti({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(pure_resolution_betti({0, 3, 3}), std::invalid_argument);
}

TEST_CASE("profile") {
    auto prof = profile(hv({1, 4, 9, 13, 13, 9, 4, 1}));
    CHECK(prof.g == 4);
    CHECK(prof.p == 2);
    CHECK(prof.sigma == 7);
    CHECK(prof.nu_p == 1);
    CHECK(prof.symmetric);
    CHECK(prof.unimodal);

    prof = profile(hv({1, 4, 1}));
    CHECK(prof.g == 4);
    CHECK(prof.p == 2);
    CHECK(prof.nu_p == 9);
    CHECK(prof.symmetric);
    CHECK(prof.unimodal);

    prof = profile(hv({1, 3, 4, 3, 1}));
    CHECK(prof.unimodal);
    CHECK(prof.symmetric);

    prof = profile(hv({1, 4, 3, 4, 1})); // descends to 3, climbs back to 4
    CHECK_FALSE(prof.unimodal);
    CHECK(prof.symmetric);
    CHECK(prof.nu_p == 7);

    CHECK_THROWS_AS(profile(hv({1})), std::invalid_argument);
    CHECK_THROWS_AS(profile(HVector{ints({1, 3, 15})}), std::invalid_argument);
}

TEST_CASE("forbidden_nu reproduces the g=4 p=4 gaps") {
    auto rep = forbidden_nu(4, 4);
    CHECK(rep.nu0 == 25);
    CHECK(rep.forbidden == ints({21, 22, 23, 24}));
    CHECK(rep.nonunimodal_required == ints({16, 17, 18, 19, 20}));
}

TEST_CASE("forbidden_nu at small initial degree") {
    // For (g, p) = (4, 2) the value h_p = 2 (nu = 8) can never grow back to
    // h_1 = 4: macaulay_bound(2, j) = 2 for every j >= 2. Every other
    // sub-extremal nu admits a growth step.
    for (int j = 2; j <= 12; ++j)
        CHECK(macaulay_bound(2, j) == 2);
    CHECK(macaulay_bound(3, 2) == 4);
    auto rep = forbidden_nu(4, 2);
    CHECK(rep.nu0 == 9);
    CHECK(rep.forbidden == ints({8}));
    CHECK(rep.nonunimodal_required == ints({7}));

    auto rep32 = forbidden_nu(3, 2);
    CHECK(rep32.forbidden == ints({4}));
}

TEST_CASE("certificate worked instances") {
    auto cert = certificate(4, 4, 4, 13);
    CHECK_FALSE(cert.trivial);
    REQUIRE(cert.grouped.groups.size() == 2);
    CHECK(cert.grouped.groups[0] == MacaulayGroup{1, 4, 2});
    CHECK(cert.grouped.groups[1] == MacaulayGroup{0, 1, 1});
    CHECK(cert.k == 1);
    CHECK(cert.k_in_range);
    CHECK(cert.ratio_ok);
    REQUIRE(cert.f.size() == 2);
    CHECK(cert.f.back() == cert.f_last_closed);
    CHECK(cert.f_last_closed == Rational(1, 2)); // (1/1 - 1/2) * C(1, 0)
    CHECK(cert.verdict);
    CHECK(macaulay_bound(13, 4) == 16); // indeed cannot reach h_{p-1} = 20

    cert = certificate(4, 4, 5, 3);
    CHECK(cert.trivial);
    CHECK(cert.verdict);

    cert = certificate(5, 3, 3, 5);
    CHECK(cert.verdict);
    REQUIRE(cert.f.size() == 2);
    CHECK(cert.f[0] == Rational(3, 2));
    CHECK(cert.f[1] == Rational(1, 3));
    REQUIRE(cert.a_sums.size() == 1);
    CHECK(cert.a_sums[0] == 3);
    CHECK(cert.b_sums[0] == 2);
    CHECK(macaulay_bound(5, 3) == 6); // < C(6, 4) = 15

    // the same chain covers the values 11..14 behind the g=4, p=4 gap
    for (long h = 11; h <= 14; ++h) {
        auto c = certificate(4, 4, 4, h);
        CHECK(c.verdict);
        CHECK(c.k_in_range);
        CHECK(c.ratio_ok);
    }

    CHECK_THROWS_AS(certificate(2, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(certificate(4, 4, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(certificate(4, 4, 4, 20), std::invalid_argument);
    CHECK_THROWS_AS(certificate(4, 4, 4, 0), std::invalid_argument);
}

TEST_CASE("certificate soundness over the desk range") {
    for (int g = 3; g <= 5; ++g) {
        for (int p = 2; p <= 5; ++p) {
            const Integer cap = binom(Integer(p) + g - 3, static_cast<unsigned long>(g - 1));
            for (int j = p; j <= 10; ++j) {
                for (Integer h = j + 1; h <= cap; ++h) {
                    auto cert = certificate(g, p, j, h);
                    REQUIRE(cert.verdict);
                    REQUIRE(cert.k_in_range);
                    REQUIRE(cert.ratio_ok);
                    REQUIRE_FALSE(cert.trivial);
                    REQUIRE(cert.f.front() > 0);
                }
            }
        }
    }
}

TEST_CASE("enumerate_symmetric_osequences small families") {
    auto got = collect_symmetric_osequences(3, 2, 4);
    std::set<std::vector<Integer>> entries;
    for (const auto& h : got)
        entries.insert(h.entries);
    std::set<std::vector<Integer>> expected = {
        ints({1, 3, 1}),          ints({1, 3, 3, 1}),       ints({1, 3, 3, 3, 1}),
        ints({1, 3, 4, 3, 1}),    ints({1, 3, 5, 3, 1}),
    };
    CHECK(entries == expected);
    for (const auto& h : got) {
        auto prof = profile(h);
        CHECK(prof.symmetric);
        CHECK(prof.p == 2);
        CHECK(prof.nu_p <= nu0(3, 2));
    }

    auto only = collect_symmetric_osequences(4, 2, 2);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == hv({1, 4, 1}));
}

TEST_CASE("enumeration respects the forbidden range of Remark-style gaps") {
    auto got = collect_symmetric_osequences(4, 4, 8);
    CHECK(!got.empty());
    for (const auto& h : got) {
        auto prof = profile(h);
        REQUIRE(prof.p == 4);
        REQUIRE(prof.nu_p <= 25);
        REQUIRE_FALSE((prof.nu_p >= 21 && prof.nu_p <= 24));
        if (prof.nu_p >= 16)
            REQUIRE((prof.nu_p == 25 || !prof.unimodal));
    }
}

TEST_CASE("main theorem as a property over desk-scale enumerations") {
    const std::pair<int, int> families[] = {{3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4}};
    for (auto [g, p] : families) {
        auto got = collect_symmetric_osequences(g, p, 8);
        const Integer bound = nu0(g, p);
        const Integer e_min = extremal_multiplicity(g, p);
        const auto extremal = extremal_hvector(g, p);
        bool saw_extremal = false;
        Integer min_mult = -1;
        for (const auto& h : got) {
            auto prof = profile(h);
            REQUIRE(prof.nu_p <= bound);
            if (prof.nu_p == bound) {
                REQUIRE(h == extremal);
                saw_extremal = true;
            }
            Integer mult = h.multiplicity();
            REQUIRE(mult >= e_min);
            if (mult == e_min)
                REQUIRE(h == extremal);
            if (min_mult < 0 || mult < min_mult)
                min_mult = mult;
        }
        REQUIRE(saw_extremal);
        REQUIRE(min_mult == e_min);
    }
}

TEST_CASE("enumeration node limit guard") {
    EnumerateOptions opts;
    opts.node_limit = 3;
    CHECK_THROWS_AS(collect_symmetric_osequences(4, 2, 8, opts), NodeLimitError);
}

TEST_CASE("growth monotonic scan") {
    auto res = growth_monotonic_scan(1, 1, 10);
    CHECK(res.monotonic);

    CHECK(macaulay_bound(15, 4) == 21);
    CHECK(macaulay_bound(15, 5) == 18);
    res = growth_monotonic_scan(15, 4, 5);
    CHECK(res.monotonic);

    res = growth_monotonic_scan(200, 2, 30);
    CHECK(res.monotonic);
    CHECK_FALSE(res.counterexample.has_value());

    CHECK_THROWS_AS(growth_monotonic_scan(0, 1, 5), std::invalid_argument);
}
