#include <doctest.h>

#include "tclab/sums.hpp"

#include "oracle.hpp"

#include <algorithm>

using namespace tclab;
using sums::Form;
using tclab::arith::BigInt;

namespace {
Params P(std::uint64_t p, std::uint64_t c, std::uint64_t d, std::uint64_t k) {
    return Params::create(p, c, d, k);
}
} // namespace

TEST_CASE("Params validation") {
    CHECK_NOTHROW(P(5, 2, 2, 1));
    CHECK_NOTHROW(P(2, 1, 1, 1));
    CHECK_THROWS_AS(P(4, 1, 1, 1), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(P(5, 2, 2, 3), std::invalid_argument);  // k > c
    CHECK_THROWS_AS(P(5, 3, 2, 1), std::invalid_argument);  // c > d
    CHECK_THROWS_AS(P(5, 3, 3, 1), std::invalid_argument);  // c + d > p
    CHECK_THROWS_AS(P(5, 2, 2, 0), std::invalid_argument);  // k = 0
    CHECK(P(5, 2, 3, 1).ell_max() == 5);
}

TEST_CASE("strict ell-domain is enforced unless exploratory") {
    Params pr = P(5, 2, 2, 1);
    CHECK_THROWS_AS(sums::C_def(pr, 0), std::invalid_argument);
    CHECK_THROWS_AS(sums::C_def(pr, 5), std::invalid_argument);
    CHECK_NOTHROW(sums::C_def(pr, {0, true}));
    CHECK_NOTHROW(sums::C_def(pr, {9, true}));
    CHECK(sums::C_def(pr, {9, true}) == 0);
}

TEST_CASE("C defining-sum frozen values") {
    CHECK(sums::C_def(P(5, 2, 2, 1), 1) == 4);
    CHECK(sums::C_def(P(5, 2, 2, 1), 4) == 0);
    CHECK(sums::C_def(P(5, 2, 3, 1), 2) == 1);
}

TEST_CASE("C rewritten-form frozen values") {
    CHECK(sums::C_alt(P(5, 2, 2, 1), 1) == 4);
    CHECK(sums::C_alt(P(5, 2, 2, 1), 1) == sums::C_def(P(5, 2, 2, 1), 1));
    CHECK(sums::C_alt(P(5, 2, 3, 1), 3) == 0);
    CHECK(sums::C_alt(P(5, 2, 3, 1), 3) == sums::C_def(P(5, 2, 3, 1), 3));
}

TEST_CASE("D frozen values") {
    CHECK(sums::D_def(P(5, 2, 2, 1), 1) == 0);
    CHECK(sums::D_def(P(5, 2, 3, 1), 4) == 4);
    CHECK(sums::D_def(P(5, 2, 3, 1), 5) == 6);
    CHECK(sums::D_alt(P(5, 2, 3, 1), 3) == 1);
    CHECK(sums::D_alt(P(5, 2, 3, 1), 1) == 0);
}

TEST_CASE("f tables, confirmed against the independent summation oracle") {
    auto table1 = sums::f_table(P(5, 2, 2, 1));
    std::vector<BigInt> want1 = {4, 1, -1, -4};
    CHECK(table1.values == want1);
    CHECK(oracle::f_table(5, 2, 2, 1) == want1);
    std::vector<std::uint64_t> res1;
    for (auto& r : table1.residues) res1.push_back(r.value());
    CHECK(res1 == std::vector<std::uint64_t>{4, 1, 4, 1});

    auto table2 = sums::f_table(P(5, 2, 3, 1));
    std::vector<BigInt> want2 = {4, 1, -1, -4, -6};
    CHECK(table2.values == want2);
    CHECK(oracle::f_table(5, 2, 3, 1) == want2);

    CHECK(sums::f_eval(P(5, 2, 2, 1), 1) == 4);
    CHECK(sums::f_eval(P(5, 2, 2, 1), 1, Form::defining) == 4);
}

TEST_CASE("rewrite equivalence across all tuples with p <= 13") {
    for (const Params& pr : enumerate_params(13)) {
        for (long long ell = 1; ell <= pr.ell_max(); ++ell) {
            INFO("tuple p=", pr.p(), " c=", pr.c(), " d=", pr.d(), " k=", pr.k(), " ell=", ell);
            CHECK(sums::C_def(pr, ell) == sums::C_alt(pr, ell));
            CHECK(sums::D_def(pr, ell) == sums::D_alt(pr, ell));
            CHECK(sums::f_eval(pr, ell, Form::defining) ==
                  sums::f_eval(pr, ell, Form::rewritten));
        }
    }
}

TEST_CASE("defining sums match the oracle on every tuple with p <= 11") {
    for (const Params& pr : enumerate_params(11)) {
        const long long p = pr.p(), c = pr.c(), d = pr.d(), k = pr.k();
        for (long long ell = 1; ell <= pr.ell_max(); ++ell) {
            CHECK(sums::C_def(pr, ell) == oracle::C_def(p, c, d, k, ell));
            CHECK(sums::D_def(pr, ell) == oracle::D_def(p, c, d, k, ell));
        }
    }
}

TEST_CASE("D(1) vanishes for every tuple with p <= 13") {
    for (const Params& pr : enumerate_params(13))
        CHECK(sums::D_def(pr, 1) == 0);
}

TEST_CASE("fast residue path equals exact reduction, p <= 13") {
    for (const Params& pr : enumerate_params(13))
        for (long long ell = 1; ell <= pr.ell_max(); ++ell)
            CHECK(sums::f_residue_fast(pr, ell) ==
                  arith::Residue::from_bigint(sums::f_eval(pr, ell), pr.p()));
}

TEST_CASE("F/G frozen values") {
    CHECK(sums::F_direct(2, 2, 1, 1) == 0);
    CHECK(sums::F_direct(2, 3, 2, 2) == 1);
    CHECK(sums::G_direct(2, 3, 2, 2) == -1);
    CHECK(sums::F_closed(2, 2, 1, 2) == 1);
    CHECK(sums::F_closed(2, 2, 1, 2) == sums::F_direct(2, 2, 1, 2));
    CHECK(sums::G_closed(2, 3, 2, 2) == -1);
    CHECK(sums::F_closed(2, 3, 2, 2) + sums::G_closed(2, 3, 2, 2) == 0);
}

TEST_CASE("F/G closed forms and cancellation on the full grid up to 9") {
    for (long long k = 1; k <= 9; ++k)
        for (long long c = k; c <= 9; ++c)
            for (long long d = c; d <= 9; ++d)
                for (long long ell = 1; ell <= c + d - k; ++ell) {
                    INFO("c=", c, " d=", d, " k=", k, " ell=", ell);
                    BigInt fd = sums::F_direct(c, d, k, ell);
                    BigInt fc = sums::F_closed(c, d, k, ell);
                    BigInt gd = sums::G_direct(c, d, k, ell);
                    BigInt gc = sums::G_closed(c, d, k, ell);
                    CHECK(fd == fc);
                    CHECK(gd == gc);
                    BigInt cancel = fc;
                    if (k % 2 == 0) cancel += gc; else cancel -= gc;
                    CHECK(cancel == 0);
                }
}

TEST_CASE("F/G argument validation") {
    CHECK_THROWS_AS(sums::F_direct(3, 2, 1, 1), std::invalid_argument);  // c > d
    CHECK_THROWS_AS(sums::F_direct(2, 3, 3, 1), std::invalid_argument);  // k > c
    CHECK_THROWS_AS(sums::F_direct(2, 3, 2, 4), std::invalid_argument);  // ell out
    CHECK_NOTHROW(sums::F_direct(2, 3, 2, {4, true}));
}

TEST_CASE("lemma_c1 frozen examples and grid") {
    CHECK(sums::lemma_c1_check(2, 1, 0));
    CHECK(sums::lemma_c1_check(5, 3, 1));
    CHECK(sums::lemma_c1_check(6, 4, 2));
    CHECK_THROWS_AS(sums::lemma_c1_check(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(sums::lemma_c1_check(5, 3, 4), std::invalid_argument);
    for (long long c = 1; c <= 10; ++c)
        for (long long k = 1; k <= c; ++k)
            for (long long j = 0; j <= c - k; ++j)
                CHECK(sums::lemma_c1_check(c, k, j));
}

TEST_CASE("lemma_d1 frozen examples and grid") {
    CHECK(sums::lemma_d1_check(3, 1, 0));
    CHECK(sums::lemma_d1_check(5, 3, 2));
    CHECK(sums::lemma_d1_check(7, 4, 3));
    CHECK_THROWS_AS(sums::lemma_d1_check(3, 2, 2), std::invalid_argument);
    for (long long d = 1; d <= 10; ++d)
        for (long long k = 1; k <= d; ++k)
            for (long long j = 0; j <= k - 1; ++j)
                CHECK(sums::lemma_d1_check(d, k, j));
}

TEST_CASE("lemma_lk frozen examples and grid up to p = 13") {
    CHECK(sums::lemma_lk_check(P(7, 3, 3, 2), -1));
    CHECK(sums::lemma_lk_check(P(11, 4, 5, 3), -2));
    CHECK(sums::lemma_lk_check(P(5, 1, 1, 1), 0));   // k = 1: vacuous
    CHECK(sums::lemma_lk_check(P(5, 1, 1, 1), -7));  // still vacuous
    CHECK_THROWS_AS(sums::lemma_lk_check(P(7, 3, 3, 2), 0), std::invalid_argument);
    for (const Params& pr : enumerate_params(13))
        for (long long ell = 1 - static_cast<long long>(pr.k()); ell <= -1; ++ell)
            CHECK(sums::lemma_lk_check(pr, ell));
}

TEST_CASE("per-term vanishing behind lemma_lk: binom(-j-1, k-1) = 0 on [1-k, -1]") {
    using tclab::arith::binomial;
    for (long long k = 1; k <= 12; ++k)
        for (long long j = 1 - k; j <= -1; ++j)
            CHECK(binomial(-j - 1, k - 1) == 0);
    // the same inner sum is nonzero just outside the window
    CHECK(binomial(3, 3) == 1);  // j = -4, k = 4
}

TEST_CASE("enumerate_params") {
    auto tiny = enumerate_params(2);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0] == P(2, 1, 1, 1));

    auto three = enumerate_params(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == P(2, 1, 1, 1));
    CHECK(three[1] == P(3, 1, 1, 1));
    CHECK(three[2] == P(3, 1, 2, 1));

    auto all = enumerate_params(23);
    auto brute = oracle::all_tuples(23);
    REQUIRE(all.size() == brute.size());
    CHECK(all.size() == 1355);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].p() == brute[i][0]);
        CHECK(all[i].c() == brute[i][1]);
        CHECK(all[i].d() == brute[i][2]);
        CHECK(all[i].k() == brute[i][3]);
    }
    CHECK(std::is_sorted(all.begin(), all.end()));
}
