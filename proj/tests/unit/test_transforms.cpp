#include "doctest.h"

#include <random>

#include "qforest/transforms.hpp"

using namespace qforest;

namespace {

FVector random_fvector(std::mt19937& rng, int dmax, long long entry_max) {
    std::uniform_int_distribution<int> dd(1, dmax);
    std::uniform_int_distribution<long long> ee(1, entry_max);
    std::vector<long long> entries(static_cast<std::size_t>(dd(rng)));
    for (auto& e : entries) e = ee(rng);
    return FVector(std::move(entries));
}

// Substitute x -> x + 1: out_k = sum_j a_j C(j, k).
IntPolynomial shift_up(const IntPolynomial& p) {
    std::vector<long long> out(p.coeffs.size(), 0);
    for (int j = 0; j <= p.degree(); ++j)
        for (int k = 0; k <= j; ++k)
            out[static_cast<std::size_t>(k)] += p.coeff(j) * binomial(j, k);
    return IntPolynomial::from_coeffs(std::move(out));
}

} // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK_THROWS_AS(binomial(70, 35), OverflowError);
}

TEST_CASE("c_sequence on the worked fixtures") {
    CHECK(c_sequence(FVector({3, 2})).entries == std::vector<long long>{0, -1, 2});
    CHECK(c_sequence(FVector({4, 4, 1})).entries == std::vector<long long>{0, -1, 1, 1});
    // single 4-simplex: sum C(4,i) (x-1)^i = x^4
    CHECK(c_sequence(FVector({4, 6, 4, 1})).entries ==
          std::vector<long long>{0, 0, 0, 0, 1});
}

TEST_CASE("b_sequence on the worked fixtures") {
    CHECK(b_sequence(FVector({3, 2})).entries == std::vector<long long>{1, 2});
    CHECK(b_sequence(FVector({4, 4, 1})).entries == std::vector<long long>{1, 2, 1});
    CHECK(b_sequence(FVector({4, 6, 4, 1})).entries ==
          std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("b_from_c takes suffix sums") {
    CHECK(b_from_c(CSequence{{0, -1, 2}}).entries == std::vector<long long>{1, 2});
    CHECK(b_from_c(CSequence{{0, -1, 0, 2}}).entries == std::vector<long long>{1, 2, 2});
    CHECK(b_from_c(CSequence{{0, 0, 0, 1}}).entries == std::vector<long long>{1, 1, 1});
}

TEST_CASE("c_from_h on the worked fixtures") {
    CHECK(c_from_h(HVector{{1, 1, 0}}).entries == std::vector<long long>{0, -1, 2});
    CHECK(c_from_h(HVector{{1, 2, -1, 0}}).entries == std::vector<long long>{0, -1, 0, 2});
    CHECK(c_from_h(HVector{{1, 0, 0, 0}}).entries == std::vector<long long>{0, 0, 0, 1});
}

TEST_CASE("b_from_h on the worked fixtures") {
    CHECK(b_from_h(HVector{{1, 1, 0}}).entries == std::vector<long long>{1, 2});
    CHECK(b_from_h(HVector{{1, 2, -1, 0}}).entries == std::vector<long long>{1, 2, 2});
    CHECK(b_from_h(HVector{{1, 0, 0, 0}}).entries == std::vector<long long>{1, 1, 1});
    CHECK_THROWS_AS(b_from_h(HVector{{2, 0}}), InvalidInputError);
}

TEST_CASE("facet_signature_polynomial on the worked fixtures") {
    CHECK(facet_signature_polynomial({2, 2}, {1}).coeffs ==
          std::vector<long long>{1, 3, 2});
    CHECK(facet_signature_polynomial({3, 3}, {1}).coeffs ==
          std::vector<long long>{1, 5, 6, 2});
    CHECK(facet_signature_polynomial({4}, {}).coeffs ==
          std::vector<long long>{1, 4, 6, 4, 1});
    CHECK_THROWS_AS(facet_signature_polynomial({0}, {}), InvalidInputError);
    CHECK_THROWS_AS(facet_signature_polynomial({2}, {-1}), InvalidInputError);
}

TEST_CASE("signature polynomial has constant term 1 when |delta| = |e| + 1") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> size(0, 4);
    std::uniform_int_distribution<int> val(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = size(rng);
        std::vector<int> deltas, es;
        for (int i = 0; i <= s; ++i) deltas.push_back(val(rng));
        for (int i = 0; i < s; ++i) es.push_back(val(rng) - 1);
        CHECK(facet_signature_polynomial(deltas, es).coeff(0) == 1);
    }
}

TEST_CASE("the two b routes and the two c routes agree") {
    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 500; ++trial) {
        const FVector f = random_fvector(rng, 8, 10000);
        const CSequence c = c_sequence(f);
        const HVector h = h_vector(f);
        CHECK(b_sequence(f) == b_from_c(c));
        CHECK(c == c_from_h(h));
        CHECK(b_sequence(f) == b_from_h(h));

        long long sum = 0;
        for (long long v : c.entries) sum += v;
        CHECK(sum == 1);
    }
}

TEST_CASE("substituting x -> x + 1 into the c-polynomial recovers the f-polynomial") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const FVector f = random_fvector(rng, 6, 50);
        const IntPolynomial cpoly =
            IntPolynomial::from_coeffs(c_sequence(f).entries);
        CHECK(shift_up(cpoly) == f_polynomial(f));
    }
}

TEST_CASE("transforms report overflow instead of wrapping") {
    std::vector<long long> huge(64, 1000000);
    CHECK_THROWS_AS(c_sequence(FVector(huge)), OverflowError);
}
