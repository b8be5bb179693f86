#include "qforest/transforms.hpp"

#include <algorithm>

#include "qforest/detail/checked.hpp"

namespace qforest {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

IntPolynomial IntPolynomial::from_coeffs(std::vector<long long> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return IntPolynomial{std::move(c)};
}

namespace {

// Rows 0..66 of Pascal's triangle all fit in 64 bits (C(67, 33) does not).
constexpr int kPascalRows = 67;

const std::vector<std::vector<long long>>& pascal_table() {
    static const std::vector<std::vector<long long>> table = [] {
        std::vector<std::vector<long long>> t(kPascalRows);
        for (int n = 0; n < kPascalRows; ++n) {
            t[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1, 1);
            for (int k = 1; k < n; ++k)
                t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        }
        return t;
    }();
    return table;
}

} // namespace

long long binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n < kPascalRows)
        return pascal_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    // Larger rows only until they leave the 64-bit range.
    k = std::min(k, n - k);
    std::vector<long long> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                checked_add(row[static_cast<std::size_t>(j)],
                            row[static_cast<std::size_t>(j - 1)]);
    return row[static_cast<std::size_t>(k)];
}

namespace {

// acc += coeff * (x-1)^power, with acc indexed by degree.
void add_shifted_power(std::vector<long long>& acc, long long coeff, int power) {
    for (int j = 0; j <= power; ++j) {
        long long term = checked_mul(coeff, binomial(power, j));
        if ((power - j) % 2 != 0) term = -term;
        acc[static_cast<std::size_t>(j)] = checked_add(acc[static_cast<std::size_t>(j)], term);
    }
}

} // namespace

CSequence c_sequence(const FVector& f) {
    const int d = f.d();
    std::vector<long long> acc(static_cast<std::size_t>(d) + 1, 0);
    add_shifted_power(acc, 1, 0); // f_{-1} = 1
    for (int i = 1; i <= d; ++i)
        add_shifted_power(acc, f[i - 1], i);

    long long sum = 0;
    for (long long v : acc) sum = checked_add(sum, v);
    if (sum != 1)
        throw Error("internal: c-sequence entries do not sum to 1");
    return CSequence{std::move(acc)};
}

BSequence b_sequence(const FVector& f) {
    const int d = f.d();
    std::vector<long long> acc(static_cast<std::size_t>(d), 0);
    for (int i = 1; i <= d; ++i)
        add_shifted_power(acc, f[i - 1], i - 1);
    return BSequence{std::move(acc)};
}

BSequence b_from_c(const CSequence& c) {
    const int d = c.d();
    std::vector<long long> b(static_cast<std::size_t>(d), 0);
    long long run = 0;
    for (int k = d; k >= 1; --k) {
        run = checked_add(run, c[k]);
        b[static_cast<std::size_t>(k - 1)] = run;
    }
    return BSequence{std::move(b)};
}

CSequence c_from_h(const HVector& h) {
    const int d = h.d();
    std::vector<long long> c(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        long long sum = 0;
        for (int j = 0; j <= d; ++j)
            sum = checked_add(sum, checked_mul(binomial(j, d - i), h[j]));
        c[static_cast<std::size_t>(i)] = ((d - i) % 2 != 0) ? -sum : sum;
    }
    return CSequence{std::move(c)};
}

BSequence b_from_h(const HVector& h) {
    const int d = h.d();
    if (d < 0 || h[0] != 1)
        throw InvalidInputError("b_from_h requires h_0 = 1");
    std::vector<long long> b(static_cast<std::size_t>(d), 0);
    for (int k = 1; k <= d; ++k) {
        long long sum = 0;
        for (int j = 1; j <= d; ++j)
            sum = checked_add(sum, checked_mul(binomial(j - 1, d - k), h[j]));
        if ((d - k) % 2 != 0) sum = -sum;
        b[static_cast<std::size_t>(k - 1)] = checked_add(1, sum);
    }
    return BSequence{std::move(b)};
}

IntPolynomial facet_signature_polynomial(const std::vector<int>& deltas,
                                         const std::vector<int>& es) {
    int top = 0;
    for (int dl : deltas) {
        if (dl <= 0) throw InvalidInputError("every delta must be positive");
        top = std::max(top, dl);
    }
    for (int e : es) {
        if (e < 0) throw InvalidInputError("every e must be non-negative");
        top = std::max(top, e);
    }
    std::vector<long long> acc(static_cast<std::size_t>(top) + 1, 0);
    for (int dl : deltas)
        for (int j = 0; j <= dl; ++j)
            acc[static_cast<std::size_t>(j)] =
                checked_add(acc[static_cast<std::size_t>(j)], binomial(dl, j));
    for (int e : es)
        for (int j = 0; j <= e; ++j)
            acc[static_cast<std::size_t>(j)] =
                checked_sub(acc[static_cast<std::size_t>(j)], binomial(e, j));
    return IntPolynomial::from_coeffs(std::move(acc));
}

IntPolynomial f_polynomial(const FVector& f) {
    std::vector<long long> coeffs;
    coeffs.reserve(static_cast<std::size_t>(f.d()) + 1);
    coeffs.push_back(1);
    coeffs.insert(coeffs.end(), f.entries.begin(), f.entries.end());
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

} // namespace qforest
