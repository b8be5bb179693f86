#pragma once

#include <vector>

#include "qforest/complex.hpp"

namespace qforest {

/// Coefficients of sum_{i=0}^{d} f_{i-1} (x-1)^i = sum_{i=0}^{d} c_i x^i,
/// with f_{-1} = 1. Stores c_0 .. c_d; the sum of all entries is 1 whenever
/// the sequence came from an f-vector.
struct CSequence {
    std::vector<long long> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }
    long long operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    bool operator==(const CSequence&) const = default;
};

/// Coefficients of sum_{i=1}^{d} f_{i-1} (x-1)^{i-1} = sum_{i=1}^{d} b_i x^{i-1}.
/// Stores b_1 .. b_d; b_0 = 1 is implicit.
struct BSequence {
    std::vector<long long> entries;

    int d() const { return static_cast<int>(entries.size()); }
    /// b_k for k in 1..d.
    long long at(int k) const { return entries[static_cast<std::size_t>(k - 1)]; }

    bool operator==(const BSequence&) const = default;
};

/// Dense integer polynomial, coeffs[k] = coefficient of x^k, trailing zeros
/// trimmed (the zero polynomial has no coefficients).
struct IntPolynomial {
    std::vector<long long> coeffs;

    static IntPolynomial from_coeffs(std::vector<long long> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size()))
                   ? coeffs[static_cast<std::size_t>(k)]
                   : 0;
    }

    bool operator==(const IntPolynomial&) const = default;
};

/// Exact binomial coefficient (0 outside 0 <= k <= n). Throws OverflowError
/// past the 64-bit range.
long long binomial(int n, int k);

CSequence c_sequence(const FVector& f);
BSequence b_sequence(const FVector& f);

/// Suffix sums b_k = sum_{i=k}^{d} c_i for k = 1..d.
BSequence b_from_c(const CSequence& c);

/// c_i = (-1)^{d-i} sum_{j=0}^{d} C(j, d-i) h_j.
CSequence c_from_h(const HVector& h);

/// b_k = 1 + (-1)^{d-k} sum_{j=1}^{d} C(j-1, d-k) h_j. Requires h_0 = 1.
BSequence b_from_h(const HVector& h);

/// sum_j (1+x)^{delta_j} - sum_j (1+x)^{e_j}. All deltas must be positive,
/// all es non-negative.
IntPolynomial facet_signature_polynomial(const std::vector<int>& deltas,
                                         const std::vector<int>& es);

/// The face-count polynomial 1 + f_0 x + f_1 x^2 + ... + f_{d-1} x^d.
IntPolynomial f_polynomial(const FVector& f);

} // namespace qforest
