#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kroncomb/partition.hpp"

/* Exact integer polynomials in q, the generating polynomials of the library
 * (Gaussian binomials, distinct-odd-part products, principal specializations
 * of Schur polynomials), and the sequence predicates: symmetry, unimodality,
 * strict unimodality, log-concavity.
 */

namespace kroncomb {

// Dense integer polynomial; coeffs()[e] is the coefficient of q^e. Canonical
// form trims trailing zeros; the zero polynomial has an empty vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);
    static IntPolynomial one();
    static IntPolynomial monomial(std::int64_t coeff, std::int64_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const {  // -1 for the zero polynomial
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    std::int64_t coeff(std::int64_t e) const {
        return (e >= 0 && e < static_cast<std::int64_t>(coeffs_.size()))
                   ? coeffs_[static_cast<std::size_t>(e)]
                   : 0;
    }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& r);

// Exact division: throws std::domain_error if den is zero or the remainder
// is nonzero.
IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den);

// Gaussian binomial [rows+cols choose cols]_q: the degree rows*cols polynomial
// whose coefficient of q^n counts partitions of n inside a rows x cols box.
// Computed by the Pascal-type recurrence, staying in integer arithmetic.
IntPolynomial q_binomial(std::int64_t rows, std::int64_t cols);

// Product (1+q)(1+q^3)...(1+q^{2m-1}); coefficient of q^n counts partitions
// of n into distinct odd parts <= 2m-1.
IntPolynomial almkvist_poly(std::int64_t m);

// (1 + q^2 + q^4 + ... + q^N) * almkvist_poly(m), N = m^2-1 for odd m and
// N = m^2 for even m.
IntPolynomial b_poly(std::int64_t m);

// Product (1+q)(1+q^2)...(1+q^m); distinct parts <= m.
IntPolynomial hughes_poly(std::int64_t m);

// Schur polynomial s_shape(1, q, ..., q^m), by the hook-content product with
// exact polynomial division. Zero when shape has more than m+1 parts.
IntPolynomial principal_specialization(const Partition& shape, std::int64_t m);

// Sequence predicates. All throw std::invalid_argument on an empty window.
bool is_symmetric(std::span<const std::int64_t> s);
bool is_symmetric(std::span<const std::int64_t> s, std::size_t lo, std::size_t hi);
bool is_unimodal(std::span<const std::int64_t> s);
// Strict unimodality: odd length requires a unique strict maximum in the
// middle; even length requires exactly one central plateau of width 2.
bool is_strictly_unimodal(std::span<const std::int64_t> s);
bool is_weakly_increasing(std::span<const std::int64_t> s);
// a_i^2 >= a_{i-1} a_{i+1} for all interior i.
bool is_log_concave(std::span<const std::int64_t> s);

}  // namespace kroncomb
