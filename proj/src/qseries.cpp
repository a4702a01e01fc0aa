#include "kroncomb/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "kroncomb/arith.hpp"

namespace kroncomb {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() {
    return IntPolynomial({1});
}

IntPolynomial IntPolynomial::monomial(std::int64_t coeff, std::int64_t exponent) {
    if (exponent < 0)
        throw std::invalid_argument("monomial exponent must be nonnegative");
    if (coeff == 0)
        return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(exponent) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& r) {
    std::vector<std::int64_t> out(std::max(p.coeffs().size(), r.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_add(p.coeff(static_cast<std::int64_t>(i)),
                             r.coeff(static_cast<std::int64_t>(i)));
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& r) {
    std::vector<std::int64_t> out(std::max(p.coeffs().size(), r.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_sub(p.coeff(static_cast<std::int64_t>(i)),
                             r.coeff(static_cast<std::int64_t>(i)));
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& r) {
    if (p.is_zero() || r.is_zero())
        return {};
    std::vector<std::int64_t> out(p.coeffs().size() + r.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0)
            continue;
        for (std::size_t j = 0; j < r.coeffs().size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(p.coeffs()[i], r.coeffs()[j]));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (num.is_zero())
        return {};
    if (num.degree() < den.degree())
        throw std::domain_error("inexact polynomial division");
    std::vector<std::int64_t> rem(num.coeffs());
    std::vector<std::int64_t> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, 0);
    const std::int64_t lead = den.coeffs().back();
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        std::int64_t top = rem[qi + static_cast<std::size_t>(den.degree())];
        if (top % lead != 0)
            throw std::domain_error("inexact polynomial division");
        std::int64_t c = top / lead;
        quot[qi] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.coeffs().size(); ++j)
                rem[qi + j] = checked_sub(rem[qi + j], checked_mul(c, den.coeffs()[j]));
    }
    for (std::int64_t x : rem)
        if (x != 0)
            throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

IntPolynomial q_binomial(std::int64_t rows, std::int64_t cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("q_binomial arguments must be nonnegative");
    // G(l, m) = G(l, m-1) + q^m G(l-1, m), G(0, m) = G(l, 0) = 1:
    // split on whether the largest part equals m.
    std::vector<IntPolynomial> prev(static_cast<std::size_t>(cols) + 1, IntPolynomial::one());
    for (std::int64_t l = 1; l <= rows; ++l) {
        std::vector<IntPolynomial> cur(static_cast<std::size_t>(cols) + 1);
        cur[0] = IntPolynomial::one();
        for (std::int64_t m = 1; m <= cols; ++m)
            cur[static_cast<std::size_t>(m)] =
                poly_add(cur[static_cast<std::size_t>(m - 1)],
                         poly_mul(IntPolynomial::monomial(1, m), prev[static_cast<std::size_t>(m)]));
        prev = std::move(cur);
    }
    return prev[static_cast<std::size_t>(cols)];
}

IntPolynomial almkvist_poly(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("almkvist_poly requires m >= 1");
    IntPolynomial p = IntPolynomial::one();
    for (std::int64_t i = 1; i <= m; ++i)
        p = poly_mul(p, poly_add(IntPolynomial::one(), IntPolynomial::monomial(1, 2 * i - 1)));
    return p;
}

IntPolynomial b_poly(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("b_poly requires m >= 1");
    const std::int64_t N = (m % 2 == 1) ? m * m - 1 : m * m;
    std::vector<std::int64_t> geo(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t e = 0; e <= N; e += 2)
        geo[static_cast<std::size_t>(e)] = 1;
    return poly_mul(IntPolynomial(std::move(geo)), almkvist_poly(m));
}

IntPolynomial hughes_poly(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("hughes_poly requires m >= 1");
    IntPolynomial p = IntPolynomial::one();
    for (std::int64_t i = 1; i <= m; ++i)
        p = poly_mul(p, poly_add(IntPolynomial::one(), IntPolynomial::monomial(1, i)));
    return p;
}

IntPolynomial principal_specialization(const Partition& shape, std::int64_t m) {
    if (m < 0)
        throw std::invalid_argument("principal_specialization requires m >= 0");
    if (shape.empty())
        return IntPolynomial::one();
    if (static_cast<std::int64_t>(shape.length()) > m + 1)
        return {};  // more rows than variables
    const Partition conj = conjugate(shape);
    // q^{n(shape)} * prod_cells (1 - q^{m+1+content}) / (1 - q^{hook}),
    // content = col - row, hook = arm + leg + 1 (0-indexed rows/cols)
    IntPolynomial num = IntPolynomial::one();
    IntPolynomial den = IntPolynomial::one();
    std::int64_t weight_shift = 0;
    for (std::size_t r = 0; r < shape.length(); ++r) {
        weight_shift += static_cast<std::int64_t>(r) * shape.part(r);
        for (std::int64_t c = 0; c < shape.part(r); ++c) {
            const std::int64_t content = c - static_cast<std::int64_t>(r);
            const std::int64_t hook =
                (shape.part(r) - c) + (conj.part(static_cast<std::size_t>(c)) - static_cast<std::int64_t>(r)) - 1;
            num = poly_mul(num, poly_sub(IntPolynomial::one(),
                                         IntPolynomial::monomial(1, m + 1 + content)));
            den = poly_mul(den, poly_sub(IntPolynomial::one(), IntPolynomial::monomial(1, hook)));
        }
    }
    IntPolynomial q;
    try {
        q = poly_div_exact(num, den);
    } catch (const std::domain_error&) {
        // the hook-content quotient is a polynomial; a remainder is a bug
        throw std::logic_error("inexact hook-content division");
    }
    return poly_mul(IntPolynomial::monomial(1, weight_shift), q);
}

namespace {
void require_nonempty(std::span<const std::int64_t> s) {
    if (s.empty())
        throw std::invalid_argument("predicate applied to an empty window");
}
}  // namespace

bool is_symmetric(std::span<const std::int64_t> s) {
    require_nonempty(s);
    for (std::size_t i = 0; i < s.size() / 2; ++i)
        if (s[i] != s[s.size() - 1 - i]) return false;
    return true;
}

bool is_symmetric(std::span<const std::int64_t> s, std::size_t lo, std::size_t hi) {
    if (lo > hi || hi >= s.size())
        throw std::invalid_argument("bad symmetry window");
    return is_symmetric(s.subspan(lo, hi - lo + 1));
}

bool is_unimodal(std::span<const std::int64_t> s) {
    require_nonempty(s);
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
    while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
    return i == s.size() - 1;
}

bool is_strictly_unimodal(std::span<const std::int64_t> s) {
    require_nonempty(s);
    const std::size_t n = s.size();
    if (n == 1)
        return true;
    if (n % 2 == 0) {
        const std::size_t k = n / 2;  // plateau at positions k-1, k
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (!(s[i] < s[i + 1])) return false;
        if (s[k - 1] != s[k])
            return false;
        for (std::size_t i = k; i + 1 < n; ++i)
            if (!(s[i] > s[i + 1])) return false;
        return true;
    }
    const std::size_t k = n / 2;  // unique maximum at position k
    for (std::size_t i = 0; i < k; ++i)
        if (!(s[i] < s[i + 1])) return false;
    for (std::size_t i = k; i + 1 < n; ++i)
        if (!(s[i] > s[i + 1])) return false;
    return true;
}

bool is_weakly_increasing(std::span<const std::int64_t> s) {
    require_nonempty(s);
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return true;
}

bool is_log_concave(std::span<const std::int64_t> s) {
    require_nonempty(s);
    for (std::size_t i = 1; i + 1 < s.size(); ++i)
        if (checked_mul(s[i], s[i]) < checked_mul(s[i - 1], s[i + 1])) return false;
    return true;
}

}  // namespace kroncomb
