#pragma once

#include <cstdint>
#include <stdexcept>

/* Checked 64-bit arithmetic. Every coefficient, count and character value in
 * this library goes through these helpers, so a silent wraparound becomes a
 * thrown std::overflow_error instead of corrupted output. Desk-scale inputs
 * stay far below the limits; the checks are tripwires.
 */

namespace kroncomb {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

inline std::int64_t factorial(std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("factorial of negative number");
    std::int64_t r = 1;
    for (std::int64_t i = 2; i <= n; ++i)
        r = checked_mul(r, i);
    return r;
}

// Exact binomial coefficient; 0 when k < 0 or k > n.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is binomial(n-k+i, i) after this step
    }
    return r;
}

}  // namespace kroncomb
