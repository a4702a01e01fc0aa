#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kroncomb/partition.hpp"

/* Partition statistics and explicit bijections: corner-binomial counts,
 * corner-marked pairs and their complementation, partitions into distinct
 * odd parts with the size-raising injection phi, partitions into distinct
 * parts and the staircase shift, self-conjugate cumulative counts, the
 * diagonal-hook folding, and the Gamma-ratio statistic.
 */

namespace kroncomb {

// (alpha, pi) with alpha/pi a set of r removable corners of alpha.
struct CornerMarkedPair {
    Partition alpha;
    Partition pi;
    bool operator==(const CornerMarkedPair&) const = default;
    auto operator<=>(const CornerMarkedPair&) const = default;
};

// sum over partitions of n inside an l x m box of binomial(v(alpha), r).
std::int64_t p_stat(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t r);

// All corner-marked pairs with alpha of size n inside l x m; the count
// equals p_stat(l, m, n, r).
std::vector<CornerMarkedPair> corner_pairs(std::int64_t l, std::int64_t m, std::int64_t n,
                                           std::int64_t r);

// Number of partitions of n into distinct odd parts.
std::int64_t q_count(std::int64_t n);

// The partitions themselves, decreasing lexicographic, optionally with all
// parts <= max_part.
std::vector<Partition> enumerate_distinct_odd(std::int64_t n,
                                              std::optional<std::int64_t> max_part = std::nullopt);

// Size-raising injection on partitions into distinct odd parts, defined for
// size >= 3: append a part 1 when the last part exceeds 1, otherwise add 2
// to the first part and drop the trailing 1.
Partition phi_injection(const Partition& nu);

// Number of partitions of n into exactly l distinct parts, all <= m.
// Requires m > l >= 1.
std::int64_t d_count(std::int64_t n, std::int64_t l, std::int64_t m);

// Subtract the staircase (l, l-1, ..., 1): nu with l distinct parts <= m
// maps to a partition inside l x (m-l). Round-trips with the inverse.
Partition staircase_bijection(const Partition& nu, std::int64_t l, std::int64_t m);
Partition staircase_bijection_inverse(const Partition& alpha, std::int64_t l, std::int64_t m);

// Number of self-conjugate partitions of size n - 2i (any i >= 0) inside an
// m x m square. Counted by direct enumeration and filtering.
std::int64_t w_count(std::int64_t m, std::int64_t n);

// (w_count(m, 0), ..., w_count(m, m^2)) from a single box sweep.
std::vector<std::int64_t> w_sequence(std::int64_t m);

bool is_self_conjugate(const Partition& p);
bool has_distinct_odd_parts(const Partition& p);

// Diagonal-hook folding: self-conjugate alpha maps to distinct odd parts
// 2(alpha_i - i) + 1 over the diagonal cells; largest part <= 2m-1 iff
// alpha fits in m x m.
Partition self_conjugate_to_distinct_odd(const Partition& alpha);
Partition distinct_odd_to_self_conjugate(const Partition& nu);

// sum over partitions alpha of k inside l x m of
// Gamma(v(alpha)+z) / (Gamma(v(alpha)+1) Gamma(z)), evaluated through the
// rising-factorial product prod_{j=1}^{v} (z+j-1)/j, so no Gamma function is
// ever called. Requires z >= 1.
double gamma_stat(std::int64_t l, std::int64_t m, std::int64_t k, double z);

}  // namespace kroncomb
