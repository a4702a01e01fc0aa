#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kroncomb/partition.hpp"
#include "kroncomb/tableaux.hpp"

/* Sums of products of LR coefficients over split points, and Kronecker
 * coefficients for two-row and hook shapes obtained as their consecutive
 * differences. For lambda, mu of size n and 0 <= k <= n:
 *
 *   lr_pair_sum(k)          = sum_{alpha |- k, beta |- n-k} c^lambda_{alpha beta} c^mu_{alpha beta}
 *   conjugate_pair_sum(k)   = sum_{alpha |- k, beta |- n-k} c^lambda_{alpha beta} c^mu_{alpha' beta}
 *   conjugate_pair_cumsum(k)= sum_{i >= 0} conjugate_pair_sum(k - 2i)
 *
 * and g(lambda, mu, (n-k, k))    = lr_pair_sum(k) - lr_pair_sum(k-1),
 *     g(lambda, mu, (n-k, 1^k))  = cumsum(k) - cumsum(k-1),
 * both provably nonnegative; a negative difference throws std::logic_error.
 */

namespace kroncomb {

struct UnimodalSequence {
    std::vector<std::int64_t> values;
    std::string meta;  // human-readable origin, e.g. "lr-pair [3,1] [2,2]"
};

std::int64_t lr_pair_sum(LrContext& lr, const Partition& lambda, const Partition& mu,
                         std::int64_t k);

std::int64_t conjugate_pair_sum(LrContext& lr, const Partition& lambda, const Partition& mu,
                                std::int64_t k);

std::int64_t conjugate_pair_cumsum(LrContext& lr, const Partition& lambda, const Partition& mu,
                                   std::int64_t k);

// g(lambda, mu, (n-k, k)), 1 <= k <= n/2.
std::int64_t two_row_kronecker(LrContext& lr, const Partition& lambda, const Partition& mu,
                               std::int64_t k);

// g(lambda, mu, (n-k, 1^k)), 1 <= k <= n-1.
std::int64_t hook_kronecker(LrContext& lr, const Partition& lambda, const Partition& mu,
                            std::int64_t k);

// (lr_pair_sum(0), ..., lr_pair_sum(n)): symmetric and unimodal.
UnimodalSequence lr_pair_sequence(LrContext& lr, const Partition& lambda, const Partition& mu);

// (cumsum(0), ..., cumsum(n)): weakly increasing.
UnimodalSequence conjugate_pair_cumsum_sequence(LrContext& lr, const Partition& lambda,
                                                const Partition& mu);

}  // namespace kroncomb
