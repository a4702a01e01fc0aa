#include "kroncomb/kronecker.hpp"

#include <stdexcept>

#include "kroncomb/arith.hpp"

namespace kroncomb {

namespace {

void require_sizes(const Partition& lambda, const Partition& mu, std::int64_t k) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("lambda and mu must have equal size");
    if (k < 0 || k > lambda.size())
        throw std::invalid_argument("split point k out of range");
}

}  // namespace

std::int64_t lr_pair_sum(LrContext& lr, const Partition& lambda, const Partition& mu,
                         std::int64_t k) {
    require_sizes(lambda, mu, k);
    const std::int64_t n = lambda.size();
    // both coefficients vanish unless alpha and beta fit in lambda and mu
    const Partition bound = intersect(lambda, mu);
    std::int64_t total = 0;
    for (const Partition& alpha : partitions_inside(k, bound)) {
        for (const Partition& beta : partitions_inside(n - k, bound)) {
            const std::int64_t left = lr.lr_coefficient(lambda, alpha, beta);
            if (left == 0)
                continue;
            total = checked_add(total, checked_mul(left, lr.lr_coefficient(mu, alpha, beta)));
        }
    }
    return total;
}

std::int64_t conjugate_pair_sum(LrContext& lr, const Partition& lambda, const Partition& mu,
                                std::int64_t k) {
    require_sizes(lambda, mu, k);
    const std::int64_t n = lambda.size();
    // c^lambda_{alpha beta} needs alpha inside lambda, c^mu_{alpha' beta}
    // needs alpha' inside mu, i.e. alpha inside mu'
    const Partition alpha_bound = intersect(lambda, conjugate(mu));
    const Partition beta_bound = intersect(lambda, mu);
    std::int64_t total = 0;
    for (const Partition& alpha : partitions_inside(k, alpha_bound)) {
        const Partition alpha_conj = conjugate(alpha);
        for (const Partition& beta : partitions_inside(n - k, beta_bound)) {
            const std::int64_t left = lr.lr_coefficient(lambda, alpha, beta);
            if (left == 0)
                continue;
            total = checked_add(total, checked_mul(left, lr.lr_coefficient(mu, alpha_conj, beta)));
        }
    }
    return total;
}

std::int64_t conjugate_pair_cumsum(LrContext& lr, const Partition& lambda, const Partition& mu,
                                   std::int64_t k) {
    require_sizes(lambda, mu, k);
    std::int64_t total = 0;
    for (std::int64_t j = k; j >= 0; j -= 2)
        total = checked_add(total, conjugate_pair_sum(lr, lambda, mu, j));
    return total;
}

std::int64_t two_row_kronecker(LrContext& lr, const Partition& lambda, const Partition& mu,
                               std::int64_t k) {
    const std::int64_t n = lambda.size();
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("two-row shape requires 1 <= k <= n/2");
    const std::int64_t diff =
        checked_sub(lr_pair_sum(lr, lambda, mu, k), lr_pair_sum(lr, lambda, mu, k - 1));
    if (diff < 0)
        throw std::logic_error("negative two-row difference (LR bug)");
    return diff;
}

std::int64_t hook_kronecker(LrContext& lr, const Partition& lambda, const Partition& mu,
                            std::int64_t k) {
    const std::int64_t n = lambda.size();
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("hook shape requires 1 <= k <= n-1");
    const std::int64_t diff = checked_sub(conjugate_pair_cumsum(lr, lambda, mu, k),
                                          conjugate_pair_cumsum(lr, lambda, mu, k - 1));
    if (diff < 0)
        throw std::logic_error("negative hook difference (LR bug)");
    return diff;
}

UnimodalSequence lr_pair_sequence(LrContext& lr, const Partition& lambda, const Partition& mu) {
    require_sizes(lambda, mu, 0);
    UnimodalSequence out;
    out.meta = "lr-pair " + lambda.to_string() + " " + mu.to_string();
    for (std::int64_t k = 0; k <= lambda.size(); ++k)
        out.values.push_back(lr_pair_sum(lr, lambda, mu, k));
    return out;
}

UnimodalSequence conjugate_pair_cumsum_sequence(LrContext& lr, const Partition& lambda,
                                                const Partition& mu) {
    require_sizes(lambda, mu, 0);
    UnimodalSequence out;
    out.meta = "conjugate-pair cumulative " + lambda.to_string() + " " + mu.to_string();
    std::vector<std::int64_t> b;
    for (std::int64_t k = 0; k <= lambda.size(); ++k)
        b.push_back(conjugate_pair_sum(lr, lambda, mu, k));
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::int64_t total = 0;
        for (std::size_t j = k % 2; j <= k; j += 2)
            total = checked_add(total, b[j]);
        out.values.push_back(total);
    }
    return out;
}

}  // namespace kroncomb
