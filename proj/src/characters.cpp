#include "kroncomb/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kroncomb/arith.hpp"

namespace kroncomb {

Partition staircase(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("staircase requires m >= 1");
    std::vector<std::int64_t> parts;
    for (std::int64_t p = 2 * m - 1; p >= 1; p -= 2)
        parts.push_back(p);
    return Partition(std::move(parts));
}

std::int64_t z_order(const Partition& rho) {
    std::int64_t z = 1;
    std::size_t i = 0;
    while (i < rho.length()) {
        std::size_t j = i;
        while (j < rho.length() && rho.part(j) == rho.part(i)) ++j;
        const std::int64_t mult = static_cast<std::int64_t>(j - i);
        for (std::int64_t e = 0; e < mult; ++e)
            z = checked_mul(z, rho.part(i));
        z = checked_mul(z, factorial(mult));
        i = j;
    }
    return z;
}

std::int64_t conjugacy_class_size(const Partition& rho) {
    return factorial(rho.size()) / z_order(rho);  // always exact
}

std::size_t CharacterContext::KeyHash::operator()(const Key& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.shape);
    seed ^= h(k.remaining) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
}

std::int64_t CharacterContext::character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.rho.size())
        throw std::invalid_argument("character requires |lambda| = |rho|");
    return strip_recursion(lambda, rho.rho);
}

std::int64_t CharacterContext::strip_recursion(const Partition& shape, const Partition& remaining) {
    if (remaining.empty())
        return shape.empty() ? 1 : 0;
    Key key{shape, remaining};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }

    // Peel a border strip of the largest cycle length. In beta-number form
    // (beta_i = shape_i + L-1-i, all distinct) removing a strip of length t
    // replaces some beta_i by beta_i - t, provided that value is fresh; the
    // strip height is the number of betas jumped over.
    const std::int64_t t = remaining.part(0);
    Partition rest(std::vector<std::int64_t>(remaining.parts().begin() + 1,
                                             remaining.parts().end()));
    const std::size_t L = shape.length();
    std::vector<std::int64_t> beta(L);
    for (std::size_t i = 0; i < L; ++i)
        beta[i] = shape.part(i) + static_cast<std::int64_t>(L - 1 - i);

    std::int64_t total = 0;
    for (std::size_t i = 0; i < L; ++i) {
        const std::int64_t nb = beta[i] - t;
        if (nb < 0)
            continue;
        bool occupied = false;
        std::int64_t height = 0;
        for (std::size_t j = 0; j < L; ++j) {
            if (beta[j] == nb)
                occupied = true;
            if (nb < beta[j] && beta[j] < beta[i])
                ++height;
        }
        if (occupied)
            continue;
        std::vector<std::int64_t> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        std::vector<std::int64_t> nparts(L);
        for (std::size_t j = 0; j < L; ++j)
            nparts[j] = nbeta[j] - static_cast<std::int64_t>(L - 1 - j);
        const std::int64_t sub = strip_recursion(Partition(std::move(nparts)), rest);
        total = (height % 2 == 0) ? checked_add(total, sub) : checked_sub(total, sub);
    }

    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(std::move(key), total).first->second;
}

std::int64_t CharacterContext::kronecker(const Partition& lambda, const Partition& mu,
                                         const Partition& nu) {
    const std::int64_t n = lambda.size();
    if (mu.size() != n || nu.size() != n)
        throw std::invalid_argument("kronecker requires |lambda| = |mu| = |nu|");
    const std::int64_t n_fact = factorial(n);
    std::int64_t total = 0;
    for (const Partition& rho : partitions_of(n)) {
        const CycleType cls(rho);
        std::int64_t term = conjugacy_class_size(rho);
        term = checked_mul(term, character(lambda, cls));
        term = checked_mul(term, character(mu, cls));
        term = checked_mul(term, character(nu, cls));
        total = checked_add(total, term);
    }
    if (total % n_fact != 0)
        throw std::logic_error("kronecker character sum not divisible by n! (character bug)");
    const std::int64_t g = total / n_fact;
    if (g < 0)
        throw std::logic_error("negative kronecker coefficient (character bug)");
    return g;
}

}  // namespace kroncomb
