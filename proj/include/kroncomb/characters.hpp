#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "kroncomb/partition.hpp"

/* Symmetric-group character values by the Murnaghan-Nakayama border-strip
 * recursion, and a Kronecker-coefficient oracle evaluated as the plain
 * character sum over conjugacy classes. The oracle shares no code with the
 * Littlewood-Richardson route, which is the point: the two must agree.
 */

namespace kroncomb {

// A partition read as the cycle lengths of a conjugacy class of S_n.
struct CycleType {
    Partition rho;
    explicit CycleType(Partition rho_) : rho(std::move(rho_)) {}
};

// (2m-1, 2m-3, ..., 3, 1), the class of S_{m^2} with one cycle of each odd
// length below 2m.
Partition staircase(std::int64_t m);

// z_rho = prod_i i^{m_i} m_i! over the multiplicities m_i of rho.
std::int64_t z_order(const Partition& rho);

// |class of rho| = n! / z_rho.
std::int64_t conjugacy_class_size(const Partition& rho);

class CharacterContext {
public:
    // chi^lambda[rho]: peel border strips of the largest remaining cycle
    // length in all possible ways, weight by (-1)^height, recurse. Memoized
    // on (remaining shape, remaining cycles); mutex-protected like LrContext.
    // Throws std::invalid_argument when |lambda| != |rho|.
    std::int64_t character(const Partition& lambda, const CycleType& rho);

    // g(lambda, mu, nu) = (1/n!) sum_rho |class rho| chi^lambda chi^mu chi^nu.
    // Throws std::invalid_argument on a size mismatch and std::logic_error if
    // the sum is not divisible by n! or the quotient is negative (either
    // would mean a character bug).
    std::int64_t kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

private:
    std::int64_t strip_recursion(const Partition& shape, const Partition& remaining);

    struct Key {
        Partition shape, remaining;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    mutable std::mutex mutex_;
    std::unordered_map<Key, std::int64_t, KeyHash> cache_;
};

}  // namespace kroncomb
