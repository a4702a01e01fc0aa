#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "kroncomb/partition.hpp"

/* Littlewood-Richardson coefficients by exhaustive enumeration of LR skew
 * tableaux: semistandard fillings of a skew shape whose reading word (top row
 * to bottom row, each row right to left) is a lattice permutation.
 */

namespace kroncomb {

struct SkewShape {
    Partition outer;
    Partition inner;
    // throws std::invalid_argument unless inner is contained in outer
    SkewShape(Partition outer_, Partition inner_);
    std::int64_t cell_count() const { return outer.size() - inner.size(); }
};

// A filling of a skew shape. rows[r] lists the entries of row r left to
// right, covering columns inner_r .. outer_r - 1.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    std::vector<int> reading_word() const;
    // entry counts: content()[i] = number of entries equal to i+1
    std::vector<std::int64_t> content() const;
    // debugging form: one full row per outer row, 0 marking inner cells
    std::vector<std::vector<std::int64_t>> serialize() const;
};

// Every prefix has at least as many i's as (i+1)'s, for every i >= 1.
bool is_lattice_word(std::span<const int> word);

// All LR tableaux of the given shape and type, filled in reading order with
// the smallest admissible entry first (hence in a fixed deterministic order).
// Throws std::invalid_argument when |type| differs from the cell count.
std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& type);

// Same enumeration, counting only.
std::int64_t count_lr_tableaux(const SkewShape& shape, const Partition& type);

// Memoized Littlewood-Richardson coefficients c^lambda_{alpha beta}.
// Out-of-range inputs (size mismatch, containment failure) return 0. The
// cache is owned by this context; lookups and inserts are mutex-protected,
// so concurrent callers see correct values (a value may occasionally be
// computed twice).
class LrContext {
public:
    std::int64_t lr_coefficient(const Partition& lambda, const Partition& alpha,
                                const Partition& beta);
    std::size_t cache_size() const;

private:
    struct Key {
        Partition lambda, alpha, beta;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    mutable std::mutex mutex_;
    std::unordered_map<Key, std::int64_t, KeyHash> cache_;
};

}  // namespace kroncomb
