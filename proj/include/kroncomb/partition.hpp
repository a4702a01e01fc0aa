#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

/* Integer partitions and their basic geometry: conjugation, complementation
 * inside a rectangle, corner statistics, containment, and enumeration of the
 * partitions of n that fit in an l x m box.
 *
 * A partition is stored in canonical form: weakly decreasing positive parts,
 * no trailing zeros. The empty partition is the unique partition of 0. All
 * values are immutable after construction and all operations are pure.
 */

namespace kroncomb {

class Partition {
public:
    Partition() = default;

    // Accepts a weakly decreasing sequence, possibly with trailing zeros
    // (which are trimmed); throws std::invalid_argument otherwise.
    explicit Partition(std::vector<std::int64_t> parts);

    // (cols^rows): the partition filling a rows x cols rectangle.
    static Partition rectangle(std::int64_t rows, std::int64_t cols);

    // Textual literal, e.g. "[5,5,3,2]"; "[]" is the empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    std::int64_t size() const { return size_; }           // |λ|, sum of parts
    std::size_t length() const { return parts_.size(); }  // number of parts
    bool empty() const { return parts_.empty(); }
    std::int64_t part(std::size_t i) const {               // 0 past the end
        return i < parts_.size() ? parts_[i] : 0;
    }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part vectors; sorting with std::greater gives the
    // decreasing lexicographic order used by all enumerations.
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
    std::int64_t size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

struct Rectangle {
    std::int64_t rows;  // l
    std::int64_t cols;  // m
    Rectangle(std::int64_t rows_, std::int64_t cols_);  // both must be >= 1
    std::int64_t cells() const { return rows * cols; }
};

// π'_i = #{j : π_j >= i}; transpose of the Young diagram.
Partition conjugate(const Partition& p);

// Complement within rect: π̄_i = m − π_{l+1−i}, canonical form.
// Throws std::invalid_argument if p does not fit in rect.
Partition complement(const Partition& p, const Rectangle& rect);

// v(p): number of distinct part sizes = number of removable corners.
std::int64_t corner_count(const Partition& p);

// inner_i <= outer_i for all i (missing parts read as 0).
bool contains(const Partition& outer, const Partition& inner);

// Componentwise minimum of the two diagrams.
Partition intersect(const Partition& a, const Partition& b);

// All partitions of n that fit in rect, in decreasing lexicographic order.
// n = 0 yields the one-element list [()].
std::vector<Partition> enumerate_in_rectangle(std::int64_t n, const Rectangle& rect);

// All partitions of n, decreasing lexicographic.
std::vector<Partition> partitions_of(std::int64_t n);

// Partitions of n whose diagram is contained in `bound`, decreasing lex.
std::vector<Partition> partitions_inside(std::int64_t n, const Partition& bound);

// Visitor form of the rectangle enumeration; used by the counting-heavy
// callers to avoid materializing large lists.
void for_each_in_rectangle(std::int64_t n, const Rectangle& rect,
                           const std::function<void(const Partition&)>& fn);

}  // namespace kroncomb
