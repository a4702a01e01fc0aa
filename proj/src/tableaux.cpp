#include "kroncomb/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

#include "kroncomb/arith.hpp"

namespace kroncomb {

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(outer, inner))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

std::vector<int> SkewTableau::reading_word() const {
    std::vector<int> word;
    for (const auto& row : rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it)
            word.push_back(*it);
    return word;
}

std::vector<std::int64_t> SkewTableau::content() const {
    std::vector<std::int64_t> counts;
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1)
                throw std::logic_error("tableau entry below 1");
            if (static_cast<std::size_t>(v) > counts.size())
                counts.resize(static_cast<std::size_t>(v), 0);
            ++counts[static_cast<std::size_t>(v) - 1];
        }
    return counts;
}

std::vector<std::vector<std::int64_t>> SkewTableau::serialize() const {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t r = 0; r < shape.outer.length(); ++r) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(shape.outer.part(r)), 0);
        for (std::size_t j = 0; j < rows[r].size(); ++j)
            row[static_cast<std::size_t>(shape.inner.part(r)) + j] = rows[r][j];
        out.push_back(std::move(row));
    }
    return out;
}

bool is_lattice_word(std::span<const int> word) {
    std::vector<std::int64_t> count;
    for (int v : word) {
        if (v < 1)
            return false;
        if (static_cast<std::size_t>(v) > count.size())
            count.resize(static_cast<std::size_t>(v), 0);
        ++count[static_cast<std::size_t>(v) - 1];
        if (v > 1 && count[static_cast<std::size_t>(v) - 1] > count[static_cast<std::size_t>(v) - 2])
            return false;
    }
    return true;
}

namespace {

/* Backtracking enumeration over the cells in reading order (top row to
 * bottom row, right to left within a row). At each cell the candidate entry
 * v must satisfy:
 *   - v >= 1 + entry above (column strict), v <= entry to the right (row weak),
 *   - v <= r+1 for 0-indexed row r (lattice words force the first r+1 rows
 *     to use only entries 1..r+1),
 *   - v <= t - (cells below in the same column): the column must still grow
 *     strictly within entries 1..t,
 *   - count[v] < type_v, and count[v] < count[v-1] before placing (running
 *     lattice prefix condition, exact because cells are placed in reading
 *     order).
 * Completed fillings have count == type automatically.
 */
class Enumerator {
public:
    Enumerator(const SkewShape& shape, const Partition& type)
        : shape_(shape), type_(type) {
        const Partition& outer = shape.outer;
        const Partition& inner = shape.inner;
        t_ = static_cast<int>(type.length());
        grid_.resize(outer.length());
        for (std::size_t r = 0; r < outer.length(); ++r)
            grid_[r].assign(static_cast<std::size_t>(outer.part(r) - inner.part(r)), 0);
        const Partition outer_conj = conjugate(outer);
        for (std::size_t r = 0; r < outer.length(); ++r)
            for (std::int64_t c = outer.part(r) - 1; c >= inner.part(r); --c) {
                Cell cell;
                cell.row = r;
                cell.col = c;
                cell.has_above = r > 0 && c >= inner.part(r - 1) && c < outer.part(r - 1);
                // rows occupying column c form a contiguous block ending at
                // outer'_c - 1
                cell.below = outer_conj.part(static_cast<std::size_t>(c)) - 1 -
                             static_cast<std::int64_t>(r);
                cells_.push_back(cell);
            }
        count_.assign(static_cast<std::size_t>(t_) + 1, 0);
    }

    template <typename Visitor>
    void run(Visitor&& visit) {
        fill(0, visit);
    }

private:
    struct Cell {
        std::size_t row;
        std::int64_t col;
        bool has_above;
        std::int64_t below;
    };

    int entry_at(std::size_t r, std::int64_t c) const {
        return grid_[r][static_cast<std::size_t>(c - shape_.inner.part(r))];
    }

    template <typename Visitor>
    void fill(std::size_t i, Visitor& visit) {
        if (i == cells_.size()) {
            visit(grid_);
            return;
        }
        const Cell& cell = cells_[i];
        int lo = 1;
        if (cell.has_above)
            lo = std::max(lo, entry_at(cell.row - 1, cell.col) + 1);
        std::int64_t hi = std::min<std::int64_t>(static_cast<std::int64_t>(cell.row) + 1,
                                                 t_ - cell.below);
        if (cell.col + 1 < shape_.outer.part(cell.row))
            hi = std::min<std::int64_t>(hi, entry_at(cell.row, cell.col + 1));
        for (int v = lo; v <= hi; ++v) {
            if (count_[static_cast<std::size_t>(v)] >= type_.part(static_cast<std::size_t>(v) - 1))
                continue;
            if (v > 1 && count_[static_cast<std::size_t>(v)] >= count_[static_cast<std::size_t>(v) - 1])
                continue;
            grid_[cell.row][static_cast<std::size_t>(cell.col - shape_.inner.part(cell.row))] = v;
            ++count_[static_cast<std::size_t>(v)];
            fill(i + 1, visit);
            --count_[static_cast<std::size_t>(v)];
        }
    }

    const SkewShape& shape_;
    const Partition& type_;
    int t_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<std::int64_t> count_;
};

}  // namespace

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& type) {
    if (type.size() != shape.cell_count())
        throw std::invalid_argument("type size must equal the number of skew cells");
    std::vector<SkewTableau> out;
    Enumerator e(shape, type);
    e.run([&](const std::vector<std::vector<int>>& grid) {
        out.push_back(SkewTableau{shape, grid});
    });
    return out;
}

std::int64_t count_lr_tableaux(const SkewShape& shape, const Partition& type) {
    if (type.size() != shape.cell_count())
        throw std::invalid_argument("type size must equal the number of skew cells");
    std::int64_t n = 0;
    Enumerator e(shape, type);
    e.run([&](const std::vector<std::vector<int>>&) { n = checked_add(n, 1); });
    return n;
}

std::size_t LrContext::KeyHash::operator()(const Key& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.lambda);
    seed ^= h(k.alpha) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    seed ^= h(k.beta) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
}

std::int64_t LrContext::lr_coefficient(const Partition& lambda, const Partition& alpha,
                                       const Partition& beta) {
    if (checked_add(alpha.size(), beta.size()) != lambda.size())
        return 0;
    if (!contains(lambda, alpha) || !contains(lambda, beta))
        return 0;
    Key key{lambda, alpha, beta};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }
    const std::int64_t value = count_lr_tableaux(SkewShape(lambda, alpha), beta);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(std::move(key), value).first->second;
}

std::size_t LrContext::cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
}

}  // namespace kroncomb
