#include "kroncomb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "kroncomb/arith.hpp"

namespace kroncomb {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ = checked_add(size_, parts_[i]);
    }
}

Partition Partition::rectangle(std::int64_t rows, std::int64_t cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("rectangle dimensions must be nonnegative");
    if (rows == 0 || cols == 0)
        return Partition{};
    return Partition(std::vector<std::int64_t>(static_cast<std::size_t>(rows), cols));
}

Partition Partition::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("malformed partition literal: '" + std::string(text) + "'");
    };
    std::size_t i = 0, j = text.size();
    while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    if (j - i < 2 || text[i] != '[' || text[j - 1] != ']')
        fail();
    std::string_view body = text.substr(i + 1, j - i - 2);
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        if (pos == body.size()) {
            if (!parts.empty()) fail();  // trailing comma
            break;
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
        if (ec != std::errc{}) fail();
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - body.data());
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
        if (pos < body.size()) {
            if (body[pos] != ',') fail();
            ++pos;
            if (pos == body.size()) fail();  // trailing comma
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    // FNV-1a over the parts
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : p.parts()) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Rectangle::Rectangle(std::int64_t rows_, std::int64_t cols_) : rows(rows_), cols(cols_) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("rectangle dimensions must be >= 1");
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(p.part(0)));
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t count = 0;
        for (std::int64_t x : p.parts())
            if (x >= static_cast<std::int64_t>(i) + 1) ++count;
        out[i] = count;
    }
    return Partition(std::move(out));
}

Partition complement(const Partition& p, const Rectangle& rect) {
    if (static_cast<std::int64_t>(p.length()) > rect.rows ||
        (p.length() > 0 && p.part(0) > rect.cols))
        throw std::invalid_argument("partition exceeds rectangle");
    std::vector<std::int64_t> out(static_cast<std::size_t>(rect.rows));
    for (std::int64_t i = 0; i < rect.rows; ++i)
        out[static_cast<std::size_t>(i)] = rect.cols - p.part(static_cast<std::size_t>(rect.rows - 1 - i));
    return Partition(std::move(out));
}

std::int64_t corner_count(const Partition& p) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (i + 1 == p.length() || p.part(i) != p.part(i + 1)) ++v;
    return v;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

Partition intersect(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < std::min(a.length(), b.length()); ++i)
        out.push_back(std::min(a.part(i), b.part(i)));
    return Partition(std::move(out));
}

namespace {

// Core generator: partitions of n with part i (0-based) capped by caps[i],
// parts weakly decreasing, emitted in decreasing lexicographic order.
void generate(std::int64_t n, const std::vector<std::int64_t>& caps,
              const std::function<void(const Partition&)>& fn) {
    // suffix_room[i] = sum of caps[i..] — upper bound on what rows i.. can hold
    std::vector<std::int64_t> suffix_room(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;)
        suffix_room[i] = suffix_room[i + 1] + caps[i];
    if (n > suffix_room[0])
        return;

    std::vector<std::int64_t> current;
    auto rec = [&](auto&& self, std::int64_t rem, std::size_t row, std::int64_t max_part) -> void {
        if (rem == 0) {
            fn(Partition(std::vector<std::int64_t>(current)));
            return;
        }
        if (row == caps.size())
            return;
        std::int64_t hi = std::min({rem, max_part, caps[row]});
        for (std::int64_t p = hi; p >= 1; --p) {
            // what remains must fit below; both bounds only get worse as p
            // shrinks, so stop at the first violation
            if (rem - p > suffix_room[row + 1])
                break;
            if (rem - p > p * static_cast<std::int64_t>(caps.size() - row - 1))
                break;
            current.push_back(p);
            self(self, rem - p, row + 1, p);
            current.pop_back();
        }
    };
    rec(rec, n, 0, n);
}

}  // namespace

void for_each_in_rectangle(std::int64_t n, const Rectangle& rect,
                           const std::function<void(const Partition&)>& fn) {
    if (n < 0)
        return;
    std::vector<std::int64_t> caps(static_cast<std::size_t>(rect.rows), rect.cols);
    generate(n, caps, fn);
}

std::vector<Partition> enumerate_in_rectangle(std::int64_t n, const Rectangle& rect) {
    std::vector<Partition> out;
    for_each_in_rectangle(n, rect, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_of(std::int64_t n) {
    if (n < 0)
        return {};
    if (n == 0)
        return {Partition{}};
    return enumerate_in_rectangle(n, Rectangle(n, n));
}

std::vector<Partition> partitions_inside(std::int64_t n, const Partition& bound) {
    if (n < 0)
        return {};
    if (n == 0)
        return {Partition{}};
    std::vector<std::int64_t> caps(bound.parts().begin(), bound.parts().end());
    std::vector<Partition> out;
    generate(n, caps, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace kroncomb
