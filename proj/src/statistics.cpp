#include "kroncomb/statistics.hpp"

#include <algorithm>
#include <stdexcept>

#include "kroncomb/arith.hpp"

namespace kroncomb {

std::int64_t p_stat(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t r) {
    if (l < 1 || m < 1)
        throw std::invalid_argument("p_stat requires l, m >= 1");
    if (n < 0 || r < 0)
        return 0;
    std::int64_t total = 0;
    for_each_in_rectangle(n, Rectangle(l, m), [&](const Partition& p) {
        total = checked_add(total, binomial(corner_count(p), r));
    });
    return total;
}

namespace {

// rows i with alpha_i > alpha_{i+1}: removing the last cell of such a row
// keeps a partition
std::vector<std::size_t> corner_rows(const Partition& alpha) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < alpha.length(); ++i)
        if (alpha.part(i) > alpha.part(i + 1))
            rows.push_back(i);
    return rows;
}

}  // namespace

std::vector<CornerMarkedPair> corner_pairs(std::int64_t l, std::int64_t m, std::int64_t n,
                                           std::int64_t r) {
    if (l < 1 || m < 1)
        throw std::invalid_argument("corner_pairs requires l, m >= 1");
    std::vector<CornerMarkedPair> out;
    if (n < 0 || r < 0)
        return out;
    for_each_in_rectangle(n, Rectangle(l, m), [&](const Partition& alpha) {
        const std::vector<std::size_t> rows = corner_rows(alpha);
        if (static_cast<std::int64_t>(rows.size()) < r)
            return;
        // choose r corner rows in lexicographic order of the index sets
        std::vector<std::size_t> pick(static_cast<std::size_t>(r));
        auto choose = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == pick.size()) {
                std::vector<std::int64_t> parts(alpha.parts());
                for (std::size_t idx : pick)
                    --parts[rows[idx]];
                out.push_back(CornerMarkedPair{alpha, Partition(std::move(parts))});
                return;
            }
            for (std::size_t i = from; i + (pick.size() - depth) <= rows.size(); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        choose(choose, 0, 0);
    });
    return out;
}

std::vector<Partition> enumerate_distinct_odd(std::int64_t n,
                                              std::optional<std::int64_t> max_part) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    const std::int64_t cap = max_part.value_or(n);
    std::vector<std::int64_t> current;
    auto rec = [&](auto&& self, std::int64_t rem, std::int64_t largest) -> void {
        if (rem == 0) {
            out.push_back(Partition(std::vector<std::int64_t>(current)));
            return;
        }
        std::int64_t start = std::min(rem, largest);
        if (start % 2 == 0)
            --start;
        for (std::int64_t p = start; p >= 1; p -= 2) {
            current.push_back(p);
            self(self, rem - p, p - 2);
            current.pop_back();
        }
    };
    rec(rec, n, cap);
    return out;
}

std::int64_t q_count(std::int64_t n) {
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    // counting recursion mirroring the enumeration, without materializing
    std::int64_t total = 0;
    auto rec = [&](auto&& self, std::int64_t rem, std::int64_t largest) -> void {
        if (rem == 0) {
            total = checked_add(total, 1);
            return;
        }
        std::int64_t start = std::min(rem, largest);
        if (start % 2 == 0)
            --start;
        for (std::int64_t p = start; p >= 1; p -= 2)
            self(self, rem - p, p - 2);
    };
    std::int64_t cap = n % 2 == 0 ? n - 1 : n;
    rec(rec, n, cap);
    return total;
}

bool has_distinct_odd_parts(const Partition& p) {
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (p.part(i) % 2 == 0)
            return false;
        if (i > 0 && p.part(i) == p.part(i - 1))
            return false;
    }
    return true;
}

Partition phi_injection(const Partition& nu) {
    if (!has_distinct_odd_parts(nu))
        throw std::invalid_argument("phi_injection requires distinct odd parts");
    if (nu.size() < 3)
        throw std::invalid_argument("phi_injection requires size >= 3");
    std::vector<std::int64_t> parts(nu.parts());
    if (parts.back() > 1) {
        parts.push_back(1);
    } else {
        parts.pop_back();
        parts.front() += 2;
    }
    return Partition(std::move(parts));
}

std::int64_t d_count(std::int64_t n, std::int64_t l, std::int64_t m) {
    if (!(m > l && l >= 1))
        throw std::invalid_argument("d_count requires m > l >= 1");
    std::int64_t total = 0;
    for_each_in_rectangle(n, Rectangle(l, m), [&](const Partition& p) {
        if (static_cast<std::int64_t>(p.length()) != l)
            return;
        for (std::size_t i = 1; i < p.length(); ++i)
            if (p.part(i) == p.part(i - 1))
                return;
        total = checked_add(total, 1);
    });
    return total;
}

Partition staircase_bijection(const Partition& nu, std::int64_t l, std::int64_t m) {
    if (static_cast<std::int64_t>(nu.length()) != l)
        throw std::invalid_argument("staircase_bijection requires exactly l parts");
    if (l >= 1 && nu.part(0) > m)
        throw std::invalid_argument("staircase_bijection requires parts <= m");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(l));
    for (std::int64_t i = 0; i < l; ++i) {
        parts[static_cast<std::size_t>(i)] = nu.part(static_cast<std::size_t>(i)) - (l - i);
        if (parts[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("staircase_bijection requires l distinct parts");
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw std::invalid_argument("staircase_bijection requires l distinct parts");
    return Partition(std::move(parts));
}

Partition staircase_bijection_inverse(const Partition& alpha, std::int64_t l, std::int64_t m) {
    if (static_cast<std::int64_t>(alpha.length()) > l || alpha.part(0) > m - l)
        throw std::invalid_argument("inverse requires alpha inside l x (m-l)");
    std::vector<std::int64_t> parts(static_cast<std::size_t>(l));
    for (std::int64_t i = 0; i < l; ++i)
        parts[static_cast<std::size_t>(i)] = alpha.part(static_cast<std::size_t>(i)) + (l - i);
    return Partition(std::move(parts));
}

bool is_self_conjugate(const Partition& p) {
    return conjugate(p) == p;
}

std::int64_t w_count(std::int64_t m, std::int64_t n) {
    if (m < 1)
        throw std::invalid_argument("w_count requires m >= 1");
    if (n < 0)
        return 0;
    std::int64_t total = 0;
    for (std::int64_t j = n % 2; j <= n; j += 2) {
        if (j > m * m)
            break;
        for_each_in_rectangle(j, Rectangle(m, m), [&](const Partition& p) {
            if (is_self_conjugate(p))
                total = checked_add(total, 1);
        });
    }
    return total;
}

std::vector<std::int64_t> w_sequence(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("w_sequence requires m >= 1");
    const std::int64_t cells = m * m;
    std::vector<std::int64_t> self_conj(static_cast<std::size_t>(cells) + 1, 0);
    for (std::int64_t j = 0; j <= cells; ++j)
        for_each_in_rectangle(j, Rectangle(m, m), [&](const Partition& p) {
            if (is_self_conjugate(p))
                ++self_conj[static_cast<std::size_t>(j)];
        });
    std::vector<std::int64_t> out(static_cast<std::size_t>(cells) + 1, 0);
    for (std::int64_t n = 0; n <= cells; ++n) {
        out[static_cast<std::size_t>(n)] = self_conj[static_cast<std::size_t>(n)];
        if (n >= 2)
            out[static_cast<std::size_t>(n)] = checked_add(out[static_cast<std::size_t>(n)],
                                                           out[static_cast<std::size_t>(n - 2)]);
    }
    return out;
}

Partition self_conjugate_to_distinct_odd(const Partition& alpha) {
    if (!is_self_conjugate(alpha))
        throw std::invalid_argument("expected a self-conjugate partition");
    std::vector<std::int64_t> parts;
    for (std::size_t i = 0; i < alpha.length(); ++i) {
        const std::int64_t diag = static_cast<std::int64_t>(i) + 1;
        if (alpha.part(i) < diag)
            break;
        parts.push_back(2 * (alpha.part(i) - diag) + 1);
    }
    return Partition(std::move(parts));
}

Partition distinct_odd_to_self_conjugate(const Partition& nu) {
    if (!has_distinct_odd_parts(nu))
        throw std::invalid_argument("expected distinct odd parts");
    if (nu.empty())
        return {};
    // hook i (1-indexed) sits on diagonal cell (i,i) with arm = leg =
    // (nu_i - 1)/2, so it extends to row/column reach_i = i + arm_i
    const std::int64_t d = static_cast<std::int64_t>(nu.length());
    std::vector<std::int64_t> reach(static_cast<std::size_t>(d));
    for (std::int64_t i = 1; i <= d; ++i)
        reach[static_cast<std::size_t>(i - 1)] = i + (nu.part(static_cast<std::size_t>(i - 1)) - 1) / 2;
    std::vector<std::int64_t> parts(reach);  // rows 1..d end at their reach
    for (std::int64_t r = d + 1;; ++r) {
        // below the diagonal, row r holds one cell per hook reaching it
        std::int64_t c = 0;
        for (std::int64_t re : reach)
            if (re >= r) ++c;
        if (c == 0)
            break;
        parts.push_back(c);
    }
    return Partition(std::move(parts));
}

double gamma_stat(std::int64_t l, std::int64_t m, std::int64_t k, double z) {
    if (z < 1.0)
        throw std::invalid_argument("gamma_stat requires z >= 1");
    if (l < 1 || m < 1)
        throw std::invalid_argument("gamma_stat requires l, m >= 1");
    double total = 0.0;
    for_each_in_rectangle(k, Rectangle(l, m), [&](const Partition& p) {
        const std::int64_t v = corner_count(p);
        double term = 1.0;
        for (std::int64_t j = 1; j <= v; ++j)
            term *= (z + static_cast<double>(j) - 1.0) / static_cast<double>(j);
        total += term;
    });
    return total;
}

}  // namespace kroncomb
