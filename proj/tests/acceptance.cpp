/* Acceptance suite: one line per criterion, [PASS]/[FAIL], with elapsed time
 * checked against each criterion's budget. Exit code 0 only when every
 * criterion passes.
 */

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "kroncomb/arith.hpp"
#include "kroncomb/characters.hpp"
#include "kroncomb/kronecker.hpp"
#include "kroncomb/partition.hpp"
#include "kroncomb/qseries.hpp"
#include "kroncomb/statistics.hpp"
#include "kroncomb/tableaux.hpp"

using namespace kroncomb;
using Json = nlohmann::ordered_json;

namespace {

std::string fail_detail;

void note(const std::string& detail) {
    if (fail_detail.empty())
        fail_detail = detail;
}

Json run_cli_json(const std::string& args) {
#ifdef KRONCOMB_CLI_PATH
    const std::string command = std::string(KRONCOMB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return Json();
    std::string out;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        out.append(buffer.data(), got);
    if (pclose(pipe) != 0)
        return Json();
    return Json::parse(out, nullptr, false);
#else
    (void)args;
    return Json();
#endif
}

// 1. the 3x3 fixtures through the real command-line interface
bool criterion_fixtures() {
    const Json qb = run_cli_json("qbinom 3 3");
    if (qb.is_discarded() || qb.is_null() ||
        qb["result"]["coefficients"] != Json::array({1, 1, 2, 3, 3, 3, 3, 2, 1, 1})) {
        note("qbinom 3 3 output mismatch");
        return false;
    }
    const Json ps = run_cli_json("pstat 3 3 1");
    if (ps.is_discarded() || ps.is_null() ||
        ps["result"]["coefficients"] != Json::array({0, 1, 2, 4, 5, 6, 5, 4, 2, 1})) {
        note("pstat 3 3 1 output mismatch");
        return false;
    }
    return true;
}

// 2. all pairs of partitions of n <= 8: pair sums symmetric + unimodal,
// cumulative conjugate-twisted sums weakly increasing
bool criterion_pair_sequences() {
    LrContext lr;
    for (std::int64_t n = 0; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j) {
                const auto a = lr_pair_sequence(lr, all[i], all[j]);
                if (!is_symmetric(a.values) || !is_unimodal(a.values)) {
                    note("pair sums broken at " + all[i].to_string() + " " + all[j].to_string());
                    return false;
                }
                const auto b = conjugate_pair_cumsum_sequence(lr, all[i], all[j]);
                if (!is_weakly_increasing(b.values)) {
                    note("cumulative sums broken at " + all[i].to_string() + " " +
                         all[j].to_string());
                    return false;
                }
            }
    }
    return true;
}

// 3. LR-difference routes equal the character oracle for all pairs of
// partitions of n <= 6 and every admissible split point
bool criterion_oracle_equivalence() {
    LrContext lr;
    CharacterContext chars;
    for (std::int64_t n = 2; n <= 6; ++n) {
        const auto all = partitions_of(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j) {
                for (std::int64_t k = 1; 2 * k <= n; ++k)
                    if (two_row_kronecker(lr, all[i], all[j], k) !=
                        chars.kronecker(all[i], all[j], Partition({n - k, k}))) {
                        note("two-row mismatch at " + all[i].to_string() + " " +
                             all[j].to_string() + " k=" + std::to_string(k));
                        return false;
                    }
                for (std::int64_t k = 1; k <= n - 1; ++k) {
                    std::vector<std::int64_t> hook{n - k};
                    hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
                    if (hook_kronecker(lr, all[i], all[j], k) !=
                        chars.kronecker(all[i], all[j], Partition(std::move(hook)))) {
                        note("hook mismatch at " + all[i].to_string() + " " +
                             all[j].to_string() + " k=" + std::to_string(k));
                        return false;
                    }
                }
            }
    }
    return true;
}

// 4. corner-binomial windows symmetric + unimodal for l, m <= 8, r <= 4, and
// the rectangle corner identity for l, m <= 4, r <= 2
bool criterion_corner_statistic() {
    for (std::int64_t l = 1; l <= 8; ++l)
        for (std::int64_t m = 1; m <= 8; ++m)
            for (std::int64_t r = 0; r <= 4 && r <= l * m; ++r) {
                std::vector<std::int64_t> seq;
                for (std::int64_t n = r; n <= l * m; ++n)
                    seq.push_back(p_stat(l, m, n, r));
                if (!is_symmetric(seq) || !is_unimodal(seq)) {
                    note("corner-binomial window broken at l=" + std::to_string(l) +
                         " m=" + std::to_string(m) + " r=" + std::to_string(r));
                    return false;
                }
            }
    LrContext lr;
    for (std::int64_t l = 1; l <= 4; ++l)
        for (std::int64_t m = 1; m <= 4; ++m)
            for (std::int64_t r = 0; r <= 2; ++r) {
                std::vector<std::int64_t> lparts(static_cast<std::size_t>(l), m);
                lparts.insert(lparts.end(), static_cast<std::size_t>(r), 1);
                const Partition lambda(std::move(lparts));
                std::vector<std::int64_t> mparts{m + r};
                mparts.insert(mparts.end(), static_cast<std::size_t>(l - 1), m);
                const Partition mu(std::move(mparts));
                const Partition box = Partition::rectangle(l, m);
                const std::int64_t n = l * m + r;
                for (std::int64_t k = 0; k <= l * m; ++k)
                    for (const Partition& alpha : partitions_inside(k, box)) {
                        std::int64_t sum = 0;
                        for (const Partition& beta : partitions_inside(n - k, box)) {
                            const std::int64_t a = lr.lr_coefficient(lambda, alpha, beta);
                            if (a != 0)
                                sum = checked_add(
                                    sum, checked_mul(a, lr.lr_coefficient(mu, alpha, beta)));
                        }
                        if (sum != binomial(corner_count(alpha), r)) {
                            note("corner identity broken at alpha=" + alpha.to_string());
                            return false;
                        }
                    }
            }
    return true;
}

// 5. strict unimodality of the diagonal Gaussian coefficients: holds for
// m in {2,5,7..12}, fails exactly at m in {3,4,6}; spot-check the
// positivity route against the character oracle at m = 3, 4
bool criterion_diagonal_strictness() {
    const std::set<std::int64_t> expected_failures = {3, 4, 6};
    for (std::int64_t m = 2; m <= 12; ++m) {
        const IntPolynomial gb = q_binomial(m, m);
        std::span<const std::int64_t> coeffs(gb.coeffs());
        const bool strict = is_strictly_unimodal(coeffs.subspan(
            1, static_cast<std::size_t>(m * m - 1)));
        if (strict == expected_failures.contains(m)) {
            note("strictness verdict wrong at m=" + std::to_string(m));
            return false;
        }
    }
    LrContext lr;
    CharacterContext chars;
    for (std::int64_t m = 3; m <= 4; ++m) {
        const Partition square = Partition::rectangle(m, m);
        const IntPolynomial gb = q_binomial(m, m);
        for (std::int64_t k = 1; 2 * k <= m * m; ++k) {
            const std::int64_t via_lr = two_row_kronecker(lr, square, square, k);
            const std::int64_t via_ch = chars.kronecker(square, square, Partition({m * m - k, k}));
            if (via_lr != via_ch || via_lr != gb.coeff(k) - gb.coeff(k - 1)) {
                note("positivity spot-check broken at m=" + std::to_string(m) +
                     " k=" + std::to_string(k));
                return false;
            }
        }
    }
    return true;
}

// 6. distinct-odd product: central window strictly unimodal for m = 27..30,
// the plateau a_25 = a_26 = 12 for m = 13..20, and the boundary identity
// a_{2m+1} = q(2m+1) - 1 for m = 5..20
bool criterion_distinct_odd_window() {
    for (std::int64_t m = 27; m <= 30; ++m) {
        const IntPolynomial a = almkvist_poly(m);
        std::span<const std::int64_t> coeffs(a.coeffs());
        const auto window = coeffs.subspan(26, static_cast<std::size_t>(m * m - 52 + 1));
        if (!is_symmetric(window) || !is_strictly_unimodal(window)) {
            note("window broken at m=" + std::to_string(m));
            return false;
        }
    }
    for (std::int64_t m = 13; m <= 20; ++m) {
        const IntPolynomial a = almkvist_poly(m);
        if (a.coeff(25) != 12 || a.coeff(26) != 12) {
            note("plateau value broken at m=" + std::to_string(m));
            return false;
        }
    }
    for (std::int64_t m = 5; m <= 20; ++m)
        if (almkvist_poly(m).coeff(2 * m + 1) != q_count(2 * m + 1) - 1) {
            note("boundary identity broken at m=" + std::to_string(m));
            return false;
        }
    return true;
}

// 7. shifted product symmetric + unimodal and equal to the self-conjugate
// cumulative counts for m <= 12; those counts weakly increasing, and equal
// to the cumulative pair sums on squares for m <= 3
bool criterion_shifted_product() {
    LrContext lr;
    for (std::int64_t m = 1; m <= 12; ++m) {
        const IntPolynomial b = b_poly(m);
        if (!is_symmetric(b.coeffs()) || !is_unimodal(b.coeffs())) {
            note("shifted product not symmetric unimodal at m=" + std::to_string(m));
            return false;
        }
        const std::vector<std::int64_t> w = w_sequence(m);
        if (!is_weakly_increasing(w)) {
            note("cumulative counts decrease at m=" + std::to_string(m));
            return false;
        }
        for (std::int64_t n = 0; n <= m * m; ++n)
            if (b.coeff(n) != w[static_cast<std::size_t>(n)]) {
                note("coefficient identity broken at m=" + std::to_string(m) +
                     " n=" + std::to_string(n));
                return false;
            }
        for (std::int64_t j = m * m + 1; j <= b.degree(); ++j)
            if (b.coeff(j) != w[static_cast<std::size_t>(b.degree() - j)]) {
                note("mirrored identity broken at m=" + std::to_string(m) +
                     " n=" + std::to_string(j));
                return false;
            }
        if (m <= 3) {
            const Partition square = Partition::rectangle(m, m);
            if (conjugate_pair_cumsum_sequence(lr, square, square).values != w) {
                note("square pair sums disagree at m=" + std::to_string(m));
                return false;
            }
        }
    }
    return true;
}

// 8. bijection round-trips: staircase shift, diagonal-hook folding, the
// size-raising injection with its nonempty complement, and corner-pair
// complementation
bool criterion_bijections() {
    for (std::int64_t l = 1; l <= 5; ++l)
        for (std::int64_t m = l + 1; m <= 6; ++m)
            for (std::int64_t n = 0; n <= l * m; ++n)
                for (const Partition& nu : enumerate_in_rectangle(n, Rectangle(l, m))) {
                    if (static_cast<std::int64_t>(nu.length()) != l)
                        continue;
                    bool distinct = true;
                    for (std::size_t i = 1; i < nu.length(); ++i)
                        if (nu.part(i) == nu.part(i - 1)) distinct = false;
                    if (!distinct)
                        continue;
                    if (staircase_bijection_inverse(staircase_bijection(nu, l, m), l, m) != nu) {
                        note("staircase round-trip broken at " + nu.to_string());
                        return false;
                    }
                }
    for (std::int64_t n = 0; n <= 20; ++n)
        for (const Partition& alpha : partitions_of(n)) {
            if (!is_self_conjugate(alpha))
                continue;
            const Partition nu = self_conjugate_to_distinct_odd(alpha);
            if (!has_distinct_odd_parts(nu) || distinct_odd_to_self_conjugate(nu) != alpha) {
                note("diagonal-hook round-trip broken at " + alpha.to_string());
                return false;
            }
        }
    for (std::int64_t n = 3; n <= 60; ++n) {
        const auto source = enumerate_distinct_odd(n);
        std::set<Partition> image;
        for (const Partition& nu : source)
            image.insert(phi_injection(nu));
        if (image.size() != source.size()) {
            note("injection collides at n=" + std::to_string(n));
            return false;
        }
        if (n >= 26 && static_cast<std::int64_t>(image.size()) >= q_count(n + 1)) {
            note("complement empty at n=" + std::to_string(n));
            return false;
        }
    }
    for (std::int64_t l = 1; l <= 5; ++l)
        for (std::int64_t m = 1; m <= 5; ++m)
            for (std::int64_t r = 0; r <= 2; ++r)
                for (std::int64_t n = 0; n <= l * m; ++n) {
                    const auto source = corner_pairs(l, m, n, r);
                    const auto target = corner_pairs(l, m, l * m - n + r, r);
                    std::set<CornerMarkedPair> image;
                    for (const auto& [alpha, pi] : source)
                        image.insert(CornerMarkedPair{complement(pi, Rectangle(l, m)),
                                                      complement(alpha, Rectangle(l, m))});
                    if (image.size() != source.size() ||
                        image != std::set<CornerMarkedPair>(target.begin(), target.end())) {
                        note("corner-pair complementation broken at l=" + std::to_string(l) +
                             " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                             " r=" + std::to_string(r));
                        return false;
                    }
                }
    return true;
}

// 9. strict unimodality of the box counts for all 8 <= l, m <= 16
bool criterion_large_boxes() {
    for (std::int64_t l = 8; l <= 16; ++l)
        for (std::int64_t m = 8; m <= 16; ++m) {
            const IntPolynomial gb = q_binomial(l, m);
            std::span<const std::int64_t> coeffs(gb.coeffs());
            if (!is_strictly_unimodal(coeffs.subspan(
                    1, static_cast<std::size_t>(l * m - 1)))) {
                note("box counts not strictly unimodal at l=" + std::to_string(l) +
                     " m=" + std::to_string(m));
                return false;
            }
        }
    return true;
}

// 10. two-row character values at the staircase class equal consecutive
// coefficient differences of the distinct-odd product for m = 3, 4, 5
bool criterion_character_bridge() {
    CharacterContext chars;
    for (std::int64_t m = 3; m <= 5; ++m) {
        const IntPolynomial a = almkvist_poly(m);
        const Partition rho = staircase(m);
        for (std::int64_t k = 1; 2 * k <= m * m; ++k) {
            const Partition two_row({m * m - k, k});
            if (chars.character(two_row, CycleType(rho)) != a.coeff(k) - a.coeff(k - 1)) {
                note("bridge broken at m=" + std::to_string(m) + " k=" + std::to_string(k));
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::int64_t budget_ms;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"3x3 fixture arrays through the command-line interface", 1'000, criterion_fixtures},
        {"pair sums symmetric+unimodal, cumulative sums increasing (all pairs, n <= 8)",
         300'000, criterion_pair_sequences},
        {"LR-difference routes equal the character oracle (n <= 6)", 60'000,
         criterion_oracle_equivalence},
        {"corner-binomial windows and the rectangle corner identity", 300'000,
         criterion_corner_statistic},
        {"diagonal strict unimodality with tight exceptions {3,4,6}", 10'000,
         criterion_diagonal_strictness},
        {"distinct-odd product: strict central window, plateau, boundary", 10'000,
         criterion_distinct_odd_window},
        {"shifted product vs self-conjugate cumulative counts", 300'000,
         criterion_shifted_product},
        {"bijection round-trips and injectivity with nonempty complement", 60'000,
         criterion_bijections},
        {"strict unimodality of box counts, 8 <= l,m <= 16", 10'000, criterion_large_boxes},
        {"staircase-class character values equal coefficient differences", 60'000,
         criterion_character_bridge},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        fail_detail.clear();
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        const bool in_budget = elapsed <= criteria[i].budget_ms;
        if (!in_budget)
            note("over budget");
        const bool pass = ok && in_budget;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
                  << " (" << elapsed << " ms, budget " << criteria[i].budget_ms << " ms)";
        if (!pass)
            std::cout << " -- " << fail_detail;
        std::cout << '\n';
        if (!pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
