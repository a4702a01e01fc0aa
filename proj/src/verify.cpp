#include "kroncomb/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kroncomb/arith.hpp"
#include "kroncomb/characters.hpp"
#include "kroncomb/kronecker.hpp"
#include "kroncomb/partition.hpp"
#include "kroncomb/qseries.hpp"
#include "kroncomb/statistics.hpp"
#include "kroncomb/tableaux.hpp"

namespace kroncomb::verify {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::finding: return "finding";
    }
    return "?";
}

Json VerificationReport::to_json() const {
    Json j;
    j["check_id"] = check_id;
    j["parameters"] = parameters;
    j["status"] = std::string(status_name(status));
    j["witness"] = witness;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

namespace {

using Outcome = std::pair<Status, Json>;

struct Point {
    Json params;
    std::function<Outcome()> task;
};

std::vector<VerificationReport> execute(const std::string& id, std::vector<Point> points,
                                        int jobs) {
    std::vector<VerificationReport> reports(points.size());
    if (jobs < 1)
        jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size())
                break;
            VerificationReport r;
            r.check_id = id;
            r.parameters = points[i].params;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                auto [status, witness] = points[i].task();
                r.status = status;
                r.witness = std::move(witness);
            } catch (const std::exception& e) {
                r.status = Status::fail;
                r.witness = Json{{"error", e.what()}};
            }
            const auto t1 = std::chrono::steady_clock::now();
            r.elapsed_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            reports[i] = std::move(r);
        }
    };
    if (jobs == 1 || points.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        const int count = std::min<int>(jobs, static_cast<int>(points.size()));
        threads.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }
    return reports;
}

// Default grid clipped to [valid_lo, guard_hi]; user bounds replace the
// defaults; --unsafe-no-guard lifts the guard but never the validity bound.
std::vector<std::int64_t> resolve_range(const GridOptions& opt, std::int64_t def_lo,
                                        std::int64_t def_hi,
                                        std::optional<std::int64_t> user_lo,
                                        std::optional<std::int64_t> user_hi,
                                        std::int64_t valid_lo, std::int64_t guard_hi) {
    const std::int64_t cap = opt.no_guard ? 10'000 : guard_hi;
    std::int64_t lo = std::max(user_lo.value_or(def_lo), valid_lo);
    std::int64_t hi = std::min(user_hi.value_or(def_hi), cap);
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

Json seq_json(std::span<const std::int64_t> s) {
    return Json(std::vector<std::int64_t>(s.begin(), s.end()));
}

// ---------------------------------------------------------------- thm1.1

std::vector<Point> points_thm1_1(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    for (std::int64_t l : resolve_range(opt, 1, 8, opt.l_min, opt.l_max, 1, 1'000)) {
        for (std::int64_t m : resolve_range(opt, 1, 8, opt.m_min, opt.m_max, 1, 1'000)) {
            for (std::int64_t r = 0; r <= opt.r_max.value_or(4); ++r) {
                if (r > l * m)
                    continue;  // the window n = r..lm is empty
                Json params{{"part", "pstat-window"}, {"l", l}, {"m", m}, {"r", r}};
                points.push_back({params, [l, m, r]() -> Outcome {
                    std::vector<std::int64_t> seq;
                    for (std::int64_t n = r; n <= l * m; ++n)
                        seq.push_back(p_stat(l, m, n, r));
                    const bool sym = is_symmetric(seq);
                    const bool uni = is_unimodal(seq);
                    Json w{{"window_lo", r}, {"window_hi", l * m}, {"sequence", seq_json(seq)},
                           {"symmetric", sym}, {"unimodal", uni}};
                    return {sym && uni ? Status::pass : Status::fail, w};
                }});
            }
        }
    }
    for (std::int64_t l : resolve_range(opt, 1, 4, opt.l_min, opt.l_max, 1, 1'000)) {
        for (std::int64_t m : resolve_range(opt, 1, 4, opt.m_min, opt.m_max, 1, 1'000)) {
            for (std::int64_t r = 0; r <= std::min<std::int64_t>(opt.r_max.value_or(2), 2); ++r) {
                Json params{{"part", "corner-identity"}, {"l", l}, {"m", m}, {"r", r}};
                points.push_back({params, [l, m, r, lr]() -> Outcome {
                    // lambda = box plus a column of r, mu = box plus a row of r
                    std::vector<std::int64_t> lparts(static_cast<std::size_t>(l), m);
                    lparts.insert(lparts.end(), static_cast<std::size_t>(r), 1);
                    const Partition lambda(std::move(lparts));
                    std::vector<std::int64_t> mparts{m + r};
                    mparts.insert(mparts.end(), static_cast<std::size_t>(l - 1), m);
                    const Partition mu(std::move(mparts));
                    const Partition box = Partition::rectangle(l, m);
                    const std::int64_t n = l * m + r;
                    for (std::int64_t k = 0; k <= l * m; ++k) {
                        for (const Partition& alpha : partitions_inside(k, box)) {
                            std::int64_t sum = 0;
                            for (const Partition& beta : partitions_inside(n - k, box)) {
                                const std::int64_t a = lr->lr_coefficient(lambda, alpha, beta);
                                if (a != 0)
                                    sum = checked_add(
                                        sum, checked_mul(a, lr->lr_coefficient(mu, alpha, beta)));
                            }
                            if (sum != binomial(corner_count(alpha), r))
                                return {Status::fail,
                                        Json{{"alpha", alpha.to_string()},
                                             {"sum", sum},
                                             {"expected", binomial(corner_count(alpha), r)}}};
                        }
                    }
                    return {Status::pass, Json{{"alphas_checked", "all sizes in box"}}};
                }});
            }
        }
    }
    return points;
}

// ---------------------------------------------------------------- thm1.2

std::vector<Point> points_thm1_2(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    auto chars = std::make_shared<CharacterContext>();
    for (std::int64_t m : resolve_range(opt, 2, 12, opt.m_min, opt.m_max, 2, 64)) {
        Json params{{"part", "strict-window"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial gb = q_binomial(m, m);
            std::span<const std::int64_t> coeffs(gb.coeffs());
            const auto window = coeffs.subspan(1, static_cast<std::size_t>(m * m - 1));
            const bool strict = is_strictly_unimodal(window);
            const bool expected_failure = (m == 3 || m == 4 || m == 6);
            Json w{{"window_lo", 1}, {"window_hi", m * m - 1}, {"strictly_unimodal", strict},
                   {"known_exception", expected_failure}};
            if (strict && !expected_failure)
                return {Status::pass, w};
            if (!strict && expected_failure)
                return {Status::finding, w};  // documented tightness of the bound
            return {Status::fail, w};
        }});
    }
    for (std::int64_t m : resolve_range(opt, 3, 4, opt.m_min, opt.m_max, 3, 4)) {
        Json params{{"part", "kron-positivity"}, {"m", m}};
        points.push_back({params, [m, lr, chars]() -> Outcome {
            const Partition square = Partition::rectangle(m, m);
            const IntPolynomial gb = q_binomial(m, m);
            const std::int64_t n = m * m;
            for (std::int64_t k = 1; 2 * k <= n; ++k) {
                const std::int64_t via_lr = two_row_kronecker(*lr, square, square, k);
                const std::int64_t via_chars =
                    chars->kronecker(square, square, Partition({n - k, k}));
                const std::int64_t via_counts = gb.coeff(k) - gb.coeff(k - 1);
                if (via_lr != via_chars || via_lr != via_counts)
                    return {Status::fail,
                            Json{{"k", k}, {"lr_route", via_lr}, {"character_route", via_chars},
                                 {"count_difference", via_counts}}};
            }
            return {Status::pass, Json{{"k_max", n / 2}}};
        }});
    }
    return points;
}

// ---------------------------------------------------------------- thm5.2

std::vector<Point> points_thm5_2(const GridOptions& opt) {
    std::vector<Point> points;
    for (std::int64_t m : resolve_range(opt, 27, 30, opt.m_min, opt.m_max, 27, 64)) {
        Json params{{"part", "window"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial a = almkvist_poly(m);
            std::span<const std::int64_t> coeffs(a.coeffs());
            const auto window =
                coeffs.subspan(26, static_cast<std::size_t>(m * m - 26 - 26 + 1));
            const bool sym = is_symmetric(window);
            const bool strict = is_strictly_unimodal(window);
            Json w{{"window_lo", 26}, {"window_hi", m * m - 26}, {"symmetric", sym},
                   {"strictly_unimodal", strict}};
            return {sym && strict ? Status::pass : Status::fail, w};
        }});
    }
    for (std::int64_t m : resolve_range(opt, 13, 20, opt.m_min, opt.m_max, 13, 64)) {
        Json params{{"part", "tightness"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial a = almkvist_poly(m);
            Json w{{"a25", a.coeff(25)}, {"a26", a.coeff(26)}};
            const bool ok = a.coeff(25) == 12 && a.coeff(26) == 12;
            return {ok ? Status::pass : Status::fail, w};
        }});
    }
    for (std::int64_t m : resolve_range(opt, 5, 20, opt.m_min, opt.m_max, 1, 64)) {
        Json params{{"part", "boundary"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial a = almkvist_poly(m);
            const std::int64_t lhs = a.coeff(2 * m + 1);
            const std::int64_t rhs = q_count(2 * m + 1) - 1;
            Json w{{"a_2m_plus_1", lhs}, {"q_count_minus_1", rhs}};
            return {lhs == rhs ? Status::pass : Status::fail, w};
        }});
    }
    return points;
}

// ---------------------------------------------------------------- thm6.1

std::vector<Point> points_thm6_1(const GridOptions& opt) {
    std::vector<Point> points;
    for (std::int64_t m : resolve_range(opt, 1, 12, opt.m_min, opt.m_max, 1, 32)) {
        Json params{{"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial b = b_poly(m);
            const bool sym = is_symmetric(b.coeffs());
            const bool uni = is_unimodal(b.coeffs());
            Json w{{"degree", b.degree()}, {"symmetric", sym}, {"unimodal", uni}};
            return {sym && uni ? Status::pass : Status::fail, w};
        }});
    }
    return points;
}

// --------------------------------------------------- lemma3.1 / lemma6.2

std::vector<Point> points_pair_lemma(const GridOptions& opt, bool hook_version) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    for (std::int64_t n : resolve_range(opt, 0, 8, opt.n_min, opt.n_max, 0, 12)) {
        Json params{{"n", n}};
        points.push_back({params, [n, lr, hook_version]() -> Outcome {
            const std::vector<Partition> all = partitions_of(n);
            std::int64_t pairs = 0;
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i; j < all.size(); ++j) {  // symmetric in (lambda, mu)
                    ++pairs;
                    if (hook_version) {
                        const UnimodalSequence seq =
                            conjugate_pair_cumsum_sequence(*lr, all[i], all[j]);
                        if (!is_weakly_increasing(seq.values))
                            return {Status::fail,
                                    Json{{"lambda", all[i].to_string()},
                                         {"mu", all[j].to_string()},
                                         {"sequence", seq_json(seq.values)}}};
                    } else {
                        const UnimodalSequence seq = lr_pair_sequence(*lr, all[i], all[j]);
                        if (!is_symmetric(seq.values) || !is_unimodal(seq.values))
                            return {Status::fail,
                                    Json{{"lambda", all[i].to_string()},
                                         {"mu", all[j].to_string()},
                                         {"sequence", seq_json(seq.values)}}};
                    }
                }
            }
            return {Status::pass, Json{{"pairs_checked", pairs}}};
        }});
    }
    return points;
}

// ---------------------------------------------------------------- cor4.1

std::vector<Point> points_cor4_1(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    for (std::int64_t l : resolve_range(opt, 1, 8, opt.l_min, opt.l_max, 1, 64)) {
        for (std::int64_t m : resolve_range(opt, 1, 8, opt.m_min, opt.m_max, 1, 64)) {
            Json params{{"part", "window"}, {"l", l}, {"m", m}};
            points.push_back({params, [l, m]() -> Outcome {
                const IntPolynomial gb = q_binomial(l, m);
                const bool sym = is_symmetric(gb.coeffs());
                const bool uni = is_unimodal(gb.coeffs());
                // coefficients must agree with direct enumeration
                for (std::int64_t n = 0; n <= l * m; ++n) {
                    std::int64_t count = 0;
                    for_each_in_rectangle(n, Rectangle(l, m),
                                          [&](const Partition&) { ++count; });
                    if (count != gb.coeff(n))
                        return {Status::fail,
                                Json{{"n", n}, {"recurrence", gb.coeff(n)},
                                     {"enumeration", count}}};
                }
                Json w{{"sequence", seq_json(gb.coeffs())}, {"symmetric", sym},
                       {"unimodal", uni}};
                return {sym && uni ? Status::pass : Status::fail, w};
            }});
        }
    }
    for (std::int64_t l : resolve_range(opt, 1, 5, opt.l_min, opt.l_max, 1, 64)) {
        for (std::int64_t m : resolve_range(opt, 1, 5, opt.m_min, opt.m_max, 1, 64)) {
            Json params{{"part", "lr-specialization"}, {"l", l}, {"m", m}};
            points.push_back({params, [l, m, lr]() -> Outcome {
                const Partition box = Partition::rectangle(l, m);
                const IntPolynomial gb = q_binomial(l, m);
                for (std::int64_t k = 0; k <= l * m; ++k) {
                    const std::int64_t pair_sum = lr_pair_sum(*lr, box, box, k);
                    if (pair_sum != gb.coeff(k))
                        return {Status::fail,
                                Json{{"k", k}, {"lr_pair_sum", pair_sum},
                                     {"coefficient", gb.coeff(k)}}};
                }
                return {Status::pass, Json{{"degree", l * m}}};
            }});
        }
    }
    return points;
}

// ---------------------------------------------------------------- cor4.2

std::vector<Point> points_cor4_2(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    const auto m_window = resolve_range(opt, 2, 7, opt.m_min, opt.m_max, 2, 64);
    for (std::int64_t m : m_window) {
        for (std::int64_t l : resolve_range(opt, 1, m - 1, opt.l_min, opt.l_max, 1, m - 1)) {
            Json params{{"part", "window"}, {"l", l}, {"m", m}};
            points.push_back({params, [l, m]() -> Outcome {
                std::vector<std::int64_t> seq;
                for (std::int64_t n = l; n <= m * l; ++n)
                    seq.push_back(d_count(n, l, m));
                const bool sym = is_symmetric(seq);
                const bool uni = is_unimodal(seq);
                Json w{{"window_lo", l}, {"window_hi", m * l}, {"sequence", seq_json(seq)},
                       {"symmetric", sym}, {"unimodal", uni}};
                return {sym && uni ? Status::pass : Status::fail, w};
            }});
        }
    }
    for (std::int64_t m : resolve_range(opt, 2, 6, opt.m_min, opt.m_max, 2, 64)) {
        for (std::int64_t l : resolve_range(opt, 1, m - 1, opt.l_min, opt.l_max, 1, m - 1)) {
            Json params{{"part", "staircase-shift"}, {"l", l}, {"m", m}};
            points.push_back({params, [l, m]() -> Outcome {
                const IntPolynomial gb = q_binomial(l, m - l);
                const std::int64_t shift = l * (l + 1) / 2;
                for (std::int64_t n = 0; n <= l * m; ++n) {
                    const std::int64_t direct = d_count(n, l, m);
                    if (direct != gb.coeff(n - shift))
                        return {Status::fail,
                                Json{{"n", n}, {"d_count", direct},
                                     {"shifted_coefficient", gb.coeff(n - shift)}}};
                    // the bijection must round-trip on every witness
                    for (const Partition& nu : enumerate_in_rectangle(n, Rectangle(l, m))) {
                        if (static_cast<std::int64_t>(nu.length()) != l)
                            continue;
                        bool distinct = true;
                        for (std::size_t i = 1; i < nu.length(); ++i)
                            if (nu.part(i) == nu.part(i - 1)) distinct = false;
                        if (!distinct)
                            continue;
                        const Partition alpha = staircase_bijection(nu, l, m);
                        if (staircase_bijection_inverse(alpha, l, m) != nu)
                            return {Status::fail, Json{{"nu", nu.to_string()}}};
                    }
                }
                return {Status::pass, Json{{"shift", shift}}};
            }});
        }
    }
    for (std::int64_t m : resolve_range(opt, 2, 5, opt.m_min, opt.m_max, 2, 64)) {
        for (std::int64_t l : resolve_range(opt, 1, m - 1, opt.l_min, opt.l_max, 1, m - 1)) {
            Json params{{"part", "kernel"}, {"l", l}, {"m", m}};
            points.push_back({params, [l, m, lr]() -> Outcome {
                // lambda = box with a row of l below, mu = (m+1)^l
                std::vector<std::int64_t> lparts(static_cast<std::size_t>(l), m);
                lparts.push_back(l);
                const Partition lambda(std::move(lparts));
                const Partition mu = Partition::rectangle(l, m + 1);
                const Partition box = Partition::rectangle(l, m);
                const std::int64_t n = l * m + l;
                for (std::int64_t k = 0; k <= l * m; ++k) {
                    for (const Partition& alpha : partitions_inside(k, box)) {
                        std::int64_t sum = 0;
                        for (const Partition& beta : partitions_inside(n - k, box)) {
                            const std::int64_t a = lr->lr_coefficient(lambda, alpha, beta);
                            if (a != 0)
                                sum = checked_add(
                                    sum, checked_mul(a, lr->lr_coefficient(mu, alpha, beta)));
                        }
                        bool distinct_full = static_cast<std::int64_t>(alpha.length()) == l;
                        for (std::size_t i = 1; distinct_full && i < alpha.length(); ++i)
                            if (alpha.part(i) == alpha.part(i - 1)) distinct_full = false;
                        const std::int64_t expected = distinct_full ? 1 : 0;
                        if (sum != expected)
                            return {Status::fail,
                                    Json{{"alpha", alpha.to_string()}, {"sum", sum},
                                         {"expected", expected}}};
                    }
                }
                return {Status::pass, Json{{"n", n}}};
            }});
        }
    }
    return points;
}

// ---------------------------------------------------------------- cor6.3

std::vector<Point> points_cor6_3(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    for (std::int64_t m : resolve_range(opt, 1, 12, opt.m_min, opt.m_max, 1, 32)) {
        Json params{{"part", "monotone"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const std::vector<std::int64_t> w = w_sequence(m);
            const bool inc = is_weakly_increasing(w);
            Json witness{{"increasing", inc}};
            if (!inc)
                witness["sequence"] = seq_json(w);
            return {inc ? Status::pass : Status::fail, witness};
        }});
    }
    for (std::int64_t m : resolve_range(opt, 1, 12, opt.m_min, opt.m_max, 1, 32)) {
        Json params{{"part", "poly-identity"}, {"m", m}};
        points.push_back({params, [m]() -> Outcome {
            const IntPolynomial b = b_poly(m);
            const std::vector<std::int64_t> w = w_sequence(m);
            for (std::int64_t n = 0; n <= m * m; ++n)
                if (b.coeff(n) != w[static_cast<std::size_t>(n)])
                    return {Status::fail,
                            Json{{"n", n}, {"coefficient", b.coeff(n)},
                                 {"w", w[static_cast<std::size_t>(n)]}}};
            for (std::int64_t j = m * m + 1; j <= b.degree(); ++j)
                if (b.coeff(j) != w[static_cast<std::size_t>(b.degree() - j)])
                    return {Status::fail,
                            Json{{"n", j}, {"coefficient", b.coeff(j)},
                                 {"w_mirrored", w[static_cast<std::size_t>(b.degree() - j)]}}};
            return {Status::pass, Json{{"degree", b.degree()}}};
        }});
    }
    for (std::int64_t m : resolve_range(opt, 1, 3, opt.m_min, opt.m_max, 1, 3)) {
        Json params{{"part", "lr-bridge"}, {"m", m}};
        points.push_back({params, [m, lr]() -> Outcome {
            const Partition square = Partition::rectangle(m, m);
            const UnimodalSequence seq = conjugate_pair_cumsum_sequence(*lr, square, square);
            const std::vector<std::int64_t> w = w_sequence(m);
            if (seq.values != w)
                return {Status::fail,
                        Json{{"cumulative", seq_json(seq.values)}, {"w", seq_json(w)}}};
            return {Status::pass, Json{{"length", w.size()}}};
        }});
    }
    return points;
}

// ---------------------------------------------------------- oracle-xcheck

std::vector<Point> points_oracle_xcheck(const GridOptions& opt) {
    std::vector<Point> points;
    auto lr = std::make_shared<LrContext>();
    auto chars = std::make_shared<CharacterContext>();
    for (std::int64_t n : resolve_range(opt, 2, 6, opt.n_min, opt.n_max, 2, 10)) {
        Json params{{"n", n}};
        points.push_back({params, [n, lr, chars]() -> Outcome {
            const std::vector<Partition> all = partitions_of(n);
            std::int64_t checked = 0;
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i; j < all.size(); ++j) {
                    for (std::int64_t k = 1; 2 * k <= n; ++k) {
                        std::vector<std::int64_t> nu{n - k, k};
                        const std::int64_t via_lr = two_row_kronecker(*lr, all[i], all[j], k);
                        const std::int64_t via_ch =
                            chars->kronecker(all[i], all[j], Partition(std::move(nu)));
                        ++checked;
                        if (via_lr != via_ch)
                            return {Status::fail,
                                    Json{{"lambda", all[i].to_string()},
                                         {"mu", all[j].to_string()},
                                         {"nu", "two-row k=" + std::to_string(k)},
                                         {"lr_route", via_lr}, {"character_route", via_ch}}};
                    }
                    for (std::int64_t k = 1; k <= n - 1; ++k) {
                        std::vector<std::int64_t> nu{n - k};
                        nu.insert(nu.end(), static_cast<std::size_t>(k), 1);
                        const std::int64_t via_lr = hook_kronecker(*lr, all[i], all[j], k);
                        const std::int64_t via_ch =
                            chars->kronecker(all[i], all[j], Partition(std::move(nu)));
                        ++checked;
                        if (via_lr != via_ch)
                            return {Status::fail,
                                    Json{{"lambda", all[i].to_string()},
                                         {"mu", all[j].to_string()},
                                         {"nu", "hook k=" + std::to_string(k)},
                                         {"lr_route", via_lr}, {"character_route", via_ch}}};
                    }
                }
            }
            return {Status::pass, Json{{"comparisons", checked}}};
        }});
    }
    return points;
}

// ------------------------------------------------------------ scan-gamma

bool nearly_unimodal(const std::vector<double>& s) {
    // unimodality with a relative tolerance for the floating-point values
    auto cmp = [](double a, double b) {
        const double eps = 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
        if (a > b + eps) return 1;
        if (b > a + eps) return -1;
        return 0;
    };
    std::size_t i = 0;
    while (i + 1 < s.size() && cmp(s[i], s[i + 1]) <= 0) ++i;
    while (i + 1 < s.size() && cmp(s[i], s[i + 1]) >= 0) ++i;
    return i == s.size() - 1;
}

std::vector<Point> points_scan_gamma(const GridOptions& opt) {
    std::vector<Point> points;
    const double z = opt.z;
    for (std::int64_t l : resolve_range(opt, 1, 6, opt.l_min, opt.l_max, 1, 16)) {
        for (std::int64_t m : resolve_range(opt, 1, 6, opt.m_min, opt.m_max, 1, 16)) {
            Json params{{"l", l}, {"m", m}, {"z", z}};
            points.push_back({params, [l, m, z]() -> Outcome {
                std::vector<double> seq;
                for (std::int64_t k = 0; k <= l * m; ++k)
                    seq.push_back(gamma_stat(l, m, k, z));
                const bool uni = nearly_unimodal(seq);
                // a conjecture scan records evidence, it never asserts
                return {Status::finding, Json{{"unimodal", uni}, {"sequence", seq}}};
            }});
        }
    }
    return points;
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> ids = {
        "thm1.1", "thm1.2", "thm5.2", "thm6.1", "lemma3.1", "lemma6.2",
        "cor4.1", "cor4.2", "cor6.3", "oracle-xcheck", "scan-gamma",
    };
    return ids;
}

std::vector<VerificationReport> run_check(const std::string& check_id, const GridOptions& opt) {
    std::vector<Point> points;
    if (check_id == "thm1.1")
        points = points_thm1_1(opt);
    else if (check_id == "thm1.2")
        points = points_thm1_2(opt);
    else if (check_id == "thm5.2")
        points = points_thm5_2(opt);
    else if (check_id == "thm6.1")
        points = points_thm6_1(opt);
    else if (check_id == "lemma3.1")
        points = points_pair_lemma(opt, false);
    else if (check_id == "lemma6.2")
        points = points_pair_lemma(opt, true);
    else if (check_id == "cor4.1")
        points = points_cor4_1(opt);
    else if (check_id == "cor4.2")
        points = points_cor4_2(opt);
    else if (check_id == "cor6.3")
        points = points_cor6_3(opt);
    else if (check_id == "oracle-xcheck")
        points = points_oracle_xcheck(opt);
    else if (check_id == "scan-gamma")
        points = points_scan_gamma(opt);
    else {
        std::string known;
        for (const auto& id : known_checks())
            known += (known.empty() ? "" : ", ") + id;
        throw std::invalid_argument("unknown check id '" + check_id + "'; known ids: " + known);
    }
    return execute(check_id, std::move(points), opt.jobs);
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == Status::fail)
            return false;
    return true;
}

std::string to_text_line(const VerificationReport& r) {
    std::ostringstream out;
    out << '[' << (r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "FIND")
        << "] " << r.check_id;
    for (const auto& [key, value] : r.parameters.items())
        out << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
    out << " (" << r.elapsed_ms << " ms)";
    if (r.status != Status::pass)
        out << " witness=" << r.witness.dump();
    return out.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    // union of parameter keys in first-appearance order
    std::vector<std::string> keys;
    for (const auto& r : reports)
        for (const auto& [key, value] : r.parameters.items()) {
            (void)value;
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                keys.push_back(key);
        }
    auto quote = [](std::string s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::ostringstream out;
    out << "check_id";
    for (const auto& k : keys)
        out << ',' << k;
    out << ",status,witness,elapsed_ms\n";
    for (const auto& r : reports) {
        out << r.check_id;
        for (const auto& k : keys) {
            out << ',';
            if (r.parameters.contains(k)) {
                const auto& v = r.parameters[k];
                out << (v.is_string() ? v.get<std::string>() : v.dump());
            }
        }
        out << ',' << status_name(r.status) << ',' << quote(r.witness.dump()) << ','
            << r.elapsed_ms << '\n';
    }
    return out.str();
}

}  // namespace kroncomb::verify
