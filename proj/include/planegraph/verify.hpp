#pragma once

// Property suites over seeded instance families. Each check lands in a
// report record; failed records embed a replayable instance (text-format
// graph plus the parameters that produced the failure). Suites may fan out
// across worker threads; records are sorted by descriptor before emission,
// so reports are schedule-independent.

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "planegraph/bounds.hpp"
#include "planegraph/connectivity.hpp"
#include "planegraph/cycles.hpp"
#include "planegraph/extract.hpp"
#include "planegraph/generators.hpp"
#include "planegraph/holes.hpp"
#include "planegraph/io.hpp"
#include "planegraph/subgraph.hpp"

namespace planegraph {

enum class CheckStatus { Pass, Fail, Skip, Budget };

struct CheckRecord {
    std::string suite;
    std::string instance;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::string payload;  // replayable instance, present on failure
    double wall_ms = 0.0;
};

struct VerificationReport {
    std::string name;
    std::vector<CheckRecord> records;

    int count(CheckStatus s) const {
        int c = 0;
        for (const auto& r : records) c += r.status == s;
        return c;
    }
    bool all_passed() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::Fail || r.status == CheckStatus::Budget) return false;
        return true;
    }

    void sort_records() {
        std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
            if (a.suite != b.suite) return a.suite < b.suite;
            return a.instance < b.instance;
        });
    }

    static const char* status_name(CheckStatus s) {
        switch (s) {
            case CheckStatus::Pass: return "pass";
            case CheckStatus::Fail: return "fail";
            case CheckStatus::Skip: return "skip";
            case CheckStatus::Budget: return "budget";
        }
        return "?";
    }

    /// One structured record per line.
    void print_records(std::ostream& os) const {
        for (const auto& r : records) {
            os << "suite=" << r.suite << " instance=\"" << r.instance
               << "\" outcome=" << status_name(r.status) << " ms=" << std::fixed
               << std::setprecision(2) << r.wall_ms;
            if (!r.detail.empty()) os << " detail=\"" << r.detail << "\"";
            os << "\n";
        }
    }

    void print_summary(std::ostream& os) const {
        os << name << ": " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail)
           << " failed, " << count(CheckStatus::Skip) << " skipped, " << count(CheckStatus::Budget)
           << " out of budget\n";
        for (const auto& r : records) {
            if (r.status != CheckStatus::Fail && r.status != CheckStatus::Budget) continue;
            os << "  [" << status_name(r.status) << "] " << r.suite << " " << r.instance << ": "
               << r.detail << "\n";
            if (!r.payload.empty()) os << r.payload;
        }
    }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 200;
    int workers = 1;
    std::int64_t budget_ms = 0;  // per expensive check; 0 = unlimited

    // fault injection for harness self-tests: raises the joinable-edge
    // requirement above the guaranteed block_count - 1
    int joinable_requirement_offset = 0;
};

namespace detail {

inline std::string graph_payload(const PlaneGraph& g, const std::string& comment) {
    std::ostringstream os;
    write_text(os, g, comment);
    return os.str();
}

template <typename Fn>
inline void run_indexed(int total, int workers, Fn&& body) {
    if (workers <= 1) {
        for (int i = 0; i < total; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic_int next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= total) return;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct TimedRecord {
    CheckRecord rec;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    CheckRecord finish(CheckStatus s, std::string detail = {}, std::string payload = {}) {
        rec.status = s;
        rec.detail = std::move(detail);
        rec.payload = std::move(payload);
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                started)
                          .count();
        return rec;
    }
};

/// Deterministic mixed instance supply: stacked triangulations and their
/// 2-connected relaxations, plus the structured families.
inline PlaneGraph mixed_instance(std::uint64_t seed, int max_n, std::string& descriptor) {
    Rng rng(seed * 0x9e3779b97f4a7c15ull + 1);
    int pick = static_cast<int>(rng.below(10));
    std::ostringstream desc;
    if (pick < 4) {
        int n = 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 3)));
        desc << "random-nt n=" << n << " seed=" << seed;
        descriptor = desc.str();
        return random_near_triangulation(n, seed);
    }
    if (pick < 8) {
        int n = 6 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 5)));
        int target = static_cast<int>(rng.below(5));
        auto r = random_two_connected(n, target, seed);
        desc << "random-2c n=" << n << " target-m=" << target << " m=" << r.achieved_m
             << " seed=" << seed;
        descriptor = desc.str();
        return r.graph;
    }
    if (pick == 8) {
        int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
        desc << "subtriangulation n=" << n;
        descriptor = desc.str();
        return moon_moser_subtriangulation(n);
    }
    int k = rng.below(2) ? 7 : 14;
    int lo = k == 7 ? 3 : 9;
    int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - lo + 1)));
    auto r = glued_construction(n, k);
    desc << "glued k=" << k << " n=" << n;
    descriptor = desc.str();
    return r.graph;
}

/// Deterministic simple-cycle enumeration, canonical order, capped.
inline std::vector<std::vector<VertexId>> enumerate_cycles(const PlaneGraph& g, int cap) {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> path;
    std::vector<char> used(g.vertex_count + 1, 0);

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId tip) {
        if (static_cast<int>(cycles.size()) >= cap) return;
        for (VertexId w : g.rotations[tip]) {
            if (static_cast<int>(cycles.size()) >= cap) return;
            if (w == start && path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
            if (w > start && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };
    for (VertexId s = 1; s <= g.vertex_count && static_cast<int>(cycles.size()) < cap; ++s) {
        path = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(s, s);
    }
    return cycles;
}

}  // namespace detail

/// Euler characteristic and face-length bookkeeping over the generator mix.
inline VerificationReport verify_embedding_suite(const SuiteOptions& opt, int max_n = 64) {
    VerificationReport report;
    report.name = "embedding";
    std::vector<CheckRecord> records(static_cast<size_t>(opt.trials));
    detail::run_indexed(opt.trials, opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "embedding";
        std::string desc;
        auto g = detail::mixed_instance(opt.seed + static_cast<std::uint64_t>(i), max_n, desc);
        tr.rec.instance = desc;
        long long faces_sum = 0;
        for (const auto& f : g.faces) faces_sum += f.length();
        bool euler = g.vertex_count - g.edge_count + static_cast<int>(g.faces.size()) == 2;
        bool face_sum = faces_sum == 2ll * g.edge_count;
        if (euler && face_sum)
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
        else
            records[static_cast<size_t>(i)] =
                tr.finish(CheckStatus::Fail, euler ? "face-length sum != 2e" : "euler violated",
                          detail::graph_payload(g, desc));
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// m(G) = 0 iff near-triangulation; inserting the fan chords zeroes m.
inline VerificationReport verify_missing_edge_suite(const SuiteOptions& opt, int max_n = 64) {
    VerificationReport report;
    report.name = "missing-edges";
    std::vector<CheckRecord> records(static_cast<size_t>(opt.trials));
    detail::run_indexed(opt.trials, opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "missing-edges";
        std::string desc;
        auto g = detail::mixed_instance(opt.seed + static_cast<std::uint64_t>(i), max_n, desc);
        tr.rec.instance = desc;
        if (!is_two_connected(g)) {
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Skip, "not 2-connected");
            return;
        }
        int m = missing_edge_count(g);
        bool iff = (m == 0) == is_near_triangulation(g);
        auto chords = triangulating_chords(g);
        auto filled = with_holes_triangulated(g);
        bool chord_count = static_cast<int>(chords.size()) == m;
        bool zeroed = missing_edge_count(filled) == 0 && is_near_triangulation(filled);
        if (iff && chord_count && zeroed)
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
        else
            records[static_cast<size_t>(i)] = tr.finish(
                CheckStatus::Fail,
                !iff ? "m = 0 mismatch with near-triangulation"
                     : (!chord_count ? "chord count != m" : "chord insertion left a hole"),
                detail::graph_payload(g, desc));
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Witness extraction across t: every qualifying instance must certify.
inline VerificationReport verify_extraction_suite(const SuiteOptions& opt, int t_min = 4,
                                                  int t_max = 8, int per_t = 500, int max_n = 64) {
    VerificationReport report;
    report.name = "extraction";
    struct Task {
        int t;
        PlaneGraph graph;
        std::string desc;
    };
    std::vector<Task> tasks;
    for (int t = t_min; t <= t_max; ++t) {
        std::uint64_t seed = opt.seed * 1000003ull + static_cast<std::uint64_t>(t);
        int found = 0;
        while (found < per_t) {
            ++seed;
            Rng rng(seed);
            int n = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - t + 1)));
            if (n < 4) continue;
            int cap = (n - (t - 1) - 1) / (3 * t - 7);  // largest m passing the strict test
            int target = cap <= 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
            auto supply = random_two_connected(n, target, seed);
            if (!extraction_hypothesis_holds(n, supply.achieved_m, t)) continue;
            std::ostringstream desc;
            desc << "random-2c n=" << n << " m=" << supply.achieved_m << " seed=" << seed
                 << " t=" << t;
            tasks.push_back({t, std::move(supply.graph), desc.str()});
            ++found;
        }
    }
    std::vector<CheckRecord> records(tasks.size());
    detail::run_indexed(static_cast<int>(tasks.size()), opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "extraction";
        const Task& task = tasks[static_cast<size_t>(i)];
        tr.rec.instance = task.desc;
        try {
            auto r = extract_near_triangulation(task.graph, task.t);
            if (r.witness && check_witness(task.graph, *r.witness, task.t))
                records[static_cast<size_t>(i)] = tr.finish(
                    CheckStatus::Pass, r.used_fallback ? "used fallback search" : std::string());
            else
                records[static_cast<size_t>(i)] =
                    tr.finish(CheckStatus::Fail,
                              r.witness ? "witness failed certification" : "no witness returned",
                              detail::graph_payload(task.graph, task.desc));
        } catch (const GraphError& e) {
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Fail, e.what(),
                                                        detail::graph_payload(task.graph, task.desc));
        }
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Subgraphs bounded by enumerated cycles stay 2-connected.
inline VerificationReport verify_bounded_subgraph_suite(const SuiteOptions& opt,
                                                        int cycles_per_instance = 50,
                                                        int max_n = 40) {
    VerificationReport report;
    report.name = "bounded-subgraphs";
    std::vector<CheckRecord> records(static_cast<size_t>(opt.trials));
    detail::run_indexed(opt.trials, opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "bounded-subgraphs";
        std::string desc;
        auto g = detail::mixed_instance(opt.seed + static_cast<std::uint64_t>(i), max_n, desc);
        tr.rec.instance = desc;
        if (!is_two_connected(g)) {
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Skip, "not 2-connected");
            return;
        }
        for (const auto& cyc : detail::enumerate_cycles(g, cycles_per_instance)) {
            try {
                auto sub = subgraph_bounded_by_cycle(g, cyc);
                if (!is_two_connected(sub.graph)) {
                    records[static_cast<size_t>(i)] =
                        tr.finish(CheckStatus::Fail, "bounded subgraph not 2-connected",
                                  detail::graph_payload(g, desc));
                    return;
                }
            } catch (const GraphError& e) {
                records[static_cast<size_t>(i)] =
                    tr.finish(CheckStatus::Fail, e.what(), detail::graph_payload(g, desc));
                return;
            }
        }
        records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Deleting an outer-cycle vertex exposes at least block_count - 1 joinable
/// edges, each validating against the face data.
inline VerificationReport verify_joinable_suite(const SuiteOptions& opt, int max_n = 40) {
    VerificationReport report;
    report.name = "joinable";
    std::vector<CheckRecord> records(static_cast<size_t>(opt.trials));
    detail::run_indexed(opt.trials, opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "joinable";
        std::string desc;
        auto g = detail::mixed_instance(opt.seed + static_cast<std::uint64_t>(i), max_n, desc);
        tr.rec.instance = desc;
        if (!is_two_connected(g)) {
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Skip, "not 2-connected");
            return;
        }
        auto outer = g.outer_face().vertex_set();
        for (VertexId v : outer) {
            DeletionJoinables res;
            try {
                res = joinable_after_deletion(g, v);
            } catch (const GraphError& e) {
                records[static_cast<size_t>(i)] =
                    tr.finish(CheckStatus::Fail, e.what(), detail::graph_payload(g, desc));
                return;
            }
            int required = res.block_count - 1 + opt.joinable_requirement_offset;
            if (static_cast<int>(res.witnesses.size()) < required) {
                records[static_cast<size_t>(i)] = tr.finish(
                    CheckStatus::Fail,
                    "v=" + std::to_string(v) + ": " + std::to_string(res.witnesses.size()) +
                        " witnesses < required " + std::to_string(required),
                    detail::graph_payload(g, desc));
                return;
            }
            // witness validation: non-edge, shared face, on the outer walk of G - v
            std::vector<char> on_walk(g.vertex_count + 1, 0);
            {
                auto rot = g.rotations;
                for (VertexId w : rot[v]) {
                    auto& list = rot[w];
                    list.erase(std::remove(list.begin(), list.end(), v), list.end());
                }
                rot[v].clear();
                for (const auto& e : g.outer_face().boundary) {
                    if (e.from != v && e.to != v) {
                        for (const auto& step : planegraph::detail::trace_orbit(rot, e))
                            on_walk[step.from] = 1;
                        break;
                    }
                }
            }
            for (const auto& je : res.witnesses) {
                bool ok = !g.has_edge(je.u, je.v) && je.face_id >= 0 &&
                          g.faces[je.face_id].contains_vertex(je.u) &&
                          g.faces[je.face_id].contains_vertex(je.v) && on_walk[je.u] &&
                          on_walk[je.v];
                if (!ok) {
                    records[static_cast<size_t>(i)] = tr.finish(
                        CheckStatus::Fail, "invalid joinable witness at v=" + std::to_string(v),
                        detail::graph_payload(g, desc));
                    return;
                }
            }
        }
        records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Near-triangulations contain a cycle of every length from 3 up to their
/// circumference.
inline VerificationReport verify_cycle_spectrum_suite(const SuiteOptions& opt, int max_n = 40) {
    VerificationReport report;
    report.name = "cycle-spectrum";
    std::vector<CheckRecord> records(static_cast<size_t>(opt.trials));
    SearchBudget budget =
        opt.budget_ms > 0 ? SearchBudget::millis(opt.budget_ms) : SearchBudget::unlimited();
    detail::run_indexed(opt.trials, opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "cycle-spectrum";
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
        Rng rng(seed * 31 + 17);
        int n = 8 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 7)));
        auto g = random_near_triangulation(n, seed);
        std::ostringstream desc;
        desc << "random-nt n=" << n << " seed=" << seed;
        tr.rec.instance = desc.str();
        auto longest = longest_cycle(g, budget);
        if (longest.status == SearchStatus::Budget) {
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Budget, "circumference search");
            return;
        }
        for (int k = 3; k <= longest.length; ++k) {
            std::optional<CycleWitness> w;
            try {
                w = cycle_of_length_exactly(g, k, budget);
            } catch (const GraphError&) {
                records[static_cast<size_t>(i)] =
                    tr.finish(CheckStatus::Budget, "k=" + std::to_string(k));
                return;
            }
            if (!w || !validate_cycle_witness(g, *w) || w->length() != k) {
                records[static_cast<size_t>(i)] =
                    tr.finish(CheckStatus::Fail, "no k-cycle at k=" + std::to_string(k) +
                                                     " though circumference is " +
                                                     std::to_string(longest.length),
                              detail::graph_payload(g, tr.rec.instance));
                return;
            }
        }
        records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Circuit graphs on at least ceil(k^(log2 3)) vertices reach circumference k.
inline VerificationReport verify_min_order_cycle_suite(const SuiteOptions& opt, int per_k = 100) {
    VerificationReport report;
    report.name = "min-order-cycle";
    struct Task {
        int k;
        int n;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (int k : {3, 4, 5}) {
        int min_n = static_cast<int>(std::ceil(pow_snapped(k, log2_3())));
        for (int i = 0; i < per_k; ++i) {
            std::uint64_t seed = opt.seed * 7919ull + static_cast<std::uint64_t>(k * 1000 + i);
            Rng rng(seed);
            int n = min_n + static_cast<int>(rng.below(12));
            tasks.push_back({k, n, seed});
        }
    }
    std::vector<CheckRecord> records(tasks.size());
    detail::run_indexed(static_cast<int>(tasks.size()), opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "min-order-cycle";
        const Task& task = tasks[static_cast<size_t>(i)];
        auto g = random_near_triangulation(task.n, task.seed);
        std::ostringstream desc;
        desc << "random-nt n=" << task.n << " seed=" << task.seed << " k=" << task.k;
        tr.rec.instance = desc.str();
        if (!is_circuit_graph(g)) {
            records[static_cast<size_t>(i)] = tr.finish(
                CheckStatus::Fail, "near-triangulation failed the circuit-graph predicate",
                detail::graph_payload(g, tr.rec.instance));
            return;
        }
        auto longest = longest_cycle(g);
        if (longest.length >= task.k)
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
        else
            records[static_cast<size_t>(i)] =
                tr.finish(CheckStatus::Fail,
                          "circumference " + std::to_string(longest.length) + " below k",
                          detail::graph_payload(g, tr.rec.instance));
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Glued family: order, edge bound, lobe circumferences, and no two
/// disjoint k-cycles.
inline VerificationReport verify_glued_suite(const SuiteOptions& opt,
                                             const std::vector<int>& k_list = {7, 14},
                                             int max_n = 40) {
    VerificationReport report;
    report.name = "glued";
    struct Task {
        int k, n;
    };
    std::vector<Task> tasks;
    for (int k : k_list) {
        int m = static_cast<int>(std::floor(pow_snapped(2.0 * k / 7.0, log2_3())));
        if (m < 3) continue;
        for (int n = m; n <= max_n; ++n) tasks.push_back({k, n});
    }
    std::vector<CheckRecord> records(tasks.size());
    SearchBudget budget =
        opt.budget_ms > 0 ? SearchBudget::millis(opt.budget_ms) : SearchBudget::unlimited();
    detail::run_indexed(static_cast<int>(tasks.size()), opt.workers, [&](int i) {
        detail::TimedRecord tr;
        tr.rec.suite = "glued";
        const Task& task = tasks[static_cast<size_t>(i)];
        auto r = glued_construction(task.n, task.k);
        tr.rec.instance = glued_spec_line(r.spec);
        std::string failure;
        if (r.graph.vertex_count != task.n) failure = "order mismatch";
        if (failure.empty() &&
            r.graph.edge_count < 3 * task.n - 12 - r.spec.t_copies)
            failure = "edge count below 3n-12-t";
        if (failure.empty()) {
            for (int order : r.lobe_orders) {
                auto lobe = moon_moser_subtriangulation(order);
                try {
                    if (!circumference_upper_check(lobe, task.k, budget)) {
                        failure = "lobe of order " + std::to_string(order) +
                                  " reaches circumference >= k";
                        break;
                    }
                } catch (const GraphError&) {
                    records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Budget, "lobe check");
                    return;
                }
            }
        }
        if (failure.empty()) {
            try {
                if (two_disjoint_k_cycles(r.graph, task.k, budget).has_value())
                    failure = "found two disjoint k-cycles";
            } catch (const GraphError&) {
                records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Budget, "pair search");
                return;
            }
        }
        if (failure.empty())
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Pass);
        else
            records[static_cast<size_t>(i)] = tr.finish(CheckStatus::Fail, failure,
                                                        detail::graph_payload(r.graph, tr.rec.instance));
    });
    report.records = std::move(records);
    report.sort_records();
    return report;
}

/// Formula-level sandwich: the construction's edge count stays below the
/// upper bound for k in [7,20] at n = ceil(8 k^(log2 3)) and ten times that.
inline VerificationReport verify_bound_formula_suite(const SuiteOptions&) {
    VerificationReport report;
    report.name = "bound-formulas";
    for (int k = 7; k <= 20; ++k) {
        int base = static_cast<int>(std::ceil(8.0 * pow_snapped(k, log2_3())));
        for (int n : {base, 10 * base}) {
            detail::TimedRecord tr;
            tr.rec.suite = "bound-formulas";
            tr.rec.instance = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            auto p = bounds_profile(n, 4, k);
            if (!p.two_ck_lower) {
                report.records.push_back(tr.finish(CheckStatus::Fail, "lower bound undefined"));
                continue;
            }
            if (*p.two_ck_lower < p.two_ck_upper)
                report.records.push_back(tr.finish(CheckStatus::Pass));
            else
                report.records.push_back(
                    tr.finish(CheckStatus::Fail, "lower bound not below upper bound"));
        }
    }
    {
        detail::TimedRecord tr;
        tr.rec.suite = "bound-formulas";
        tr.rec.instance = "snap k=14";
        bool exact = pow_snapped(2.0 * 14 / 7.0, log2_3()) == 9.0;
        report.records.push_back(exact ? tr.finish(CheckStatus::Pass)
                                       : tr.finish(CheckStatus::Fail, "snap missed 9"));
    }
    report.sort_records();
    return report;
}

/// Short-circumference family: closed-form orders, the order-7 Hamilton
/// cycle, the exact level-2 circumference, and the level-3 decision bound
/// ceil(3.5 * 43^(log3 2)) = 38.
inline VerificationReport verify_short_circumference_suite(const SuiteOptions& opt) {
    VerificationReport report;
    report.name = "short-circumference";
    {
        detail::TimedRecord tr;
        tr.rec.suite = "short-circumference";
        tr.rec.instance = "orders 4,7,16,43";
        bool ok = true;
        for (int level = 0; level <= 3; ++level)
            ok = ok && moon_moser(level).vertex_count == moon_moser_order(level);
        ok = ok && moon_moser_order(0) == 4 && moon_moser_order(1) == 7 &&
             moon_moser_order(2) == 16 && moon_moser_order(3) == 43;
        report.records.push_back(
            ok ? tr.finish(CheckStatus::Pass) : tr.finish(CheckStatus::Fail, "order mismatch"));
    }
    {
        detail::TimedRecord tr;
        tr.rec.suite = "short-circumference";
        tr.rec.instance = "level 1 circumference";
        auto r = longest_cycle(moon_moser(1));
        report.records.push_back(r.status == SearchStatus::Exact && r.length == 7
                                     ? tr.finish(CheckStatus::Pass)
                                     : tr.finish(CheckStatus::Fail,
                                                 "expected 7, got " + std::to_string(r.length)));
    }
    {
        detail::TimedRecord tr;
        tr.rec.suite = "short-circumference";
        tr.rec.instance = "level 2 circumference exact";
        SearchBudget budget = SearchBudget::millis(opt.budget_ms > 0 ? opt.budget_ms : 60'000);
        auto r = longest_cycle(moon_moser(2), budget);
        if (r.status != SearchStatus::Exact)
            report.records.push_back(tr.finish(CheckStatus::Budget, "level-2 search"));
        else
            report.records.push_back(
                tr.finish(CheckStatus::Pass, "circumference=" + std::to_string(r.length)));
    }
    {
        detail::TimedRecord tr;
        tr.rec.suite = "short-circumference";
        tr.rec.instance = "level 3 bound 38";
        int bound = static_cast<int>(std::ceil(3.5 * pow_snapped(43.0, log3_2())));
        if (bound != 38) {
            report.records.push_back(tr.finish(CheckStatus::Fail, "bound arithmetic off"));
        } else {
            SearchBudget budget = SearchBudget::millis(opt.budget_ms > 0 ? opt.budget_ms : 600'000);
            try {
                bool proven = circumference_upper_check(moon_moser(3), bound, budget);
                report.records.push_back(proven ? tr.finish(CheckStatus::Pass)
                                                : tr.finish(CheckStatus::Fail,
                                                            "found a cycle of length >= 38"));
            } catch (const GraphError&) {
                report.records.push_back(tr.finish(CheckStatus::Budget, "level-3 decision"));
            }
        }
    }
    report.sort_records();
    return report;
}

/// The four structural property suites in one run.
inline VerificationReport verify_property_suite(const SuiteOptions& opt) {
    VerificationReport combined;
    combined.name = "properties";
    auto absorb = [&](VerificationReport r) {
        combined.records.insert(combined.records.end(), r.records.begin(), r.records.end());
    };
    absorb(verify_bounded_subgraph_suite(opt));
    absorb(verify_joinable_suite(opt));
    absorb(verify_cycle_spectrum_suite(opt));
    absorb(verify_min_order_cycle_suite(opt, opt.trials / 2));
    combined.sort_records();
    return combined;
}

}  // namespace planegraph
