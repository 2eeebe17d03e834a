#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <istream>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "distk/canonical.hpp"
#include "distk/constructions.hpp"
#include "distk/distance.hpp"
#include "distk/enumerate.hpp"
#include "distk/graph.hpp"
#include "distk/graph6.hpp"
#include "distk/properties.hpp"

namespace distk {

enum class Source { Internal, File };

// One exact extremal computation: maximize |E(G_k)| over n-vertex graphs in
// the class, subject to omega(G_k) <= t.
struct SearchProblem {
    int n = 0;
    int k = 1;
    int t = 2;
    ClassFilter filter = ClassFilter::All;
    Source source = Source::Internal;
};

struct SearchOutcome {
    long long optimum = 0;
    std::vector<CanonicalForm> extremal;  // ascending certificate bytes
    std::uint64_t enumerated = 0;         // isomorphism classes visited (after the class filter)
    double elapsed_ms = 0.0;

    std::vector<std::string> witness_g6() const {
        std::vector<std::string> out;
        out.reserve(extremal.size());
        for (const auto& c : extremal) out.push_back(c.bytes);
        return out;
    }
};

class EmptySearchSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int default_thread_count() {
    if (const char* env = std::getenv("DISTK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

struct SolveOptions {
    int threads = 0;  // <= 0 means default_thread_count()
    int enum_cap = kDefaultEnumerationCap;
};

namespace detail {

struct ShardResult {
    bool any = false;
    long long best = 0;
    std::vector<std::string> certs;
    std::uint64_t visited = 0;

    void offer(long long value, const std::string& cert) {
        if (!any || value > best) {
            any = true;
            best = value;
            certs.assign(1, cert);
        } else if (value == best) {
            certs.push_back(cert);
        }
    }

    void merge(const ShardResult& other) {
        visited += other.visited;
        if (!other.any) return;
        if (!any || other.best > best) {
            any = true;
            best = other.best;
            certs = other.certs;
        } else if (other.best == best) {
            certs.insert(certs.end(), other.certs.begin(), other.certs.end());
        }
    }
};

// Evaluator: returns the objective value, or nullopt when the graph violates
// the per-graph constraint (it still counts as visited).
using Evaluator = std::function<std::optional<long long>(const Graph&)>;

// Deterministic parallel fold over the generation tree: the tree is split at
// a fixed level into independent root subtrees, workers pull roots from a
// shared queue, and partial results merge by (max, tie -> union). The merged
// outcome does not depend on the worker count or schedule.
inline SearchOutcome run_sharded(int n, ClassFilter filter, const Evaluator& evaluate,
                                 const SolveOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    bool hereditary_tf = filter == ClassFilter::TriangleFreeNonbipartite;

    auto consume = [&](const Graph& g, const CanonicalForm& cert, ShardResult& local) {
        if (!passes_filter(g, filter)) return;
        ++local.visited;
        if (auto value = evaluate(g)) local.offer(*value, cert.bytes);
    };

    ShardResult total;
    if (n == 1) {
        Graph g(1);
        consume(g, canonical_form(g), total);
    } else {
        int root_level = std::min(n - 1, 7);
        std::vector<Graph> roots = collect_level(root_level, hereditary_tf);
        int threads = opts.threads > 0 ? opts.threads : default_thread_count();
        threads = std::max(1, std::min<int>(threads, static_cast<int>(roots.size())));

        if (threads == 1) {
            for (const Graph& root : roots)
                expand_to(root, n, hereditary_tf,
                          [&](const Graph& g, const CanonicalForm& cert) { consume(g, cert, total); });
        } else {
            std::atomic<std::size_t> next{0};
            std::mutex merge_mutex;
            auto worker = [&]() {
                ShardResult local;
                for (;;) {
                    std::size_t idx = next.fetch_add(1);
                    if (idx >= roots.size()) break;
                    expand_to(roots[idx], n, hereditary_tf,
                              [&](const Graph& g, const CanonicalForm& cert) { consume(g, cert, local); });
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                total.merge(local);
            };
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    if (total.visited == 0)
        throw EmptySearchSpaceError("search: no graph matches the requested class");
    if (!total.any)
        throw EmptySearchSpaceError("search: no graph satisfies the constraints");

    SearchOutcome outcome;
    outcome.optimum = total.best;
    std::set<std::string> unique(total.certs.begin(), total.certs.end());
    outcome.extremal.reserve(unique.size());
    for (const auto& c : unique) outcome.extremal.push_back(CanonicalForm{c});
    outcome.enumerated = total.visited;
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

inline Evaluator distance_clique_evaluator(int k, int t) {
    return [k, t](const Graph& g) -> std::optional<long long> {
        Graph gk = distance_k_graph(g, k);
        bool ok = t == 2 ? is_triangle_free(gk) : !has_clique_of_size(gk, t + 1);
        if (!ok) return std::nullopt;
        return edge_count(gk);
    };
}

inline void validate_problem(const SearchProblem& p, const SolveOptions& opts) {
    if (p.n < 2) throw std::invalid_argument("solve: n >= 2 required");
    if (p.k < 1) throw std::invalid_argument("solve: k >= 1 required");
    if (p.t < 2) throw std::invalid_argument("solve: t >= 2 required");
    if (p.source == Source::Internal && p.n > opts.enum_cap)
        throw std::invalid_argument("solve: n = " + std::to_string(p.n) +
                                    " exceeds the internal generation cap " +
                                    std::to_string(opts.enum_cap));
}

}  // namespace detail

// Exact ex_k(n, K_{t+1}) over the enumerated class, with all extremal
// witnesses retained.
inline SearchOutcome solve(const SearchProblem& p, const SolveOptions& opts = {}) {
    detail::validate_problem(p, opts);
    return detail::run_sharded(p.n, p.filter, detail::distance_clique_evaluator(p.k, p.t), opts);
}

// Same objective evaluated over an externally supplied graph list (for
// cross-validation against independent enumerators). Graphs are deduplicated
// by certificate before evaluation.
inline SearchOutcome solve_over(const SearchProblem& p, std::span<const Graph> graphs,
                                const SolveOptions& opts = {}) {
    if (p.k < 1) throw std::invalid_argument("solve: k >= 1 required");
    if (p.t < 2) throw std::invalid_argument("solve: t >= 2 required");
    auto start = std::chrono::steady_clock::now();
    auto evaluate = detail::distance_clique_evaluator(p.k, p.t);
    detail::ShardResult total;
    std::set<std::string> seen;
    for (const Graph& g : graphs) {
        if (g.n() != p.n)
            throw std::invalid_argument("solve: stream graph has " + std::to_string(g.n()) +
                                        " vertices, expected " + std::to_string(p.n));
        if (!detail::passes_filter(g, p.filter)) continue;
        CanonicalForm cert = canonical_form(g);
        if (!seen.insert(cert.bytes).second) continue;
        ++total.visited;
        if (auto value = evaluate(g)) total.offer(*value, cert.bytes);
    }
    if (total.visited == 0)
        throw EmptySearchSpaceError("search: no graph matches the requested class");

    SearchOutcome outcome;
    outcome.optimum = total.best;
    std::set<std::string> unique(total.certs.begin(), total.certs.end());
    for (const auto& c : unique) outcome.extremal.push_back(CanonicalForm{c});
    outcome.enumerated = total.visited;
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

// Maximum edge count of a triangle-free non-bipartite n-vertex graph; here
// the constraint is on G itself, so the hereditary generator does the work.
inline SearchOutcome solve_nonbipartite_triangle_free(int n, const SolveOptions& opts = {}) {
    if (n < 5) throw std::invalid_argument("solve_nonbipartite_triangle_free: n >= 5 required");
    if (n > opts.enum_cap)
        throw std::invalid_argument("solve_nonbipartite_triangle_free: n exceeds the generation cap");
    return detail::run_sharded(
        n, ClassFilter::TriangleFreeNonbipartite,
        [](const Graph& g) -> std::optional<long long> { return edge_count(g); }, opts);
}

// Comparison of the distance-two extremal classes found by search against
// the constructed family.
struct CharacterizationReport {
    int n = 0;
    bool equal = false;
    std::vector<std::string> missing;  // constructed classes the search did not report
    std::vector<std::string> extra;    // search witnesses outside the constructed family
    std::size_t family_classes = 0;
    SearchOutcome search;
};

inline CharacterizationReport characterize(int n, const SolveOptions& opts = {}) {
    if (n < 5) throw std::invalid_argument("characterize: n >= 5 required");
    CharacterizationReport report;
    report.n = n;
    report.search = solve({.n = n, .k = 2, .t = 2}, opts);

    std::set<std::string> family;
    for (const Graph& g : enumerate_g2_extremal_family(n)) family.insert(canonical_form(g).bytes);
    report.family_classes = family.size();

    std::set<std::string> found;
    for (const auto& c : report.search.extremal) found.insert(c.bytes);

    for (const auto& cert : family)
        if (!found.count(cert)) report.missing.push_back(cert);
    for (const auto& cert : found)
        if (!family.count(cert)) report.extra.push_back(cert);
    report.equal = report.missing.empty() && report.extra.empty();
    return report;
}

// ---- graph6 stream ingestion --------------------------------------------------

struct Graph6Ingest {
    std::vector<Graph> graphs;                 // input order preserved
    std::vector<std::size_t> duplicate_lines;  // 1-based; only filled with dedup_check
};

inline Graph6Ingest ingest_graph6_stream(std::istream& in, bool dedup_check = false) {
    Graph6Ingest result;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            result.graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw e.with_line(line_no);
        }
        if (dedup_check && !seen.insert(canonical_form(result.graphs.back()).bytes).second)
            result.duplicate_lines.push_back(line_no);
    }
    return result;
}

}  // namespace distk
