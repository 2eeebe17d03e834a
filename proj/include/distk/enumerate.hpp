#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "distk/canonical.hpp"
#include "distk/graph.hpp"
#include "distk/properties.hpp"

namespace distk {

// Graph classes the generator can be restricted to. TriangleFreeNonbipartite
// constrains the generated graph itself (not its distance graph); triangle
// freeness is hereditary, so that filter prunes the generation tree.
enum class ClassFilter { All, Connected, TriangleFreeNonbipartite };

inline constexpr int kDefaultEnumerationCap = 10;

namespace detail {

inline bool mask_spans_edge(const Graph& g, std::uint64_t mask) {
    std::uint64_t scan = mask;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (g.neighbors(v) & scan) return true;
    }
    return false;
}

// Canonical augmentation: children of g are g plus one vertex joined to each
// subset of V(g); a child is kept iff its new vertex lies in the canonical
// last-position orbit (so deleting the canonically chosen vertex recovers g),
// with isomorphic children of the same parent deduplicated by certificate.
template <typename Visitor>
void expand_to(const Graph& g, int target, bool triangle_free_only, Visitor&& visit) {
    if (g.n() == target) {
        visit(g, canonical_form(g));
        return;
    }
    int m = g.n();
    std::uint64_t subset_count = std::uint64_t{1} << m;
    std::unordered_set<std::string> accepted;
    for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
        if (triangle_free_only && mask_spans_edge(g, mask)) continue;
        Graph child = with_added_vertex(g, mask);
        CanonicalAnalysis analysis = canonical_analyze(child);
        if (!((analysis.last_orbit >> m) & 1u)) continue;
        if (!accepted.insert(analysis.form.bytes).second) continue;
        if (child.n() == target)
            visit(child, analysis.form);
        else
            expand_to(child, target, triangle_free_only, visit);
    }
}

// One representative per isomorphism class on `level` vertices.
inline std::vector<Graph> collect_level(int level, bool triangle_free_only) {
    std::vector<Graph> out;
    if (level < 1) return out;
    expand_to(Graph(1), level, triangle_free_only,
              [&](const Graph& g, const CanonicalForm&) { out.push_back(g); });
    return out;
}

inline bool passes_filter(const Graph& g, ClassFilter filter) {
    switch (filter) {
        case ClassFilter::All: return true;
        case ClassFilter::Connected: return is_connected(g);
        case ClassFilter::TriangleFreeNonbipartite: return !is_bipartite(g);
    }
    return false;
}

}  // namespace detail

// Visits exactly one representative per isomorphism class of n-vertex graphs
// matching the filter, in a deterministic order.
inline void enumerate(int n, ClassFilter filter,
                      const std::function<void(const Graph&, const CanonicalForm&)>& visit,
                      int cap = kDefaultEnumerationCap) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (n > cap)
        throw std::invalid_argument("enumerate: n = " + std::to_string(n) +
                                    " exceeds the feasibility cap " + std::to_string(cap));
    bool hereditary_tf = filter == ClassFilter::TriangleFreeNonbipartite;
    detail::expand_to(Graph(1), n, hereditary_tf, [&](const Graph& g, const CanonicalForm& cert) {
        if (detail::passes_filter(g, filter)) visit(g, cert);
    });
}

inline std::vector<Graph> enumerate_all(int n, ClassFilter filter = ClassFilter::All,
                                        int cap = kDefaultEnumerationCap) {
    std::vector<Graph> out;
    enumerate(n, filter, [&](const Graph& g, const CanonicalForm&) { out.push_back(g); }, cap);
    return out;
}

}  // namespace distk
