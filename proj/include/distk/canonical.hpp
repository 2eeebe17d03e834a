#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "distk/graph.hpp"
#include "distk/graph6.hpp"

namespace distk {

// Relabeling-invariant certificate: the graph6 encoding of the canonically
// labeled graph. Equal certificates iff isomorphic.
struct CanonicalForm {
    std::string bytes;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalAnalysis {
    CanonicalForm form;
    std::array<std::uint8_t, kMaxVertices> order{};  // position -> original vertex
    // Vertices that occupy the last canonical position in some minimal
    // labeling, i.e. one full automorphism orbit. Drives the canonical
    // parent test during isomorph-free generation.
    std::uint64_t last_orbit = 0;
};

namespace detail {

constexpr int kMaxWords = (kMaxVertices * (kMaxVertices - 1) / 2 + 63) / 64;

struct CanonWorkspace {
    std::uint8_t sig[kMaxVertices][kMaxVertices];
    int cell_begin[kMaxVertices + 1];
    int cell_len[kMaxVertices];
    std::uint64_t cell_mask[kMaxVertices];
    int loc[kMaxVertices];
    std::uint8_t vcopy[kMaxVertices];
    std::uint64_t scratch_words[kMaxWords];
    int uf[kMaxVertices];
    std::vector<std::array<std::uint8_t, kMaxVertices>> gens;
};

inline CanonWorkspace& canon_workspace() {
    thread_local CanonWorkspace ws;
    return ws;
}

// Ordered partition of the vertices: order[pos] is the vertex at position
// pos, new_cell[pos] marks cell starts (new_cell[n] is a sentinel).
struct CanonState {
    std::array<std::uint8_t, kMaxVertices> order;
    std::array<bool, kMaxVertices + 1> new_cell;
};

// Individualization-refinement search for the lexicographically minimal
// upper-triangle adjacency bitstring over all discrete refinements.
struct CanonSearch {
    const Graph& g;
    int n;
    int word_count;
    CanonWorkspace& ws;

    bool have_best = false;
    std::uint64_t best_words[kMaxWords];
    std::array<std::uint8_t, kMaxVertices> best_order{};
    std::uint64_t collected_last = 0;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.n()), word_count((graph.n() * (graph.n() - 1) / 2 + 63) / 64),
          ws(canon_workspace()) {
        ws.gens.clear();
    }

    // Equitable refinement: repeatedly split cells by neighbor counts against
    // the cells of the partition, until stable. Cell masks are snapshotted at
    // the start of each pass, and fragments are ordered by signature, so the
    // result is invariant under vertex relabeling.
    void refine(CanonState& st) {
        for (;;) {
            int m = 0;
            for (int pos = 0; pos < n;) {
                int end = pos + 1;
                while (end < n && !st.new_cell[end]) ++end;
                ws.cell_begin[m] = pos;
                ws.cell_len[m] = end - pos;
                std::uint64_t mask = 0;
                for (int i = pos; i < end; ++i) mask |= std::uint64_t{1} << st.order[i];
                ws.cell_mask[m] = mask;
                ++m;
                pos = end;
            }
            bool changed = false;
            for (int ci = 0; ci < m; ++ci) {
                int begin = ws.cell_begin[ci], len = ws.cell_len[ci];
                if (len <= 1) continue;
                for (int i = 0; i < len; ++i) {
                    int v = st.order[begin + i];
                    for (int cj = 0; cj < m; ++cj)
                        ws.sig[i][cj] =
                            static_cast<std::uint8_t>(std::popcount(g.neighbors(v) & ws.cell_mask[cj]));
                }
                for (int i = 0; i < len; ++i) {
                    ws.loc[i] = i;
                    ws.vcopy[i] = st.order[begin + i];
                }
                for (int i = 1; i < len; ++i) {
                    int li = ws.loc[i], j = i - 1;
                    while (j >= 0 && std::memcmp(ws.sig[li], ws.sig[ws.loc[j]], m) < 0) {
                        ws.loc[j + 1] = ws.loc[j];
                        --j;
                    }
                    ws.loc[j + 1] = li;
                }
                for (int i = 0; i < len; ++i) st.order[begin + i] = ws.vcopy[ws.loc[i]];
                for (int i = 1; i < len; ++i) {
                    if (std::memcmp(ws.sig[ws.loc[i]], ws.sig[ws.loc[i - 1]], m) != 0) {
                        if (!st.new_cell[begin + i]) {
                            st.new_cell[begin + i] = true;
                            changed = true;
                        }
                    }
                }
            }
            if (!changed) return;
        }
    }

    int leading_singletons(const CanonState& st) const {
        int ls = 0;
        while (ls < n && st.new_cell[ls] && st.new_cell[ls + 1]) ++ls;
        return ls;
    }

    // Packs adjacency bits for positions [0, limit) in graph6 column-major
    // order, most significant bit first, into ws.scratch_words.
    void pack_words(const CanonState& st, int limit) {
        int wc = (limit * (limit - 1) / 2 + 63) / 64;
        for (int w = 0; w < wc; ++w) ws.scratch_words[w] = 0;
        int b = 0;
        for (int j = 1; j < limit; ++j) {
            int vj = st.order[j];
            for (int i = 0; i < j; ++i, ++b)
                if (g.adjacent(st.order[i], vj))
                    ws.scratch_words[b >> 6] |= std::uint64_t{1} << (63 - (b & 63));
        }
    }

    // Lexicographic comparison of the first `bits` packed bits against best:
    // -1 smaller, 0 equal, +1 greater.
    int compare_prefix(int bits) const {
        int full = bits >> 6, rem = bits & 63;
        for (int w = 0; w < full; ++w) {
            if (ws.scratch_words[w] != best_words[w])
                return ws.scratch_words[w] < best_words[w] ? -1 : 1;
        }
        if (rem) {
            std::uint64_t mask = ~std::uint64_t{0} << (64 - rem);
            std::uint64_t a = ws.scratch_words[full] & mask, b = best_words[full] & mask;
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void handle_leaf(const CanonState& st) {
        pack_words(st, n);
        int total_bits = n * (n - 1) / 2;
        int cmp = have_best ? compare_prefix(total_bits) : -1;
        if (cmp < 0) {
            for (int w = 0; w < word_count; ++w) best_words[w] = ws.scratch_words[w];
            best_order = st.order;
            collected_last = std::uint64_t{1} << st.order[n - 1];
            have_best = true;
        } else if (cmp == 0) {
            collected_last |= std::uint64_t{1} << st.order[n - 1];
            std::array<std::uint8_t, kMaxVertices> aut{};
            bool identity = true;
            for (int i = 0; i < n; ++i) {
                aut[st.order[i]] = best_order[i];
                identity = identity && st.order[i] == best_order[i];
            }
            if (!identity) ws.gens.push_back(aut);
        }
    }

    int uf_find(int v) {
        while (ws.uf[v] != v) {
            ws.uf[v] = ws.uf[ws.uf[v]];
            v = ws.uf[v];
        }
        return v;
    }

    // Orbits of the subgroup generated by automorphisms fixing `fixed`
    // pointwise, as a union-find over ws.uf.
    void build_orbits(std::uint64_t fixed) {
        for (int v = 0; v < n; ++v) ws.uf[v] = v;
        for (const auto& gen : ws.gens) {
            bool ok = true;
            std::uint64_t scan = fixed;
            while (scan && ok) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                ok = gen[v] == v;
            }
            if (!ok) continue;
            for (int v = 0; v < n; ++v) {
                int a = uf_find(v), b = uf_find(gen[v]);
                if (a != b) ws.uf[a] = b;
            }
        }
    }

    void recurse(const CanonState& parent, std::uint64_t path) {
        CanonState st = parent;
        refine(st);
        int ls = leading_singletons(st);
        if (have_best && ls >= 2) {
            pack_words(st, ls);
            if (compare_prefix(ls * (ls - 1) / 2) > 0) return;
        }
        if (ls == n) {
            handle_leaf(st);
            return;
        }
        int begin = ls;
        int end = begin + 1;
        while (end < n && !st.new_cell[end]) ++end;
        int len = end - begin;

        std::uint8_t cell[kMaxVertices];
        for (int i = 0; i < len; ++i) cell[i] = st.order[begin + i];

        int tried_roots[kMaxVertices];
        int tried_count = 0;
        for (int i = 0; i < len; ++i) {
            int v = cell[i];
            build_orbits(path);
            int root = uf_find(v);
            bool skip = false;
            for (int t = 0; t < tried_count && !skip; ++t) skip = uf_find(tried_roots[t]) == root;
            if (skip) continue;
            tried_roots[tried_count++] = v;

            CanonState child = st;
            // Individualize v: move it to the front of its cell.
            int at = begin;
            while (child.order[at] != v) ++at;
            for (int p = at; p > begin; --p) child.order[p] = child.order[p - 1];
            child.order[begin] = v;
            child.new_cell[begin + 1] = true;
            recurse(child, path | (std::uint64_t{1} << v));
        }
    }

    CanonicalAnalysis run() {
        CanonState root;
        for (int i = 0; i < n; ++i) root.order[i] = static_cast<std::uint8_t>(i);
        root.new_cell.fill(false);
        root.new_cell[0] = true;
        root.new_cell[n] = true;
        recurse(root, 0);

        CanonicalAnalysis result;
        result.order = best_order;
        int perm[kMaxVertices];
        for (int i = 0; i < n; ++i) perm[best_order[i]] = i;
        result.form.bytes = emit_graph6(permuted(g, std::span<const int>(perm, n)));

        std::uint64_t orbit = collected_last;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& gen : ws.gens) {
                std::uint64_t scan = orbit;
                while (scan) {
                    int v = std::countr_zero(scan);
                    scan &= scan - 1;
                    std::uint64_t bit = std::uint64_t{1} << gen[v];
                    if (!(orbit & bit)) {
                        orbit |= bit;
                        grew = true;
                    }
                }
            }
        }
        result.last_orbit = orbit;
        return result;
    }
};

}  // namespace detail

inline CanonicalAnalysis canonical_analyze(const Graph& g) {
    detail::CanonSearch search(g);
    return search.run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_analyze(g).form; }

inline Graph canonical_relabel(const Graph& g) {
    auto analysis = canonical_analyze(g);
    int perm[kMaxVertices];
    for (int i = 0; i < g.n(); ++i) perm[analysis.order[i]] = i;
    return permuted(g, std::span<const int>(perm, g.n()));
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    if (edge_count(a) != edge_count(b)) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace distk
