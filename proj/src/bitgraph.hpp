#ifndef TWSLICE_BITGRAPH_HPP
#define TWSLICE_BITGRAPH_HPP

// Internal bitset adjacency used by the elimination hot loops. Not part
// of the public API; the public Graph stays set-based.

#include <bit>
#include <cstdint>
#include <vector>

#include "twslice/graph.hpp"

namespace twslice::detail {

struct BitGraph {
    int n = 0;     // id bound (rows are indexed by VertexId)
    int words = 0; // 64-bit words per row
    std::vector<uint64_t> rows;
    std::vector<uint64_t> alive;

    BitGraph() = default;

    explicit BitGraph(const Graph& g) {
        n = g.id_bound();
        words = (n + 63) / 64;
        rows.assign(static_cast<size_t>(n) * words, 0);
        alive.assign(words, 0);
        for (VertexId u : g.vertices()) {
            set_bit(alive.data(), u);
            for (VertexId v : g.neighbors(u))
                set_bit(row(u), v);
        }
    }

    uint64_t* row(int u) { return rows.data() + static_cast<size_t>(u) * words; }
    const uint64_t* row(int u) const { return rows.data() + static_cast<size_t>(u) * words; }

    static void set_bit(uint64_t* r, int i) { r[i >> 6] |= uint64_t{1} << (i & 63); }
    static void clear_bit(uint64_t* r, int i) { r[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    static bool test_bit(const uint64_t* r, int i) { return (r[i >> 6] >> (i & 63)) & 1; }

    bool is_alive(int u) const { return test_bit(alive.data(), u); }

    int deg(int u) const {
        int d = 0;
        const uint64_t* r = row(u);
        for (int w = 0; w < words; ++w)
            d += std::popcount(r[w]);
        return d;
    }

    /// Neighborhood as a list of ids (ascending).
    void neighbor_list(int u, std::vector<int>& out) const {
        out.clear();
        const uint64_t* r = row(u);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    /// Connect N(u) into a clique, then drop u.
    void eliminate(int u, std::vector<int>& scratch) {
        neighbor_list(u, scratch);
        const uint64_t* ru = row(u);
        for (int v : scratch) {
            uint64_t* rv = row(v);
            for (int w = 0; w < words; ++w)
                rv[w] |= ru[w];
            clear_bit(rv, v); // no self loops
        }
        remove(u, scratch);
    }

    /// Drop u with no fill. `nbs` must hold N(u).
    void remove(int u, const std::vector<int>& nbs) {
        for (int v : nbs)
            clear_bit(row(v), u);
        uint64_t* ru = row(u);
        for (int w = 0; w < words; ++w)
            ru[w] = 0;
        clear_bit(alive.data(), u);
    }

    void remove_vertex(int u) {
        std::vector<int> nbs;
        neighbor_list(u, nbs);
        remove(u, nbs);
    }
};

} // namespace twslice::detail

#endif
