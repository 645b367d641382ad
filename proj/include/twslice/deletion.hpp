#ifndef TWSLICE_DELETION_HPP
#define TWSLICE_DELETION_HPP

#include <cstdint>
#include <vector>

#include "twslice/graph.hpp"
#include "twslice/ordering.hpp"

namespace twslice {

enum class ScoreKind { degree, betweenness, tw_delta, tree_trim };

const char* to_string(ScoreKind k);
std::optional<ScoreKind> score_kind_from_string(const std::string& s);

enum class TieBreak { lexicographic, seeded_random };

/// Configuration of the greedy deletion loop. recalc_every = k asks for
/// a fresh elimination order of the reduced graph after every k
/// removals (0 = keep trimming the input order).
struct ScoreOptions {
    ScoreKind kind = ScoreKind::tree_trim;
    TieBreak tie_break = TieBreak::lexicographic;
    uint64_t seed = 0;
    int recalc_every = 0;
    OrderHeuristic recalc_heuristic = OrderHeuristic::min_fill;
    int recalc_restarts = 1;
};

/// Result of greedy deletion: removed vertices in removal order, the
/// reduced graph, the trimmed (or recalculated) order covering it, the
/// width that order realizes, and the width after every single removal.
struct SlicePlan {
    std::vector<VertexId> mu;
    Graph reduced_graph;
    EliminationOrder reduced_order;
    int tau = 0;
    std::vector<int> per_step_tau;
};

/// Removes m vertices one at a time, each step taking the argmax of the
/// configured score on the current reduced graph. The relative order of
/// the surviving vertices is preserved unless recalc_every kicks in.
SlicePlan greedy_treewidth_deletion(const Graph& g, const EliminationOrder& pi, int m,
                                    const ScoreOptions& opts);

/// Max-degree vertex, smallest id on ties.
VertexId score_degree(const Graph& g);

/// Vertex of maximal betweenness centrality (unnormalized shortest-path
/// counting), smallest id on ties.
VertexId score_betweenness(const Graph& g);

/// Betweenness values for every live vertex (indexed by id); exposed so
/// tests can cross-check against an independent path-counting oracle.
std::vector<double> betweenness_centrality(const Graph& g);

/// Tries the removal of each vertex and returns the one whose trimmed
/// order loses the most width (first max in id order). When no removal
/// helps, falls back to the max-degree vertex.
VertexId score_tw_delta(const Graph& g, const EliminationOrder& pi);

/// Tree-trimming score: from the union of maximum-size bags of the
/// decomposition built along pi, pick the vertex whose bag subtree is
/// longest (node count), breaking ties by total subtree weight (sum of
/// bag sizes), then by the tie policy.
VertexId score_tree_trim(const Graph& g, const EliminationOrder& pi,
                         TieBreak tie_break = TieBreak::lexicographic, uint64_t seed = 0);

} // namespace twslice

#endif
