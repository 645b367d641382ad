#ifndef TWSLICE_ORDERING_HPP
#define TWSLICE_ORDERING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twslice/graph.hpp"

namespace twslice {

/// Sequence of vertices in elimination order: order[0] is summed out
/// first. Must cover the graph's vertex set exactly when evaluated.
using EliminationOrder = std::vector<VertexId>;

/// Rooted tree of bags. Bags are vertex subsets stored ascending;
/// tree_edges connect bag indices.
struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int root = -1;

    /// Max bag size minus one (0 when there are no bags).
    int width() const;

    /// Bag-index adjacency lists.
    std::vector<std::vector<int>> adjacency() const;
};

/// First violated decomposition property, with a witness.
/// property: 0 = tree structure, 1..3 = the covering/connectivity
/// properties in the usual order.
struct TdViolation {
    int property = 0;
    std::string detail;
};

/// Runs the elimination game along pi and returns the largest
/// neighborhood met, i.e. the width this order realizes on g.
int treewidth_from_order(const Graph& g, const EliminationOrder& pi);

enum class OrderHeuristic { min_fill, min_degree, random };

const char* to_string(OrderHeuristic h);
std::optional<OrderHeuristic> order_heuristic_from_string(const std::string& s);

struct OrderResult {
    EliminationOrder order;
    int treewidth = 0;
};

/// Greedy order search. Restart r perturbs ties with a shuffle seeded
/// from seed+r (restart 0 breaks ties by ascending id); the winner is
/// the lexicographically smallest (treewidth, order) pair, so results
/// do not depend on evaluation schedule. step_budget caps the total
/// number of elimination steps across restarts (0 = no cap); at least
/// one restart always runs.
OrderResult find_order(const Graph& g, OrderHeuristic heuristic, uint64_t seed = 0,
                       int restarts = 1, uint64_t step_budget = 0);

/// Exact treewidth via dynamic programming over vertex subsets.
/// Intended as an oracle for small graphs; throws when the graph has
/// more than cap vertices.
int exact_treewidth(const Graph& g, int cap = 16);

/// Builds a tree decomposition whose bags are the maximal cliques met
/// while eliminating along pi. Width equals treewidth_from_order(g, pi).
/// Bags of different connected components are joined by an arbitrary
/// tree edge; the root is the bag closed by the last elimination step.
TreeDecomposition build_td_from_order(const Graph& g, const EliminationOrder& pi);

/// Checks the three decomposition properties plus tree shape. Returns
/// the first violation found, or nullopt when f is a valid TD of g.
std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& f);

/// Peels leaves of f to produce an elimination order that ends with the
/// vertices of root_bag. The result realizes width at most f.width().
/// Throws on an invalid decomposition.
EliminationOrder recover_order(const TreeDecomposition& f, int root_bag);

/// PACE-2017 ".td" exchange format.
TreeDecomposition read_pace_td(std::istream& in);
void write_pace_td(std::ostream& out, const TreeDecomposition& td, int n_graph_vertices);

} // namespace twslice

#endif
