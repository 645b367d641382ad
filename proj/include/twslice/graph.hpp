#ifndef TWSLICE_GRAPH_HPP
#define TWSLICE_GRAPH_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace twslice {

/// Vertices are dense non-negative integers assigned at construction.
/// Ids stay stable across removals; there is no renumbering.
using VertexId = int;

/// Simple undirected graph over index variables.
///
/// Construction accepts multigraph input and simplifies it on the fly:
/// parallel edges are merged and self-loops dropped. Neighbor sets
/// iterate in ascending id order, so every downstream tie-break is
/// deterministic.
class Graph {
  public:
    Graph() = default;
    /// n isolated vertices with ids 0..n-1.
    explicit Graph(int n);

    /// Adds a vertex and returns its id. Optional human-readable name
    /// ("i", "q3_t7") is metadata only.
    VertexId add_vertex(std::string name = {});

    /// Inserts an undirected edge. Self-loops and duplicates are ignored.
    void add_edge(VertexId u, VertexId v);

    bool contains(VertexId u) const;
    bool has_edge(VertexId u, VertexId v) const;

    int num_vertices() const { return n_alive_; }
    int num_edges() const { return n_edges_; }
    bool empty() const { return n_alive_ == 0; }

    /// Live vertex ids in ascending order.
    std::vector<VertexId> vertices() const;

    /// Open neighborhood N(u). Throws on unknown vertex.
    const std::set<VertexId>& neighbors(VertexId u) const;

    int degree(VertexId u) const;

    /// Name metadata; empty string when the vertex was never named.
    const std::string& name(VertexId u) const;
    void set_name(VertexId u, std::string name);

    /// Removes u after connecting N(u) into a clique. Pure: returns a
    /// new graph, *this is untouched.
    Graph eliminate(VertexId u) const;

    /// Removes u and its incident edges, with no clique fill. Pure.
    Graph remove_vertex(VertexId u) const;

    /// Largest id that was ever assigned, plus one. Dead ids below this
    /// bound are skipped by vertices().
    int id_bound() const { return static_cast<int>(adj_.size()); }

    bool operator==(const Graph& other) const;

    /// PACE-2017 ".gr" exchange format: header "p tw <n> <m>", one edge
    /// per line, 1-indexed vertices. Comment lines start with 'c'.
    static Graph read_pace(std::istream& in);
    void write_pace(std::ostream& out) const;

  private:
    void eliminate_in_place(VertexId u);
    void remove_in_place(VertexId u);
    void check_vertex(VertexId u) const;

    std::vector<std::set<VertexId>> adj_;
    std::vector<bool> alive_;
    std::vector<std::string> names_;
    int n_alive_ = 0;
    int n_edges_ = 0;
};

} // namespace twslice

#endif
