#include "twslice/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "twslice/error.hpp"

namespace twslice {

Graph::Graph(int n) {
    if (n < 0)
        throw Error("negative vertex count");
    adj_.resize(n);
    alive_.assign(n, true);
    names_.resize(n);
    n_alive_ = n;
}

VertexId Graph::add_vertex(std::string name) {
    adj_.emplace_back();
    alive_.push_back(true);
    names_.push_back(std::move(name));
    ++n_alive_;
    return static_cast<VertexId>(adj_.size()) - 1;
}

void Graph::check_vertex(VertexId u) const {
    if (u < 0 || u >= id_bound() || !alive_[u])
        throw Error("unknown vertex " + std::to_string(u));
}

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return; // self-loop: dropped
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++n_edges_;
    }
}

bool Graph::contains(VertexId u) const {
    return u >= 0 && u < id_bound() && alive_[u];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].count(v) > 0;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (int u = 0; u < id_bound(); ++u)
        if (alive_[u])
            out.push_back(u);
    return out;
}

const std::set<VertexId>& Graph::neighbors(VertexId u) const {
    check_vertex(u);
    return adj_[u];
}

int Graph::degree(VertexId u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
}

const std::string& Graph::name(VertexId u) const {
    check_vertex(u);
    return names_[u];
}

void Graph::set_name(VertexId u, std::string name) {
    check_vertex(u);
    names_[u] = std::move(name);
}

void Graph::eliminate_in_place(VertexId u) {
    const auto nb = adj_[u]; // copy: remove_in_place edits adjacency
    for (auto it = nb.begin(); it != nb.end(); ++it) {
        auto jt = it;
        for (++jt; jt != nb.end(); ++jt) {
            if (adj_[*it].insert(*jt).second) {
                adj_[*jt].insert(*it);
                ++n_edges_;
            }
        }
    }
    remove_in_place(u);
}

void Graph::remove_in_place(VertexId u) {
    for (VertexId v : adj_[u]) {
        adj_[v].erase(u);
        --n_edges_;
    }
    adj_[u].clear();
    alive_[u] = false;
    --n_alive_;
}

Graph Graph::eliminate(VertexId u) const {
    check_vertex(u);
    Graph g = *this;
    g.eliminate_in_place(u);
    return g;
}

Graph Graph::remove_vertex(VertexId u) const {
    check_vertex(u);
    Graph g = *this;
    g.remove_in_place(u);
    return g;
}

bool Graph::operator==(const Graph& other) const {
    if (n_alive_ != other.n_alive_ || n_edges_ != other.n_edges_)
        return false;
    const int bound = std::max(id_bound(), other.id_bound());
    for (int u = 0; u < bound; ++u) {
        const bool a = contains(u), b = other.contains(u);
        if (a != b)
            return false;
        if (a && adj_[u] != other.adj_[u])
            return false;
    }
    return true;
}

Graph Graph::read_pace(std::istream& in) {
    std::string line;
    int line_no = 0;
    long n = -1, m = -1;
    Graph g;
    long edges_seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, tw;
            if (!(ls >> p >> tw >> n >> m) || tw != "tw" || n < 0 || m < 0)
                throw ParseError("malformed PACE header '" + line + "'", line_no);
            g = Graph(static_cast<int>(n));
            continue;
        }
        if (n < 0)
            throw ParseError("edge before PACE header", line_no);
        long u, v;
        if (!(ls >> u >> v))
            throw ParseError("malformed edge line '" + line + "'", line_no);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex out of range in '" + line + "'", line_no);
        g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
        ++edges_seen;
    }
    if (n < 0)
        throw ParseError("missing PACE header");
    // m from the header is advisory; duplicates in the input collapse.
    (void)edges_seen;
    return g;
}

void Graph::write_pace(std::ostream& out) const {
    // PACE is 1-indexed and dense; dead ids are compacted on output.
    std::vector<int> compact(id_bound(), 0);
    int next = 0;
    for (int u = 0; u < id_bound(); ++u)
        if (alive_[u])
            compact[u] = ++next;
    out << "p tw " << n_alive_ << ' ' << n_edges_ << '\n';
    for (int u = 0; u < id_bound(); ++u) {
        if (!alive_[u])
            continue;
        for (VertexId v : adj_[u])
            if (u < v)
                out << compact[u] << ' ' << compact[v] << '\n';
    }
}

} // namespace twslice
