#include "twslice/ordering.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>

#include "bitgraph.hpp"
#include "twslice/error.hpp"

namespace twslice {

namespace {

// Order must be a permutation of the graph's live vertices.
void check_order_covers(const Graph& g, const EliminationOrder& pi) {
    if (static_cast<int>(pi.size()) != g.num_vertices())
        throw Error("order/graph vertex mismatch: order has " + std::to_string(pi.size()) +
                    " entries, graph has " + std::to_string(g.num_vertices()));
    std::vector<char> seen(g.id_bound(), 0);
    for (VertexId u : pi) {
        if (!g.contains(u))
            throw Error("order mentions unknown vertex " + std::to_string(u));
        if (seen[u]++)
            throw Error("order repeats vertex " + std::to_string(u));
    }
}

} // namespace

int treewidth_from_order(const Graph& g, const EliminationOrder& pi) {
    check_order_covers(g, pi);
    detail::BitGraph bg(g);
    std::vector<int> scratch;
    int width = 0;
    for (VertexId u : pi) {
        width = std::max(width, bg.deg(u));
        bg.eliminate(u, scratch);
    }
    return width;
}

const char* to_string(OrderHeuristic h) {
    switch (h) {
    case OrderHeuristic::min_fill: return "min-fill";
    case OrderHeuristic::min_degree: return "min-degree";
    case OrderHeuristic::random: return "random";
    }
    return "?";
}

std::optional<OrderHeuristic> order_heuristic_from_string(const std::string& s) {
    if (s == "min-fill" || s == "min_fill")
        return OrderHeuristic::min_fill;
    if (s == "min-degree" || s == "min_degree")
        return OrderHeuristic::min_degree;
    if (s == "random")
        return OrderHeuristic::random;
    return std::nullopt;
}

namespace {

// Missing edges inside N(v).
long fill_count(const detail::BitGraph& bg, int v, std::vector<int>& nbs) {
    bg.neighbor_list(v, nbs);
    const long d = static_cast<long>(nbs.size());
    if (d < 2)
        return 0;
    long present = 0;
    const uint64_t* rv = bg.row(v);
    for (int w : nbs) {
        const uint64_t* rw = bg.row(w);
        for (int k = 0; k < bg.words; ++k)
            present += std::popcount(rw[k] & rv[k]);
    }
    return d * (d - 1) / 2 - present / 2;
}

struct GreedyRun {
    EliminationOrder order;
    int width = 0;
};

// One greedy pass. tie_rank[v] orders equal-score vertices; identity
// rank gives the plain ascending-id tie-break.
GreedyRun greedy_order(const Graph& g, OrderHeuristic heuristic,
                       const std::vector<int>& tie_rank) {
    detail::BitGraph bg(g);
    const int bound = g.id_bound();
    std::vector<long> score(bound, 0);
    std::vector<char> dirty(bound, 0);
    std::vector<int> nbs, scratch;

    const bool use_fill = heuristic == OrderHeuristic::min_fill;
    for (VertexId v : g.vertices())
        score[v] = use_fill ? fill_count(bg, v, nbs) : bg.deg(v);

    GreedyRun run;
    run.order.reserve(g.num_vertices());
    for (int step = 0; step < g.num_vertices(); ++step) {
        int best = -1;
        for (int v = 0; v < bound; ++v) {
            if (!bg.is_alive(v))
                continue;
            if (best < 0 || score[v] < score[best] ||
                (score[v] == score[best] && tie_rank[v] < tie_rank[best]))
                best = v;
        }
        run.width = std::max(run.width, bg.deg(best));
        // Vertices whose score can change: N(best) always; for fill also
        // anything adjacent to N(best).
        bg.neighbor_list(best, nbs);
        std::fill(dirty.begin(), dirty.end(), 0);
        for (int v : nbs) {
            dirty[v] = 1;
            if (use_fill) {
                bg.neighbor_list(v, scratch);
                for (int w : scratch)
                    dirty[w] = 1;
            }
        }
        bg.eliminate(best, scratch);
        run.order.push_back(best);
        for (int v = 0; v < bound; ++v)
            if (dirty[v] && bg.is_alive(v))
                score[v] = use_fill ? fill_count(bg, v, nbs) : bg.deg(v);
    }
    return run;
}

GreedyRun random_order(const Graph& g, std::mt19937_64& rng) {
    GreedyRun run;
    run.order = g.vertices();
    std::shuffle(run.order.begin(), run.order.end(), rng);
    run.width = treewidth_from_order(g, run.order);
    return run;
}

} // namespace

OrderResult find_order(const Graph& g, OrderHeuristic heuristic, uint64_t seed, int restarts,
                       uint64_t step_budget) {
    if (restarts < 1)
        throw Error("restarts must be >= 1");
    const int bound = g.id_bound();
    std::vector<int> identity(bound);
    std::iota(identity.begin(), identity.end(), 0);

    GreedyRun best;
    bool have_best = false;
    uint64_t steps_used = 0;
    for (int r = 0; r < restarts; ++r) {
        if (have_best && step_budget > 0 && steps_used + g.num_vertices() > step_budget)
            break;
        GreedyRun run;
        if (heuristic == OrderHeuristic::random) {
            std::mt19937_64 rng(seed + static_cast<uint64_t>(r));
            run = random_order(g, rng);
        } else if (r == 0) {
            run = greedy_order(g, heuristic, identity);
        } else {
            std::vector<int> rank = identity;
            std::mt19937_64 rng(seed + static_cast<uint64_t>(r));
            std::shuffle(rank.begin(), rank.end(), rng);
            run = greedy_order(g, heuristic, rank);
        }
        steps_used += static_cast<uint64_t>(g.num_vertices());
        if (!have_best || run.width < best.width ||
            (run.width == best.width && run.order < best.order)) {
            best = std::move(run);
            have_best = true;
        }
    }
    return {best.order, best.width};
}

int exact_treewidth(const Graph& g, int cap) {
    const int n = g.num_vertices();
    if (n > cap)
        throw Error("graph too large for exact treewidth (" + std::to_string(n) + " > " +
                    std::to_string(cap) + " vertices)");
    if (n > 25)
        throw Error("exact treewidth cap exceeds hard limit of 25");
    if (n == 0)
        return 0;

    // Dense 0..n-1 relabeling.
    const auto verts = g.vertices();
    std::vector<int> local(g.id_bound(), -1);
    for (int i = 0; i < n; ++i)
        local[verts[i]] = i;
    std::vector<uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (VertexId v : g.neighbors(verts[i]))
            adj[i] |= uint32_t{1} << local[v];

    // dp[S] = smallest width over all ways to eliminate set S first.
    // Eliminating v last within S costs the number of vertices outside
    // S\{v} reachable from v through S\{v}.
    const uint32_t full = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    std::vector<uint8_t> dp(static_cast<size_t>(full) + 1, 255);
    dp[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        uint8_t best = 255;
        uint32_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const uint32_t w = s & ~(uint32_t{1} << v);
            // Component of v grown through w.
            uint32_t comp = uint32_t{1} << v;
            uint32_t frontier = comp;
            while (frontier) {
                uint32_t grow = 0;
                uint32_t f = frontier;
                while (f) {
                    const int x = std::countr_zero(f);
                    f &= f - 1;
                    grow |= adj[x];
                }
                frontier = (grow & w) & ~comp;
                comp |= frontier;
            }
            uint32_t boundary = 0;
            uint32_t c = comp;
            while (c) {
                const int x = std::countr_zero(c);
                c &= c - 1;
                boundary |= adj[x];
            }
            boundary &= ~w;
            boundary &= ~(uint32_t{1} << v);
            const int degv = std::popcount(boundary);
            const uint8_t cand = std::max<uint8_t>(dp[w], static_cast<uint8_t>(degv));
            best = std::min(best, cand);
        }
        dp[s] = best;
    }
    return dp[full];
}

int TreeDecomposition::width() const {
    int w = 0;
    for (const auto& b : bags)
        w = std::max(w, static_cast<int>(b.size()));
    return w > 0 ? w - 1 : 0;
}

std::vector<std::vector<int>> TreeDecomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

TreeDecomposition build_td_from_order(const Graph& g, const EliminationOrder& pi) {
    check_order_covers(g, pi);
    TreeDecomposition td;
    if (pi.empty())
        return td;

    detail::BitGraph bg(g);
    std::vector<int> nbs, scratch;
    std::vector<int> orphans; // bag indices awaiting a parent, creation order
    int last_touched = -1;

    auto subset_of = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    for (VertexId u : pi) {
        bg.neighbor_list(u, nbs);
        std::vector<int> bag = nbs;
        bag.push_back(u);
        std::sort(bag.begin(), bag.end());
        bg.eliminate(u, scratch);

        // Keep only maximal cliques: fold the candidate into an orphan
        // that already contains it.
        int bag_idx = -1;
        for (int l : orphans) {
            if (subset_of(bag, td.bags[l])) {
                bag_idx = l;
                break;
            }
        }
        if (bag_idx < 0) {
            bag_idx = static_cast<int>(td.bags.size());
            td.bags.push_back(bag);
        }

        // u is eliminated now, so any orphan containing u can never get
        // a later parent: adopt it here.
        const std::vector<int> pending = orphans;
        orphans.clear();
        for (int l : pending) {
            if (l != bag_idx && std::binary_search(td.bags[l].begin(), td.bags[l].end(), u) &&
                !subset_of(td.bags[bag_idx], td.bags[l])) {
                td.tree_edges.emplace_back(l, bag_idx);
            } else {
                orphans.push_back(l);
            }
        }
        if (std::find(orphans.begin(), orphans.end(), bag_idx) == orphans.end())
            orphans.push_back(bag_idx);
        last_touched = bag_idx;
    }

    // One orphan per connected component; join them so the result is a
    // single tree (bags need not share vertices).
    for (size_t i = 1; i < orphans.size(); ++i)
        td.tree_edges.emplace_back(orphans[i - 1], orphans[i]);
    td.root = last_touched;
    return td;
}

std::optional<TdViolation> validate_td(const Graph& g, const TreeDecomposition& f) {
    const int nb = static_cast<int>(f.bags.size());
    for (auto [a, b] : f.tree_edges)
        if (a < 0 || a >= nb || b < 0 || b >= nb)
            return TdViolation{0, "tree edge references missing bag"};
    if (nb == 0)
        return g.num_vertices() == 0
                   ? std::nullopt
                   : std::optional<TdViolation>(TdViolation{1, "no bags but graph has vertices"});
    if (static_cast<int>(f.tree_edges.size()) != nb - 1)
        return TdViolation{0, "bag tree is not a tree: " + std::to_string(f.tree_edges.size()) +
                                  " edges for " + std::to_string(nb) + " bags"};
    {
        const auto adj = f.adjacency();
        std::vector<char> seen(nb, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++cnt;
            for (int c : adj[b])
                if (!seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
        }
        if (cnt != nb)
            return TdViolation{0, "bag tree is disconnected"};
    }

    // Property 1: every vertex in some bag, and bags only mention known
    // vertices.
    std::vector<char> covered(g.id_bound(), 0);
    for (const auto& bag : f.bags)
        for (VertexId v : bag) {
            if (!g.contains(v))
                return TdViolation{1, "bag mentions unknown vertex " + std::to_string(v)};
            covered[v] = 1;
        }
    for (VertexId v : g.vertices())
        if (!covered[v])
            return TdViolation{1, "vertex " + std::to_string(v) + " is in no bag"};

    // Property 2: both endpoints of every edge share a bag.
    for (VertexId u : g.vertices()) {
        for (VertexId v : g.neighbors(u)) {
            if (v < u)
                continue;
            bool ok = false;
            for (const auto& bag : f.bags) {
                if (std::binary_search(bag.begin(), bag.end(), u) &&
                    std::binary_search(bag.begin(), bag.end(), v)) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                return TdViolation{2, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") is covered by no bag"};
        }
    }

    // Property 3: the bags holding each vertex induce a connected
    // subtree.
    const auto adj = f.adjacency();
    for (VertexId v : g.vertices()) {
        std::vector<char> holds(nb, 0);
        int total = 0, start = -1;
        for (int b = 0; b < nb; ++b)
            if (std::binary_search(f.bags[b].begin(), f.bags[b].end(), v)) {
                holds[b] = 1;
                ++total;
                start = b;
            }
        if (total <= 1)
            continue;
        std::vector<char> seen(nb, 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            ++cnt;
            for (int c : adj[b])
                if (holds[c] && !seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
        }
        if (cnt != total)
            return TdViolation{3, "bags containing vertex " + std::to_string(v) +
                                      " are disconnected in the tree"};
    }
    return std::nullopt;
}

EliminationOrder recover_order(const TreeDecomposition& f, int root_bag) {
    if (root_bag < 0 || root_bag >= static_cast<int>(f.bags.size()))
        throw Error("root bag index out of range");
    {
        // Tree-shape sanity; full validation against a graph is the
        // caller's business via validate_td.
        const int nb = static_cast<int>(f.bags.size());
        if (static_cast<int>(f.tree_edges.size()) != nb - 1)
            throw Error("invalid tree decomposition: not a tree");
    }

    const auto adj = f.adjacency();
    const int nb = static_cast<int>(f.bags.size());
    std::vector<char> alive(nb, 1);
    std::vector<int> deg(nb, 0);
    for (int b = 0; b < nb; ++b)
        deg[b] = static_cast<int>(adj[b].size());

    EliminationOrder pi;
    std::vector<char> added;
    auto push_vertices = [&](const std::vector<VertexId>& vs) {
        for (VertexId v : vs) {
            if (v >= static_cast<int>(added.size()))
                added.resize(v + 1, 0);
            if (!added[v]) {
                added[v] = 1;
                pi.push_back(v);
            }
        }
    };

    int remaining = nb;
    while (remaining > 1) {
        int leaf = -1;
        for (int b = 0; b < nb; ++b)
            if (alive[b] && b != root_bag && deg[b] <= 1) {
                leaf = b;
                break;
            }
        if (leaf < 0)
            throw Error("invalid tree decomposition: no peelable leaf");
        int parent = -1;
        for (int c : adj[leaf])
            if (alive[c]) {
                parent = c;
                break;
            }
        std::vector<VertexId> diff;
        if (parent < 0) {
            diff = f.bags[leaf]; // lone component root
        } else {
            std::set_difference(f.bags[leaf].begin(), f.bags[leaf].end(),
                                f.bags[parent].begin(), f.bags[parent].end(),
                                std::back_inserter(diff));
        }
        push_vertices(diff);
        alive[leaf] = 0;
        --remaining;
        for (int c : adj[leaf])
            if (alive[c])
                --deg[c];
    }
    push_vertices(f.bags[root_bag]);
    return pi;
}

TreeDecomposition read_pace_td(std::istream& in) {
    TreeDecomposition td;
    std::string line;
    int line_no = 0;
    long nb = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 's') {
            std::string s, tdw;
            long width_plus_1 = 0, n = 0;
            if (!(ls >> s >> tdw >> nb >> width_plus_1 >> n) || tdw != "td" || nb < 0)
                throw ParseError("malformed .td header '" + line + "'", line_no);
            td.bags.assign(nb, {});
            continue;
        }
        if (nb < 0)
            throw ParseError("content before .td header", line_no);
        if (line[0] == 'b') {
            char bch;
            long id;
            ls >> bch >> id;
            if (ls.fail() || id < 1 || id > nb)
                throw ParseError("malformed bag line '" + line + "'", line_no);
            long v;
            while (ls >> v)
                td.bags[id - 1].push_back(static_cast<VertexId>(v - 1));
            std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
            continue;
        }
        long a, b;
        if (!(std::istringstream(line) >> a >> b) || a < 1 || a > nb || b < 1 || b > nb)
            throw ParseError("malformed tree edge '" + line + "'", line_no);
        td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
    if (nb < 0)
        throw ParseError("missing .td header");
    td.root = td.bags.empty() ? -1 : 0;
    return td;
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, int n_graph_vertices) {
    size_t maxbag = 0;
    for (const auto& b : td.bags)
        maxbag = std::max(maxbag, b.size());
    out << "s td " << td.bags.size() << ' ' << maxbag << ' ' << n_graph_vertices << '\n';
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << (i + 1);
        for (VertexId v : td.bags[i])
            out << ' ' << (v + 1);
        out << '\n';
    }
    for (auto [a, b] : td.tree_edges)
        out << (a + 1) << ' ' << (b + 1) << '\n';
}

} // namespace twslice
