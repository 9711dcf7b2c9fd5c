#include "vc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vc {

void VertexSet::sort_members() { std::sort(members_.begin(), members_.end()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Vertex> Graph::alive_vertices() const {
    std::vector<Vertex> out;
    out.reserve(alive_count_);
    for (Vertex v = 0; v < id_limit(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

void Graph::insert_arc(Vertex u, Vertex v) {
    auto& a = adj_[u];
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
}

void Graph::erase_arc(Vertex u, Vertex v) {
    auto& a = adj_[u];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
}

Graph::Checkpoint Graph::hide_vertex(Vertex v) {
    if (!alive(v)) throw std::logic_error("hide_vertex: vertex " + std::to_string(v) + " is not alive");
    Checkpoint cp = log_.size();
    for (Vertex u : adj_[v]) erase_arc(u, v);
    m_alive_ -= static_cast<long long>(adj_[v].size());
    alive_[v] = 0;
    --alive_count_;
    log_.push_back({Op::HideVertex, v, -1});
    return cp;
}

Graph::Checkpoint Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::logic_error("add_edge: self-loop");
    if (!alive(u) || !alive(v)) throw std::logic_error("add_edge: endpoint not alive");
    Checkpoint cp = log_.size();
    if (has_edge(u, v)) {
        log_.push_back({Op::EdgeNoop, u, v});
        return cp;
    }
    insert_arc(u, v);
    insert_arc(v, u);
    ++m_alive_;
    log_.push_back({Op::AddEdge, u, v});
    return cp;
}

Vertex Graph::materialize_vertex(const std::vector<Vertex>& nbrs) {
    for (Vertex u : nbrs)
        if (!alive(u)) throw std::logic_error("materialize_vertex: neighbor not alive");
    Vertex w = id_limit();
    std::vector<Vertex> sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    adj_.push_back(sorted);
    alive_.push_back(1);
    ++alive_count_;
    for (Vertex u : sorted) insert_arc(u, w);
    m_alive_ += static_cast<long long>(sorted.size());
    log_.push_back({Op::NewVertex, w, -1});
    return w;
}

void Graph::rollback(Checkpoint to) {
    if (to > log_.size()) throw std::logic_error("rollback: checkpoint is in the future");
    while (log_.size() > to) {
        LogEntry e = log_.back();
        log_.pop_back();
        switch (e.op) {
            case Op::HideVertex: {
                // LIFO order guarantees e.a's saved list names exactly the
                // vertices that are alive again now.
                alive_[e.a] = 1;
                ++alive_count_;
                for (Vertex u : adj_[e.a]) insert_arc(u, e.a);
                m_alive_ += static_cast<long long>(adj_[e.a].size());
                break;
            }
            case Op::AddEdge: {
                erase_arc(e.a, e.b);
                erase_arc(e.b, e.a);
                --m_alive_;
                break;
            }
            case Op::EdgeNoop:
                break;
            case Op::NewVertex: {
                Vertex w = e.a;
                for (Vertex u : adj_[w]) erase_arc(u, w);
                m_alive_ -= static_cast<long long>(adj_[w].size());
                adj_.pop_back();
                alive_.pop_back();
                --alive_count_;
                break;
            }
        }
    }
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (Vertex v = 0; v < id_limit(); ++v) {
        if (!alive_[v]) continue;
        mix(0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(v));
        for (Vertex u : adj_[v]) mix(static_cast<std::uint64_t>(u) + 1);
    }
    return h;
}

void Graph::check_consistency() const {
    long long degree_sum = 0;
    for (Vertex v = 0; v < id_limit(); ++v) {
        if (!alive_[v]) continue;
        degree_sum += degree(v);
        if (!std::is_sorted(adj_[v].begin(), adj_[v].end()))
            throw std::logic_error("adjacency not sorted");
        for (Vertex u : adj_[v]) {
            if (!alive(u)) throw std::logic_error("dead neighbor in alive list");
            if (u == v) throw std::logic_error("self-loop");
            if (!has_edge(u, v)) throw std::logic_error("asymmetric edge");
        }
    }
    if (degree_sum != 2 * m_alive_) throw std::logic_error("edge count out of sync");
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

std::pair<Graph, std::vector<Vertex>> complement(const Graph& g) {
    std::vector<Vertex> ids = g.alive_vertices();
    const int a = static_cast<int>(ids.size());
    std::vector<int> compact(g.id_limit(), -1);
    for (int i = 0; i < a; ++i) compact[ids[i]] = i;

    Graph c(a);
    // Dense row-by-row construction: mark the original neighbors, connect to
    // everything unmarked. Kernels and clique-phase inputs are small.
    std::vector<char> mark(a, 0);
    for (int i = 0; i < a; ++i) {
        for (Vertex u : g.neighbors(ids[i])) mark[compact[u]] = 1;
        for (int j = i + 1; j < a; ++j)
            if (!mark[j]) c.add_edge(i, j);
        for (Vertex u : g.neighbors(ids[i])) mark[compact[u]] = 0;
    }
    return {std::move(c), std::move(ids)};
}

VertexSet neighborhood(const Graph& g, Vertex v, int radius, bool closed) {
    if (!g.alive(v)) throw std::logic_error("neighborhood: vertex not alive");
    if (radius != 1 && radius != 2) throw std::logic_error("neighborhood: radius must be 1 or 2");
    VertexSet out(g.id_limit());
    for (Vertex u : g.neighbors(v)) out.add(u);
    if (radius == 2) {
        for (Vertex u : g.neighbors(v))
            for (Vertex w : g.neighbors(u))
                if (w != v) out.add(w);
    }
    if (closed)
        out.add(v);
    else
        out.remove(v);
    out.sort_members();
    return out;
}

VertexSet two_neighborhood_exact(const Graph& g, Vertex v) {
    if (!g.alive(v)) throw std::logic_error("two_neighborhood_exact: vertex not alive");
    VertexSet out(g.id_limit());
    for (Vertex u : g.neighbors(v))
        for (Vertex w : g.neighbors(u))
            if (w != v && !g.has_edge(v, w)) out.add(w);
    out.sort_members();
    return out;
}

}  // namespace vc
