#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace vc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Set of vertex ids with O(1) membership and stable insertion order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : in_(capacity, 0) {}

    void add(Vertex v) {
        if (static_cast<std::size_t>(v) >= in_.size()) in_.resize(v + 1, 0);
        if (!in_[v]) {
            in_[v] = 1;
            members_.push_back(v);
        }
    }
    void remove(Vertex v) {
        if (!contains(v)) return;
        in_[v] = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] == v) {
                members_[i] = members_.back();
                members_.pop_back();
                break;
            }
        }
    }
    bool contains(Vertex v) const {
        return static_cast<std::size_t>(v) < in_.size() && in_[v];
    }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    void clear() {
        for (Vertex v : members_) in_[v] = 0;
        members_.clear();
    }
    // Sorts the member list; membership queries are unaffected.
    void sort_members();
    const std::vector<Vertex>& members() const { return members_; }

private:
    std::vector<char> in_;
    std::vector<Vertex> members_;
};

// Mutable undirected simple graph with vertex hiding and rollback.
//
// Adjacency lists are sorted arrays holding alive neighbors only: hiding a
// vertex erases it from every neighbor's list, while the hidden vertex keeps
// its own list so that LIFO rollback can reinsert it exactly. Fold and gadget
// vertices are appended with fresh ids >= the original n and are popped again
// when rolled back.
class Graph {
public:
    using Checkpoint = std::size_t;

    Graph() = default;
    explicit Graph(int n)
        : adj_(n), alive_(n, 1), original_n_(n), alive_count_(n) {}

    int original_n() const { return original_n_; }
    // One past the largest id ever created (original vertices plus gadgets).
    int id_limit() const { return static_cast<int>(adj_.size()); }
    int alive_count() const { return alive_count_; }
    long long alive_edges() const { return m_alive_; }

    bool alive(Vertex v) const {
        return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
    }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const;

    std::vector<Vertex> alive_vertices() const;

    Checkpoint checkpoint() const { return log_.size(); }

    // Removes v from all alive adjacency views. Throws std::logic_error if v
    // is already hidden. Returns a checkpoint restoring the pre-call state.
    Checkpoint hide_vertex(Vertex v);

    // Inserts the undirected edge (u,v); a duplicate request is recorded as a
    // rollback-safe no-op. Both endpoints must be alive and distinct.
    Checkpoint add_edge(Vertex u, Vertex v);

    // Appends a fresh alive vertex adjacent to the given alive vertices.
    Vertex materialize_vertex(const std::vector<Vertex>& nbrs);

    // Pops the mutation log back to `to`, restoring the exact prior alive
    // set, adjacency, and edge count.
    void rollback(Checkpoint to);

    // FNV-1a hash of the canonical alive-adjacency serialization.
    std::uint64_t fingerprint() const;

    // Debug aid: checks symmetry, sortedness, liveness, and the edge count.
    void check_consistency() const;

private:
    enum class Op : std::uint8_t { HideVertex, AddEdge, EdgeNoop, NewVertex };
    struct LogEntry {
        Op op;
        Vertex a = -1;
        Vertex b = -1;
    };

    void insert_arc(Vertex u, Vertex v);  // u's list gains v
    void erase_arc(Vertex u, Vertex v);   // u's list drops v

    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> alive_;
    std::vector<LogEntry> log_;
    long long m_alive_ = 0;
    int original_n_ = 0;
    int alive_count_ = 0;
};

// Builds a graph from 0-based id pairs, deduplicating parallel edges.
// Throws std::invalid_argument on out-of-range ids or self-loops.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Complement restricted to the alive vertices, on compacted ids 0..a-1.
// Second element maps each compacted id back to the source id.
std::pair<Graph, std::vector<Vertex>> complement(const Graph& g);

// N(v), N[v], or the radius-2 ball around v. `radius` must be 1 or 2.
VertexSet neighborhood(const Graph& g, Vertex v, int radius, bool closed);

// Vertices at distance exactly 2 from v.
VertexSet two_neighborhood_exact(const Graph& g, Vertex v);

}  // namespace vc
