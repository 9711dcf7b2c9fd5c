#include "vc/ils.hpp"

#include <algorithm>
#include <stdexcept>

namespace vc {

std::vector<Vertex> IndependentSet::sorted_members() const {
    std::vector<Vertex> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

void IndependentSet::insert(const Graph& g, Vertex v) {
    in_[v] = 1;
    members_.push_back(v);
    for (Vertex u : g.neighbors(v)) ++tightness_[u];
}

void IndependentSet::remove(const Graph& g, Vertex v) {
    in_[v] = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] == v) {
            members_[i] = members_.back();
            members_.pop_back();
            break;
        }
    }
    for (Vertex u : g.neighbors(v)) --tightness_[u];
}

void IndependentSet::force_insert(const Graph& g, Vertex v) {
    if (in_[v]) return;
    std::vector<Vertex> evict;
    for (Vertex u : g.neighbors(v))
        if (in_[u]) evict.push_back(u);
    for (Vertex u : evict) remove(g, u);
    insert(g, v);
}

bool IndependentSet::is_independent(const Graph& g) const {
    for (Vertex v : members_)
        for (Vertex u : g.neighbors(v))
            if (in_[u]) return false;
    return true;
}

bool IndependentSet::is_maximal(const Graph& g) const {
    for (Vertex v = 0; v < g.id_limit(); ++v)
        if (g.alive(v) && !in_[v] && tightness_[v] == 0) return false;
    return true;
}

namespace {

// Inserts every free vertex, scanning in rng order.
void restore_maximality(const Graph& g, IndependentSet& is, Rng& rng) {
    std::vector<Vertex> free;
    for (Vertex v = 0; v < g.id_limit(); ++v)
        if (g.alive(v) && !is.contains(v) && is.tightness(v) == 0) free.push_back(v);
    std::shuffle(free.begin(), free.end(), rng);
    for (Vertex v : free)
        if (is.tightness(v) == 0 && !is.contains(v)) is.insert(g, v);
}

}  // namespace

IndependentSet greedy_maximal_is(const Graph& g, std::uint32_t seed) {
    Rng rng(seed);
    IndependentSet is(g);
    std::vector<Vertex> order = g.alive_vertices();
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex v : order)
        if (is.tightness(v) == 0) is.insert(g, v);
    return is;
}

bool one_two_swap_pass(const Graph& g, IndependentSet& is, Rng& rng) {
    restore_maximality(g, is, rng);
    bool improved = false;
    bool progress = true;
    std::vector<char> cand_mark(g.id_limit(), 0);
    while (progress) {
        progress = false;
        // 1-tight vertices keyed by their sole solution neighbor.
        for (Vertex x : is.sorted_members()) {
            std::vector<Vertex> cand;
            for (Vertex u : g.neighbors(x))
                if (!is.contains(u) && is.tightness(u) == 1) cand.push_back(u);
            if (cand.size() < 2) continue;
            for (Vertex u : cand) cand_mark[u] = 1;
            Vertex su = -1, sv = -1;
            for (Vertex u : cand) {
                int adj_inside = 0;
                for (Vertex w : g.neighbors(u))
                    if (cand_mark[w]) ++adj_inside;
                if (adj_inside + 1 < static_cast<int>(cand.size())) {
                    // some candidate is non-adjacent to u; find the first
                    for (Vertex w : cand) {
                        if (w != u && !g.has_edge(u, w)) {
                            su = u;
                            sv = w;
                            break;
                        }
                    }
                    break;
                }
            }
            for (Vertex u : cand) cand_mark[u] = 0;
            if (su == -1) continue;
            is.remove(g, x);
            is.insert(g, su);
            is.insert(g, sv);
            restore_maximality(g, is, rng);
            improved = true;
            progress = true;
            break;  // member list changed; rescan
        }
    }
    return improved;
}

void perturb(const Graph& g, IndependentSet& is, int strength, Rng& rng) {
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < g.id_limit(); ++v)
        if (g.alive(v) && !is.contains(v)) outside.push_back(v);
    for (int i = 0; i < strength && !outside.empty(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
        Vertex v = outside[pick(rng)];
        is.force_insert(g, v);
    }
    restore_maximality(g, is, rng);
}

IndependentSet run_ils(const Graph& g, long long budget, std::uint32_t seed) {
    Rng rng(seed);
    IndependentSet best = greedy_maximal_is(g, seed);
    one_two_swap_pass(g, best, rng);
    const int n = std::max(1, g.alive_count());
    long long stagnation = 0;
    for (long long iter = 0; iter < budget; ++iter) {
        IndependentSet cur = best;
        int strength = stagnation > n ? 1 + static_cast<int>(iter / n) : 1;
        perturb(g, cur, strength, rng);
        one_two_swap_pass(g, cur, rng);
        if (cur.size() > best.size()) {
            best = std::move(cur);
            stagnation = 0;
        } else if (cur.size() == best.size()) {
            best = std::move(cur);  // plateau move with fresh tie-breaks
            ++stagnation;
        } else {
            ++stagnation;
        }
    }
    return best;
}

VertexCover is_to_cover(const Graph& g, const IndependentSet& is) {
    if (!is.is_independent(g)) throw std::logic_error("is_to_cover: set is not independent");
    std::vector<Vertex> cover;
    for (Vertex v : g.alive_vertices())
        if (!is.contains(v)) cover.push_back(v);
    return VertexCover::of(std::move(cover));
}

}  // namespace vc
