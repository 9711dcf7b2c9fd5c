#pragma once

#include <algorithm>
#include <vector>

#include "vc/graph.hpp"

namespace vc {

// A vertex cover as a sorted, duplicate-free id list.
struct VertexCover {
    std::vector<Vertex> vertices;

    static VertexCover of(std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return VertexCover{std::move(vs)};
    }
    std::size_t size() const { return vertices.size(); }
    bool contains(Vertex v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
};

}  // namespace vc
