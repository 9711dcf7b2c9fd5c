#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "vc/graph.hpp"
#include "vc/solution.hpp"

namespace vc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct InstanceHeader {
    std::string descriptor;
    int n = 0;
    long long m = 0;
};

struct ParsedInstance {
    Graph graph;
    InstanceHeader header;
    // Set when the declared m disagrees with the distinct-edge count; the
    // edge list wins.
    std::string warning;
};

// PACE instance format: optional `c` comment lines, one `p <descr> <n> <m>`
// line, then 1-based `<u> <v>` edge lines. Duplicate edges are collapsed.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_text(const std::string& text);

// Reads a file, transparently gunzipping when the name ends in ".gz".
std::string read_file_maybe_gz(const std::string& path);

// `s vc <n> <size>` followed by the 1-based cover ids, ascending.
std::string write_solution(const VertexCover& cover, int n);
VertexCover parse_solution(const std::string& text, int* n_out = nullptr);

// Emits a graph back in instance format, compacting alive vertices to 1..a.
// Lines in `comments` are prepended as `c ` lines.
std::string write_instance(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace vc
