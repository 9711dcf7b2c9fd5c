#include "vc/pace_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace vc {

namespace {

bool parse_long(const std::string& tok, long long* out) {
    if (tok.empty()) return false;
    long long v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') return false;
        if (v > (1ll << 60)) return false;
        v = v * 10 + (ch - '0');
    }
    *out = v;
    return true;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    InstanceHeader header;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4) throw ParseError(lineno, "problem line needs 'p <descriptor> <n> <m>'");
            long long n = 0, m = 0;
            if (!parse_long(toks[2], &n) || !parse_long(toks[3], &m))
                throw ParseError(lineno, "non-integer vertex or edge count");
            header.descriptor = toks[1];
            header.n = static_cast<int>(n);
            header.m = m;
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "edge line before problem line");
        if (toks.size() != 2) throw ParseError(lineno, "edge line needs two endpoints");
        long long u = 0, v = 0;
        if (!parse_long(toks[0], &u) || !parse_long(toks[1], &v))
            throw ParseError(lineno, "non-integer endpoint");
        if (u < 1 || u > header.n || v < 1 || v > header.n)
            throw ParseError(lineno, "vertex id " + std::to_string(std::max(u, v)) +
                                         " outside [1," + std::to_string(header.n) + "]");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    if (!have_header) throw ParseError(lineno, "missing problem line");

    ParsedInstance result{build_graph(header.n, edges), header, {}};
    if (result.graph.alive_edges() != header.m) {
        result.warning = "declared m=" + std::to_string(header.m) + " but found " +
                         std::to_string(result.graph.alive_edges()) +
                         " distinct edges; trusting the edge list";
    }
    return result;
}

ParsedInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string read_file_maybe_gz(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
        gzFile f = gzopen(path.c_str(), "rb");
        if (!f) throw std::runtime_error("cannot open " + path);
        std::string data;
        char buf[1 << 16];
        int got;
        while ((got = gzread(f, buf, sizeof(buf))) > 0) data.append(buf, got);
        bool ok = got == 0;
        gzclose(f);
        if (!ok) throw std::runtime_error("gzip read error in " + path);
        return data;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

std::string write_solution(const VertexCover& cover, int n) {
    std::ostringstream out;
    out << "s vc " << n << ' ' << cover.size() << '\n';
    std::vector<Vertex> vs = cover.vertices;
    std::sort(vs.begin(), vs.end());
    for (Vertex v : vs) out << v + 1 << '\n';
    return out.str();
}

VertexCover parse_solution(const std::string& text, int* n_out) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, declared = -1;
    std::vector<Vertex> vs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "s") {
            if (declared >= 0) throw ParseError(lineno, "duplicate solution line");
            if (toks.size() != 4 || toks[1] != "vc" || !parse_long(toks[2], &n) ||
                !parse_long(toks[3], &declared))
                throw ParseError(lineno, "solution line needs 's vc <n> <size>'");
            continue;
        }
        long long v = 0;
        if (toks.size() != 1 || !parse_long(toks[0], &v))
            throw ParseError(lineno, "expected one vertex id");
        if (declared < 0) throw ParseError(lineno, "vertex id before solution line");
        if (v < 1 || v > n) throw ParseError(lineno, "vertex id outside [1,n]");
        vs.push_back(static_cast<Vertex>(v - 1));
    }
    if (declared < 0) throw ParseError(lineno, "missing solution line");
    if (static_cast<long long>(vs.size()) != declared)
        throw ParseError(lineno, "solution lists " + std::to_string(vs.size()) +
                                     " vertices but declares " + std::to_string(declared));
    if (n_out) *n_out = static_cast<int>(n);
    return VertexCover::of(std::move(vs));
}

std::string write_instance(const Graph& g, const std::vector<std::string>& comments) {
    std::vector<Vertex> ids = g.alive_vertices();
    std::vector<int> compact(g.id_limit(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) compact[ids[i]] = static_cast<int>(i) + 1;
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p td " << ids.size() << ' ' << g.alive_edges() << '\n';
    for (Vertex v : ids)
        for (Vertex u : g.neighbors(v))
            if (u > v) out << compact[v] << ' ' << compact[u] << '\n';
    return out.str();
}

}  // namespace vc
