#include "colreconf/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <vector>

#include "colreconf/error.hpp"

namespace colreconf {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::uint64_t to_number(const Token& tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError(std::string("expected ") + what + ", found '" + std::string(tok.text) + "'",
                         line, tok.column);
    return value;
}

void add_checked(std::vector<Edge>& edges, std::vector<VertexSet>& seen, std::uint64_t u,
                 std::uint64_t v, std::size_t line, std::size_t column) {
    if (seen[u].test(static_cast<Vertex>(v)))
        throw ParseError("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}", line,
                         column);
    seen[u].set(static_cast<Vertex>(v));
    seen[v].set(static_cast<Vertex>(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
}

constexpr std::uint64_t kMaxVertices = 1U << 14;

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t n = 0, m = 0;
    bool header = false;
    std::vector<Edge> edges;
    std::vector<VertexSet> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError("expected two integers, found " + std::to_string(toks.size()) + " fields",
                             line_no, toks.size() > 2 ? toks[2].column : toks[0].column);
        if (!header) {
            n = to_number(toks[0], line_no, "vertex count");
            m = to_number(toks[1], line_no, "edge count");
            if (n > kMaxVertices) throw ParseError("vertex count too large", line_no, toks[0].column);
            if (m > n * (n - (n > 0 ? 1 : 0)) / 2)
                throw ParseError("edge count exceeds n(n-1)/2", line_no, toks[1].column);
            seen.assign(n, VertexSet(n));
            header = true;
            continue;
        }
        if (edges.size() == m)
            throw ParseError("more edge lines than the header's m = " + std::to_string(m), line_no, 1);
        const auto u = to_number(toks[0], line_no, "vertex");
        const auto v = to_number(toks[1], line_no, "vertex");
        if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line_no, toks[1].column);
        if (u >= v)
            throw ParseError("edge endpoints must satisfy u < v", line_no, toks[0].column);
        add_checked(edges, seen, u, v, line_no, toks[0].column);
    }
    if (!header) throw ParseError("missing 'n m' header", line_no + 1, 1);
    if (edges.size() != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                             std::to_string(edges.size()) + " were given",
                         line_no + 1, 1);
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t n = 0, m = 0;
    bool header = false;
    std::vector<Edge> edges;
    std::vector<VertexSet> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text == "c") continue;
        if (toks[0].text == "p") {
            if (header) throw ParseError("second 'p' header", line_no, toks[0].column);
            if (toks.size() != 4 || (toks[1].text != "edge" && toks[1].text != "col"))
                throw ParseError("expected 'p edge n m'", line_no, toks[0].column);
            n = to_number(toks[2], line_no, "vertex count");
            m = to_number(toks[3], line_no, "edge count");
            if (n > kMaxVertices) throw ParseError("vertex count too large", line_no, toks[2].column);
            seen.assign(n, VertexSet(n));
            header = true;
            continue;
        }
        if (toks[0].text == "e") {
            if (!header) throw ParseError("edge line before 'p edge' header", line_no, toks[0].column);
            if (toks.size() != 3) throw ParseError("expected 'e u v'", line_no, toks[0].column);
            auto u = to_number(toks[1], line_no, "vertex");
            auto v = to_number(toks[2], line_no, "vertex");
            if (u < 1 || u > n) throw ParseError("vertex out of range 1..n", line_no, toks[1].column);
            if (v < 1 || v > n) throw ParseError("vertex out of range 1..n", line_no, toks[2].column);
            if (u == v) throw ParseError("self-loop", line_no, toks[1].column);
            if (u > v) std::swap(u, v);
            add_checked(edges, seen, u - 1, v - 1, line_no, toks[1].column);
            continue;
        }
        throw ParseError("unknown line type '" + std::string(toks[0].text) + "'", line_no,
                         toks[0].column);
    }
    if (!header) throw ParseError("missing 'p edge n m' header", line_no + 1, 1);
    if (edges.size() != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                             std::to_string(edges.size()) + " were given",
                         line_no + 1, 1);
    return Graph(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_dot(std::ostream& out, const Graph& g, std::string_view name) {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

GraphFormat parse_graph_format(std::string_view text) {
    if (text == "auto") return GraphFormat::automatic;
    if (text == "edgelist" || text == "el") return GraphFormat::edge_list;
    if (text == "dimacs" || text == "col") return GraphFormat::dimacs;
    if (text == "json") return GraphFormat::json;
    throw InputError("unknown graph format '" + std::string(text) + "'");
}

GraphFormat detect_graph_format(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".json") return GraphFormat::json;
    if (ext == ".col" || ext == ".dimacs") return GraphFormat::dimacs;
    return GraphFormat::edge_list;
}

}  // namespace colreconf
