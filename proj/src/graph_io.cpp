#include "sigcover/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sigcover {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

std::size_t parse_count(const std::string& tok, int line) {
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
    return value;
}

VertexId parse_vertex(const std::string& tok, std::size_t n, int line) {
    std::size_t v = parse_count(tok, line);
    if (v >= n) throw ParseError(line, "vertex " + tok + " out of range (v " + std::to_string(n) + ")");
    return static_cast<VertexId>(v);
}

}  // namespace

GraphFile read_graph(std::istream& in) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::optional<Terminals> terminals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (!n) {
            if (tok[0] != "v" || tok.size() != 2) throw ParseError(lineno, "first record must be 'v <n>'");
            n = parse_count(tok[1], lineno);
            continue;
        }
        if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError(lineno, "edge record must be 'e <u> <v> <+|->'");
            VertexId u = parse_vertex(tok[1], *n, lineno);
            VertexId v = parse_vertex(tok[2], *n, lineno);
            Sign s;
            if (tok[3] == "+") s = Sign::positive;
            else if (tok[3] == "-") s = Sign::negative;
            else throw ParseError(lineno, "edge sign must be + or -, got '" + tok[3] + "'");
            edges.push_back({u, v, s});
        } else if (tok[0] == "t") {
            if (tok.size() != 3) throw ParseError(lineno, "terminal record must be 't <x> <y>'");
            if (terminals) throw ParseError(lineno, "duplicate terminal record");
            terminals = Terminals{parse_vertex(tok[1], *n, lineno), parse_vertex(tok[2], *n, lineno)};
        } else if (tok[0] == "v") {
            throw ParseError(lineno, "duplicate vertex count record");
        } else {
            throw ParseError(lineno, "unknown record '" + tok[0] + "'");
        }
    }
    if (!n) throw ParseError(lineno, "missing 'v <n>' record");
    return {SignedGraph(*n, std::move(edges)), terminals};
}

GraphFile read_graph_string(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const SignedGraph& g, const std::optional<Terminals>& terminals) {
    out << "v " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
    if (terminals) out << "t " << terminals->first << ' ' << terminals->second << '\n';
}

std::string graph_to_string(const SignedGraph& g, const std::optional<Terminals>& terminals) {
    std::ostringstream ss;
    write_graph(ss, g, terminals);
    return ss.str();
}

}  // namespace sigcover
