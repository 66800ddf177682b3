#include "minbound/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace minbound {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Strict base-10 integer; rejects trailing junk like "2x".
bool parse_int(const std::string& s, long long& out) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    long long val = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        val = val * 10 + (s[i] - '0');
        if (val < 0) return false;  // overflow
    }
    out = s[0] == '-' ? -val : val;
    return true;
}

}  // namespace

GraphDocument parse_dimacs(const std::string& text) {
    GraphDocument doc;
    doc.source_format = GraphFormat::dimacs;

    auto lines = split_lines(text);
    bool have_header = false;
    long long n = 0, m_declared = 0;
    std::vector<Edge> edges;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank(line)) continue;
        auto tok = tokens(line);
        if (tok[0] == "c") {
            std::size_t pos = line.find('c');
            std::string body = line.substr(pos + 1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            doc.comments.push_back(body);
            continue;
        }
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(ParseError::Kind::malformed_line, lineno,
                                 "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "edge" ||
                !parse_int(tok[2], n) || !parse_int(tok[3], m_declared) ||
                n < 0 || m_declared < 0)
                throw ParseError(ParseError::Kind::malformed_line, lineno,
                                 "expected `p edge N M`");
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header)
                throw ParseError(ParseError::Kind::missing_header, lineno,
                                 "edge before `p edge N M` header");
            long long u, v;
            if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
                throw ParseError(ParseError::Kind::malformed_line, lineno,
                                 "expected `e u v`");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ParseError::Kind::vertex_out_of_range, lineno,
                                 "endpoint outside [1," + std::to_string(n) + "]");
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
            continue;
        }
        throw ParseError(ParseError::Kind::malformed_line, lineno,
                         "unrecognized line `" + line + "`");
    }
    if (!have_header)
        throw ParseError(ParseError::Kind::missing_header, 0,
                         "no `p edge N M` header");

    doc.graph = Graph::build(static_cast<int>(n), edges);
    if (doc.graph.edge_count() != m_declared)
        doc.warnings.push_back("header claims m=" + std::to_string(m_declared) +
                               " but file has " +
                               std::to_string(doc.graph.edge_count()) +
                               " distinct edges");
    return doc;
}

std::string serialize_dimacs(const GraphDocument& doc) {
    std::ostringstream out;
    out << "p edge " << doc.graph.vertex_count() << ' '
        << doc.graph.edge_count() << '\n';
    for (const auto& [u, v] : doc.graph.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

GraphDocument parse_edgelist(const std::string& text) {
    GraphDocument doc;
    doc.source_format = GraphFormat::edgelist;

    auto lines = split_lines(text);
    bool saw_data = false;
    bool have_override = false;
    long long n_override = 0;
    long long max_id = -1;
    std::vector<Edge> edges;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank(line)) continue;
        std::size_t first = line.find_first_not_of(" \t");
        if (line[first] == '#') {
            std::string body = line.substr(first + 1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            doc.comments.push_back(body);
            continue;
        }
        auto tok = tokens(line);
        if (!saw_data && tok.size() == 2 && tok[0] == "n") {
            if (!parse_int(tok[1], n_override) || n_override < 0)
                throw ParseError(ParseError::Kind::malformed_line, lineno,
                                 "expected `n N`");
            have_override = true;
            saw_data = true;
            continue;
        }
        saw_data = true;
        long long u, v;
        if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v) ||
            u < 0 || v < 0)
            throw ParseError(ParseError::Kind::malformed_line, lineno,
                             "expected `u v` with nonnegative ids");
        if (have_override && (u >= n_override || v >= n_override))
            throw ParseError(ParseError::Kind::vertex_out_of_range, lineno,
                             "endpoint outside [0," + std::to_string(n_override) + ")");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    long long n = have_override ? n_override : max_id + 1;
    doc.graph = Graph::build(static_cast<int>(n), edges);
    return doc;
}

std::string serialize_edgelist(const GraphDocument& doc) {
    std::ostringstream out;
    out << "n " << doc.graph.vertex_count() << '\n';
    for (const auto& [u, v] : doc.graph.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

GraphDocument parse(const std::string& text, GraphFormat fmt) {
    return fmt == GraphFormat::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

std::string serialize(const GraphDocument& doc, GraphFormat fmt) {
    return fmt == GraphFormat::dimacs ? serialize_dimacs(doc)
                                      : serialize_edgelist(doc);
}

GraphFormat sniff_format(const std::string& text) {
    for (const auto& line : split_lines(text)) {
        if (line.rfind("p ", 0) == 0 || line == "p") return GraphFormat::dimacs;
    }
    return GraphFormat::edgelist;
}

}  // namespace minbound
