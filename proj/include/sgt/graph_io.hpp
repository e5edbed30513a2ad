#pragma once

// GraphFile text format.
//
//   sg <n> <m> <simple|simply-signed>
//   <u> <v> <+|->          (m lines, edge ids = line order, 1-based)
//   eta                    (optional block)
//   <edge-id> <+1|-1> <+1|-1>   (m lines, eta at the u and v end)
//
// '#' starts a comment, blank lines are ignored.  write_graph emits the
// canonical form, which round-trips byte-identically.

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgt/int_matrix.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace detail {

struct ContentLine {
    int number;
    std::string text;
};

inline std::vector<ContentLine> content_lines(const std::string& text) {
    std::vector<ContentLine> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back({number, line});
    }
    return out;
}

inline int parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + tok + "'");
    return value;
}

inline int parse_sign_token(const std::string& tok, int line) {
    if (tok == "+") return +1;
    if (tok == "-") return -1;
    throw ParseError(line, "expected sign '+' or '-', got '" + tok + "'");
}

inline int parse_unit(const std::string& tok, int line) {
    if (tok == "+1" || tok == "1" || tok == "+") return +1;
    if (tok == "-1" || tok == "-") return -1;
    throw ParseError(line, "expected +1 or -1, got '" + tok + "'");
}

} // namespace detail

inline std::pair<SignedGraph, std::optional<Orientation>> read_graph(const std::string& text) {
    std::vector<detail::ContentLine> lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input, expected 'sg <n> <m> <mode>'");

    std::size_t at = 0;
    std::istringstream head(lines[at].text);
    std::string magic, nt, mt, modet, extra;
    if (!(head >> magic >> nt >> mt >> modet) || magic != "sg" || (head >> extra))
        throw ParseError(lines[at].number, "expected header 'sg <n> <m> <mode>'");
    int n = detail::parse_int(nt, lines[at].number, "vertex count");
    int m = detail::parse_int(mt, lines[at].number, "edge count");
    GraphMode mode;
    if (modet == "simple")
        mode = GraphMode::simple;
    else if (modet == "simply-signed")
        mode = GraphMode::simply_signed;
    else
        throw ParseError(lines[at].number, "unknown mode '" + modet + "'");
    if (n < 0 || m < 0) throw ParseError(lines[at].number, "negative count in header");
    ++at;

    std::vector<EdgeSpec> es;
    std::vector<int> edge_line;
    for (int e = 0; e < m; ++e, ++at) {
        if (at >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e));
        std::istringstream in(lines[at].text);
        std::string ut, vt, st;
        if (!(in >> ut >> vt >> st) || (in >> extra))
            throw ParseError(lines[at].number, "expected '<u> <v> <+|->'");
        int u = detail::parse_int(ut, lines[at].number, "endpoint");
        int v = detail::parse_int(vt, lines[at].number, "endpoint");
        int s = detail::parse_sign_token(st, lines[at].number);
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(lines[at].number, "endpoint out of range 1.." + std::to_string(n));
        if (u == v) throw ParseError(lines[at].number, "loops are not allowed");
        for (std::size_t prev = 0; prev < es.size(); ++prev) {
            const EdgeSpec& q = es[prev];
            bool same = (q.u == u && q.v == v) || (q.u == v && q.v == u);
            if (!same) continue;
            if (mode == GraphMode::simple)
                throw ParseError(lines[at].number, "parallel edge in simple mode");
            if (q.sign == s)
                throw ParseError(lines[at].number, "parallel edges must have opposite signs");
            for (std::size_t other = 0; other < es.size(); ++other) {
                if (other == prev) continue;
                const EdgeSpec& r = es[other];
                if ((r.u == u && r.v == v) || (r.u == v && r.v == u))
                    throw ParseError(lines[at].number, "more than two parallel edges");
            }
        }
        es.push_back({u, v, s});
        edge_line.push_back(lines[at].number);
    }

    SignedGraph g(n, mode, es);

    std::optional<Orientation> o;
    if (at < lines.size()) {
        std::istringstream in(lines[at].text);
        std::string kw;
        in >> kw;
        if (kw != "eta" || (in >> extra))
            throw ParseError(lines[at].number, "unexpected content, expected 'eta' block or end");
        ++at;
        std::vector<std::array<int, 2>> eta(static_cast<std::size_t>(m), {0, 0});
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        for (int e = 0; e < m; ++e, ++at) {
            if (at >= lines.size())
                throw ParseError(lines.back().number,
                                 "eta block needs " + std::to_string(m) + " lines");
            std::istringstream ein(lines[at].text);
            std::string it, aut, avt;
            if (!(ein >> it >> aut >> avt) || (ein >> extra))
                throw ParseError(lines[at].number, "expected '<edge-id> <eta_u> <eta_v>'");
            int id = detail::parse_int(it, lines[at].number, "edge id");
            if (id < 1 || id > m)
                throw ParseError(lines[at].number, "edge id out of range 1.." + std::to_string(m));
            if (seen[static_cast<std::size_t>(id - 1)])
                throw ParseError(lines[at].number, "duplicate eta line for edge " + std::to_string(id));
            seen[static_cast<std::size_t>(id - 1)] = 1;
            int eu = detail::parse_unit(aut, lines[at].number);
            int ev = detail::parse_unit(avt, lines[at].number);
            if (-eu * ev != g.sign(id))
                throw ParseError(lines[at].number,
                                 "eta inconsistent with edge sign: need -eta_u*eta_v = sign");
            eta[static_cast<std::size_t>(id - 1)] = {eu, ev};
        }
        if (at < lines.size())
            throw ParseError(lines[at].number, "unexpected content after eta block");
        o = Orientation(g, eta);
    }
    return {std::move(g), std::move(o)};
}

inline std::string write_graph(const SignedGraph& g,
                               const std::optional<Orientation>& o = std::nullopt) {
    std::ostringstream out;
    out << "sg " << g.n() << ' ' << g.m() << ' '
        << (g.mode() == GraphMode::simple ? "simple" : "simply-signed") << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    if (o) {
        if (!o->consistent_with(g))
            throw std::invalid_argument("write_graph: orientation does not belong to this graph");
        out << "eta\n";
        for (const Edge& e : g.edges()) {
            auto [eu, ev] = o->ends(e.id);
            out << e.id << ' ' << (eu > 0 ? "+1" : "-1") << ' ' << (ev > 0 ? "+1" : "-1") << '\n';
        }
    }
    return out.str();
}

enum class MatrixFormat { plain, csv };

inline std::string write_matrix(const IntMatrix& m, MatrixFormat format) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out << (format == MatrixFormat::csv ? "," : " ");
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

// A switching function file: one +1/-1 token per vertex, in vertex order,
// separated by whitespace; '#' comments allowed.
inline SwitchingFunction read_switching(const std::string& text, int n) {
    std::vector<int> theta;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) theta.push_back(detail::parse_unit(tok, number));
    }
    if (static_cast<int>(theta.size()) != n)
        throw ParseError(number == 0 ? 1 : number,
                         "expected " + std::to_string(n) + " switching values, got " +
                             std::to_string(theta.size()));
    return SwitchingFunction(theta);
}

} // namespace sgt
