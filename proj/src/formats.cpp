#include "nmi/formats.hpp"

#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace nmi {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

// Non-empty lines split on whitespace, comments stripped.
std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i == raw.size()) break;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

long parse_integer(const Token& tok, std::size_t line, long lo, long hi, const char* what) {
    long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line, tok.column);
    if (value < lo || value > hi)
        throw ParseError(std::string(what) + " " + tok.text + " is out of range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]",
                         line, tok.column);
    return value;
}

std::size_t parse_header(const std::vector<Line>& lines, const char* keyword, long hi) {
    if (lines.empty()) throw ParseError(std::string("missing '") + keyword + " <n>' header", 1, 1);
    const Line& h = lines.front();
    if (h.tokens.size() != 2 || h.tokens[0].text != keyword)
        throw ParseError(std::string("expected '") + keyword + " <n>' header", h.number, h.tokens[0].column);
    return static_cast<std::size_t>(parse_integer(h.tokens[1], h.number, 1, hi, "count"));
}

Exponent parse_monomial_token(const Token& tok, std::size_t line, std::size_t num_vars) {
    Exponent a(num_vars);
    const std::string& s = tok.text;
    if (s == "1") return a;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw ParseError(why + " in monomial '" + s + "'", line, tok.column + i); };
    auto read_number = [&]() -> long {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected a number");
        if (i - start > 9) fail("number too large");
        return std::stol(s.substr(start, i - start));
    };
    while (true) {
        if (i >= s.size() || s[i] != 't') fail("expected 't'");
        ++i;
        std::size_t at = i;
        long var = read_number();
        if (var < 1 || static_cast<std::size_t>(var) > num_vars) {
            i = at;
            fail("variable index out of range");
        }
        long power = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            power = read_number();
        }
        long total = static_cast<long>(a[static_cast<std::size_t>(var - 1)]) + power;
        if (total > std::numeric_limits<int>::max()) fail("exponent too large");
        a[static_cast<std::size_t>(var - 1)] = static_cast<int>(total);
        if (i == s.size()) break;
        if (s[i] != '*') fail("expected '*'");
        ++i;
    }
    return a;
}

}  // namespace

Exponent parse_monomial(const std::string& text, std::size_t num_vars) {
    auto lines = tokenize(text);
    if (lines.size() != 1 || lines[0].tokens.size() != 1) throw ParseError("expected a single monomial", 0, 0);
    return parse_monomial_token(lines[0].tokens[0], 0, num_vars);
}

MonomialIdeal parse_ideal(const std::string& text) {
    auto lines = tokenize(text);
    const std::size_t s = parse_header(lines, "vars", static_cast<long>(max_vertices) * 16);
    std::vector<Exponent> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() == 1 && !std::isdigit(static_cast<unsigned char>(l.tokens[0].text[0]))) {
            gens.push_back(parse_monomial_token(l.tokens[0], l.number, s));
            continue;
        }
        if (l.tokens.size() == 1 && s != 1 && l.tokens[0].text == "1") {
            gens.emplace_back(s);
            continue;
        }
        if (l.tokens.size() != s)
            throw ParseError("expected " + std::to_string(s) + " exponents, got " + std::to_string(l.tokens.size()),
                             l.number, l.tokens[0].column);
        std::vector<int> e;
        for (const auto& tok : l.tokens)
            e.push_back(static_cast<int>(parse_integer(tok, l.number, 0, 1'000'000, "exponent")));
        gens.emplace_back(std::move(e));
    }
    return make_ideal(s, std::move(gens));
}

std::string serialize_ideal(const MonomialIdeal& I) {
    std::ostringstream out;
    out << "vars " << I.num_vars() << '\n';
    for (const auto& g : I.gens()) {
        for (std::size_t i = 0; i < g.num_vars(); ++i) out << (i ? " " : "") << g[i];
        out << '\n';
    }
    return out.str();
}

Clutter parse_clutter(const std::string& text) {
    auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "vertices", static_cast<long>(max_vertices));
    std::vector<VertexSet> edges;
    std::vector<std::size_t> edge_line;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        VertexSet e = 0;
        for (const auto& tok : l.tokens) {
            long v = parse_integer(tok, l.number, 1, static_cast<long>(n), "vertex");
            VertexSet b = VertexSet{1} << (v - 1);
            if (e & b) throw ParseError("vertex " + tok.text + " repeated in an edge", l.number, tok.column);
            e |= b;
        }
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if ((edges[j] & e) == edges[j] || (edges[j] & e) == e)
                throw ParseError("edge " + set_to_string(e) + " is comparable with the edge on line " +
                                     std::to_string(edge_line[j]) + "; clutter edges must form an antichain",
                                 l.number, l.tokens[0].column);
        }
        edges.push_back(e);
        edge_line.push_back(l.number);
    }
    return Clutter(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    const std::size_t n = parse_header(lines, "vertices", static_cast<long>(max_vertices));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens.size() != 2)
            throw ParseError("graph edges need exactly two vertices", l.number, l.tokens[0].column);
        auto u = static_cast<std::size_t>(parse_integer(l.tokens[0], l.number, 1, static_cast<long>(n), "vertex"));
        auto v = static_cast<std::size_t>(parse_integer(l.tokens[1], l.number, 1, static_cast<long>(n), "vertex"));
        if (u == v) throw ParseError("loops are not allowed", l.number, l.tokens[1].column);
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError("repeated edge", l.number, l.tokens[0].column);
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph(n, edges);
}

std::string serialize_clutter(const Clutter& C) {
    std::ostringstream out;
    out << "vertices " << C.num_vertices() << '\n';
    for (VertexSet e : C.edges()) {
        bool first = true;
        for (auto v : members(e)) {
            out << (first ? "" : " ") << v + 1;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_graph(const Graph& G) {
    std::ostringstream out;
    out << "vertices " << G.num_vertices() << '\n';
    for (auto [u, v] : G.edge_list()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

MatrixBlock parse_matrix_block(const std::string& text) {
    auto lines = tokenize(text);
    MatrixBlock block;
    std::size_t k = 0;
    std::optional<std::size_t> amb;
    if (k < lines.size() && lines[k].tokens[0].text == "amb_space") {
        const Line& l = lines[k];
        if (l.tokens.size() != 2) throw ParseError("expected 'amb_space <d>'", l.number, l.tokens[0].column);
        amb = static_cast<std::size_t>(parse_integer(l.tokens[1], l.number, 1, 4096, "dimension"));
        ++k;
    }
    if (k == lines.size()) throw ParseError("missing 'normalization <n>' or 'rees_algebra <n>' line", 0, 0);
    const Line& m = lines[k++];
    const std::string& mode = m.tokens[0].text;
    if (mode == "normalization") {
        block.mode = MatrixMode::normalization;
    } else if (mode == "rees_algebra") {
        block.mode = MatrixMode::rees_algebra;
    } else {
        throw ParseError("unsupported directive '" + mode + "'; only normalization and rees_algebra are accepted",
                         m.number, m.tokens[0].column);
    }
    if (m.tokens.size() != 2) throw ParseError("expected '" + mode + " <rows>'", m.number, m.tokens[0].column);
    const auto count = static_cast<std::size_t>(parse_integer(m.tokens[1], m.number, 0, 1'000'000, "row count"));
    const std::size_t shift = block.mode == MatrixMode::rees_algebra ? 1 : 0;
    if (amb && *amb <= shift) throw ParseError("amb_space too small for rees_algebra", 0, 0);
    std::optional<std::size_t> width;
    if (amb) width = *amb - shift;
    for (std::size_t r = 0; r < count; ++r) {
        if (k + r >= lines.size())
            throw ParseError("expected " + std::to_string(count) + " rows, found " + std::to_string(r),
                             lines.back().number, 1);
        const Line& l = lines[k + r];
        if (!width) width = l.tokens.size();
        if (l.tokens.size() != *width)
            throw ParseError("expected " + std::to_string(*width) + " entries, got " + std::to_string(l.tokens.size()),
                             l.number, l.tokens[0].column);
        IntVector row;
        for (const auto& tok : l.tokens)
            row.push_back(parse_integer(tok, l.number, -1'000'000'000L, 1'000'000'000L, "integer"));
        block.rows.push_back(std::move(row));
    }
    if (k + count < lines.size())
        throw ParseError("unexpected content after the matrix rows", lines[k + count].number,
                         lines[k + count].tokens[0].column);
    if (!width) throw ParseError("cannot infer the dimension of an empty matrix without amb_space", m.number, 1);
    block.amb_space = *width + shift;
    return block;
}

std::string serialize_matrix_block(const MatrixBlock& block) {
    std::ostringstream out;
    out << "amb_space " << block.amb_space << '\n';
    out << (block.mode == MatrixMode::normalization ? "normalization " : "rees_algebra ") << block.rows.size() << '\n';
    for (const auto& row : block.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    return out.str();
}

MatrixBlock b_set_block(const MonomialIdeal& I) {
    const IntegerCone C = b_set(I);
    return {MatrixMode::normalization, C.dim(), C.generators()};
}

MatrixBlock rees_block(const MonomialIdeal& I) {
    if (!I.is_proper()) throw UnsupportedInput("Rees block needs a proper ideal");
    MatrixBlock block{MatrixMode::rees_algebra, I.num_vars() + 1, {}};
    for (const auto& g : I.gens()) block.rows.emplace_back(g.entries().begin(), g.entries().end());
    return block;
}

}  // namespace nmi
