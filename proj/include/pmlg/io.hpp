#ifndef PMLG_IO_HPP
#define PMLG_IO_HPP

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pmlg/error.hpp"
#include "pmlg/graph.hpp"
#include "pmlg/ov.hpp"
#include "pmlg/pattern.hpp"

namespace pmlg {

namespace detail {

struct Line {
    std::size_t number;
    std::string text;
};

// Splits on LF, drops '#' comment lines and blank lines, keeps 1-based numbers.
inline std::vector<Line> content_lines(std::string_view doc) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= doc.size()) {
        auto nl = doc.find('\n', pos);
        if (nl == std::string_view::npos) nl = doc.size();
        ++number;
        std::string text(doc.substr(pos, nl - pos));
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (!text.empty() && text.front() != '#') out.push_back({number, std::move(text)});
        pos = nl + 1;
    }
    return out;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

inline std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line);
    }
    return v;
}

inline int parse_int(const std::string& tok, std::size_t line, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", line);
    }
    return v;
}

class LineCursor {
public:
    explicit LineCursor(std::string_view doc) : lines_(content_lines(doc)) {}

    bool done() const { return next_ >= lines_.size(); }

    const Line& take(const char* expected) {
        if (done()) {
            const auto last = lines_.empty() ? 0 : lines_.back().number;
            throw ParseError(std::string("unexpected end of input, expected ") + expected, last + 1);
        }
        return lines_[next_++];
    }

    const Line& peek() const { return lines_[next_]; }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

inline void expect_header(LineCursor& cur, std::string_view magic) {
    const auto& l = cur.take("header");
    const auto t = tokens(l.text);
    if (t.size() != 2 || t[0] != magic || t[1] != "1") {
        throw ParseError("malformed header, expected '" + std::string(magic) + " 1'", l.number);
    }
}

inline Alphabet expect_alphabet(LineCursor& cur) {
    const auto& l = cur.take("alphabet line");
    const auto t = tokens(l.text);
    if (t.size() != 2 || t[0] != "alphabet") throw ParseError("malformed alphabet line", l.number);
    auto a = Alphabet::from_name(t[1]);
    if (!a) throw ParseError("unknown alphabet '" + t[1] + "'", l.number);
    return *a;
}

inline std::uint64_t expect_count(LineCursor& cur, const char* keyword) {
    const auto& l = cur.take(keyword);
    const auto t = tokens(l.text);
    if (t.size() != 2 || t[0] != keyword) {
        throw ParseError(std::string("malformed '") + keyword + "' line", l.number);
    }
    return parse_uint(t[1], l.number, "a count");
}

} // namespace detail

/*
 * PMLG text format v1:
 *
 *   pmlg 1
 *   alphabet base4|binary|zigzag6
 *   directed true|false
 *   nodes N            followed by N lines "<id> <label>"
 *   edges M            followed by M lines "<u> <v>"
 *   annotations        optional, one line "<id> <gadget> <j> <h> <kind>" per annotated node
 */
inline std::string write_graph(const LabeledGraph& g) {
    std::ostringstream out;
    out << "pmlg 1\n";
    out << "alphabet " << g.alphabet().name_string() << '\n';
    out << "directed " << (g.directed() ? "true" : "false") << '\n';
    out << "nodes " << g.node_count() << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) out << v << ' ' << g.label(v) << '\n';
    out << "edges " << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.from << ' ' << e.to << '\n';
    if (g.has_annotations()) {
        out << "annotations\n";
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto& a = g.annotation(v);
            if (!a) continue;
            out << v << ' ' << to_string(a->gadget) << ' ' << a->j << ' ' << a->h << ' '
                << to_string(a->kind) << '\n';
        }
    }
    return out.str();
}

inline LabeledGraph read_graph(std::string_view doc) {
    using namespace detail;
    LineCursor cur(doc);
    expect_header(cur, "pmlg");
    const Alphabet alphabet = expect_alphabet(cur);

    const auto& dl = cur.take("directed line");
    const auto dt = tokens(dl.text);
    if (dt.size() != 2 || dt[0] != "directed" || (dt[1] != "true" && dt[1] != "false")) {
        throw ParseError("malformed directed line", dl.number);
    }
    LabeledGraph g(alphabet, dt[1] == "true");

    const auto n = expect_count(cur, "nodes");
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto& l = cur.take("node line");
        const auto t = tokens(l.text);
        if (t.size() != 2) throw ParseError("malformed node line", l.number);
        if (parse_uint(t[0], l.number, "node id") != i) {
            throw ParseError("node ids must be 0..N-1 in order", l.number);
        }
        if (!alphabet.spells(t[1])) throw ParseError("unknown symbol in label '" + t[1] + "'", l.number);
        g.add_node(t[1]);
    }

    const auto m = expect_count(cur, "edges");
    for (std::uint64_t i = 0; i < m; ++i) {
        const auto& l = cur.take("edge line");
        const auto t = tokens(l.text);
        if (t.size() != 2) throw ParseError("malformed edge line", l.number);
        const auto u = parse_uint(t[0], l.number, "node id");
        const auto v = parse_uint(t[1], l.number, "node id");
        if (u >= n || v >= n) throw ParseError("edge endpoint out of range", l.number);
        g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }

    if (!cur.done()) {
        const auto& l = cur.take("annotations");
        if (l.text != "annotations") throw ParseError("unexpected trailing content", l.number);
        while (!cur.done()) {
            const auto& al = cur.take("annotation line");
            const auto t = tokens(al.text);
            if (t.size() != 5) throw ParseError("malformed annotation line", al.number);
            const auto id = parse_uint(t[0], al.number, "node id");
            if (id >= n) throw ParseError("annotation node out of range", al.number);
            auto gadget = gadget_from_string(t[1]);
            auto kind = kind_from_string(t[4]);
            if (!gadget || !kind) throw ParseError("unknown gadget or kind", al.number);
            g.set_annotation(static_cast<NodeId>(id),
                             Annotation{*gadget, parse_int(t[2], al.number, "j"),
                                        parse_int(t[3], al.number, "h"), *kind});
        }
    }
    return g;
}

// Pattern file: "pmlgpat 1", "alphabet <name>", then the pattern as one token.
inline std::string write_pattern(const Pattern& p) {
    return "pmlgpat 1\nalphabet " + std::string(p.alphabet().name_string()) + "\n" + p.symbols() + "\n";
}

inline Pattern read_pattern(std::string_view doc) {
    using namespace detail;
    LineCursor cur(doc);
    expect_header(cur, "pmlgpat");
    const Alphabet alphabet = expect_alphabet(cur);
    const auto& l = cur.take("pattern line");
    const auto t = tokens(l.text);
    if (t.size() != 1) throw ParseError("pattern must be one contiguous token", l.number);
    if (!alphabet.spells(t[0])) throw ParseError("unknown symbol in pattern", l.number);
    if (!cur.done()) throw ParseError("unexpected trailing content", cur.peek().number);
    return Pattern(alphabet, t[0]);
}

// OV format: "ov 1", "n d", n lines of X then n lines of Y, entries as 0/1 tokens.
inline std::string write_ov(const OvInstance& inst) {
    std::ostringstream out;
    out << "ov 1\n" << inst.n() << ' ' << inst.d() << '\n';
    for (const auto* set : {&inst.xs(), &inst.ys()}) {
        for (const auto& v : *set) {
            for (std::size_t h = 0; h < v.dim(); ++h) out << (h ? " " : "") << (v[h] ? '1' : '0');
            out << '\n';
        }
    }
    return out.str();
}

inline OvInstance read_ov(std::string_view doc) {
    using namespace detail;
    LineCursor cur(doc);
    expect_header(cur, "ov");
    const auto& sl = cur.take("size line");
    const auto st = tokens(sl.text);
    if (st.size() != 2) throw ParseError("malformed size line, expected 'n d'", sl.number);
    const auto n = parse_uint(st[0], sl.number, "n");
    const auto d = parse_uint(st[1], sl.number, "d");
    if (n == 0 || d == 0) throw ParseError("n and d must be at least 1", sl.number);
    auto read_set = [&] {
        std::vector<BinaryVector> vs;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto& l = cur.take("vector line");
            const auto t = tokens(l.text);
            if (t.size() != d) throw ParseError("vector has wrong dimension", l.number);
            std::vector<std::uint8_t> bits;
            for (const auto& tok : t) {
                if (tok != "0" && tok != "1") throw ParseError("vector entries must be 0 or 1", l.number);
                bits.push_back(tok == "1" ? 1 : 0);
            }
            vs.emplace_back(std::move(bits));
        }
        return vs;
    };
    auto xs = read_set();
    auto ys = read_set();
    if (!cur.done()) throw ParseError("unexpected trailing content", cur.peek().number);
    return OvInstance(std::move(xs), std::move(ys));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

} // namespace pmlg

#endif
