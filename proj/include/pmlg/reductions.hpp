#ifndef PMLG_REDUCTIONS_HPP
#define PMLG_REDUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmlg/error.hpp"
#include "pmlg/graph.hpp"
#include "pmlg/ov.hpp"
#include "pmlg/pattern.hpp"

namespace pmlg {

enum class Variant { undirected, dag, det_dag, zigzag };

inline std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::undirected: return "undirected";
    case Variant::dag: return "dag";
    case Variant::det_dag: return "det-dag";
    case Variant::zigzag: return "zigzag";
    }
    return "";
}

inline std::optional<Variant> variant_from_string(std::string_view s) {
    for (auto v : {Variant::undirected, Variant::dag, Variant::det_dag, Variant::zigzag}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

struct ArtifactMeta {
    std::size_t n = 0;
    std::size_t d = 0;
    bool binary_encoded = false;
    bool padded = false;

    friend bool operator==(const ArtifactMeta&, const ArtifactMeta&) = default;
};

// A compiled OV instance: the graph plus one pattern (two for zigzag).
struct ReductionArtifact {
    Variant variant;
    LabeledGraph graph;
    std::vector<Pattern> patterns;
    ArtifactMeta meta;
};

// Metadata line "variant n d binary padded seed".
inline std::string format_meta(const ReductionArtifact& art, std::uint64_t seed) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return std::string(to_string(art.variant)) + " " + std::to_string(art.meta.n) + " " +
           std::to_string(art.meta.d) + " " + b(art.meta.binary_encoded) + " " + b(art.meta.padded) + " " +
           std::to_string(seed) + "\n";
}

inline std::size_t edge_budget(std::size_t n, std::size_t d) { return 24 * n * (d + 2); }

// ---------------------------------------------------------------------------
// Undirected gadgets
// ---------------------------------------------------------------------------

/*
 * P = bb P_{x_1} e b P_{x_2} e ... b P_{x_n} ee, where P_x spells x with
 * '0'/'1'. Length n(d+2)+2.
 */
inline Pattern build_pattern(const std::vector<BinaryVector>& xs) {
    if (xs.empty()) throw std::invalid_argument("build_pattern needs n >= 1");
    std::string p = "b";
    for (const auto& x : xs) p += "b" + x.to_string() + "e";
    p += "e";
    return Pattern(Alphabet::base4(), std::move(p));
}

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Node handles of one b / levels / e sub-structure.
struct GadgetGroup {
    NodeId begin = kNoNode;
    NodeId end = kNoNode;
    NodeId pendant_begin = kNoNode;
    NodeId pendant_end = kNoNode;
    std::vector<NodeId> zero; // zero[h] for h = 0..d-1
    std::vector<NodeId> one;  // one[h], kNoNode where y[h] = 1
};

struct GadgetFragment {
    LabeledGraph graph;
    std::vector<GadgetGroup> groups;
};

namespace detail {

struct PendantSpec {
    bool begin = false;
    bool end = false;
};

/*
 * Appends one group: begin node, a 0-node per position, a 1-node where
 * y[h] = 0, end node, and the level-to-level edges. Node ids increase from
 * left to right so that every edge (u, v) added here has u < v.
 */
inline GadgetGroup append_group(LabeledGraph& g, const BinaryVector& y, int j, Gadget gadget,
                                PendantSpec pendants) {
    GadgetGroup grp;
    const std::size_t d = y.dim();
    if (pendants.begin) grp.pendant_begin = g.add_node("b", Annotation{Gadget::pendant, j, 0, NodeKind::B});
    grp.begin = g.add_node("b", Annotation{gadget, j, 0, NodeKind::B});
    grp.zero.assign(d, kNoNode);
    grp.one.assign(d, kNoNode);
    for (std::size_t h = 0; h < d; ++h) {
        const int hh = static_cast<int>(h + 1);
        grp.zero[h] = g.add_node("0", Annotation{gadget, j, hh, NodeKind::zero});
        if (!y[h]) grp.one[h] = g.add_node("1", Annotation{gadget, j, hh, NodeKind::one});
    }
    grp.end = g.add_node("e", Annotation{gadget, j, 0, NodeKind::E});
    if (pendants.end) grp.pendant_end = g.add_node("e", Annotation{Gadget::pendant, j, 0, NodeKind::E});

    if (pendants.begin) g.add_edge(grp.pendant_begin, grp.begin);
    auto level = [&](std::size_t h) {
        std::vector<NodeId> l{grp.zero[h]};
        if (grp.one[h] != kNoNode) l.push_back(grp.one[h]);
        return l;
    };
    for (NodeId v : level(0)) g.add_edge(grp.begin, v);
    for (std::size_t h = 0; h + 1 < d; ++h) {
        for (NodeId u : level(h)) {
            for (NodeId v : level(h + 1)) g.add_edge(u, v);
        }
    }
    for (NodeId u : level(d - 1)) g.add_edge(u, grp.end);
    if (pendants.end) g.add_edge(grp.end, grp.pendant_end);
    return grp;
}

inline GadgetGroup append_jolly(LabeledGraph& g, std::size_t d, int j, Gadget gadget, PendantSpec pendants) {
    return append_group(g, BinaryVector::filled(d, false), j, gadget, pendants);
}

} // namespace detail

/*
 * G_W for Y: one group per y_j, with a 1-node only where y_j[h] = 0, and
 * the chaining edges (e_W^(j-1), b_W^(j)).
 */
inline GadgetFragment build_gw(const std::vector<BinaryVector>& ys) {
    if (ys.empty() || ys.front().dim() == 0) throw std::invalid_argument("build_gw needs n >= 1, d >= 1");
    GadgetFragment f{LabeledGraph(Alphabet::base4(), false), {}};
    for (std::size_t j = 0; j < ys.size(); ++j) {
        f.groups.push_back(detail::append_group(f.graph, ys[j], static_cast<int>(j + 1), Gadget::GW, {}));
        if (j > 0) f.graph.add_edge(f.groups[j - 1].end, f.groups[j].begin);
    }
    return f;
}

// count chained jolly gadgets, each matching every b{0,1}^d e.
inline GadgetFragment build_gu(std::size_t count, std::size_t d, Gadget tag = Gadget::GU1) {
    if (d == 0) throw std::invalid_argument("build_gu needs d >= 1");
    GadgetFragment f{LabeledGraph(Alphabet::base4(), false), {}};
    for (std::size_t k = 0; k < count; ++k) {
        f.groups.push_back(detail::append_jolly(f.graph, d, static_cast<int>(k + 1), tag, {}));
        if (k > 0) f.graph.add_edge(f.groups[k - 1].end, f.groups[k].begin);
    }
    return f;
}

/*
 * G = G_U1 (2n-2 jolly gadgets, pendant b on each) / G_W (pendant b and e on
 * each group) / G_U2 (2n-2 jolly gadgets, pendant e on each), joined by
 * (e_U1^(n-2+j), b_W^(j)) and (e_W^(j), b_U2^(j)). Nodes are numbered
 * top-left to bottom-right, which is also the orientation used for the DAG.
 */
inline ReductionArtifact assemble_undirected(const OvInstance& inst) {
    const std::size_t n = inst.n(), d = inst.d();
    LabeledGraph g(Alphabet::base4(), false);
    const std::size_t u_count = 2 * n - 2;

    std::vector<GadgetGroup> u1, w, u2;
    for (std::size_t k = 0; k < u_count; ++k) {
        u1.push_back(detail::append_jolly(g, d, static_cast<int>(k + 1), Gadget::GU1, {true, false}));
        if (k > 0) g.add_edge(u1[k - 1].end, u1[k].begin);
    }
    for (std::size_t j = 0; j < n; ++j) {
        w.push_back(detail::append_group(g, inst.ys()[j], static_cast<int>(j + 1), Gadget::GW, {true, true}));
        if (j > 0) g.add_edge(w[j - 1].end, w[j].begin);
        // e_U1^(n-2+j) with 1-based j; 0-based index n-3+(j+1) = n-2+j
        if (n >= 2) g.add_edge(u1[n - 2 + j].end, w[j].begin);
    }
    for (std::size_t k = 0; k < u_count; ++k) {
        u2.push_back(detail::append_jolly(g, d, static_cast<int>(k + 1), Gadget::GU2, {false, true}));
        if (k > 0) g.add_edge(u2[k - 1].end, u2[k].begin);
        if (k < n) g.add_edge(w[k].end, u2[k].begin);
    }
    if (g.edge_count() > edge_budget(n, d)) throw std::logic_error("undirected artifact exceeds edge budget");
    return {Variant::undirected, std::move(g), {build_pattern(inst.xs())}, {n, d, false, false}};
}

/*
 * Directs every edge of the undirected artifact left to right and top to
 * bottom. Because node ids follow that order, the stored (u, v), u < v, is
 * already the construction direction.
 */
inline ReductionArtifact orient_to_dag(const ReductionArtifact& art) {
    if (art.variant != Variant::undirected || art.meta.binary_encoded) {
        throw ReductionError("orient_to_dag expects an unencoded undirected artifact");
    }
    LabeledGraph g(art.graph.alphabet(), true);
    for (NodeId v = 0; v < art.graph.node_count(); ++v) g.add_node(art.graph.label(v), art.graph.annotation(v));
    for (const auto& e : art.graph.edges()) g.add_edge(e.from, e.to);
    if (!is_acyclic(g)) throw std::logic_error("orient_to_dag produced a cycle");
    return {Variant::dag, std::move(g), art.patterns, art.meta};
}

// ---------------------------------------------------------------------------
// Deterministic DAG
// ---------------------------------------------------------------------------

/*
 * G': G_W merged with G_U1 into G_WU so that no e-node branches to two
 * b-nodes. Per group j, with h the first position where y_j[h] = 1:
 *   - add v1_{jh}, entered from level h-1 (or from b_W^(j) when h = 1);
 *   - add a partial jolly copy covering positions h+1..d and its end node
 *     e_C^(j), entered from v1_{jh};
 *   - every later position h' with y_j[h'] = 1 gets edges from W's level
 *     h'-1 into the copy's 1-node at h';
 *   - (e_C^(j), b_W^(j+1)) replaces (e_W^(j), b_W^(j+1)).
 * A string leaves W for the copy exactly at its first 1 on a missing
 * position, so W plus the copy still accepts all of b{0,1}^d e while only
 * W's own paths reach e_W^(j). n-1 jolly gadgets with pendant b-nodes feed
 * b_W^(1); G_U2 is attached as in G.
 *
 * All-zero y_j has no missing position and is rejected; such instances are
 * trivially orthogonal.
 */
inline ReductionArtifact build_deterministic_dag(const OvInstance& inst) {
    if (inst.has_all_zero_y()) {
        throw ReductionError("trivially-orthogonal instance: all-zero y_j has no deterministic gadget");
    }
    const std::size_t n = inst.n(), d = inst.d();
    LabeledGraph g(Alphabet::base4(), true);

    std::vector<GadgetGroup> prefix;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        prefix.push_back(detail::append_jolly(g, d, static_cast<int>(k + 1), Gadget::GU1, {true, false}));
        if (k > 0) g.add_edge(prefix[k - 1].end, prefix[k].begin);
    }

    std::vector<GadgetGroup> w;
    NodeId feed = prefix.empty() ? kNoNode : prefix.back().end;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& y = inst.ys()[j];
        const int jj = static_cast<int>(j + 1);
        w.push_back(detail::append_group(g, y, jj, Gadget::GW, {true, true}));
        const auto& grp = w.back();
        if (feed != kNoNode) g.add_edge(feed, grp.begin);

        auto w_level = [&](std::size_t h) {
            std::vector<NodeId> l{grp.zero[h]};
            if (grp.one[h] != kNoNode) l.push_back(grp.one[h]);
            return l;
        };
        std::size_t first = 0;
        while (!y[first]) ++first;

        const NodeId entry = g.add_node("1", Annotation{Gadget::GWU, jj, static_cast<int>(first + 1), NodeKind::one});
        std::vector<NodeId> c0(d, kNoNode), c1(d, kNoNode);
        for (std::size_t h = first + 1; h < d; ++h) {
            c0[h] = g.add_node("0", Annotation{Gadget::GWU, jj, static_cast<int>(h + 1), NodeKind::zero});
            c1[h] = g.add_node("1", Annotation{Gadget::GWU, jj, static_cast<int>(h + 1), NodeKind::one});
        }
        const NodeId exit = g.add_node("e", Annotation{Gadget::GWU, jj, 0, NodeKind::E});

        if (first == 0) {
            g.add_edge(grp.begin, entry);
        } else {
            for (NodeId u : w_level(first - 1)) g.add_edge(u, entry);
        }
        auto copy_level = [&](std::size_t h) { return std::vector<NodeId>{c0[h], c1[h]}; };
        if (first + 1 < d) {
            for (NodeId v : copy_level(first + 1)) g.add_edge(entry, v);
            for (std::size_t h = first + 1; h + 1 < d; ++h) {
                for (NodeId u : copy_level(h)) {
                    for (NodeId v : copy_level(h + 1)) g.add_edge(u, v);
                }
            }
            for (NodeId u : copy_level(d - 1)) g.add_edge(u, exit);
        } else {
            g.add_edge(entry, exit);
        }
        for (std::size_t h = first + 1; h < d; ++h) {
            if (!y[h]) continue;
            for (NodeId u : w_level(h - 1)) g.add_edge(u, c1[h]);
        }
        feed = exit;
    }

    std::vector<GadgetGroup> u2;
    for (std::size_t k = 0; k < 2 * n - 2; ++k) {
        u2.push_back(detail::append_jolly(g, d, static_cast<int>(k + 1), Gadget::GU2, {false, true}));
        if (k > 0) g.add_edge(u2[k - 1].end, u2[k].begin);
        if (k < n) g.add_edge(w[k].end, u2[k].begin);
    }

    if (!is_deterministic(g) || !is_acyclic(g)) throw std::logic_error("deterministic DAG construction broken");
    if (g.edge_count() > edge_budget(n, d)) throw std::logic_error("det-dag artifact exceeds edge budget");
    return {Variant::det_dag, std::move(g), {build_pattern(inst.xs())}, {n, d, false, false}};
}

// ---------------------------------------------------------------------------
// Binary alphabet
// ---------------------------------------------------------------------------

inline std::string_view binary_code(char c) {
    switch (c) {
    case '0': return "0000";
    case '1': return "1111";
    case 'b': return "10";
    case 'e': return "01";
    }
    throw AlphabetMismatch(std::string("no binary code for symbol '") + c + "'");
}

inline std::string encode_symbols(std::string_view s) {
    std::string out;
    for (char c : s) out += binary_code(c);
    return out;
}

namespace detail {

/*
 * Replace every chain head with more than two in-arcs by copies that take
 * at most two of them each and all lead to the chain's second node. Each
 * predecessor keeps a single arc into the chain, so determinism and the set
 * of spelled walks are unchanged.
 */
inline LabeledGraph split_crowded_heads(const ExpandedGraph& ex) {
    const auto& src = ex.graph;
    std::vector<std::vector<std::size_t>> incoming(src.node_count());
    for (std::size_t i = 0; i < src.edge_count(); ++i) incoming[src.edges()[i].to].push_back(i);

    LabeledGraph g(src.alphabet(), src.directed());
    for (NodeId v = 0; v < src.node_count(); ++v) g.add_node(src.label(v), src.annotation(v));
    std::vector<NodeId> redirect(src.edge_count(), kNoNode);
    std::vector<Edge> extra;
    for (const auto& chain : ex.node_map) {
        if (chain.size() < 2) continue;
        const NodeId head = chain[0];
        const auto& in = incoming[head];
        if (in.size() <= 2) continue;
        for (std::size_t k = 2; k < in.size(); k += 2) {
            const NodeId copy = g.add_node(src.label(head), src.annotation(head));
            extra.push_back({copy, chain[1]});
            redirect[in[k]] = copy;
            if (k + 1 < in.size()) redirect[in[k + 1]] = copy;
        }
    }
    for (std::size_t i = 0; i < src.edge_count(); ++i) {
        const auto& e = src.edges()[i];
        g.add_edge(e.from, redirect[i] == kNoNode ? e.to : redirect[i]);
    }
    for (const auto& e : extra) g.add_edge(e.from, e.to);
    return g;
}

} // namespace detail

/*
 * Binary version of an undirected / dag / det-dag artifact:
 *   alpha(0) = 0000, alpha(1) = 1111, alpha(b) = 10, alpha(e) = 01.
 * The pattern becomes alpha(e P b); every pendant b-node gets a new e-node in
 * front of it and every pendant e-node a new b-node after it.
 *
 * Directed results are expanded to single-symbol chains and get their
 * crowded chain heads split, which keeps in+out <= 3 on the det-dag.
 * Undirected results keep the encoded strings as labels. An undirected
 * single-symbol chain could be walked backwards, and any edge between two
 * 1-nodes would then spell 1111 by bouncing; the faithful expansion is a
 * directed graph, which would no longer be an undirected artifact.
 */
inline ReductionArtifact encode_binary(const ReductionArtifact& art) {
    if (art.variant == Variant::zigzag) throw ReductionError("the zig-zag construction needs six symbols");
    if (!(art.graph.alphabet() == Alphabet::base4()) || art.meta.binary_encoded) {
        throw ReductionError("encode_binary expects a base4 artifact");
    }
    const auto& src = art.graph;
    LabeledGraph g(Alphabet::binary(), src.directed());
    std::vector<NodeId> map(src.node_count());
    std::vector<Edge> pendant_edges;
    for (NodeId v = 0; v < src.node_count(); ++v) {
        const auto& a = src.annotation(v);
        const bool pendant = a && a->gadget == Gadget::pendant;
        if (pendant && a->kind == NodeKind::B) {
            const NodeId guard = g.add_node(std::string(binary_code('e')),
                                            Annotation{Gadget::pendant, a->j, 0, NodeKind::E});
            map[v] = g.add_node(encode_symbols(src.label(v)), a);
            pendant_edges.push_back({guard, map[v]});
        } else if (pendant && a->kind == NodeKind::E) {
            map[v] = g.add_node(encode_symbols(src.label(v)), a);
            const NodeId guard = g.add_node(std::string(binary_code('b')),
                                            Annotation{Gadget::pendant, a->j, 0, NodeKind::B});
            pendant_edges.push_back({map[v], guard});
        } else {
            map[v] = g.add_node(encode_symbols(src.label(v)), a);
        }
    }
    for (const auto& e : src.edges()) g.add_edge(map[e.from], map[e.to]);
    for (const auto& e : pendant_edges) g.add_edge(e.from, e.to);

    LabeledGraph out = src.directed() ? detail::split_crowded_heads(expand_labels(g)) : std::move(g);

    std::vector<Pattern> patterns;
    for (const auto& p : art.patterns) {
        patterns.emplace_back(Alphabet::binary(), encode_symbols("e" + p.symbols() + "b"));
    }
    auto meta = art.meta;
    meta.binary_encoded = true;
    return {art.variant, std::move(out), std::move(patterns), meta};
}

// ---------------------------------------------------------------------------
// Zig-zag path
// ---------------------------------------------------------------------------

/*
 * Bit encodings and the chains that read them. Both chains are palindromes:
 * a walk may enter a chain and come back out the same side, so the LG_U
 * segments can absorb any number of sub-patterns, while crossing a segment
 * between its two y-nodes still takes exactly one chain per bit.
 *   jolly chain A-B-A       reads ABA directly and ABABA by zig-zagging
 *   zero-only chain A-B-A-B-A  reads ABABA only
 */
inline constexpr std::string_view kEncodeOne = "ABA";
inline constexpr std::string_view kEncodeZero = "ABABA";
inline constexpr std::string_view kJollyChain = "ABA";
inline constexpr std::string_view kZeroOnlyChain = "ABABA";

inline std::string encode_zigzag_subpattern(const BinaryVector& x) {
    std::string s = "x";
    for (std::size_t h = 0; h < x.dim(); ++h) {
        s += x[h] ? kEncodeOne : kEncodeZero;
        s += 'x';
    }
    return s;
}

struct ZigzagPatterns {
    Pattern first;
    Pattern second;
    bool padded = false;
    std::size_t dummy_count = 0;
};

/*
 * Sub-pattern list = X followed by all-ones dummies: one when n is even, two
 * when n is odd, so the count is odd and at least three. P'(1) keeps the
 * order, P'(2) swaps positions (1,2), (3,4), ...; every x_i sits strictly
 * inside the list in one of the two.
 */
inline ZigzagPatterns build_zigzag_patterns(const std::vector<BinaryVector>& xs) {
    if (xs.empty()) throw std::invalid_argument("build_zigzag_patterns needs n >= 1");
    const std::size_t d = xs.front().dim();
    std::vector<std::string> subs;
    for (const auto& x : xs) subs.push_back(encode_zigzag_subpattern(x));
    const std::size_t dummies = xs.size() % 2 == 0 ? 1 : 2;
    for (std::size_t k = 0; k < dummies; ++k) subs.push_back(encode_zigzag_subpattern(BinaryVector::filled(d, true)));

    auto join = [](const std::vector<std::string>& parts) {
        std::string p = "b";
        for (const auto& s : parts) p += "y" + s;
        return p + "ye";
    };
    auto swapped = subs;
    for (std::size_t i = 0; i + 1 < swapped.size(); i += 2) std::swap(swapped[i], swapped[i + 1]);
    return {Pattern(Alphabet::zigzag6(), join(subs)), Pattern(Alphabet::zigzag6(), join(swapped)), true, dummies};
}

namespace detail {

// Appends the nodes of s as a path continuing from prev (kNoNode: no link).
inline NodeId append_path(LabeledGraph& g, NodeId prev, std::string_view s, Gadget gadget, int j, int h) {
    for (char c : s) {
        NodeKind kind = NodeKind::A;
        switch (c) {
        case 'A': kind = NodeKind::A; break;
        case 'B': kind = NodeKind::Bc; break;
        case 'x': kind = NodeKind::X; break;
        case 'y': kind = NodeKind::Y; break;
        case 'b': kind = NodeKind::B; break;
        case 'e': kind = NodeKind::E; break;
        }
        const NodeId v = g.add_node(std::string(1, c), Annotation{gadget, j, h, kind});
        if (prev != kNoNode) g.add_edge(prev, v);
        prev = v;
    }
    return prev;
}

// x c_1 x c_2 ... c_d x; the k-th x-node carries h = k, chain nodes carry their position.
inline NodeId append_segment(LabeledGraph& g, NodeId prev, const BinaryVector& y, Gadget gadget, int j) {
    prev = append_path(g, prev, "x", gadget, j, 1);
    for (std::size_t h = 0; h < y.dim(); ++h) {
        const int hh = static_cast<int>(h + 1);
        prev = append_path(g, prev, y[h] ? kZeroOnlyChain : kJollyChain, gadget, j, hh);
        prev = append_path(g, prev, "x", gadget, j, hh + 1);
    }
    return prev;
}

} // namespace detail

// t_l LG_W(y) t_r: y-framed linear version of one G_W group.
inline LabeledGraph build_lgw(const BinaryVector& y, int j = 1) {
    if (y.dim() == 0) throw std::invalid_argument("build_lgw needs d >= 1");
    LabeledGraph g(Alphabet::zigzag6(), false);
    NodeId last = detail::append_path(g, kNoNode, "y", Gadget::LGW, j, 0);
    last = detail::append_segment(g, last, y, Gadget::LGW, j);
    detail::append_path(g, last, "y", Gadget::LGW, j, 0);
    return g;
}

// LG_U: the all-jolly segment, without y frame.
inline LabeledGraph build_lgu(std::size_t d, int j = 1) {
    if (d == 0) throw std::invalid_argument("build_lgu needs d >= 1");
    LabeledGraph g(Alphabet::zigzag6(), false);
    detail::append_segment(g, kNoNode, BinaryVector::filled(d, false), Gadget::LGU, j);
    return g;
}

/*
 * LG = LG^(1) ... LG^(n) on one path, LG^(j) = b y LG_U y LG_W^(j) y LG_U y e.
 */
inline ReductionArtifact assemble_zigzag(const OvInstance& inst) {
    const std::size_t n = inst.n(), d = inst.d();
    LabeledGraph g(Alphabet::zigzag6(), false);
    const auto jolly = BinaryVector::filled(d, false);
    NodeId last = kNoNode;
    for (std::size_t j = 0; j < n; ++j) {
        const int jj = static_cast<int>(j + 1);
        last = detail::append_path(g, last, "b", Gadget::pendant, jj, 0);
        last = detail::append_path(g, last, "y", Gadget::LGU, jj, 0);
        last = detail::append_segment(g, last, jolly, Gadget::LGU, jj);
        last = detail::append_path(g, last, "y", Gadget::LGW, jj, 0);
        last = detail::append_segment(g, last, inst.ys()[j], Gadget::LGW, jj);
        last = detail::append_path(g, last, "y", Gadget::LGW, jj, 0);
        last = detail::append_segment(g, last, jolly, Gadget::LGU, jj);
        last = detail::append_path(g, last, "y", Gadget::LGU, jj, 0);
        last = detail::append_path(g, last, "e", Gadget::pendant, jj, 0);
    }
    if (g.edge_count() > edge_budget(n, d)) throw std::logic_error("zigzag artifact exceeds edge budget");
    auto pats = build_zigzag_patterns(inst.xs());
    return {Variant::zigzag, std::move(g), {pats.first, pats.second}, {n, d, false, pats.padded}};
}

/*
 * Dispatch used by the harness and the CLI. binary is rejected for zigzag.
 */
inline ReductionArtifact build_artifact(const OvInstance& inst, Variant variant, bool binary) {
    if (binary && variant == Variant::zigzag) throw ReductionError("the zig-zag construction needs six symbols");
    ReductionArtifact art = [&] {
        switch (variant) {
        case Variant::undirected: return assemble_undirected(inst);
        case Variant::dag: return orient_to_dag(assemble_undirected(inst));
        case Variant::det_dag: return build_deterministic_dag(inst);
        case Variant::zigzag: return assemble_zigzag(inst);
        }
        throw std::logic_error("unknown variant");
    }();
    return binary ? encode_binary(art) : art;
}

} // namespace pmlg

#endif
