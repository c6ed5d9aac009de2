#ifndef PMLG_GRAPH_HPP
#define PMLG_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmlg/alphabet.hpp"
#include "pmlg/error.hpp"

namespace pmlg {

using NodeId = std::uint32_t;

struct Edge {
    NodeId from;
    NodeId to;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Gadget { GW, GU1, GU2, GWU, LGW, LGU, pendant };

// What a node stands for inside its gadget. Bc is the 'B' letter of the
// zig-zag alphabet, kept apart from the begin marker B.
enum class NodeKind { B, E, zero, one, X, Y, A, Bc };

/*
 * Construction metadata attached to reduction nodes. Used by fragment-level
 * tests and by the binary encoding to find pendant nodes; never consulted
 * by the matcher.
 */
struct Annotation {
    Gadget gadget = Gadget::GW;
    int j = 0; // group (sub-gadget / block) index, 1-based
    int h = 0; // position index, 1-based; 0 for begin/end/pendant nodes
    NodeKind kind = NodeKind::B;

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

inline std::string_view to_string(Gadget g) {
    switch (g) {
    case Gadget::GW: return "GW";
    case Gadget::GU1: return "GU1";
    case Gadget::GU2: return "GU2";
    case Gadget::GWU: return "GWU";
    case Gadget::LGW: return "LGW";
    case Gadget::LGU: return "LGU";
    case Gadget::pendant: return "pendant";
    }
    return "";
}

inline std::string_view to_string(NodeKind k) {
    switch (k) {
    case NodeKind::B: return "B";
    case NodeKind::E: return "E";
    case NodeKind::zero: return "zero";
    case NodeKind::one: return "one";
    case NodeKind::X: return "X";
    case NodeKind::Y: return "Y";
    case NodeKind::A: return "A";
    case NodeKind::Bc: return "Bc";
    }
    return "";
}

inline std::optional<Gadget> gadget_from_string(std::string_view s) {
    for (Gadget g : {Gadget::GW, Gadget::GU1, Gadget::GU2, Gadget::GWU, Gadget::LGW, Gadget::LGU,
                     Gadget::pendant}) {
        if (to_string(g) == s) return g;
    }
    return std::nullopt;
}

inline std::optional<NodeKind> kind_from_string(std::string_view s) {
    for (NodeKind k : {NodeKind::B, NodeKind::E, NodeKind::zero, NodeKind::one, NodeKind::X,
                       NodeKind::Y, NodeKind::A, NodeKind::Bc}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

/*
 * Node-labeled graph G = (V, E, L). Nodes are dense ids in insertion order.
 * Undirected edges are stored once as (min, max). The graph is filled through
 * add_node/add_edge and treated as immutable afterwards; structural problems
 * (duplicate edges, empty labels, ...) are accepted here and reported by
 * validate_graph.
 */
class LabeledGraph {
public:
    LabeledGraph(Alphabet alphabet, bool directed) : alphabet_(alphabet), directed_(directed) {}

    NodeId add_node(std::string label, std::optional<Annotation> annotation = std::nullopt) {
        labels_.push_back(std::move(label));
        annotations_.push_back(annotation);
        return static_cast<NodeId>(labels_.size() - 1);
    }

    void add_edge(NodeId u, NodeId v) {
        if (!directed_ && v < u) std::swap(u, v);
        edges_.push_back({u, v});
    }

    void set_annotation(NodeId v, std::optional<Annotation> a) { annotations_.at(v) = a; }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool directed() const noexcept { return directed_; }
    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::string& label(NodeId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::optional<Annotation>& annotation(NodeId v) const { return annotations_.at(v); }

    bool has_annotations() const noexcept {
        return std::any_of(annotations_.begin(), annotations_.end(),
                           [](const auto& a) { return a.has_value(); });
    }

    std::size_t total_label_length() const noexcept {
        std::size_t n = 0;
        for (const auto& l : labels_) n += l.size();
        return n;
    }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    Alphabet alphabet_;
    bool directed_;
    std::vector<std::string> labels_;
    std::vector<std::optional<Annotation>> annotations_;
    std::vector<Edge> edges_;
};

/*
 * Compressed adjacency lists.
 */
class Adjacency {
public:
    Adjacency() = default;

    Adjacency(std::size_t node_count, const std::vector<Edge>& arcs) : offsets_(node_count + 1, 0) {
        for (const auto& a : arcs) ++offsets_[a.from + 1];
        for (std::size_t i = 0; i < node_count; ++i) offsets_[i + 1] += offsets_[i];
        targets_.resize(arcs.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (const auto& a : arcs) targets_[fill[a.from]++] = a.to;
        for (std::size_t i = 0; i < node_count; ++i) {
            std::sort(targets_.begin() + offsets_[i], targets_.begin() + offsets_[i + 1]);
        }
    }

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t arc_count() const noexcept { return targets_.size(); }

    std::pair<const NodeId*, const NodeId*> neighbors(NodeId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
};

// Arcs a walk may follow: the stored edges for directed graphs, both orientations otherwise.
inline std::vector<Edge> walk_arcs(const LabeledGraph& g) {
    std::vector<Edge> arcs;
    arcs.reserve(g.directed() ? g.edge_count() : 2 * g.edge_count());
    for (const auto& e : g.edges()) {
        arcs.push_back(e);
        if (!g.directed() && e.from != e.to) arcs.push_back({e.to, e.from});
    }
    return arcs;
}

inline Adjacency out_adjacency(const LabeledGraph& g) {
    return Adjacency(g.node_count(), walk_arcs(g));
}

inline Adjacency in_adjacency(const LabeledGraph& g) {
    auto arcs = walk_arcs(g);
    for (auto& a : arcs) std::swap(a.from, a.to);
    return Adjacency(g.node_count(), arcs);
}

struct Violation {
    std::string message;
    std::optional<NodeId> node;
    std::optional<std::size_t> edge; // index into edges()

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Every broken LabeledGraph invariant, in node order then edge order.
inline std::vector<Violation> validate_graph(const LabeledGraph& g) {
    std::vector<Violation> out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& l = g.label(v);
        if (l.empty()) {
            out.push_back({"empty label at node " + std::to_string(v), v, std::nullopt});
        } else if (!g.alphabet().spells(l)) {
            out.push_back({"label of node " + std::to_string(v) + " uses a symbol outside " +
                               std::string(g.alphabet().name_string()),
                           v, std::nullopt});
        }
    }
    std::vector<Edge> seen;
    seen.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        const auto where = "(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
        if (e.from >= g.node_count() || e.to >= g.node_count()) {
            out.push_back({"edge endpoint out of range " + where, std::nullopt, i});
            continue;
        }
        if (e.from == e.to) out.push_back({"self-loop " + where, e.from, i});
        if (!g.directed() && e.from > e.to) {
            out.push_back({"undirected edge not canonical " + where, std::nullopt, i});
        }
        seen.push_back(e);
    }
    std::vector<std::size_t> order(seen.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return seen[a] < seen[b]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (seen[order[k]] == seen[order[k - 1]]) {
            const auto& e = seen[order[k]];
            out.push_back({"duplicate edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")",
                           std::nullopt, order[k]});
        }
    }
    return out;
}

inline void require_directed(const LabeledGraph& g, const char* what) {
    if (!g.directed()) throw std::invalid_argument(std::string(what) + " requires a directed graph");
}

// Out-neighbours of every node start with pairwise distinct symbols.
inline bool is_deterministic(const LabeledGraph& g) {
    require_directed(g, "is_deterministic");
    const auto adj = out_adjacency(g);
    std::vector<char> firsts;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        firsts.clear();
        auto [b, e] = adj.neighbors(v);
        for (auto it = b; it != e; ++it) {
            const auto& l = g.label(*it);
            firsts.push_back(l.empty() ? '\0' : l.front());
        }
        std::sort(firsts.begin(), firsts.end());
        if (std::adjacent_find(firsts.begin(), firsts.end()) != firsts.end()) return false;
    }
    return true;
}

// Kahn's algorithm.
inline bool is_acyclic(const LabeledGraph& g) {
    require_directed(g, "is_acyclic");
    const auto adj = out_adjacency(g);
    std::vector<std::size_t> indeg(g.node_count(), 0);
    for (const auto& e : g.edges()) ++indeg[e.to];
    std::vector<NodeId> ready;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (indeg[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        NodeId v = ready.back();
        ready.pop_back();
        ++removed;
        auto [b, e] = adj.neighbors(v);
        for (auto it = b; it != e; ++it) {
            if (--indeg[*it] == 0) ready.push_back(*it);
        }
    }
    return removed == g.node_count();
}

struct DegreeStats {
    std::size_t max_undirected_degree = 0;
    std::size_t max_in_plus_out = 0;
    bool is_simple_path = false;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;

    friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

/*
 * For directed graphs the undirected degree is in+out, i.e. edges are
 * counted once per endpoint. is_simple_path looks at the underlying
 * undirected multigraph: connected, |E| = |V| - 1 and no degree above two.
 */
inline DegreeStats degree_stats(const LabeledGraph& g) {
    DegreeStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    std::vector<std::size_t> deg(g.node_count(), 0);
    for (const auto& e : g.edges()) {
        ++deg[e.from];
        ++deg[e.to];
    }
    for (auto d : deg) s.max_undirected_degree = std::max(s.max_undirected_degree, d);
    s.max_in_plus_out = s.max_undirected_degree;

    if (g.node_count() == 0 || g.edge_count() + 1 != g.node_count() || s.max_undirected_degree > 2) {
        return s;
    }
    // union-find connectivity
    std::vector<NodeId> parent(g.node_count());
    for (NodeId v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::size_t components = g.node_count();
    for (const auto& e : g.edges()) {
        auto a = find(e.from), b = find(e.to);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    s.is_simple_path = components == 1;
    return s;
}

struct ExpandedGraph {
    LabeledGraph graph;
    // node_map[v] = chain of new nodes replacing original node v, head first
    std::vector<std::vector<NodeId>> node_map;
};

/*
 * Replace every node by a chain of single-symbol nodes. Edges leave from the
 * chain tail and enter at the chain head. Labels are read forwards whichever
 * way an undirected edge is crossed, so an undirected input becomes a
 * directed graph with both tail(u) -> head(v) and tail(v) -> head(u).
 * Annotations are copied onto every chain node.
 */
inline ExpandedGraph expand_labels(const LabeledGraph& g) {
    ExpandedGraph out{LabeledGraph(g.alphabet(), true), {}};
    out.node_map.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& l = g.label(v);
        auto& chain = out.node_map[v];
        for (char c : l) {
            chain.push_back(out.graph.add_node(std::string(1, c), g.annotation(v)));
        }
        for (std::size_t k = 1; k < chain.size(); ++k) out.graph.add_edge(chain[k - 1], chain[k]);
    }
    for (const auto& e : g.edges()) {
        const auto& from = out.node_map.at(e.from);
        const auto& to = out.node_map.at(e.to);
        if (from.empty() || to.empty()) continue;
        out.graph.add_edge(from.back(), to.front());
        if (!g.directed() && e.from != e.to) out.graph.add_edge(to.back(), from.front());
    }
    return out;
}

} // namespace pmlg

#endif
