#ifndef PMLG_MATCHER_HPP
#define PMLG_MATCHER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pmlg/error.hpp"
#include "pmlg/graph.hpp"
#include "pmlg/pattern.hpp"

namespace pmlg {

/*
 * A match u_1..u_j of a pattern: it reads L(u_1) from start_offset, the
 * middle labels in full and L(u_j) up to end_offset. Offsets are 1-based.
 */
struct MatchOccurrence {
    NodeId start = 0;
    std::size_t start_offset = 1;
    NodeId end = 0;
    std::size_t end_offset = 1;
    std::vector<NodeId> witness;

    friend bool operator==(const MatchOccurrence&, const MatchOccurrence&) = default;
};

inline void require_same_alphabet(const LabeledGraph& g, const Pattern& p) {
    if (!(g.alphabet() == p.alphabet())) {
        throw AlphabetMismatch("graph alphabet " + std::string(g.alphabet().name_string()) +
                               " differs from pattern alphabet " + std::string(p.alphabet().name_string()));
    }
}

/*
 * Exact matching engine over the label-expanded graph.
 *
 * Every label position becomes one single-symbol state; inside a label the
 * states are chained forward, and each walk arc (u, v) joins the last state
 * of u to the first state of v. For undirected graphs both orientations of
 * each edge are arcs. Position k of the pattern keeps the frontier
 *   S_k = { s : sym(s) = P[k] and (k = 1 or some predecessor of s is in S_{k-1}) },
 * touched sparsely, so one query costs O(N + m |E'|) in the worst case.
 */
class Matcher {
public:
    explicit Matcher(const LabeledGraph& g) : alphabet_(g.alphabet()) {
        first_state_.resize(g.node_count() + 1, 0);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            first_state_[v + 1] = first_state_[v] + static_cast<std::uint32_t>(g.label(v).size());
        }
        const auto states = first_state_.back();
        symbol_.reserve(states);
        origin_.reserve(states);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            for (char c : g.label(v)) {
                symbol_.push_back(c);
                origin_.push_back(v);
            }
        }
        std::vector<Edge> arcs;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            for (auto s = first_state_[v]; s + 1 < first_state_[v + 1]; ++s) arcs.push_back({s, s + 1});
        }
        for (const auto& a : walk_arcs(g)) {
            if (g.label(a.from).empty() || g.label(a.to).empty()) continue;
            arcs.push_back({first_state_[a.from + 1] - 1, first_state_[a.to]});
        }
        succ_ = Adjacency(states, arcs);
        for (auto& a : arcs) std::swap(a.from, a.to);
        pred_ = Adjacency(states, arcs);
        stamp_.assign(states, kUnset);
    }

    std::size_t state_count() const noexcept { return symbol_.size(); }
    std::size_t arc_count() const noexcept { return succ_.arc_count(); }

    bool exists(const Pattern& p) const {
        check(p);
        std::vector<NodeId> cur = initial(p[0]);
        std::vector<NodeId> next;
        for (std::size_t k = 1; k < p.size() && !cur.empty(); ++k) {
            advance(cur, p[k], static_cast<std::uint32_t>(k), next);
            cur.swap(next);
        }
        reset_stamps();
        return !cur.empty();
    }

    std::vector<MatchOccurrence> find(const Pattern& p, std::size_t limit) const {
        check(p);
        std::vector<std::vector<NodeId>> levels;
        levels.reserve(p.size());
        levels.push_back(initial(p[0]));
        std::vector<NodeId> next;
        for (std::size_t k = 1; k < p.size() && !levels.back().empty(); ++k) {
            advance(levels.back(), p[k], static_cast<std::uint32_t>(k), next);
            levels.push_back(next);
        }
        reset_stamps();
        std::vector<MatchOccurrence> out;
        if (levels.size() < p.size() || levels.back().empty()) return out;
        for (auto& l : levels) std::sort(l.begin(), l.end());

        for (NodeId end : levels.back()) {
            if (out.size() >= limit) break;
            // walk back through the frontiers, always taking the smallest predecessor
            std::vector<NodeId> states{end};
            for (std::size_t k = p.size() - 1; k > 0; --k) {
                const auto& prev = levels[k - 1];
                auto [b, e] = pred_.neighbors(states.back());
                NodeId chosen = kUnset;
                for (auto it = b; it != e; ++it) {
                    if (std::binary_search(prev.begin(), prev.end(), *it)) {
                        chosen = *it;
                        break;
                    }
                }
                states.push_back(chosen);
            }
            std::reverse(states.begin(), states.end());
            out.push_back(to_occurrence(states));
        }
        return out;
    }

private:
    static constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();

    void check(const Pattern& p) const {
        if (!(p.alphabet() == alphabet_)) {
            throw AlphabetMismatch("graph alphabet " + std::string(alphabet_.name_string()) +
                                   " differs from pattern alphabet " +
                                   std::string(p.alphabet().name_string()));
        }
    }

    std::vector<NodeId> initial(char c) const {
        std::vector<NodeId> s;
        for (NodeId v = 0; v < symbol_.size(); ++v) {
            if (symbol_[v] == c) s.push_back(v);
        }
        return s;
    }

    void advance(const std::vector<NodeId>& cur, char c, std::uint32_t k, std::vector<NodeId>& next) const {
        next.clear();
        for (NodeId u : cur) {
            auto [b, e] = succ_.neighbors(u);
            for (auto it = b; it != e; ++it) {
                const NodeId v = *it;
                if (symbol_[v] == c && stamp_[v] != k) {
                    stamp_[v] = k;
                    next.push_back(v);
                }
            }
        }
        touched_.insert(touched_.end(), next.begin(), next.end());
    }

    void reset_stamps() const {
        for (NodeId v : touched_) stamp_[v] = kUnset;
        touched_.clear();
    }

    MatchOccurrence to_occurrence(const std::vector<NodeId>& states) const {
        MatchOccurrence occ;
        occ.start = origin_[states.front()];
        occ.start_offset = states.front() - first_state_[occ.start] + 1;
        occ.end = origin_[states.back()];
        occ.end_offset = states.back() - first_state_[occ.end] + 1;
        for (std::size_t i = 0; i < states.size(); ++i) {
            // a step to the next state of the same label stays on the same node
            const bool same_visit = i > 0 && origin_[states[i]] == origin_[states[i - 1]] &&
                                    states[i] == states[i - 1] + 1;
            if (!same_visit) occ.witness.push_back(origin_[states[i]]);
        }
        return occ;
    }

    Alphabet alphabet_;
    std::vector<std::uint32_t> first_state_;
    std::vector<char> symbol_;
    std::vector<NodeId> origin_;
    Adjacency succ_;
    Adjacency pred_;
    // scratch for frontier deduplication; restored to kUnset after every query
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::vector<NodeId> touched_;
};

inline bool match_exists(const LabeledGraph& g, const Pattern& p) {
    require_same_alphabet(g, p);
    return Matcher(g).exists(p);
}

// One canonical occurrence per reachable (end node, end offset), in end-state order.
inline std::vector<MatchOccurrence> find_matches(const LabeledGraph& g, const Pattern& p,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    require_same_alphabet(g, p);
    return Matcher(g).find(p, limit);
}

inline constexpr std::size_t kOracleStateBudget = 1'000'000;

/*
 * Reference answer by memoised search over (node, label offset, pattern
 * position) states, evaluated from the last pattern position backwards on
 * plain per-node neighbour lists. Shares no code with Matcher.
 */
inline bool oracle_match_exists(const LabeledGraph& g, const Pattern& p) {
    require_same_alphabet(g, p);
    const std::size_t m = p.size();
    const std::size_t cells = g.total_label_length();
    if (cells * m > kOracleStateBudget) {
        throw OracleBudgetExceeded("oracle state budget exceeded: " + std::to_string(cells) + " x " +
                                   std::to_string(m));
    }
    std::vector<std::vector<NodeId>> nbrs(g.node_count());
    for (const auto& e : g.edges()) {
        nbrs[e.from].push_back(e.to);
        if (!g.directed()) nbrs[e.to].push_back(e.from);
    }
    std::vector<std::size_t> base(g.node_count() + 1, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) base[v + 1] = base[v] + g.label(v).size();

    // ok[k][cell]: the suffix P[k..] can be read starting at this label cell
    std::vector<std::vector<bool>> ok(m, std::vector<bool>(cells, false));
    for (std::size_t k = m; k-- > 0;) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const auto& l = g.label(v);
            for (std::size_t off = 0; off < l.size(); ++off) {
                if (l[off] != p[k]) continue;
                bool good = false;
                if (k + 1 == m) {
                    good = true;
                } else if (off + 1 < l.size()) {
                    good = ok[k + 1][base[v] + off + 1];
                } else {
                    for (NodeId w : nbrs[v]) {
                        if (!g.label(w).empty() && ok[k + 1][base[w]]) {
                            good = true;
                            break;
                        }
                    }
                }
                ok[k][base[v] + off] = good;
            }
        }
    }
    for (bool b : ok[0]) {
        if (b) return true;
    }
    return false;
}

/*
 * Re-spell a reported occurrence from scratch: checks that consecutive
 * witness nodes are adjacent and that the concatenated label slices equal P.
 */
inline bool occurrence_spells(const LabeledGraph& g, const Pattern& p, const MatchOccurrence& occ) {
    if (occ.witness.empty() || occ.witness.front() != occ.start || occ.witness.back() != occ.end) return false;
    for (NodeId v : occ.witness) {
        if (v >= g.node_count()) return false;
    }
    for (std::size_t i = 1; i < occ.witness.size(); ++i) {
        const NodeId u = occ.witness[i - 1], v = occ.witness[i];
        const bool adjacent = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return (e.from == u && e.to == v) || (!g.directed() && e.from == v && e.to == u);
        });
        if (!adjacent) return false;
    }
    const auto& first = g.label(occ.start);
    const auto& last = g.label(occ.end);
    if (occ.start_offset < 1 || occ.start_offset > first.size()) return false;
    if (occ.end_offset < 1 || occ.end_offset > last.size()) return false;
    std::string spelled;
    if (occ.witness.size() == 1) {
        if (occ.end_offset < occ.start_offset) return false;
        spelled = first.substr(occ.start_offset - 1, occ.end_offset - occ.start_offset + 1);
    } else {
        spelled = first.substr(occ.start_offset - 1);
        for (std::size_t i = 1; i + 1 < occ.witness.size(); ++i) spelled += g.label(occ.witness[i]);
        spelled += last.substr(0, occ.end_offset);
    }
    return spelled == p.symbols();
}

} // namespace pmlg

#endif
