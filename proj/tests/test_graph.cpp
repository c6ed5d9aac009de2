#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "pmlg/graph.hpp"
#include "pmlg/matcher.hpp"
#include "pmlg/reductions.hpp"

using namespace pmlg;

namespace {

LabeledGraph chain(bool directed, std::initializer_list<const char*> labels) {
    LabeledGraph g(Alphabet::base4(), directed);
    for (const char* l : labels) g.add_node(l);
    for (NodeId v = 1; v < g.node_count(); ++v) g.add_edge(v - 1, v);
    return g;
}

std::vector<std::string> all_strings(const std::string& sigma, std::size_t max_len) {
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& s : layer) {
            for (char c : sigma) next.push_back(s + c);
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

LabeledGraph random_graph(std::mt19937_64& rng, bool directed) {
    const std::string sigma = "be01";
    LabeledGraph g(Alphabet::base4(), directed);
    const auto n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int v = 0; v < n; ++v) {
        const auto len = std::uniform_int_distribution<int>(1, 3)(rng);
        std::string l;
        for (int k = 0; k < len; ++k) l += sigma[std::uniform_int_distribution<int>(0, 3)(rng)];
        g.add_node(l);
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (u == v || (!directed && v < u)) continue;
            if (std::bernoulli_distribution(0.4)(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace

TEST(Alphabet, NamesAndSymbols) {
    EXPECT_EQ(Alphabet::base4().symbols(), "be01");
    EXPECT_EQ(Alphabet::binary().symbols(), "01");
    EXPECT_EQ(Alphabet::zigzag6().symbols(), "beABxy");
    EXPECT_EQ(Alphabet::from_name("zigzag6"), Alphabet::zigzag6());
    EXPECT_FALSE(Alphabet::from_name("dna").has_value());
    EXPECT_TRUE(Alphabet::base4().spells("bb01e"));
    EXPECT_FALSE(Alphabet::binary().spells("0b"));
}

TEST(ValidateGraph, MinimalGraphIsValid) {
    LabeledGraph g(Alphabet::base4(), false);
    g.add_node("b");
    EXPECT_TRUE(validate_graph(g).empty());
}

TEST(ValidateGraph, EmptyLabel) {
    LabeledGraph g(Alphabet::base4(), true);
    g.add_node("");
    const auto v = validate_graph(g);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].message, "empty label at node 0");
    EXPECT_EQ(v[0].node, NodeId{0});
}

TEST(ValidateGraph, DuplicateEdge) {
    auto g = chain(true, {"b", "e"});
    g.add_edge(0, 1);
    const auto v = validate_graph(g);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].edge, std::size_t{1});
}

TEST(ValidateGraph, ForeignSymbolSelfLoopAndRange) {
    LabeledGraph g(Alphabet::binary(), true);
    g.add_node("0b");
    g.add_node("1");
    g.add_edge(1, 1);
    g.add_edge(0, 7);
    EXPECT_EQ(validate_graph(g).size(), 3u);
}

TEST(ValidateGraph, UndirectedDuplicateInEitherOrder) {
    auto g = chain(false, {"b", "e"});
    g.add_edge(1, 0);
    EXPECT_EQ(g.edges()[1], (Edge{0, 1}));
    EXPECT_EQ(validate_graph(g).size(), 1u);
}

TEST(Determinism, DistinctFirstSymbols) {
    LabeledGraph g(Alphabet::base4(), true);
    g.add_node("b");
    g.add_node("0");
    g.add_node("1e");
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    EXPECT_TRUE(is_deterministic(g));
}

TEST(Determinism, EqualFirstSymbols) {
    LabeledGraph g(Alphabet::base4(), true);
    g.add_node("e");
    g.add_node("b0");
    g.add_node("b1");
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    EXPECT_FALSE(is_deterministic(g));
}

TEST(Determinism, DetDagOutputOnSingleVector) {
    const auto art = build_deterministic_dag(OvInstance({{0, 0}}, {{1, 0}}));
    EXPECT_TRUE(is_deterministic(art.graph));
}

TEST(Determinism, RejectsUndirected) {
    EXPECT_THROW(is_deterministic(chain(false, {"b"})), std::invalid_argument);
    EXPECT_THROW(is_acyclic(chain(false, {"b"})), std::invalid_argument);
}

TEST(Acyclic, ChainAndCycle) {
    EXPECT_TRUE(is_acyclic(chain(true, {"b", "0", "e"})));
    auto g = chain(true, {"b", "e"});
    g.add_edge(1, 0);
    EXPECT_FALSE(is_acyclic(g));
}

TEST(Acyclic, OrientedArtifacts) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = gen_ov_instance(1 + seed % 4, 1 + seed % 3, seed, GenMode::random);
        EXPECT_TRUE(is_acyclic(orient_to_dag(assemble_undirected(inst)).graph));
    }
}

TEST(DegreeStats, Path) {
    const auto s = degree_stats(chain(false, {"b", "0", "1", "e"}));
    EXPECT_TRUE(s.is_simple_path);
    EXPECT_EQ(s.max_undirected_degree, 2u);
    EXPECT_EQ(s.max_in_plus_out, s.max_undirected_degree);
    EXPECT_EQ(s.node_count, 4u);
    EXPECT_EQ(s.edge_count, 3u);
}

TEST(DegreeStats, SingleNodeIsPath) {
    EXPECT_TRUE(degree_stats(chain(false, {"b"})).is_simple_path);
}

TEST(DegreeStats, NotAPath) {
    auto star = chain(false, {"b", "0", "1"});
    star.add_node("e");
    star.add_edge(1, 3);
    EXPECT_FALSE(degree_stats(star).is_simple_path);
    EXPECT_EQ(degree_stats(star).max_undirected_degree, 3u);

    LabeledGraph split(Alphabet::base4(), false);
    for (int i = 0; i < 4; ++i) split.add_node("0");
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    split.add_edge(0, 1);
    EXPECT_FALSE(degree_stats(split).is_simple_path);
}

TEST(DegreeStats, DirectedCountsInPlusOut) {
    LabeledGraph g(Alphabet::base4(), true);
    for (int i = 0; i < 4; ++i) g.add_node("0");
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    g.add_edge(1, 3);
    EXPECT_EQ(degree_stats(g).max_in_plus_out, 3u);
}

TEST(ExpandLabels, ChainsAndMap) {
    LabeledGraph g(Alphabet::base4(), true);
    g.add_node("b01");
    g.add_node("e");
    g.add_edge(0, 1);
    const auto ex = expand_labels(g);
    EXPECT_EQ(ex.graph.node_count(), 4u);
    ASSERT_EQ(ex.node_map[0].size(), 3u);
    EXPECT_EQ(ex.graph.label(ex.node_map[0][2]), "1");
    EXPECT_EQ(ex.graph.edge_count(), 3u);
    EXPECT_EQ(ex.graph.edges().back(), (Edge{ex.node_map[0][2], ex.node_map[1][0]}));
    for (const auto& l : ex.graph.labels()) EXPECT_EQ(l.size(), 1u);
}

TEST(ExpandLabels, PreservesMatches) {
    std::mt19937_64 rng(11);
    const auto short_patterns = all_strings("be01", 4);
    for (int round = 0; round < 600; ++round) {
        const auto g = random_graph(rng, round % 2 == 0);
        const auto ex = expand_labels(g).graph;
        std::vector<std::string> patterns = short_patterns;
        for (int k = 0; k < 30; ++k) {
            std::string p;
            const auto len = std::uniform_int_distribution<int>(5, 6)(rng);
            for (int i = 0; i < len; ++i) p += "be01"[std::uniform_int_distribution<int>(0, 3)(rng)];
            patterns.push_back(p);
        }
        for (const auto& s : patterns) {
            const Pattern p(Alphabet::base4(), s);
            ASSERT_EQ(oracle_match_exists(g, p), match_exists(ex, p)) << "pattern " << s << " round " << round;
        }
    }
}

TEST(ExpandLabels, UndirectedBecomesBothOrientations) {
    const auto g = chain(false, {"b0", "1e"});
    const auto ex = expand_labels(g).graph;
    EXPECT_TRUE(ex.directed());
    EXPECT_EQ(ex.edge_count(), 4u);
    EXPECT_TRUE(match_exists(ex, Pattern(Alphabet::base4(), "1eb0")));
    EXPECT_FALSE(match_exists(ex, Pattern(Alphabet::base4(), "0b")));
    EXPECT_FALSE(match_exists(g, Pattern(Alphabet::base4(), "0b")));
}

TEST(Annotation, RoundTripNames) {
    for (auto gd : {Gadget::GW, Gadget::GU1, Gadget::GU2, Gadget::GWU, Gadget::LGW, Gadget::LGU, Gadget::pendant}) {
        EXPECT_EQ(gadget_from_string(to_string(gd)), gd);
    }
    for (auto k : {NodeKind::B, NodeKind::E, NodeKind::zero, NodeKind::one, NodeKind::X, NodeKind::Y, NodeKind::A,
                   NodeKind::Bc}) {
        EXPECT_EQ(kind_from_string(to_string(k)), k);
    }
}
