#include <gtest/gtest.h>

#include <string>

#include "pmlg/io.hpp"
#include "pmlg/reductions.hpp"

using namespace pmlg;

TEST(GraphFormat, WriteExact) {
    LabeledGraph g(Alphabet::base4(), true);
    g.add_node("b");
    g.add_node("01");
    g.add_edge(0, 1);
    EXPECT_EQ(write_graph(g), "pmlg 1\nalphabet base4\ndirected true\nnodes 2\n0 b\n1 01\nedges 1\n0 1\n");
}

TEST(GraphFormat, CommentsAndAnnotations) {
    const std::string doc =
        "# a comment\npmlg 1\nalphabet zigzag6\ndirected false\nnodes 2\n0 x\n\n1 AB\nedges 1\n0 1\n"
        "annotations\n1 LGW 2 3 A\n";
    const auto g = read_graph(doc);
    EXPECT_FALSE(g.directed());
    EXPECT_EQ(g.label(1), "AB");
    ASSERT_TRUE(g.annotation(1).has_value());
    EXPECT_EQ(g.annotation(1)->gadget, Gadget::LGW);
    EXPECT_EQ(g.annotation(1)->j, 2);
    EXPECT_EQ(g.annotation(1)->h, 3);
    EXPECT_FALSE(g.annotation(0).has_value());
}

TEST(GraphFormat, RoundTripArtifacts) {
    const auto inst = gen_ov_instance(3, 3, 5, GenMode::random);
    for (auto v : {Variant::undirected, Variant::dag, Variant::zigzag}) {
        const auto art = build_artifact(inst, v, false);
        const auto text = write_graph(art.graph);
        EXPECT_EQ(read_graph(text), art.graph);
        EXPECT_EQ(write_graph(read_graph(text)), text);
    }
}

TEST(GraphFormat, EndpointOutOfRange) {
    try {
        read_graph("pmlg 1\nalphabet base4\ndirected true\nnodes 1\n0 b\nedges 1\n0 5\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 7u);
        EXPECT_NE(std::string(e.what()).find("edge endpoint out of range"), std::string::npos);
    }
}

TEST(GraphFormat, Malformed) {
    EXPECT_THROW(read_graph("pmlg 2\n"), ParseError);
    EXPECT_THROW(read_graph("pmlg 1\nalphabet dna\n"), ParseError);
    EXPECT_THROW(read_graph("pmlg 1\nalphabet base4\ndirected maybe\n"), ParseError);
    EXPECT_THROW(read_graph("pmlg 1\nalphabet base4\ndirected true\nnodes 1\n0 x\nedges 0\n"), ParseError);
    EXPECT_THROW(read_graph("pmlg 1\nalphabet base4\ndirected true\nnodes 2\n0 b\n"), ParseError);
    EXPECT_THROW(read_graph("pmlg 1\nalphabet base4\ndirected true\nnodes 1\n1 b\nedges 0\n"), ParseError);
}

TEST(PatternFormat, RoundTrip) {
    const Pattern p(Alphabet::base4(), "bb100eb101ee");
    const auto text = write_pattern(p);
    EXPECT_EQ(text, "pmlgpat 1\nalphabet base4\nbb100eb101ee\n");
    EXPECT_EQ(read_pattern(text), p);
    EXPECT_THROW(read_pattern("pmlgpat 1\nalphabet binary\n0120\n"), ParseError);
    EXPECT_THROW(read_pattern("pmlgpat 1\nalphabet binary\n01 10\n"), ParseError);
}

TEST(OvFormat, RoundTrip) {
    const OvInstance inst({{1, 0, 0}, {1, 0, 1}}, {{0, 1, 1}, {1, 1, 0}});
    const auto text = write_ov(inst);
    EXPECT_EQ(text, "ov 1\n2 3\n1 0 0\n1 0 1\n0 1 1\n1 1 0\n");
    EXPECT_EQ(read_ov(text), inst);
}

TEST(OvFormat, Malformed) {
    EXPECT_THROW(read_ov("ov 1\n1 2\n1 0\n"), ParseError);
    EXPECT_THROW(read_ov("ov 1\n1 2\n1 0\n1\n"), ParseError);
    EXPECT_THROW(read_ov("ov 1\n1 2\n1 2\n0 0\n"), ParseError);
    EXPECT_THROW(read_ov("ov 1\n0 2\n"), ParseError);
    EXPECT_THROW(read_ov("ov 1\n1 1\n1\n0\n1\n"), ParseError);
}
