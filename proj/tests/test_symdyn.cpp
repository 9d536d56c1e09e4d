#include "doctest.h"

#include "cdsw/symdyn.hpp"
#include "test_util.hpp"

using namespace cdsw;

TEST_CASE("shift descriptions parse and police their alphabet") {
  Sft s = parse_sft("alphabet: 0 1\nforbid: 11\n");
  CHECK(sft_has_symbol(s, '0'));
  CHECK_FALSE(sft_has_symbol(s, '2'));
  CHECK(is_allowed(s, "1010"));
  CHECK_FALSE(is_allowed(s, "011"));
  CHECK(is_allowed(s, ""));
  CHECK_EQ(error_code_of([&] { is_allowed(s, "102"); }), "AlphabetMismatch");
  CHECK_EQ(error_code_of([] { parse_sft("alphabet: ab\n"); }), "BadSft");
  CHECK_EQ(error_code_of([] { parse_sft("alphabet: 0 0\n"); }), "BadSft");
  CHECK_EQ(error_code_of([] { parse_sft("forbid: 1\n"); }), "BadSft");
  CHECK_EQ(error_code_of([] { parse_sft("alphabet: 0\nforbid: 2\n"); }), "BadSft");
  CHECK_EQ(error_code_of([] { parse_sft("alphabet: 0\nnonsense\n"); }), "BadSft");
  CHECK_EQ(error_code_of([] { load_sft("/nonexistent.sft"); }), "FileNotFound");
}

TEST_CASE("word counts follow the transfer matrix") {
  Sft gm = load_sft(fixture("golden_mean.sft"));
  long expect[] = {1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (long n = 0; n < 9; ++n) {
    CHECK_EQ(count_words(gm, n), BigInt(expect[n]));
    CHECK_EQ(count_words_brute(gm, n), BigInt(expect[n]));
  }
  Sft full = parse_sft("alphabet: 0 1\n");
  CHECK_EQ(count_words(full, 3), BigInt(8));
  CHECK_EQ(error_code_of([&] { count_words(gm, -1); }), "BadParams");
}

TEST_CASE("the block presentation has the expected shape") {
  Sft gm = load_sft(fixture("golden_mean.sft"));
  LabeledGraph g = higher_block(gm, 2);
  REQUIRE_EQ(g.names.size(), 3u);
  CHECK_EQ(g.names[0], "00");
  CHECK_EQ(g.names[1], "01");
  CHECK_EQ(g.names[2], "10");
  CHECK_EQ(g.labels[0], '0');
  CHECK_EQ(g.labels[2], '1');
  CHECK_EQ(g.adj[0], std::vector<long>{0, 1});
  CHECK_EQ(g.adj[1], std::vector<long>{2});
  CHECK_EQ(g.adj[2], std::vector<long>{0, 1});
  CHECK_EQ(graph_edge_count(g), 5);
  CHECK_EQ(graph_walk_count(g, 0), BigInt(1));
  CHECK_EQ(graph_walk_count(g, 1), BigInt(3));
  CHECK_EQ(graph_walk_count(g, 4), BigInt(13));
  CHECK_EQ(error_code_of([&] { graph_walk_count(g, -2); }), "BadParams");
  CHECK_EQ(error_code_of([&] { higher_block(gm, 1); }), "WindowTooSmall");

  // a wider window presents the same language
  LabeledGraph g3 = higher_block(gm, 3);
  CHECK_EQ(g3.names.size(), 5u);
  CHECK_EQ(graph_edge_count(g3), 8);
  CHECK_EQ(graph_walk_count(g3, 3), count_words(gm, 5));
}

TEST_CASE("graph descriptions survive a print and re-parse") {
  LabeledGraph g = load_graph(fixture("even_shift.graph"));
  REQUIRE_EQ(g.names.size(), 3u);
  CHECK_EQ(graph_edge_count(g), 5);
  LabeledGraph h = parse_graph(graph_str(g));
  CHECK_EQ(h.names, g.names);
  CHECK_EQ(h.labels, g.labels);
  CHECK_EQ(h.adj, g.adj);
  CHECK_EQ(error_code_of([] { parse_graph("vertices: a\n"); }), "BadGraph");
  CHECK_EQ(error_code_of([] { parse_graph("vertices: a:xy\n"); }), "BadGraph");
  CHECK_EQ(error_code_of([] { parse_graph("vertices: a:0\nb -> a\n"); }), "BadGraph");
  CHECK_EQ(error_code_of([] { parse_graph("vertices: a:0\nedges:\nb -> a\n"); }), "BadGraph");
  CHECK_EQ(error_code_of([] { parse_graph("edges:\n"); }), "BadGraph");
  CHECK_EQ(error_code_of([] { load_graph("/nonexistent.graph"); }), "FileNotFound");
}

TEST_CASE("label acceptance tracks every live walk") {
  LabeledGraph g = load_graph(fixture("even_shift.graph"));
  CHECK(sofic_accepts(g, ""));
  CHECK(sofic_accepts(g, "0110"));
  CHECK(sofic_accepts(g, "110"));   // a walk may start inside a run
  CHECK(sofic_accepts(g, "111"));   // or end inside one
  CHECK_FALSE(sofic_accepts(g, "010"));
  CHECK_FALSE(sofic_accepts(g, "01110"));
  CHECK(sofic_accepts(g, "0110110"));
  CHECK_FALSE(sofic_accepts(g, "011010"));
  CHECK_EQ(error_code_of([&] { sofic_accepts(g, "012"); }), "AlphabetMismatch");
}

TEST_CASE("padded lines index like tapes") {
  BiWord b{"abc", -1, '.'};
  CHECK_EQ(biword_at(b, -2), '.');
  CHECK_EQ(biword_at(b, -1), 'a');
  CHECK_EQ(biword_at(b, 0), 'b');
  CHECK_EQ(biword_at(b, 1), 'c');
  CHECK_EQ(biword_at(b, 2), '.');
}

TEST_CASE("sliding windows rewrite lines locally") {
  SlidingBlockCode xorc{0, 1, {{"00", '0'}, {"01", '1'}, {"10", '1'}, {"11", '0'}}};
  BiWord b{"0110", 0, '0'};
  CHECK_EQ(sliding_block_apply(xorc, b, 0, 2), "101");
  CHECK_EQ(sliding_block_apply(xorc, b, 0, 3), "1010");  // pad joins the last window

  SlidingBlockCode ident{0, 0, {{"0", '0'}, {"1", '1'}}};
  CHECK_EQ(sliding_block_apply(ident, b, -2, 5), "00011000");

  SlidingBlockCode wider{1, 1, {}};
  CHECK_EQ(error_code_of([&] { sliding_block_apply(wider, b, 0, 0); }), "RuleIncomplete");
}
