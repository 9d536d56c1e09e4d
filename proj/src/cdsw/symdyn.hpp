#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdsw/rat.hpp"

namespace cdsw {

// Subshift over single-character symbols cut out by finitely many banned
// substrings.
struct Sft {
  std::vector<char> alphabet;
  std::vector<std::string> forbidden;
};

// Text format:
//   alphabet: 0 1
//   forbid: 11 000
// with '#' comments; forbid lines may repeat.
Sft parse_sft(const std::string& text);
Sft load_sft(const std::string& path);

bool sft_has_symbol(const Sft& s, char c);
bool is_allowed(const Sft& s, const std::string& w);

// Allowed words of length n, via transfer-matrix powering on the
// higher-block graph (brute enumeration below the window size).
BigInt count_words(const Sft& s, long n);
BigInt count_words_brute(const Sft& s, long n);

// Vertex-labeled graph; walks emit the labels of the vertices they visit.
struct LabeledGraph {
  std::vector<std::string> names;
  std::vector<char> labels;
  std::vector<std::vector<long>> adj;  // out-neighbour indices
};

// Text format:
//   vertices: v0:0 v1a:1 v1b:1
//   edges:
//   v0 -> v0 v1a
LabeledGraph parse_graph(const std::string& text);
LabeledGraph load_graph(const std::string& path);
std::string graph_str(const LabeledGraph& g);
long graph_edge_count(const LabeledGraph& g);

// Vertices are the allowed N-words, edges the allowed (N+1)-word overlaps,
// labels the first character. N must cover the longest forbidden word.
LabeledGraph higher_block(const Sft& s, long N);

// Walks visiting `len` vertices; len 0 counts the empty walk once.
BigInt graph_walk_count(const LabeledGraph& g, long len);

// True iff some walk emits w.
bool sofic_accepts(const LabeledGraph& g, const std::string& w);

// Finite-support stand-in for a bi-infinite symbol sequence: index i reads
// symbols[i - origin], and pad everywhere outside.
struct BiWord {
  std::string symbols;
  long origin = 0;
  char pad = '0';
};

char biword_at(const BiWord& b, long i);

struct SlidingBlockCode {
  long memory = 0, anticipation = 0;
  std::map<std::string, char> rule;  // keyed by the (memory+anticipation+1)-window
};

// Output symbols at positions lo..hi: rule applied to the window around
// each position. Missing windows raise RuleIncomplete.
std::string sliding_block_apply(const SlidingBlockCode& code, const BiWord& b, long lo,
                                long hi);

}  // namespace cdsw
