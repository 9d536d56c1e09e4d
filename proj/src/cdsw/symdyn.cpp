#include "cdsw/symdyn.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cdsw {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

}  // namespace

Sft parse_sft(const std::string& text) {
  Sft s;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "alphabet:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].size() != 1) fail("BadSft", "symbols are single characters");
        if (sft_has_symbol(s, toks[i][0])) fail("BadSft", "duplicate symbol " + toks[i]);
        s.alphabet.push_back(toks[i][0]);
      }
    } else if (toks[0] == "forbid:") {
      for (size_t i = 1; i < toks.size(); ++i) s.forbidden.push_back(toks[i]);
    } else {
      fail("BadSft", "cannot read line '" + raw + "'");
    }
  }
  if (s.alphabet.empty()) fail("BadSft", "no alphabet");
  for (auto& w : s.forbidden) {
    if (w.empty()) fail("BadSft", "empty forbidden word");
    for (char c : w)
      if (!sft_has_symbol(s, c)) fail("BadSft", "forbidden word uses foreign symbol");
  }
  return s;
}

Sft load_sft(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("FileNotFound", path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_sft(ss.str());
}

bool sft_has_symbol(const Sft& s, char c) {
  return std::find(s.alphabet.begin(), s.alphabet.end(), c) != s.alphabet.end();
}

bool is_allowed(const Sft& s, const std::string& w) {
  for (char c : w)
    if (!sft_has_symbol(s, c)) fail("AlphabetMismatch", "word uses foreign symbol");
  for (auto& f : s.forbidden)
    if (w.find(f) != std::string::npos) return false;
  return true;
}

BigInt count_words_brute(const Sft& s, long n) {
  if (n < 0) fail("BadParams", "negative word length");
  // walk words in odometer order rather than materializing alphabet^n
  std::string w(n, s.alphabet[0]);
  std::vector<size_t> idx(n, 0);
  BigInt count = 0;
  for (;;) {
    if (is_allowed(s, w)) ++count;
    long pos = n - 1;
    while (pos >= 0 && idx[pos] + 1 == s.alphabet.size()) {
      idx[pos] = 0;
      w[pos] = s.alphabet[0];
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
    w[pos] = s.alphabet[idx[pos]];
  }
  return count;
}

LabeledGraph higher_block(const Sft& s, long N) {
  long maxf = 1;
  for (auto& f : s.forbidden) maxf = std::max(maxf, static_cast<long>(f.size()));
  if (N < maxf) fail("WindowTooSmall", "window must cover the longest forbidden word");
  LabeledGraph g;
  {
    std::string w(N, s.alphabet[0]);
    std::vector<size_t> idx(N, 0);
    for (;;) {
      if (is_allowed(s, w)) {
        g.names.push_back(w);
        g.labels.push_back(w[0]);
      }
      long pos = N - 1;
      while (pos >= 0 && idx[pos] + 1 == s.alphabet.size()) {
        idx[pos] = 0;
        w[pos] = s.alphabet[0];
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
      w[pos] = s.alphabet[idx[pos]];
    }
  }
  g.adj.resize(g.names.size());
  for (size_t u = 0; u < g.names.size(); ++u)
    for (size_t v = 0; v < g.names.size(); ++v) {
      if (g.names[u].substr(1) != g.names[v].substr(0, N - 1)) continue;
      if (!is_allowed(s, g.names[u] + g.names[v].back())) continue;
      g.adj[u].push_back(static_cast<long>(v));
    }
  return g;
}

long graph_edge_count(const LabeledGraph& g) {
  long e = 0;
  for (auto& row : g.adj) e += static_cast<long>(row.size());
  return e;
}

BigInt graph_walk_count(const LabeledGraph& g, long len) {
  if (len < 0) fail("BadParams", "negative walk length");
  if (len == 0) return 1;
  std::vector<BigInt> v(g.names.size(), 1);
  for (long step = 1; step < len; ++step) {
    std::vector<BigInt> next(g.names.size(), 0);
    for (size_t u = 0; u < g.adj.size(); ++u)
      for (long w : g.adj[u]) next[u] += v[w];
    v = std::move(next);
  }
  BigInt total = 0;
  for (auto& x : v) total += x;
  return total;
}

BigInt count_words(const Sft& s, long n) {
  if (n < 0) fail("BadParams", "negative word length");
  long maxf = 1;
  for (auto& f : s.forbidden) maxf = std::max(maxf, static_cast<long>(f.size()));
  if (n < maxf) return count_words_brute(s, n);
  LabeledGraph g = higher_block(s, maxf);
  return graph_walk_count(g, n - maxf + 1);
}

LabeledGraph parse_graph(const std::string& text) {
  LabeledGraph g;
  std::istringstream in(text);
  std::string raw;
  bool in_edges = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> pending;
  while (std::getline(in, raw)) {
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "vertices:") {
      for (size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon == std::string::npos || colon + 2 != toks[i].size())
          fail("BadGraph", "vertex wants name:label, got '" + toks[i] + "'");
        g.names.push_back(toks[i].substr(0, colon));
        g.labels.push_back(toks[i][colon + 1]);
      }
    } else if (toks[0] == "edges:") {
      in_edges = true;
    } else if (in_edges && toks.size() >= 2 && toks[1] == "->") {
      pending.push_back({toks[0], {toks.begin() + 2, toks.end()}});
    } else {
      fail("BadGraph", "cannot read line '" + raw + "'");
    }
  }
  if (g.names.empty()) fail("BadGraph", "no vertices");
  auto index_of = [&](const std::string& name) -> long {
    for (size_t i = 0; i < g.names.size(); ++i)
      if (g.names[i] == name) return static_cast<long>(i);
    fail("BadGraph", "unknown vertex '" + name + "'");
  };
  g.adj.resize(g.names.size());
  for (auto& [from, tos] : pending)
    for (auto& to : tos) g.adj[index_of(from)].push_back(index_of(to));
  return g;
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("FileNotFound", path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_str(const LabeledGraph& g) {
  std::string out = "vertices:";
  for (size_t i = 0; i < g.names.size(); ++i)
    out += " " + g.names[i] + ":" + std::string(1, g.labels[i]);
  out += "\nedges:\n";
  for (size_t u = 0; u < g.adj.size(); ++u) {
    if (g.adj[u].empty()) continue;
    out += g.names[u] + " ->";
    for (long v : g.adj[u]) out += " " + g.names[v];
    out += "\n";
  }
  return out;
}

bool sofic_accepts(const LabeledGraph& g, const std::string& w) {
  for (char c : w)
    if (std::find(g.labels.begin(), g.labels.end(), c) == g.labels.end())
      fail("AlphabetMismatch", "word symbol '" + std::string(1, c) +
                                   "' labels no vertex");
  std::vector<char> live(g.names.size(), 1);
  bool first = true;
  for (char c : w) {
    std::vector<char> next(g.names.size(), 0);
    for (size_t u = 0; u < g.names.size(); ++u) {
      if (!live[u]) continue;
      if (first) {
        // the walk's first vertex is unconstrained by predecessors
        if (g.labels[u] == c) next[u] = 1;
      } else {
        for (long v : g.adj[u])
          if (g.labels[v] == c) next[v] = 1;
      }
    }
    first = false;
    live = std::move(next);
    if (std::find(live.begin(), live.end(), 1) == live.end()) return false;
  }
  return true;
}

char biword_at(const BiWord& b, long i) {
  long off = i - b.origin;
  if (off < 0 || off >= static_cast<long>(b.symbols.size())) return b.pad;
  return b.symbols[static_cast<size_t>(off)];
}

std::string sliding_block_apply(const SlidingBlockCode& code, const BiWord& b, long lo,
                                long hi) {
  std::string out;
  for (long i = lo; i <= hi; ++i) {
    std::string window;
    for (long j = i - code.memory; j <= i + code.anticipation; ++j)
      window += biword_at(b, j);
    auto it = code.rule.find(window);
    if (it == code.rule.end()) fail("RuleIncomplete", "no rule for window '" + window + "'");
    out += it->second;
  }
  return out;
}

}  // namespace cdsw
