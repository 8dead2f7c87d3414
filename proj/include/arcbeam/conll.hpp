#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arcbeam/error.hpp"
#include "arcbeam/sentence.hpp"

namespace arcbeam {
namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1000000000) return false;
  }
  out = static_cast<int>(s[0] == '-' ? -v : v);
  return true;
}

}  // namespace detail

// Reads tab-delimited 10-column treebank data: one token per line, blank
// line between sentences. Columns consumed: 1 (index), 2 (form), 5 (POS),
// 7 (head), 8 (label); the rest are read and discarded. "_" means absent;
// a head of "-1" means unknown.
inline std::vector<Sentence> read_conll(std::istream& in, bool lowercase = false) {
  std::vector<Sentence> sentences;
  Sentence cur;
  std::string line;
  int line_no = 0;
  int sentence_start_line = 1;

  auto flush = [&]() {
    if (cur.tokens.empty()) return;
    const int n = cur.size();
    for (const Token& t : cur.tokens) {
      if (t.gold_head && (*t.gold_head > n || *t.gold_head == t.index)) {
        throw DataError("head index " + std::to_string(*t.gold_head) +
                        " out of range for token " + std::to_string(t.index) +
                        " in sentence starting at line " + std::to_string(sentence_start_line));
      }
    }
    sentences.push_back(std::move(cur));
    cur = Sentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty()) {
      flush();
      sentence_start_line = line_no + 1;
      continue;
    }
    std::vector<std::string> cols = detail::split(line, '\t');
    if (cols.size() != 10) {
      throw DataError("line " + std::to_string(line_no) + ": expected 10 tab-separated columns, got " +
                      std::to_string(cols.size()));
    }
    Token tok;
    if (!detail::parse_int(cols[0], tok.index) || tok.index < 1) {
      throw DataError("line " + std::to_string(line_no) + ": bad token index '" + cols[0] + "'");
    }
    if (tok.index != cur.size() + 1) {
      throw DataError("line " + std::to_string(line_no) + ": token index " + std::to_string(tok.index) +
                      " does not follow " + std::to_string(cur.size()));
    }
    tok.form = lowercase ? to_lower(cols[1]) : cols[1];
    tok.pos = cols[4];
    if (cols[6] != "_") {
      int h;
      if (!detail::parse_int(cols[6], h) || h < -1) {
        throw DataError("line " + std::to_string(line_no) + ": bad head '" + cols[6] + "'");
      }
      tok.gold_head = h;
    }
    if (cols[7] != "_") tok.gold_label = cols[7];
    cur.tokens.push_back(std::move(tok));
  }
  flush();
  return sentences;
}

// Writes 10-column treebank output. Head and label come from the token's
// gold_head/gold_label fields (callers parsing data fold predictions into
// them first). A missing head is an internal invariant violation; an
// unknown head round-trips as "-1".
inline void write_conll(const std::vector<Sentence>& sentences, std::ostream& out) {
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) {
      if (!t.gold_head) {
        throw std::logic_error("write_conll: token " + std::to_string(t.index) + " has no head");
      }
      out << t.index << '\t' << t.form << "\t_\t_\t" << t.pos << "\t_\t" << *t.gold_head << '\t'
          << (t.gold_label ? *t.gold_label : "_") << "\t_\t_\n";
    }
    out << '\n';
  }
}

// Reads one sentence per line, tokens separated by whitespace, each token
// being form<delim>tag. The split is on the last delimiter occurrence so
// forms may contain the delimiter.
inline std::vector<Sentence> read_tagged(std::istream& in, char delim = '_', bool lowercase = false) {
  std::vector<Sentence> sentences;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    std::istringstream fields(line);
    Sentence s;
    std::string item;
    while (fields >> item) {
      size_t pos = item.rfind(delim);
      if (pos == std::string::npos || pos == 0 || pos + 1 == item.size()) {
        throw DataError("line " + std::to_string(line_no) + ": token '" + item +
                        "' lacks a '" + std::string(1, delim) + "' delimiter between form and tag");
      }
      Token tok;
      tok.index = s.size() + 1;
      tok.form = item.substr(0, pos);
      if (lowercase) tok.form = to_lower(tok.form);
      tok.pos = item.substr(pos + 1);
      s.tokens.push_back(std::move(tok));
    }
    if (!s.tokens.empty()) sentences.push_back(std::move(s));
  }
  return sentences;
}

// Reads "bitstring <tab> word <tab> count" lines. The count is ignored.
inline ClusterLexicon read_clusters(std::istream& in) {
  ClusterLexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line.empty()) continue;
    std::vector<std::string> cols = detail::split(line, '\t');
    if (cols.size() < 2 || cols[0].empty() || cols[1].empty()) {
      throw DataError("cluster file line " + std::to_string(line_no) + ": expected bitstring<TAB>word");
    }
    for (char c : cols[0]) {
      if (c != '0' && c != '1') {
        throw DataError("cluster file line " + std::to_string(line_no) + ": bit-string '" + cols[0] +
                        "' contains characters other than 0/1");
      }
    }
    lex.add(cols[1], cols[0]);
  }
  return lex;
}

// One POS tag per line; blank lines ignored.
inline PunctuationSet read_punctuation(std::istream& in) {
  PunctuationSet set;
  std::string line;
  while (std::getline(in, line)) {
    detail::strip_cr(line);
    if (!line.empty()) set.tags.insert(line);
  }
  return set;
}

// Built-in fallback used when no punctuation file is given.
inline PunctuationSet wsj_punctuation() {
  PunctuationSet set;
  set.tags = {"``", "''", ".", ",", ":", "-LRB-", "-RRB-"};
  return set;
}

}  // namespace arcbeam
