#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "arcbeam/error.hpp"

namespace arcbeam {

// One input token. Indices are 1-based. A head of 0 marks the sentence
// root, -1 marks an unknown head (partial annotation).
struct Token {
  int index = 0;
  std::string form;
  std::string pos;
  std::optional<int> gold_head;
  std::optional<std::string> gold_label;
};

struct Sentence {
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  bool empty() const { return tokens.empty(); }

  // True when every token carries a head >= 0.
  bool has_complete_heads() const {
    for (const Token& t : tokens) {
      if (!t.gold_head || *t.gold_head < 0) return false;
    }
    return true;
  }

  // True when the annotated heads form a single-rooted tree: complete,
  // exactly one head-0 token, acyclic.
  bool has_well_formed_tree() const {
    if (tokens.empty() || !has_complete_heads()) return false;
    int roots = 0;
    const int n = size();
    for (const Token& t : tokens) {
      const int h = *t.gold_head;
      if (h == 0) ++roots;
      if (h < 0 || h > n || h == t.index) return false;
    }
    if (roots != 1) return false;
    for (const Token& t : tokens) {
      int cur = t.index;
      for (int steps = 0; cur != 0; ++steps) {
        if (steps > n) return false;  // cycle
        cur = *tokens[cur - 1].gold_head;
      }
    }
    return true;
  }
};

struct PunctuationSet {
  std::unordered_set<std::string> tags;

  bool contains(const std::string& pos) const { return tags.count(pos) > 0; }
  bool empty() const { return tags.empty(); }
};

// Word clusters read from a hierarchical clustering output. Each distinct
// bit-string becomes one cluster id; ids are dense in first-seen order.
// Bit-string prefixes of length 4 and 6 get their own dense id spaces
// (a string shorter than the prefix length contributes itself whole).
class ClusterLexicon {
 public:
  static constexpr int kMaxClusters = 4096;

  void add(const std::string& word, const std::string& bits) {
    auto it = cluster_ids_.find(bits);
    int id;
    if (it == cluster_ids_.end()) {
      if (static_cast<int>(cluster_bits_.size()) >= kMaxClusters) {
        throw DataError("cluster file defines more than " +
                        std::to_string(kMaxClusters) + " distinct clusters");
      }
      id = static_cast<int>(cluster_bits_.size());
      cluster_ids_.emplace(bits, id);
      cluster_bits_.push_back(bits);
      prefix4_.push_back(intern(prefix4_ids_, bits.substr(0, std::min<size_t>(4, bits.size()))));
      prefix6_.push_back(intern(prefix6_ids_, bits.substr(0, std::min<size_t>(6, bits.size()))));
    } else {
      id = it->second;
    }
    word_cluster_[word] = id;
    entries_.emplace_back(word, bits);
  }

  // -1 when the word has no cluster assignment.
  int cluster_of(const std::string& word) const {
    auto it = word_cluster_.find(word);
    return it == word_cluster_.end() ? -1 : it->second;
  }

  int prefix4_of(int cluster) const { return cluster < 0 ? -1 : prefix4_[cluster]; }
  int prefix6_of(int cluster) const { return cluster < 0 ? -1 : prefix6_[cluster]; }

  int num_clusters() const { return static_cast<int>(cluster_bits_.size()); }
  int num_prefix4() const { return static_cast<int>(prefix4_ids_.size()); }
  int num_prefix6() const { return static_cast<int>(prefix6_ids_.size()); }
  int num_words() const { return static_cast<int>(word_cluster_.size()); }
  bool empty() const { return word_cluster_.empty(); }

  // Insertion-order (word, bit-string) pairs; replaying them through add()
  // rebuilds identical ids.
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  static int intern(std::unordered_map<std::string, int>& table, const std::string& key) {
    auto [it, fresh] = table.emplace(key, static_cast<int>(table.size()));
    (void)fresh;
    return it->second;
  }

  std::unordered_map<std::string, int> word_cluster_;
  std::unordered_map<std::string, int> cluster_ids_;
  std::vector<std::string> cluster_bits_;
  std::vector<int> prefix4_, prefix6_;
  std::unordered_map<std::string, int> prefix4_ids_, prefix6_ids_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

inline std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace arcbeam
