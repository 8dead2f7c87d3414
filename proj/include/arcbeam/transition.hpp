#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "arcbeam/error.hpp"
#include "arcbeam/sentence.hpp"

namespace arcbeam {

enum class RootMode : uint8_t { Final, Initial };

// The enum order doubles as the deterministic tie-break order used by
// beam ranking and oracle selection.
enum class ActionKind : uint8_t { Shift = 0, RightArc = 1, LeftArc = 2, Reduce = 3, Unshift = 4 };

inline const char* action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::Shift: return "shift";
    case ActionKind::RightArc: return "right-arc";
    case ActionKind::LeftArc: return "left-arc";
    case ActionKind::Reduce: return "reduce";
    case ActionKind::Unshift: return "unshift";
  }
  return "?";
}

struct Action {
  ActionKind kind = ActionKind::Shift;
  int label = 0;  // label id; meaningful only for arc actions

  bool is_arc() const { return kind == ActionKind::RightArc || kind == ActionKind::LeftArc; }
  bool operator==(const Action& o) const {
    return kind == o.kind && (!is_arc() || label == o.label);
  }
  bool operator!=(const Action& o) const { return !(*this == o); }
  // Tie-break order: kind first, then label id.
  bool operator<(const Action& o) const {
    if (kind != o.kind) return kind < o.kind;
    return (is_arc() ? label : 0) < (o.is_arc() ? o.label : 0);
  }
};

inline Action shift_action() { return {ActionKind::Shift, 0}; }
inline Action reduce_action() { return {ActionKind::Reduce, 0}; }
inline Action unshift_action() { return {ActionKind::Unshift, 0}; }
inline Action left_arc(int label) { return {ActionKind::LeftArc, label}; }
inline Action right_arc(int label) { return {ActionKind::RightArc, label}; }

// Parser state over tokens 1..n plus a pseudo ROOT token. In Final root
// mode ROOT sits at position n+1 as the last buffer item and is never
// shifted; in Initial mode ROOT is position 0 at the stack bottom and is
// never popped. ROOT takes at most one dependent in either mode, so every
// completed derivation is a single-rooted tree.
//
// Values are immutable in use: apply() returns a fresh successor.
class Configuration {
 public:
  RootMode mode = RootMode::Final;
  int n = 0;
  std::vector<int> stack;       // strictly increasing token indices, top = back
  int cursor = 1;               // first pending real buffer token, 1..n+1
  int unshifted = -1;           // token returned to the buffer front, or -1
  bool buffer_exhausted = false;  // Initial-mode flag: buffer emptied at least once
  std::vector<int> head;        // size n+2, -1 = unattached
  std::vector<int> label;       // arc label ids, parallel to head
  // Modifier bookkeeping for feature extraction: leftmost/second-leftmost
  // and rightmost/second-rightmost dependents plus left/right valencies.
  std::vector<int> lmod, lmod2, rmod, rmod2;
  std::vector<uint8_t> lval, rval;
  int root_child = -1;

  int root_index() const { return mode == RootMode::Final ? n + 1 : 0; }

  // Front of the buffer: the unshifted token if any, else the next pending
  // token, else (Final mode) ROOT. -1 when the buffer is empty.
  int buffer_front() const {
    if (unshifted >= 0) return unshifted;
    if (cursor <= n) return cursor;
    return mode == RootMode::Final ? n + 1 : -1;
  }

  bool buffer_has_real_token() const { return unshifted >= 0 || cursor <= n; }

  int stack_top() const { return stack.empty() ? -1 : stack.back(); }

  bool in_stack(int x) const {
    return std::binary_search(stack.begin(), stack.end(), x);
  }

  // Real token still waiting in the buffer (ROOT is not a real token).
  bool in_buffer(int x) const {
    if (x == unshifted) return true;
    return x >= cursor && x <= n;
  }

  bool is_terminal() const {
    if (mode == RootMode::Final) return stack.empty() && cursor > n;
    return stack.size() == 1 && stack[0] == 0 && !buffer_has_real_token();
  }

  std::array<bool, 5> legal_kinds() const {
    std::array<bool, 5> ok{false, false, false, false, false};
    if (is_terminal()) return ok;
    const int front = buffer_front();
    const bool have_front = front >= 0;
    const bool front_is_root = have_front && front == root_index() && mode == RootMode::Final;
    const int top = stack_top();
    const bool top_is_root = top >= 0 && mode == RootMode::Initial && top == 0;

    if (have_front && !front_is_root && !buffer_exhausted) {
      ok[static_cast<int>(ActionKind::Shift)] = true;
    }
    if (top >= 0) {
      const bool top_headless = head[top] < 0;
      if (have_front && !top_is_root && top_headless &&
          (!front_is_root || root_child < 0)) {
        ok[static_cast<int>(ActionKind::LeftArc)] = true;
      }
      if (have_front && !front_is_root && head[front] < 0 &&
          (!top_is_root || root_child < 0)) {
        ok[static_cast<int>(ActionKind::RightArc)] = true;
      }
      if (!top_is_root && head[top] >= 0) {
        ok[static_cast<int>(ActionKind::Reduce)] = true;
      }
      if (mode == RootMode::Initial && !have_front && !top_is_root && top_headless &&
          buffer_exhausted) {
        ok[static_cast<int>(ActionKind::Unshift)] = true;
      }
    }
    return ok;
  }

  bool is_legal(ActionKind k) const { return legal_kinds()[static_cast<int>(k)]; }

  // Terminal cannot be reached and no action applies. Decoders repair such
  // states by attaching the stranded tokens to the root's dependent.
  bool is_dead() const {
    if (is_terminal()) return false;
    const auto ok = legal_kinds();
    return std::none_of(ok.begin(), ok.end(), [](bool b) { return b; });
  }

  Configuration apply(const Action& a) const {
    if (!is_legal(a.kind)) {
      throw std::logic_error(std::string("illegal action: ") + action_kind_name(a.kind));
    }
    Configuration c = *this;
    const int front = buffer_front();
    const int top = stack_top();
    switch (a.kind) {
      case ActionKind::Shift:
        c.stack.push_back(front);
        ++c.cursor;
        break;
      case ActionKind::RightArc:
        c.add_arc(front, top, a.label);
        c.stack.push_back(front);
        if (front == unshifted) {
          c.unshifted = -1;
        } else {
          ++c.cursor;
        }
        break;
      case ActionKind::LeftArc:
        c.add_arc(top, front, a.label);
        c.stack.pop_back();
        break;
      case ActionKind::Reduce:
        c.stack.pop_back();
        break;
      case ActionKind::Unshift:
        c.unshifted = top;
        c.stack.pop_back();
        break;
    }
    if (c.mode == RootMode::Initial && !c.buffer_has_real_token()) {
      c.buffer_exhausted = true;
    }
    return c;
  }

  // dependent -> (head, label) pairs for tokens 1..n; -1 head = unattached.
  int num_attached() const {
    int k = 0;
    for (int i = 1; i <= n; ++i) {
      if (head[i] >= 0) ++k;
    }
    return k;
  }

 private:
  void add_arc(int dep, int h, int lab) {
    head[dep] = h;
    label[dep] = lab;
    if (dep < h) {
      if (lmod[h] < 0 || dep < lmod[h]) {
        lmod2[h] = lmod[h];
        lmod[h] = dep;
      } else if (lmod2[h] < 0 || dep < lmod2[h]) {
        lmod2[h] = dep;
      }
      if (lval[h] < 255) ++lval[h];
    } else {
      if (dep > rmod[h]) {
        rmod2[h] = rmod[h];
        rmod[h] = dep;
      } else if (dep > rmod2[h]) {
        rmod2[h] = dep;
      }
      if (rval[h] < 255) ++rval[h];
    }
    if (h == root_index()) root_child = dep;
  }
};

inline Configuration initial_configuration(int n, RootMode mode) {
  if (n < 1) throw std::invalid_argument("initial_configuration: empty sentence");
  Configuration c;
  c.mode = mode;
  c.n = n;
  c.cursor = 1;
  c.head.assign(n + 2, -1);
  c.label.assign(n + 2, -1);
  c.lmod.assign(n + 2, -1);
  c.lmod2.assign(n + 2, -1);
  c.rmod.assign(n + 2, -1);
  c.rmod2.assign(n + 2, -1);
  c.lval.assign(n + 2, 0);
  c.rval.assign(n + 2, 0);
  if (mode == RootMode::Initial) c.stack.push_back(0);
  return c;
}

inline Configuration initial_configuration(const Sentence& s, RootMode mode) {
  return initial_configuration(s.size(), mode);
}

// True when no two arcs cross, with the root arc anchored at the ROOT
// position (crossing is position-symmetric, so the result does not depend
// on the root mode). Requires a complete well-formed tree.
inline bool is_projective(const Sentence& s) {
  if (!s.has_well_formed_tree()) {
    throw std::logic_error("is_projective: sentence lacks a complete well-formed tree");
  }
  const int n = s.size();
  // Arc intervals; the root arc runs from position 0 to the root token.
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(n);
  for (const Token& t : s.tokens) {
    const int h = *t.gold_head;
    arcs.emplace_back(std::min(h, t.index), std::max(h, t.index));
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const auto [a, b] = arcs[i];
      const auto [c, d] = arcs[j];
      if (a < c && c < b && b < d) return false;
      if (c < a && a < d && d < b) return false;
    }
  }
  return true;
}

}  // namespace arcbeam
