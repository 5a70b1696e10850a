#pragma once

#include <deque>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uniorder/words.hpp"

namespace uniorder {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Binary tree with 0/1 leaves: exactly the words generated from 1 by
// 1 -> v11^ and 1 -> 0.  Immutable, shared; identity is the serialized form.
class GTree {
 public:
  enum class Kind { leaf0, leaf1, node };

  static GTree leaf0() { return GTree(std::make_shared<Data>(Kind::leaf0, GTree(), GTree())); }
  static GTree leaf1() { return GTree(std::make_shared<Data>(Kind::leaf1, GTree(), GTree())); }
  static GTree node(GTree left, GTree right) {
    return GTree(std::make_shared<Data>(Kind::node, std::move(left), std::move(right)));
  }

  Kind kind() const { return d_->kind; }
  bool is_leaf0() const { return kind() == Kind::leaf0; }
  bool is_leaf1() const { return kind() == Kind::leaf1; }
  bool is_node() const { return kind() == Kind::node; }
  const GTree& left() const { return d_->left; }
  const GTree& right() const { return d_->right; }
  int node_count() const { return d_->count; }
  const std::string& repr() const { return d_->repr; }  // ASCII over {v,^,0,1}

  bool operator==(const GTree& o) const { return repr() == o.repr(); }
  bool operator<(const GTree& o) const { return repr() < o.repr(); }

 private:
  struct Data {
    Kind kind;
    GTree left, right;
    std::string repr;
    int count;
    Data(Kind k, GTree l, GTree r) : kind(k), left(std::move(l)), right(std::move(r)) {
      switch (kind) {
        case Kind::leaf0: repr = "0"; count = 1; break;
        case Kind::leaf1: repr = "1"; count = 1; break;
        case Kind::node:
          repr = "v" + left.repr() + right.repr() + "^";
          count = 1 + left.node_count() + right.node_count();
          break;
      }
    }
  };

  GTree() = default;  // only for Data slots of leaves
  explicit GTree(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

namespace detail {

// Accepts ASCII v/^ and the UTF-8 arrows.
inline std::string normalize_gword(std::string_view w) {
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    unsigned char c = static_cast<unsigned char>(w[i]);
    if (c == 0xE2 && i + 2 < w.size()) {
      unsigned char c1 = static_cast<unsigned char>(w[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(w[i + 2]);
      if (c1 == 0x86 && c2 == 0x93) {  // down arrow
        out += 'v';
        i += 3;
        continue;
      }
      if (c1 == 0x86 && c2 == 0x91) {  // up arrow
        out += '^';
        i += 3;
        continue;
      }
    }
    out += w[i];
    ++i;
  }
  return out;
}

inline GTree parse_at(const std::string& w, size_t& pos) {
  if (pos >= w.size()) throw ParseError("grammar word: unexpected end at position " + std::to_string(pos));
  char c = w[pos];
  if (c == '0') {
    ++pos;
    return GTree::leaf0();
  }
  if (c == '1') {
    ++pos;
    return GTree::leaf1();
  }
  if (c == 'v') {
    size_t open = pos;
    ++pos;
    GTree l = parse_at(w, pos);
    GTree r = parse_at(w, pos);
    if (pos >= w.size() || w[pos] != '^')
      throw ParseError("grammar word: unclosed 'v' at position " + std::to_string(open));
    ++pos;
    return GTree::node(std::move(l), std::move(r));
  }
  throw ParseError(std::string("grammar word: unexpected symbol '") + c + "' at position " +
                   std::to_string(pos));
}

}  // namespace detail

inline GTree parse_gword(std::string_view word) {
  std::string w = detail::normalize_gword(word);
  size_t pos = 0;
  GTree t = detail::parse_at(w, pos);
  if (pos != w.size())
    throw ParseError("grammar word: trailing symbols at position " + std::to_string(pos));
  return t;
}

inline std::string serialize_gtree(const GTree& t) { return t.repr(); }

// Decision procedure for the rewriting order: to is constructible from from.
// Leaf 1 generates every tree; only the v00^ -> 0 rule erases structure, so a
// node reaches a leaf exactly when both children collapse to 0.  Validated
// exhaustively against rewrite_oracle in the tests.
inline bool derives(const GTree& from, const GTree& to) {
  if (from.is_leaf1()) return true;
  if (from.is_leaf0()) return to.is_leaf0();
  if (to.is_leaf0()) return derives(from.left(), to) && derives(from.right(), to);
  if (to.is_node())
    return derives(from.left(), to.left()) && derives(from.right(), to.right());
  return false;  // to == leaf1 and from is a node: nothing rewrites back to 1
}

// X <=_G Y iff X can be constructed from Y.
inline bool leq_G(const GTree& x, const GTree& y) { return derives(y, x); }

struct GrammarOrderCmp {
  bool leq(const GTree& a, const GTree& b) const { return leq_G(a, b); }
  bool eq(const GTree& a, const GTree& b) const { return a == b; }
};

namespace detail {

// One-step rewrites of t under 1 -> v11^, 1 -> 0, v00^ -> 0.
inline void rewrite_successors(const GTree& t, std::vector<GTree>& out) {
  if (t.is_leaf1()) {
    out.push_back(GTree::node(GTree::leaf1(), GTree::leaf1()));
    out.push_back(GTree::leaf0());
    return;
  }
  if (t.is_leaf0()) return;
  if (t.left().is_leaf0() && t.right().is_leaf0()) out.push_back(GTree::leaf0());
  std::vector<GTree> ls, rs;
  rewrite_successors(t.left(), ls);
  rewrite_successors(t.right(), rs);
  for (const GTree& l : ls) out.push_back(GTree::node(l, t.right()));
  for (const GTree& r : rs) out.push_back(GTree::node(t.left(), r));
}

}  // namespace detail

// Breadth-first search over rule applications; sound, and complete within the
// step bound and the |from|+|to|+4 intermediate-size cap.
inline bool rewrite_oracle(const GTree& from, const GTree& to, int step_bound) {
  int cap = from.node_count() + to.node_count() + 4;
  if (from == to) return true;
  std::set<std::string> seen{from.repr()};
  std::deque<GTree> frontier{from};
  for (int step = 0; step < step_bound && !frontier.empty(); ++step) {
    std::deque<GTree> next;
    for (const GTree& t : frontier) {
      std::vector<GTree> succ;
      detail::rewrite_successors(t, succ);
      for (const GTree& s : succ) {
        if (s == to) return true;
        if (s.node_count() > cap) continue;
        if (seen.insert(s.repr()).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

// Collapses every v00^ subtree to 0; the canonical representative under the
// contraction rule (both readings of the quasi-order agree after this).
inline GTree canonicalize_collapse(const GTree& t) {
  if (!t.is_node()) return t;
  GTree l = canonicalize_collapse(t.left());
  GTree r = canonicalize_collapse(t.right());
  if (l.is_leaf0() && r.is_leaf0()) return GTree::leaf0();
  return GTree::node(std::move(l), std::move(r));
}

// Recursive image of an antichain: empty set -> 0, {empty word} -> 1,
// otherwise v Embed(A0) Embed(A1) ^ splitting on the first letter.
inline GTree embed_W_to_G(const AntichainSet& a) {
  if (a.empty()) return GTree::leaf0();
  if (a.contains(Word(""))) return GTree::leaf1();  // prefix-free: {empty word} alone
  std::vector<Word> a0, a1;
  for (const Word& w : a.words()) {
    if (w.bits[0] == '0')
      a0.emplace_back(w.bits.substr(1));
    else
      a1.emplace_back(w.bits.substr(1));
  }
  return GTree::node(embed_W_to_G(AntichainSet(std::move(a0))),
                     embed_W_to_G(AntichainSet(std::move(a1))));
}

inline std::string embed_W_to_G_word(const AntichainSet& a) {
  return serialize_gtree(embed_W_to_G(a));
}

}  // namespace uniorder
