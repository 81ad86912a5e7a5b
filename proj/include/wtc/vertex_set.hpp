#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ranges>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace wtc {

using Vertex = std::uint32_t;

/// Subset of the vertices 0..universe-1 of one graph, stored as a bitset.
///
/// Graphs up to 128 vertices keep their words inline, which is what the
/// exhaustive searches run on.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <std::ranges::input_range R>
  VertexSet(std::size_t universe, const R& members) : VertexSet(universe) {
    for (auto v : members) insert(static_cast<Vertex>(v));
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1u);
  }
  void insert(Vertex v) { words_[v / kBits] |= Word{1} << (v % kBits); }
  void erase(Vertex v) { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s = *this;
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

  /// Smallest member, or universe() when empty.
  Vertex first() const { return next(0); }

  /// Smallest member >= from, or universe() when there is none.
  Vertex next(Vertex from) const {
    std::size_t wi = from / kBits;
    if (wi >= words_.size()) return static_cast<Vertex>(universe_);
    Word w = words_[wi] & (~Word{0} << (from % kBits));
    while (true) {
      if (w) return static_cast<Vertex>(wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size()) return static_cast<Vertex>(universe_);
      w = words_[wi];
    }
  }

  class const_iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.v_ == b.v_; }

  private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = 0;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, static_cast<Vertex>(universe_)}; }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  /// Size first, then lexicographic on the sorted member lists.
  friend bool size_lex_less(const VertexSet& a, const VertexSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  /// Bit pattern of the first word; exact for universes up to 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (Word w : words_) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(w);
    return h;
  }

private:
  void trim() {
    if (universe_ % kBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kBits)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

/// Vertex set of a small universe built from a bit mask (bit i = vertex i).
inline VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe && v < 64; ++v)
    if ((mask >> v) & 1u) s.insert(v);
  return s;
}

}  // namespace wtc
