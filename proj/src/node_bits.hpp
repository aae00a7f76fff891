#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "wibsp/graph.hpp"

namespace wibsp::detail {

/// Fixed-capacity dynamic bitset over node indices.
class NodeBits {
 public:
  NodeBits() = default;
  explicit NodeBits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(NodeId v) { words_[v / 64] |= bit(v); }
  void reset(NodeId v) { words_[v / 64] &= ~bit(v); }
  bool test(NodeId v) const { return (words_[v / 64] >> (v % 64)) & 1U; }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_and(const NodeBits& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  NodeBits& operator&=(const NodeBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  NodeBits& operator|=(const NodeBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  NodeBits& subtract(const NodeBits& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  void assign_and(const NodeBits& a, const NodeBits& b) {
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  /// Calls f(v) for every set bit, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  /// Calls f(v) for every bit set in both a and b, ascending.
  template <typename F>
  static void for_each_common(const NodeBits& a, const NodeBits& b, F&& f) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      for (std::uint64_t w = a.words_[i] & b.words_[i]; w != 0; w &= w - 1) {
        f(static_cast<NodeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
  }

 private:
  static std::uint64_t bit(NodeId v) { return std::uint64_t{1} << (v % 64); }

  std::vector<std::uint64_t> words_;
};

/// Adjacency rows as bitsets.
inline std::vector<NodeBits> neighborhood_bits(const WeightedGraph& g) {
  std::vector<NodeBits> rows(g.node_count(), NodeBits(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v)
    for (NodeId u : g.neighbors(v)) rows[v].set(u);
  return rows;
}

}  // namespace wibsp::detail
