#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mgdom {

/// Subset of the 1-based vertex ids 1..universe(), stored as a bit-vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, const std::vector<int>& members);

  /// All of 1..universe.
  static VertexSet full(int universe);
  /// Bit b of `mask` is vertex b+1. Requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;

  int size() const noexcept;
  bool empty() const noexcept;

  /// Sorted member list.
  std::vector<int> members() const;
  /// Inverse of from_mask. Requires universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + b) + 1);
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(int v) const;
  void check_same_universe(const VertexSet& other) const;
  void trim();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mgdom
