#include "mgdom/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mgdom/error.hpp"

namespace mgdom {

namespace {
std::size_t words_for(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw Error(ErrorCode::BadParameter, "negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw Error(ErrorCode::TooLarge, "mask sets hold at most 64 vertices");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  if (s.words_.empty() ? mask != 0 : s.words_[0] != mask)
    throw Error(ErrorCode::IndexOutOfRange, "mask has bits beyond the universe");
  return s;
}

void VertexSet::check(int v) const {
  if (v < 1 || v > universe_)
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(universe_));
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw Error(ErrorCode::BadParameter, "vertex sets over different universes");
}

void VertexSet::trim() {
  const int rem = universe_ % 64;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

void VertexSet::insert(int v) {
  check(v);
  words_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
}

void VertexSet::erase(int v) {
  check(v);
  words_[(v - 1) / 64] &= ~(std::uint64_t{1} << ((v - 1) % 64));
}

bool VertexSet::contains(int v) const {
  if (v < 1 || v > universe_) return false;
  return (words_[(v - 1) / 64] >> ((v - 1) % 64)) & 1U;
}

int VertexSet::size() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw Error(ErrorCode::TooLarge, "mask sets hold at most 64 vertices");
  return words_.empty() ? 0 : words_[0];
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto x = a.members();
  const auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace mgdom
