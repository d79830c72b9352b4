#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "adimlab/error.hpp"

namespace adimlab {

using Vertex = std::size_t;

namespace detail {

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}

constexpr std::uint64_t tail_mask(std::size_t universe) {
  const std::size_t r = universe % kWordBits;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

// Iterates the set bits of a word array in ascending order.
class BitIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = Vertex;
  using difference_type = std::ptrdiff_t;
  using pointer = const Vertex*;
  using reference = Vertex;

  BitIterator() = default;
  BitIterator(const std::uint64_t* words, std::size_t nwords, std::size_t word)
      : words_(words), nwords_(nwords), word_(word) {
    if (word_ < nwords_) {
      current_ = words_[word_];
      advance_to_set_bit();
    }
  }

  Vertex operator*() const {
    return word_ * kWordBits + static_cast<std::size_t>(std::countr_zero(current_));
  }

  BitIterator& operator++() {
    current_ &= current_ - 1;
    advance_to_set_bit();
    return *this;
  }

  BitIterator operator++(int) {
    BitIterator copy = *this;
    ++*this;
    return copy;
  }

  friend bool operator==(const BitIterator& a, const BitIterator& b) {
    return a.word_ == b.word_ && a.current_ == b.current_;
  }

 private:
  void advance_to_set_bit() {
    while (current_ == 0) {
      if (++word_ >= nwords_) {
        word_ = nwords_;
        return;
      }
      current_ = words_[word_];
    }
  }

  const std::uint64_t* words_ = nullptr;
  std::size_t nwords_ = 0;
  std::size_t word_ = 0;
  std::uint64_t current_ = 0;
};

}  // namespace detail

/// A subset of {0, ..., universe-1}. Universes up to 64 vertices live in a
/// single inline word; larger universes spill to a heap-allocated word array.
/// All binary operations require both operands to share the same universe.
class VertexSet {
 public:
  using const_iterator = detail::BitIterator;

  VertexSet() = default;

  explicit VertexSet(std::size_t universe) : universe_(universe) {
    const std::size_t nw = detail::words_for(universe);
    if (nw > 1) large_.assign(nw, 0);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::uint64_t* w = s.data();
    const std::size_t nw = s.word_count();
    for (std::size_t i = 0; i < nw; ++i) w[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet from_word(std::size_t universe, std::uint64_t bits) {
    VertexSet s(universe);
    if (universe == 0) return s;
    s.data()[0] = bits;
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return detail::words_for(universe_); }

  const std::uint64_t* data() const noexcept { return large_.empty() ? small_.data() : large_.data(); }
  std::uint64_t* data() noexcept { return large_.empty() ? small_.data() : large_.data(); }

  std::uint64_t word(std::size_t i) const { return data()[i]; }

  bool contains(Vertex v) const {
    return v < universe_ && ((data()[v / 64] >> (v % 64)) & 1U) != 0;
  }

  void insert(Vertex v) {
    check_member(v);
    data()[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    check_member(v);
    data()[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    const std::uint64_t* w = data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
    return c;
  }

  bool empty() const noexcept {
    const std::uint64_t* w = data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i)
      if (w[i] != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    const std::uint64_t* a = data();
    const std::uint64_t* b = o.data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i)
      if ((a[i] & b[i]) != 0) return true;
    return false;
  }

  std::size_t intersection_size(const VertexSet& o) const {
    check_universe(o);
    std::size_t c = 0;
    const std::uint64_t* a = data();
    const std::uint64_t* b = o.data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i)
      c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    const std::uint64_t* a = data();
    const std::uint64_t* b = o.data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i)
      if ((a[i] & ~b[i]) != 0) return false;
    return true;
  }

  VertexSet complement() const {
    VertexSet r = *this;
    std::uint64_t* w = r.data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i) w[i] = ~w[i];
    r.trim();
    return r;
  }

  VertexSet& operator|=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  VertexSet& operator&=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  VertexSet& operator^=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  VertexSet& operator-=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return false;
    return std::equal(a.data(), a.data() + a.word_count(), b.data());
  }

  /// Lexicographic order on the ascending member sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.end() && ib == b.end()) return a.universe_ <=> b.universe_;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  const_iterator begin() const { return const_iterator(data(), word_count(), 0); }
  const_iterator end() const { return const_iterator(data(), word_count(), word_count()); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  /// "{0,2,5}"; with one_based the members print shifted by one.
  std::string to_string(bool one_based = false) const {
    std::string s = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) s += ',';
      s += std::to_string(one_based ? v + 1 : v);
      first = false;
    }
    return s + "}";
  }

 private:
  template <class Op>
  VertexSet& combine(const VertexSet& o, Op op) {
    check_universe(o);
    std::uint64_t* a = data();
    const std::uint64_t* b = o.data();
    for (std::size_t i = 0, nw = word_count(); i < nw; ++i) a[i] = op(a[i], b[i]);
    return *this;
  }

  void trim() {
    const std::size_t nw = word_count();
    if (nw > 0) data()[nw - 1] &= detail::tail_mask(universe_);
  }

  void check_member(Vertex v) const {
    if (v >= universe_)
      throw Error(ErrorCode::OutOfRange,
                  "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }

  void check_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw Error(ErrorCode::BadParameter, "vertex sets over different universes");
  }

  std::size_t universe_ = 0;
  std::array<std::uint64_t, 1> small_{};
  std::vector<std::uint64_t> large_;
};

/// Single-word set used on the solver hot path when the order is at most 64.
/// Mirrors the subset of the VertexSet interface that the search needs.
struct WordSet {
  std::uint64_t bits = 0;

  static WordSet from(const VertexSet& s) { return WordSet{s.word_count() == 0 ? 0 : s.word(0)}; }
  static WordSet empty_like(const WordSet&) { return WordSet{}; }

  VertexSet to_vertex_set(std::size_t universe) const { return VertexSet::from_word(universe, bits); }

  bool contains(Vertex v) const { return ((bits >> v) & 1U) != 0; }
  void insert(Vertex v) { bits |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits &= ~(std::uint64_t{1} << v); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }
  bool intersects(const WordSet& o) const { return (bits & o.bits) != 0; }
  std::size_t intersection_size(const WordSet& o) const {
    return static_cast<std::size_t>(std::popcount(bits & o.bits));
  }

  WordSet& operator|=(const WordSet& o) { bits |= o.bits; return *this; }
  WordSet& operator&=(const WordSet& o) { bits &= o.bits; return *this; }
  WordSet& operator-=(const WordSet& o) { bits &= ~o.bits; return *this; }
  friend WordSet operator|(WordSet a, const WordSet& b) { return a |= b; }
  friend WordSet operator&(WordSet a, const WordSet& b) { return a &= b; }
  friend WordSet operator-(WordSet a, const WordSet& b) { return a -= b; }
  friend bool operator==(const WordSet&, const WordSet&) = default;

  template <class F>
  void for_each(F f) const {
    for (std::uint64_t w = bits; w != 0; w &= w - 1) f(static_cast<Vertex>(std::countr_zero(w)));
  }
};

/// Adapter giving VertexSet the same hot-path surface as WordSet.
struct WideSet {
  VertexSet set;

  static WideSet from(const VertexSet& s) { return WideSet{s}; }
  static WideSet empty_like(const WideSet& s) { return WideSet{VertexSet(s.set.universe())}; }

  VertexSet to_vertex_set(std::size_t) const { return set; }

  bool contains(Vertex v) const { return set.contains(v); }
  void insert(Vertex v) { set.insert(v); }
  void erase(Vertex v) { set.erase(v); }
  std::size_t size() const { return set.size(); }
  bool empty() const { return set.empty(); }
  bool intersects(const WideSet& o) const { return set.intersects(o.set); }
  std::size_t intersection_size(const WideSet& o) const { return set.intersection_size(o.set); }

  WideSet& operator|=(const WideSet& o) { set |= o.set; return *this; }
  WideSet& operator&=(const WideSet& o) { set &= o.set; return *this; }
  WideSet& operator-=(const WideSet& o) { set -= o.set; return *this; }
  friend WideSet operator|(WideSet a, const WideSet& b) { return a |= b; }
  friend WideSet operator&(WideSet a, const WideSet& b) { return a &= b; }
  friend WideSet operator-(WideSet a, const WideSet& b) { return a -= b; }
  friend bool operator==(const WideSet&, const WideSet&) = default;

  template <class F>
  void for_each(F f) const {
    for (Vertex v : set) f(v);
  }
};

}  // namespace adimlab
