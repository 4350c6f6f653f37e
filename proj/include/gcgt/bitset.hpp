#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gcgt {

/// Fixed-capacity bit set over [0, size). The Tag parameter keeps vertex,
/// edge and test index spaces from being mixed up at compile time.
template <class Tag>
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  IndexSet() = default;
  explicit IndexSet(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits) {}

  template <class Range>
  static IndexSet from_indices(std::size_t size, const Range& indices) {
    IndexSet s(size);
    for (auto i : indices) s.set(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool test(std::size_t i) const {
    check(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) {
    check(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    check(i);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set(std::size_t i, bool value) { value ? set(i) : reset(i); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }
  void fill() noexcept {
    std::fill(words_.begin(), words_.end(), ~Word{0});
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  bool intersects(const IndexSet& o) const {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const IndexSet& o) const {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  IndexSet& operator|=(const IndexSet& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Removes every element of o.
  IndexSet& subtract(const IndexSet& o) {
    same_size(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  IndexSet complement() const {
    IndexSet r(*this);
    for (Word& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Calls f(i) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * kWordBits + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  /// Smallest member, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

 private:
  void check(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("IndexSet index out of range");
  }
  void same_size(const IndexSet& o) const {
    if (o.size_ != size_) throw std::invalid_argument("IndexSet capacity mismatch");
  }
  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct VertexTag;
struct EdgeTag;
struct TestTag;

using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;
/// Membership of one edge across the tests of a collection.
using TestMask = IndexSet<TestTag>;

}  // namespace gcgt
