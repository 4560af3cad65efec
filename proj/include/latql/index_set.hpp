#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace latql {

/// Subset of a fixed, ordered universe {0, ..., n-1}. The tag keeps object
/// sets and attribute sets from being mixed up at compile time.
template <typename Tag>
class IndexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.set();
    return s;
  }

  static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
    IndexSet s(universe);
    for (auto i : members) s.bits_.set(i);
    return s;
  }

  static IndexSet of(std::size_t universe, const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (auto i : members) s.bits_.set(i);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const IndexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const IndexSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const { return bits_.intersects(other.bits_); }

  IndexSet complement() const {
    IndexSet s = *this;
    s.bits_.flip();
    return s;
  }

  IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
  IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
  IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
  // Arbitrary but total; used for keyed lookups only.
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.bits_ < b.bits_; }

  /// Members in ascending index order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
    return out;
  }

  /// The members strictly below `limit`.
  IndexSet prefix(std::size_t limit) const {
    IndexSet s = *this;
    for (std::size_t i = limit; i < s.bits_.size(); ++i) s.bits_.reset(i);
    return s;
  }

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

/// Re-indexes the members of `s` that lie in `kept` into the universe
/// {0, ..., |kept|-1}, keeping order. Members outside `kept` are dropped.
template <typename Tag>
IndexSet<Tag> compress(const IndexSet<Tag>& s, const IndexSet<Tag>& kept) {
  IndexSet<Tag> out(kept.count());
  std::size_t pos = 0;
  for (auto i : kept.indices()) {
    if (s.contains(i)) out.insert(pos);
    ++pos;
  }
  return out;
}

/// Inverse of compress: maps a subset of {0, ..., |kept|-1} back onto the
/// members of `kept`.
template <typename Tag>
IndexSet<Tag> expand(const IndexSet<Tag>& s, const IndexSet<Tag>& kept) {
  IndexSet<Tag> out(kept.universe());
  const auto members = kept.indices();
  for (auto i : s.indices()) out.insert(members[i]);
  return out;
}

}  // namespace latql
