#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hwface {

// Subset of Dynkin nodes, node indices 0-based, at most 64 nodes.
// Iteration (indices()) is in ascending node order.
struct NodeSet {
  std::uint64_t bits = 0;

  NodeSet() = default;
  explicit NodeSet(std::uint64_t b) : bits(b) {}

  static NodeSet single(int i) { return NodeSet(std::uint64_t(1) << i); }
  // {0, 1, ..., n-1}
  static NodeSet first(int n) {
    return NodeSet(n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
  }
  static NodeSet of(std::initializer_list<int> idx) {
    NodeSet s;
    for (int i : idx) s.bits |= std::uint64_t(1) << i;
    return s;
  }
  static NodeSet of(const std::vector<int>& idx) {
    NodeSet s;
    for (int i : idx) s.bits |= std::uint64_t(1) << i;
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1; }
  bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }

  NodeSet operator|(NodeSet o) const { return NodeSet(bits | o.bits); }
  NodeSet operator&(NodeSet o) const { return NodeSet(bits & o.bits); }
  NodeSet operator-(NodeSet o) const { return NodeSet(bits & ~o.bits); }
  NodeSet& operator|=(NodeSet o) { bits |= o.bits; return *this; }
  NodeSet& operator&=(NodeSet o) { bits &= o.bits; return *this; }
  NodeSet& operator-=(NodeSet o) { bits &= ~o.bits; return *this; }
  bool operator==(const NodeSet&) const = default;
  // subset ordering is partial; operator< below is the bitmask total order
  // used only for map keys.
  bool operator<(NodeSet o) const { return bits < o.bits; }

  bool subsetOf(NodeSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(NodeSet o) const { return (bits & o.bits) != 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool sep = false;
    for (int i : indices()) {
      if (sep) s += ",";
      s += std::to_string(i + 1);  // printed 1-based, matching the CLI
      sep = true;
    }
    return s + "}";
  }
};

}  // namespace hwface
