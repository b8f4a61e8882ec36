#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace shifted {

/// Vertices are 1-based positive integer labels.
using VertexId = int;

/// Largest vertex label a FaceSet can hold.
inline constexpr int kMaxVertices = 64;

/// A set of vertices, stored as a 64-bit mask (vertex v <-> bit v-1).
/// Used both for faces of a complex and for plain vertex sets.
class FaceSet {
 public:
  constexpr FaceSet() = default;

  static constexpr FaceSet from_mask(std::uint64_t mask) {
    FaceSet f;
    f.bits_ = mask;
    return f;
  }

  static FaceSet of(std::initializer_list<VertexId> vs) {
    FaceSet f;
    for (VertexId v : vs) f = f.with(v);
    return f;
  }

  static FaceSet of(const std::vector<VertexId>& vs) {
    FaceSet f;
    for (VertexId v : vs) f = f.with(v);
    return f;
  }

  constexpr std::uint64_t mask() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  bool contains(VertexId v) const {
    return v >= 1 && v <= kMaxVertices && (bits_ >> (v - 1)) & 1u;
  }

  FaceSet with(VertexId v) const {
    check_vertex(v);
    return from_mask(bits_ | (std::uint64_t{1} << (v - 1)));
  }

  FaceSet without(VertexId v) const {
    check_vertex(v);
    return from_mask(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  constexpr bool subset_of(FaceSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr FaceSet united(FaceSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr FaceSet intersected(FaceSet o) const { return from_mask(bits_ & o.bits_); }
  constexpr FaceSet minus(FaceSet o) const { return from_mask(bits_ & ~o.bits_); }

  /// Smallest vertex; 0 if empty.
  VertexId min_vertex() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
  /// Largest vertex; 0 if empty.
  VertexId max_vertex() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

  /// Vertices in ascending order.
  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits_; m; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr bool operator==(FaceSet a, FaceSet b) = default;

  /// Order by (cardinality, lexicographic on the ascending vertex list).
  /// This is the canonical order for facet lists and face listings.
  static bool size_lex_less(FaceSet a, FaceSet b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    std::uint64_t d = a.bits_ ^ b.bits_;
    if (d == 0) return false;
    // Equal sizes: whichever set contains the smallest differing vertex
    // has the lexicographically smaller ascending list.
    return (a.bits_ >> std::countr_zero(d)) & 1u;
  }

  /// "{1,2,4}" (diagnostics).
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::uint64_t m = bits_; m; m &= m - 1) {
      if (!first) s += ',';
      s += std::to_string(std::countr_zero(m) + 1);
      first = false;
    }
    s += '}';
    return s;
  }

 private:
  static void check_vertex(VertexId v) {
    if (v < 1 || v > kMaxVertices)
      throw std::invalid_argument("vertex label out of range 1.." +
                                  std::to_string(kMaxVertices) + ": " +
                                  std::to_string(v));
  }

  std::uint64_t bits_ = 0;
};

/// Mask of vertices 1..n.
inline constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace shifted
