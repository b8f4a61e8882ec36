#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shifted/face_set.hpp"

namespace shifted {

/// Face counts (f_0, ..., f_d), empty face excluded. Empty for a complex
/// with no faces of dimension >= 0.
using FVector = std::vector<long long>;

/// An abstract simplicial complex on vertices 1..vertex_count, stored as the
/// antichain of its facets (inclusion-maximal faces) in (size, lex) order.
///
/// Conventions:
///  - vertex_count is carried independently of the facets, so a vertex may be
///    tracked without being a face of the complex (it then lies in no facet).
///  - The empty face is a face of every complex that has any face at all; the
///    complex whose only face is the empty face is stored with the single
///    facet {}. A complex with no faces whatsoever (the void complex) has an
///    empty facet list.
class SimplicialComplex {
 public:
  /// The complex with no faces at all.
  static SimplicialComplex void_complex(int n);

  /// The complex whose only face is the empty face.
  static SimplicialComplex empty_face_only(int n);

  /// Reduces `faces` to its inclusion-maximal members. An empty list yields
  /// the complex containing only the empty face. Throws std::invalid_argument
  /// if n < 1, n > kMaxVertices, or some face has a vertex above n.
  static SimplicialComplex from_facets(const std::vector<FaceSet>& faces, int n);

  /// Fast path for callers that already hold an antichain (enumerators,
  /// complex-building operations). Sorts; antichain property is trusted.
  static SimplicialComplex from_antichain(std::vector<FaceSet> antichain, int n);

  int vertex_count() const { return n_; }
  const std::vector<FaceSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }

  /// max facet cardinality - 1; -1 when there is no face of dimension >= 0.
  int dimension() const;

  /// All facets share one cardinality (vacuously true with <= 1 facet).
  bool is_pure() const;

  /// True iff F is contained in some facet.
  bool is_face(FaceSet f) const;

  /// Union of all facets: the vertices that are actually faces.
  FaceSet support() const;

  /// Every face, the empty face included, in (size, lex) order.
  /// Guard: vertex_count <= 25.
  std::vector<FaceSet> all_faces() const;

  /// Guard: vertex_count <= 25.
  FVector f_vector() const;

  /// Inclusion-minimal non-faces, over all subsets of {1..vertex_count},
  /// in (size, lex) order. Guard: vertex_count <= 25.
  std::vector<FaceSet> minimal_nonfaces() const;

  /// The faces of this complex contained in `keep`. vertex_count and vertex
  /// labels are preserved (no compaction); vertices outside `keep` remain
  /// tracked but become non-faces.
  SimplicialComplex induced_subcomplex(FaceSet keep) const;

  std::vector<std::uint64_t> facet_masks() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  /// "n=4: {1,2,3} {1,4} {2,4}" (diagnostics).
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<FaceSet> facets_;
};

/// Per-subset face membership for one complex, built once (2^n bits).
/// Guard: vertex_count <= 25.
class FaceTable {
 public:
  explicit FaceTable(const SimplicialComplex& k);

  bool is_face(std::uint64_t mask) const {
    return (bits_[mask >> 6] >> (mask & 63)) & 1u;
  }
  int vertex_count() const { return n_; }

 private:
  int n_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace shifted
