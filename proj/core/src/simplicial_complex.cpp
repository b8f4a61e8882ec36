#include "shifted/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace shifted {

namespace {

void check_vertex_count(int n, int lower) {
  if (n < lower)
    throw std::invalid_argument("vertex_count must be >= " + std::to_string(lower) +
                                ", got " + std::to_string(n));
  if (n > kMaxVertices)
    throw std::invalid_argument("vertex_count exceeds capacity " +
                                std::to_string(kMaxVertices) + ": " + std::to_string(n));
}

void check_enumeration_guard(int n) {
  if (n > 25)
    throw std::invalid_argument("face enumeration is limited to 25 vertices, got " +
                                std::to_string(n));
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_vertex_count(n, 0);
  SimplicialComplex k;
  k.n_ = n;
  return k;
}

SimplicialComplex SimplicialComplex::empty_face_only(int n) {
  check_vertex_count(n, 0);
  SimplicialComplex k;
  k.n_ = n;
  k.facets_.push_back(FaceSet{});
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<FaceSet>& faces, int n) {
  check_vertex_count(n, 1);
  for (FaceSet f : faces)
    if (!f.subset_of(FaceSet::from_mask(full_mask(n))))
      throw std::invalid_argument("face " + f.to_string() + " has a vertex above n=" +
                                  std::to_string(n));
  std::vector<FaceSet> maximal;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < faces.size() && !covered; ++j) {
      if (i == j) continue;
      // Keep the first copy of duplicated faces.
      if (faces[i] == faces[j]) covered = j < i;
      else covered = faces[i].subset_of(faces[j]);
    }
    if (!covered) maximal.push_back(faces[i]);
  }
  if (maximal.empty()) maximal.push_back(FaceSet{});
  return from_antichain(std::move(maximal), n);
}

SimplicialComplex SimplicialComplex::from_antichain(std::vector<FaceSet> antichain, int n) {
  check_vertex_count(n, 0);
  std::sort(antichain.begin(), antichain.end(), FaceSet::size_lex_less);
  SimplicialComplex k;
  k.n_ = n;
  k.facets_ = std::move(antichain);
  return k;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -1;
  return facets_.back().size() - 1;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.size() <= 1) return true;
  return facets_.front().size() == facets_.back().size();
}

bool SimplicialComplex::is_face(FaceSet f) const {
  for (FaceSet g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

FaceSet SimplicialComplex::support() const {
  FaceSet s;
  for (FaceSet f : facets_) s = s.united(f);
  return s;
}

std::vector<FaceSet> SimplicialComplex::all_faces() const {
  check_enumeration_guard(n_);
  FaceTable table(*this);
  std::vector<FaceSet> out;
  const std::uint64_t top = std::uint64_t{1} << n_;
  for (std::uint64_t m = 0; m < top; ++m)
    if (table.is_face(m)) out.push_back(FaceSet::from_mask(m));
  std::sort(out.begin(), out.end(), FaceSet::size_lex_less);
  return out;
}

FVector SimplicialComplex::f_vector() const {
  check_enumeration_guard(n_);
  int d = dimension();
  if (d < 0) return {};
  FVector f(static_cast<std::size_t>(d) + 1, 0);
  FaceTable table(*this);
  const std::uint64_t top = std::uint64_t{1} << n_;
  for (std::uint64_t m = 1; m < top; ++m)
    if (table.is_face(m)) ++f[static_cast<std::size_t>(std::popcount(m)) - 1];
  return f;
}

std::vector<FaceSet> SimplicialComplex::minimal_nonfaces() const {
  check_enumeration_guard(n_);
  FaceTable table(*this);
  std::vector<FaceSet> out;
  const std::uint64_t top = std::uint64_t{1} << n_;
  for (std::uint64_t m = 0; m < top; ++m) {
    if (table.is_face(m)) continue;
    bool minimal = true;
    for (std::uint64_t rem = m; rem && minimal; rem &= rem - 1)
      minimal = table.is_face(m ^ (rem & ~(rem - 1)));
    if (minimal) out.push_back(FaceSet::from_mask(m));
  }
  std::sort(out.begin(), out.end(), FaceSet::size_lex_less);
  return out;
}

SimplicialComplex SimplicialComplex::induced_subcomplex(FaceSet keep) const {
  if (is_void()) return *this;
  std::vector<FaceSet> cut;
  cut.reserve(facets_.size());
  for (FaceSet f : facets_) cut.push_back(f.intersected(keep));
  SimplicialComplex k = from_facets(cut, std::max(n_, 1));
  k.n_ = n_;
  return k;
}

std::vector<std::uint64_t> SimplicialComplex::facet_masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(facets_.size());
  for (FaceSet f : facets_) out.push_back(f.mask());
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string s = "n=" + std::to_string(n_) + ":";
  if (facets_.empty()) return s + " (void)";
  for (FaceSet f : facets_) {
    s += ' ';
    s += f.to_string();
  }
  return s;
}

FaceTable::FaceTable(const SimplicialComplex& k) : n_(k.vertex_count()) {
  if (n_ > 25)
    throw std::invalid_argument("face enumeration is limited to 25 vertices, got " +
                                std::to_string(n_));
  const std::uint64_t top = std::uint64_t{1} << n_;
  bits_.assign(static_cast<std::size_t>((top + 63) / 64), 0);
  auto set = [&](std::uint64_t m) { bits_[m >> 6] |= std::uint64_t{1} << (m & 63); };
  for (FaceSet f : k.facets()) set(f.mask());
  // Downward closure: sweep masks descending, pushing membership to
  // one-vertex-smaller subsets.
  for (std::uint64_t m = top; m-- > 0;) {
    if (!is_face(m)) continue;
    for (std::uint64_t rem = m; rem; rem &= rem - 1) set(m ^ (rem & ~(rem - 1)));
  }
}

}  // namespace shifted
