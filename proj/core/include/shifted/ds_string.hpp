#pragma once

#include <string>
#include <vector>

#include "shifted/shifted_order.hpp"
#include "shifted/simplicial_complex.hpp"

namespace shifted {

/// One step of a construction string: add a disjoint vertex, star a fresh
/// vertex in the current dimension, or raise the star dimension.
enum class DsToken { Disjoint, Star, Bar };

/// A construction string over {D, S, |}, kept as parsed (not canonicalized).
struct DsString {
  std::vector<DsToken> tokens;

  /// Number of D and S tokens, i.e. vertices of the evaluated complex.
  int vertex_token_count() const;
  int bar_count() const;

  friend bool operator==(const DsString&, const DsString&) = default;
};

/// Parses text over {D, S, |}; whitespace is ignored. Errors: empty input,
/// characters outside the alphabet, or a bar with no S anywhere after it
/// (such a bar raises a dimension nothing ever uses).
DsString parse_ds(const std::string& text);

/// Compact form, no whitespace: "DDSS|SSD|S".
std::string render_ds(const DsString& s);

/// Normal form with identical evaluation: the first vertex token becomes D
/// (starring a fresh vertex into the empty complex and adding a disjoint
/// vertex are the same operation), every D moves left past adjacent bars
/// (adding a disjoint vertex commutes with raising the dimension), and bars
/// left without a later star are dropped. The rewrites keep every vertex's
/// label, so evaluate() is unchanged not just up to isomorphism but as a
/// labeled facet set.
DsString canonicalize(DsString s);

/// Labels in vertex-token order, slot 0 unused: S tokens get 1..k right to
/// left, D tokens get k+1..n left to right. Smaller label = more dominant.
/// Equivalently, this maps creation order to dominance order.
VertexLabeling label_from_string(const DsString& s);

/// Which names the evaluated complex's vertices carry.
enum class VertexNaming {
  DominanceLabels,  // per label_from_string; the result is shifted under identity
  CreationOrder,    // i-th vertex token is vertex i; mainly for debugging
};

/// Left-to-right fold starting from the complex whose only face is empty:
/// D adds {v} as a facet, Bar raises the star dimension (initially 1), and
/// S stars a fresh vertex in the current dimension.
SimplicialComplex evaluate(const DsString& s,
                           VertexNaming naming = VertexNaming::DominanceLabels);

/// Maps a bar-free string (a threshold creation sequence) to the string of
/// its independence complex: D -> |S and S -> D, then leading bars are
/// dropped. A leading S in the image is kept as-is.
/// Errors: input contains a bar.
DsString flag_transform(const DsString& s);

/// True iff every bar-delimited segment (before the first bar, between
/// consecutive bars, after the last) contains exactly one S. Stacked bars
/// create an empty segment and so fail the test.
bool is_one_star_per_dimension(const DsString& s);

/// The explicit balanced coloring of a one-star string's evaluation,
/// indexed by vertex under DominanceLabels (slot 0 unused): the S of
/// segment i gets color i; D vertices get color 0, except those before
/// the first S, which share faces with every S and get the top color.
/// Errors: s is not one-star-per-dimension.
std::vector<int> one_star_coloring(const DsString& s);

}  // namespace shifted
