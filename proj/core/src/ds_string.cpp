#include "shifted/ds_string.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace shifted {

int DsString::vertex_token_count() const {
  return static_cast<int>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](DsToken t) { return t != DsToken::Bar; }));
}

int DsString::bar_count() const {
  return static_cast<int>(std::count(tokens.begin(), tokens.end(), DsToken::Bar));
}

DsString parse_ds(const std::string& text) {
  DsString s;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'D': s.tokens.push_back(DsToken::Disjoint); break;
      case 'S': s.tokens.push_back(DsToken::Star); break;
      case '|': s.tokens.push_back(DsToken::Bar); break;
      default:
        throw std::invalid_argument(std::string("illegal character '") + c +
                                    "' in construction string");
    }
  }
  if (s.tokens.empty()) throw std::invalid_argument("empty construction string");
  // A bar must have an S somewhere after it; otherwise it raises a star
  // dimension that is never used and the string denotes nothing.
  bool star_follows = false;
  for (auto it = s.tokens.rbegin(); it != s.tokens.rend(); ++it) {
    if (*it == DsToken::Star) star_follows = true;
    else if (*it == DsToken::Bar && !star_follows)
      throw std::invalid_argument("bar with no S after it");
  }
  return s;
}

std::string render_ds(const DsString& s) {
  std::string out;
  out.reserve(s.tokens.size());
  for (DsToken t : s.tokens)
    out += t == DsToken::Disjoint ? 'D' : t == DsToken::Star ? 'S' : '|';
  return out;
}

DsString canonicalize(DsString s) {
  // Starring a fresh vertex into the empty complex adds exactly one vertex,
  // same as D, so the first vertex token may as well be D. It also keeps its
  // label: the leftmost S carries label k, and after the flip the new leading
  // D is the first D of a string with k-1 stars, carrying (k-1)+1 = k.
  for (DsToken& t : s.tokens) {
    if (t == DsToken::Bar) continue;
    if (t == DsToken::Star) t = DsToken::Disjoint;
    break;
  }
  // D commutes with Bar (a disjoint vertex ignores the star dimension), and
  // moving it changes neither the D order nor the S order, so labels hold.
  for (std::size_t i = 1; i < s.tokens.size(); ++i) {
    if (s.tokens[i] != DsToken::Disjoint) continue;
    std::size_t j = i;
    while (j > 0 && s.tokens[j - 1] == DsToken::Bar) {
      std::swap(s.tokens[j - 1], s.tokens[j]);
      --j;
    }
  }
  // The flip can orphan bars (the string lost its only star); a bar with no
  // later star raises a dimension nothing uses, so drop it to keep the
  // canonical form parseable.
  bool star_follows = false;
  std::vector<char> keep(s.tokens.size(), 1);
  for (std::size_t i = s.tokens.size(); i-- > 0;) {
    if (s.tokens[i] == DsToken::Star) star_follows = true;
    else if (s.tokens[i] == DsToken::Bar && !star_follows) keep[i] = 0;
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i)
    if (keep[i]) s.tokens[out++] = s.tokens[i];
  s.tokens.resize(out);
  return s;
}

VertexLabeling label_from_string(const DsString& s) {
  int n = s.vertex_token_count();
  int k = static_cast<int>(std::count(s.tokens.begin(), s.tokens.end(), DsToken::Star));
  VertexLabeling labels(static_cast<std::size_t>(n) + 1, 0);
  int next_star = k;        // S tokens: 1..k right to left
  int next_disjoint = k;    // D tokens: k+1..n left to right
  int vertex = 0;
  for (DsToken t : s.tokens) {
    if (t == DsToken::Bar) continue;
    ++vertex;
    labels[static_cast<std::size_t>(vertex)] =
        t == DsToken::Star ? next_star-- : ++next_disjoint;
  }
  return labels;
}

SimplicialComplex evaluate(const DsString& s, VertexNaming naming) {
  int n = s.vertex_token_count();
  if (n == 0) throw std::invalid_argument("construction string has no vertex tokens");
  VertexLabeling labels = naming == VertexNaming::DominanceLabels
                              ? label_from_string(s)
                              : identity_labeling(n);
  SimplicialComplex k = SimplicialComplex::empty_face_only(0);
  int dim = 1;
  int vertex = 0;
  for (DsToken t : s.tokens) {
    if (t == DsToken::Bar) {
      ++dim;
      continue;
    }
    VertexId name = labels[static_cast<std::size_t>(++vertex)];
    if (t == DsToken::Disjoint) {
      std::vector<FaceSet> facets(k.facets().begin(), k.facets().end());
      facets.push_back(FaceSet::of({name}));
      k = SimplicialComplex::from_facets(facets, std::max(k.vertex_count(), name));
    } else {
      k = star_d(k, name, dim);
    }
  }
  return k;
}

DsString flag_transform(const DsString& s) {
  DsString out;
  for (DsToken t : s.tokens) {
    switch (t) {
      case DsToken::Bar:
        throw std::invalid_argument("flag transform expects a bar-free string");
      case DsToken::Disjoint:
        out.tokens.push_back(DsToken::Bar);
        out.tokens.push_back(DsToken::Star);
        break;
      case DsToken::Star:
        out.tokens.push_back(DsToken::Disjoint);
        break;
    }
  }
  auto first = std::find_if(out.tokens.begin(), out.tokens.end(),
                            [](DsToken t) { return t != DsToken::Bar; });
  out.tokens.erase(out.tokens.begin(), first);
  return out;
}

bool is_one_star_per_dimension(const DsString& s) {
  int stars = 0;
  for (DsToken t : s.tokens) {
    if (t == DsToken::Bar) {
      if (stars != 1) return false;
      stars = 0;
    } else if (t == DsToken::Star) {
      ++stars;
    }
  }
  return stars == 1;
}

std::vector<int> one_star_coloring(const DsString& s) {
  if (!is_one_star_per_dimension(s))
    throw std::invalid_argument("coloring needs exactly one S per dimension");
  int segments = s.bar_count() + 1;
  VertexLabeling labels = label_from_string(s);
  std::vector<int> color(static_cast<std::size_t>(s.vertex_token_count()) + 1, -1);
  int segment = 0;
  bool seen_star = false;
  int vertex = 0;
  for (DsToken t : s.tokens) {
    if (t == DsToken::Bar) {
      ++segment;
      continue;
    }
    VertexId name = labels[static_cast<std::size_t>(++vertex)];
    if (t == DsToken::Star) {
      color[static_cast<std::size_t>(name)] = segment;
      seen_star = true;
    } else {
      // A disjoint vertex only ever shares faces with stars placed after
      // it, so 0 is safe once any star has appeared; before the first
      // star it meets every star and takes the one color none of them use.
      color[static_cast<std::size_t>(name)] = seen_star ? 0 : segments;
    }
  }
  return color;
}

}  // namespace shifted
