#include "shifted/text_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shifted {

namespace {

struct ParsedLines {
  std::optional<int> n;
  std::vector<std::vector<VertexId>> rows;
};

ParsedLines parse_lines(const std::string& text) {
  ParsedLines out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first.rfind("n=", 0) == 0) {
      std::string value = first.substr(2);
      if (value.empty() && !(ls >> value))
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
      std::size_t used = 0;
      try {
        out.n = std::stoi(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || *out.n < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header value '" +
                                    value + "'");
      std::string extra;
      if (ls >> extra)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing junk '" +
                                    extra + "'");
      continue;
    }
    std::vector<VertexId> row;
    std::istringstream vs(line);
    std::string tok;
    while (vs >> tok) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected a positive integer, got '" + tok + "'");
      row.push_back(value);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

int deduce_n(const ParsedLines& p) {
  if (p.n) return *p.n;
  int n = 0;
  for (const auto& row : p.rows)
    for (VertexId v : row) n = std::max(n, v);
  return n;
}

}  // namespace

SimplicialComplex parse_complex(const std::string& text) {
  ParsedLines p = parse_lines(text);
  int n = deduce_n(p);
  std::vector<FaceSet> facets;
  for (const auto& row : p.rows) {
    FaceSet f;
    for (VertexId v : row) {
      if (f.contains(v))
        throw std::invalid_argument("facet repeats vertex " + std::to_string(v));
      f = f.with(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets, std::max(n, 1));
}

Graph parse_graph(const std::string& text) {
  ParsedLines p = parse_lines(text);
  int n = deduce_n(p);
  Graph g(n);
  for (const auto& row : p.rows) {
    if (row.size() != 2)
      throw std::invalid_argument("graph line must be 'u v', got " +
                                  std::to_string(row.size()) + " numbers");
    g.add_edge(row[0], row[1]);
  }
  return g;
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string render_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "n=" << k.vertex_count() << "\n";
  if (k.is_void()) {
    out << "# void complex: no faces\n";
    return out.str();
  }
  for (FaceSet f : k.facets()) {
    if (f.empty()) {
      out << "# only the empty face\n";
      continue;
    }
    bool first = true;
    for (VertexId v : f.vertices()) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace shifted
