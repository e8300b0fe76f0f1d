#include "tutte/codec.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace tutte {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

long parse_index(const std::string& tok, int line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, "expected a non-negative integer, got '" + tok + "'");
  }
  try {
    return std::stol(tok);
  } catch (const std::exception&) {
    fail(line, "integer out of range '" + tok + "'");
  }
}

struct PendingEdge {
  long u, v;
  Rational w;
  int line;
};

}  // namespace

WeightedMultigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  long n = -1;
  std::map<long, PendingEdge> edges;
  std::vector<std::pair<long, std::vector<long>>> rots;
  std::vector<int> rot_lines;

  while (std::getline(in, raw)) {
    ++line;
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (kind == "graph") {
      if (n >= 0) fail(line, "duplicate graph header");
      if (tok.size() != 1) fail(line, "graph header takes one field");
      n = parse_index(tok[0], line);
    } else if (kind == "e") {
      if (n < 0) fail(line, "edge before graph header");
      if (tok.size() != 4) fail(line, "edge line takes id, u, v and weight");
      long id = parse_index(tok[0], line);
      long u = parse_index(tok[1], line);
      long v = parse_index(tok[2], line);
      if (u >= n || v >= n) fail(line, "dangling endpoint");
      Rational w;
      try {
        w = parse_rational(tok[3]);
      } catch (const Error& e) {
        fail(line, e.what());
      }
      if (!edges.emplace(id, PendingEdge{u, v, w, line}).second) fail(line, "duplicate edge id " + tok[0]);
    } else if (kind == "rot") {
      if (n < 0) fail(line, "rotation before graph header");
      if (tok.empty()) fail(line, "rotation line needs a vertex");
      long vtx = parse_index(tok[0], line);
      if (vtx >= n) fail(line, "rotation vertex out of range");
      std::vector<long> ids;
      for (std::size_t i = 1; i < tok.size(); ++i) ids.push_back(parse_index(tok[i], line));
      rots.emplace_back(vtx, std::move(ids));
      rot_lines.push_back(line);
    } else {
      fail(line, "unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw Error("missing graph header");

  WeightedMultigraph g(static_cast<int>(n));
  long expect = 0;
  for (auto& [id, pe] : edges) {
    if (id != expect) fail(pe.line, "edge ids must be dense from 0 (missing " + std::to_string(expect) + ")");
    g.add_edge(static_cast<int>(pe.u), static_cast<int>(pe.v), pe.w);
    ++expect;
  }
  if (rots.empty()) return g;

  Rotation rot;
  rot.around.assign(n, {});
  std::vector<char> listed(n, 0);
  for (std::size_t r = 0; r < rots.size(); ++r) {
    const int ln = rot_lines[r];
    const long vtx = rots[r].first;
    if (listed[vtx]++) fail(ln, "duplicate rotation for vertex " + std::to_string(vtx));
    std::map<long, int> uses;
    for (long id : rots[r].second) {
      if (id >= g.edge_count()) fail(ln, "rotation names unknown edge " + std::to_string(id));
      const Edge& e = g.edge(static_cast<int>(id));
      int k = uses[id]++;
      int side;
      if (e.is_loop()) {
        if (e.u != vtx || k > 1) fail(ln, "bad loop end in rotation");
        side = k;
      } else if (k > 0) {
        fail(ln, "edge " + std::to_string(id) + " listed twice");
      } else if (e.u == vtx) {
        side = 0;
      } else if (e.v == vtx) {
        side = 1;
      } else {
        fail(ln, "edge " + std::to_string(id) + " is not incident to " + std::to_string(vtx));
      }
      rot.around[vtx].push_back(dart_of(static_cast<int>(id), side));
    }
  }
  try {
    g.set_rotation(std::move(rot));
  } catch (const Error& e) {
    fail(rot_lines.back(), e.what());
  }
  return g;
}

std::string serialize_graph(const WeightedMultigraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "e " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' ' << to_string(g.weight(e)) << '\n';
  }
  if (const auto& rot = g.rotation()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "rot " << v;
      for (int d : rot->around[v]) out << ' ' << dart_edge(d);
      out << '\n';
    }
  }
  return out.str();
}

WeightedMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const WeightedMultigraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << serialize_graph(g);
}

}  // namespace tutte
