#include "lved/labelled_tree.hpp"

#include <sstream>

namespace lved {

void LabelledTree::validate() const {
  if (!tree.is_tree()) throw StructureError("labelled graph is not a tree");
  if (demand.size() != tree.edge_count()) throw InputError("demand labels do not cover every edge");
  if (tag.size() != tree.vertex_count()) throw InputError("tags do not cover every vertex");
  for (std::size_t e = 0; e < demand.size(); ++e) {
    if (demand[e] > 2) throw InputError("edge " + std::to_string(e) + " has demand outside {0,1,2}");
  }
  for (std::size_t v = 0; v < tag.size(); ++v) {
    if (tag[v] != Tag::kB && tag[v] != Tag::kR) {
      throw InputError("vertex " + std::to_string(v) + " has a tag outside {B,R}");
    }
  }
}

LabelledTree init_labels(const Graph& tree) {
  if (!tree.is_tree()) throw StructureError("input graph is not a tree");
  return {tree, std::vector<std::uint8_t>(tree.edge_count(), 2),
          std::vector<Tag>(tree.vertex_count(), Tag::kB)};
}

namespace {

bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail_at(std::size_t lineno, const std::string& what) {
  throw InputError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

LabelledTree parse_labelled_tree(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("empty input: expected vertex count");
  std::istringstream head(line);
  long long n = 0;
  std::string extra;
  if (!(head >> n) || (head >> extra) || n < 1) fail_at(lineno, "expected a positive vertex count");

  std::vector<Edge> edges;
  std::vector<std::uint8_t> demand;
  for (long long i = 0; i + 1 < n; ++i) {
    if (!next_line(in, line, lineno)) throw InputError("missing edge lines");
    std::istringstream ss(line);
    long long u = -1, v = -1, k = -1;
    if (!(ss >> u >> v >> k) || (ss >> extra)) fail_at(lineno, "expected 'u v k'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail_at(lineno, "vertex id out of range");
    if (u == v) fail_at(lineno, "self-loop");
    if (k < 0 || k > 2) fail_at(lineno, "demand must be 0, 1 or 2");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    demand.push_back(static_cast<std::uint8_t>(k));
  }
  if (!next_line(in, line, lineno)) throw InputError("missing tag line");
  std::vector<Tag> tag;
  for (char c : line) {
    if (c == 'B') tag.push_back(Tag::kB);
    else if (c == 'R') tag.push_back(Tag::kR);
    else if (c != ' ' && c != '\t' && c != '\r') fail_at(lineno, std::string("bad tag '") + c + "'");
  }
  if (tag.size() != static_cast<std::size_t>(n)) fail_at(lineno, "expected " + std::to_string(n) + " tags");
  if (next_line(in, line, lineno)) fail_at(lineno, "unexpected trailing content");

  LabelledTree t{Graph(static_cast<std::size_t>(n), std::move(edges)), std::move(demand), std::move(tag)};
  t.validate();
  return t;
}

LabelledTree parse_labelled_tree(const std::string& text) {
  std::istringstream in(text);
  return parse_labelled_tree(in);
}

std::string emit_labelled_tree(const LabelledTree& t) {
  std::string out = std::to_string(t.tree.vertex_count()) + "\n";
  for (EdgeId e = 0; e < t.tree.edge_count(); ++e) {
    out += std::to_string(t.tree.edge(e).u) + " " + std::to_string(t.tree.edge(e).v) + " " +
           std::to_string(t.demand[e]) + "\n";
  }
  for (Tag x : t.tag) out += (x == Tag::kR ? 'R' : 'B');
  out += '\n';
  return out;
}

}  // namespace lved
