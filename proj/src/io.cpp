#include "graphcap/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "graphcap/errors.hpp"

namespace graphcap {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  if (value > 0xFFFFFFF0ULL) throw ParseError(line, "vertex id too large");
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(pos, end - pos), line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

class EdgeCollector {
 public:
  void add(std::uint64_t a, std::uint64_t b, std::size_t line) {
    if (a == b) throw ParseError(line, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen_.insert(e).second)
      throw ParseError(line, "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    edges_.push_back(e);
    max_id_ = std::max<std::uint64_t>(max_id_, std::max(a, b));
    any_ = true;
  }
  std::size_t implied_order() const { return any_ ? static_cast<std::size_t>(max_id_) + 1 : 0; }
  std::vector<Edge> take() { return std::move(edges_); }

 private:
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
  std::uint64_t max_id_ = 0;
  bool any_ = false;
};

Graph parse_edge_list(std::string_view text) {
  EdgeCollector edges;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError(no, "expected two vertex ids per line");
    edges.add(parse_id(tok[0], no), parse_id(tok[1], no), no);
  });
  std::size_t n = edges.implied_order();
  return Graph(n, edges.take());
}

Graph parse_dimacs(std::string_view text) {
  EdgeCollector edges;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  for_each_line(text, [&](std::string_view line, std::size_t no) {
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") return;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(no, "second 'p' header");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(no, "expected 'p edge <n> <m>'");
      n = parse_id(tok[2], no);
      m = parse_id(tok[3], no);
      have_header = true;
      return;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(no, "edge line before the 'p' header");
      if (tok.size() != 3) throw ParseError(no, "expected 'e <u> <v>'");
      std::uint64_t a = parse_id(tok[1], no), b = parse_id(tok[2], no);
      if (a == 0 || b == 0 || a > n || b > n) throw ParseError(no, "vertex id outside 1.." + std::to_string(n));
      edges.add(a - 1, b - 1, no);
      return;
    }
    throw ParseError(no, "unrecognised DIMACS line");
  });
  if (!have_header) throw ParseError(0, "missing 'p edge' header");
  auto list = edges.take();
  if (list.size() != m)
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " + std::to_string(list.size()));
  return Graph(static_cast<std::size_t>(n), std::move(list));
}

}  // namespace

GraphFormat detect_format(std::string_view text) {
  GraphFormat fmt = GraphFormat::EdgeList;
  bool decided = false;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (decided) return;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') return;
    if (tok[0] == "c") return;
    fmt = tok[0] == "p" ? GraphFormat::Dimacs : GraphFormat::EdgeList;
    decided = true;
  });
  return fmt;
}

Graph parse_graph(std::string_view text) { return parse_graph(text, detect_format(text)); }

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace graphcap
