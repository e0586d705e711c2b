#include "ftspan/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ftspan/errors.hpp"

namespace ftspan {

namespace {

// Yields non-empty, comment-stripped lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(const std::string& token, std::size_t line) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "bad number '" + token + "'");
  }
  return value;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError("missing header line 'n m'");
  auto header = tokens(line);
  if (header.size() != 2) fail(reader.number(), "header must be 'n m'");
  const auto n = parse_number<std::size_t>(header[0], reader.number());
  const auto m = parse_number<std::size_t>(header[1], reader.number());

  GraphFile file;
  std::vector<EdgeSpec> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
    }
    auto t = tokens(line);
    if (!t.empty() && t[0] == "L" && edges.empty() && !file.left_count) {
      if (t.size() != 2) fail(reader.number(), "bipartite header is 'L <count>'");
      file.left_count = parse_number<std::size_t>(t[1], reader.number());
      if (*file.left_count > n) fail(reader.number(), "left count exceeds n");
      continue;
    }
    if (t.size() != 2 && t.size() != 3) {
      fail(reader.number(), "edge line must be 'u v [w]'");
    }
    EdgeSpec e;
    e.u = parse_number<NodeId>(t[0], reader.number());
    e.v = parse_number<NodeId>(t[1], reader.number());
    if (t.size() == 3) e.weight = parse_number<double>(t[2], reader.number());
    if (e.u >= n || e.v >= n) fail(reader.number(), "node id out of range");
    edges.push_back(e);
  }
  if (reader.next(line)) fail(reader.number(), "trailing content after edges");
  try {
    file.graph = WeightedGraph(n, std::move(edges));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
  return file;
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return read_graph(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_weight(double w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

void write_graph(std::ostream& out, const WeightedGraph& g,
                 std::optional<std::size_t> left_count) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  if (left_count) out << "L " << *left_count << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_weight(e.weight) << '\n';
  }
}

void write_graph_file(const std::filesystem::path& path, const WeightedGraph& g,
                      std::optional<std::size_t> left_count) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  write_graph(out, g, left_count);
}

}  // namespace ftspan
