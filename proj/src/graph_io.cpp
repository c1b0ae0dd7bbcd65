#include "fixset/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "fixset/error.hpp"

namespace fixset {
namespace {

constexpr std::size_t kMaxShortForm = 62;

std::string_view StripNewline(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool ParseInt(std::string_view token, long long& out) {
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> SplitWs(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph ParseGraph6(std::string_view line) {
  const std::string_view s = StripNewline(line);
  if (s.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " at offset " +
                           std::to_string(i) + " outside 63..126",
                       i);
    }
  }
  const std::size_t n = static_cast<unsigned char>(s[0]) - 63;
  if (n > kMaxShortForm) {
    throw ParseError("graph6: extended size header at offset 0 unsupported "
                     "(n > 62)", 0);
  }
  if (n == 0) throw ParseError("graph6: zero-vertex graph at offset 0", 0);
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (s.size() != 1 + body) {
    const std::size_t at = std::min(s.size(), 1 + body);
    throw ParseError("graph6: expected " + std::to_string(1 + body) +
                         " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(s.size()) + " (offset " +
                         std::to_string(at) + ")",
                     at);
  }
  GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(s[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (k % 6 != 0) {
    const int last = static_cast<unsigned char>(s.back()) - 63;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits at offset " +
                           std::to_string(s.size() - 1),
                       s.size() - 1);
    }
  }
  return std::move(b).build();
}

std::string EmitGraph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxShortForm) {
    throw InvalidArgument("graph6: n=" + std::to_string(n) +
                          " needs the extended size header (unsupported)");
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) |
            (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = SplitWs(line);
    if (!n) {
      long long count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !ParseInt(tokens[1], count) ||
          count < 1) {
        throw ParseError("edgelist line " + std::to_string(line_no) +
                             ": expected header \"n <count>\"",
                         line_no);
      }
      n = static_cast<std::size_t>(count);
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !ParseInt(tokens[0], u) || !ParseInt(tokens[1], v)) {
      throw ParseError("edgelist line " + std::to_string(line_no) +
                           ": expected \"u v\"",
                       line_no);
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= *n ||
        static_cast<std::size_t>(v) >= *n) {
      throw ParseError("edgelist line " + std::to_string(line_no) +
                           ": index out of range 0.." + std::to_string(*n - 1),
                       line_no);
    }
    if (u == v) {
      throw ParseError("edgelist line " + std::to_string(line_no) +
                           ": loop edge",
                       line_no);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("edgelist: missing \"n <count>\" header", line_no);
  return Graph::FromEdges(*n, edges);
}

std::string EmitEdgeList(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> ReadGraphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> out;
  if (format == GraphFormat::kEdgeList) {
    std::ostringstream buf;
    buf << in.rdbuf();
    out.push_back(ParseEdgeList(buf.str()));
    return out;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    try {
      out.push_back(ParseGraph6(trimmed));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
  }
  return out;
}

std::string InstanceCode(const Graph& g) {
  if (g.order() <= kMaxShortForm) return EmitGraph6(g);
  std::string out = "n=" + std::to_string(g.order()) + ";";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

}  // namespace fixset
