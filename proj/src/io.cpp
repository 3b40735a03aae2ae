#include "hsolab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>

namespace hsolab {

const char* to_string(ParseErrc code) {
  switch (code) {
    case ParseErrc::kEmptyInput: return "empty-input";
    case ParseErrc::kEmptyGraph: return "empty-graph";
    case ParseErrc::kLongFormUnsupported: return "long-form-unsupported";
    case ParseErrc::kBadCharacter: return "bad-character";
    case ParseErrc::kBadLength: return "bad-length";
    case ParseErrc::kTrailingGarbage: return "trailing-garbage";
    case ParseErrc::kNonzeroPadding: return "nonzero-padding";
    case ParseErrc::kBadToken: return "bad-token";
    case ParseErrc::kDanglingEndpoint: return "dangling-endpoint";
  }
  return "unknown";
}

namespace {

constexpr int kBias = 63;
constexpr int kCharMax = 126;

[[noreturn]] void fail(ParseErrc code, std::size_t offset, const std::string& detail) {
  throw ParseError(code, offset,
                   std::string(to_string(code)) + " at byte " + std::to_string(offset) + ": " + detail);
}

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) base = kGraph6Header.size();
  const std::string_view body = line.substr(base);
  if (body.empty()) fail(ParseErrc::kEmptyInput, base, "no graph6 data");

  const auto byte_at = [&](std::size_t i) { return static_cast<unsigned char>(body[i]); };
  const unsigned char head = byte_at(0);
  if (head < kBias || head > kCharMax) {
    fail(ParseErrc::kBadCharacter, base, "order byte " + std::to_string(head) + " outside 63..126");
  }
  if (head == kCharMax) {
    fail(ParseErrc::kLongFormUnsupported, base, "only orders up to 62 are supported");
  }
  const int n = head - kBias;
  if (n == 0) fail(ParseErrc::kEmptyGraph, base, "graph of order 0");

  const std::size_t need = body_length(n);
  const std::size_t have = body.size() - 1;
  for (std::size_t i = 1; i < body.size() && i <= need; ++i) {
    const unsigned char c = byte_at(i);
    if (c < kBias || c > kCharMax) {
      fail(ParseErrc::kBadCharacter, base + i, "byte " + std::to_string(c) + " outside 63..126");
    }
  }
  if (have < need) {
    fail(ParseErrc::kBadLength, base + body.size(),
         "order " + std::to_string(n) + " needs " + std::to_string(need) + " data bytes, got " +
             std::to_string(have));
  }
  if (have > need) fail(ParseErrc::kTrailingGarbage, base + 1 + need, "unexpected bytes after graph");

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int sextet = byte_at(1 + k / 6) - kBias;
      if ((sextet >> (5 - static_cast<int>(k % 6))) & 1) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  if (k % 6 != 0) {
    const int sextet = byte_at(need) - kBias;
    const int pad_mask = (1 << (6 - static_cast<int>(k % 6))) - 1;
    if ((sextet & pad_mask) != 0) fail(ParseErrc::kNonzeroPadding, base + need, "padding bits must be zero");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw GraphError(GraphErrc::kOrderTooLarge, "graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  std::string out(1 + body_length(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) {
        out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - static_cast<int>(k % 6))));
      }
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  struct Token {
    long value;
    std::size_t offset;
  };
  std::vector<Token> tokens;
  std::size_t pos = 0;
  bool line_start = true;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '\n') {
      line_start = true;
      ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '#' && line_start) {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    line_start = false;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end) {
      fail(ParseErrc::kBadToken, pos, "expected an integer, got '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    tokens.push_back({value, pos});
    pos = end;
  }
  if (tokens.empty()) fail(ParseErrc::kEmptyInput, 0, "edge list has no order line");
  if (tokens.size() % 2 == 0) {
    fail(ParseErrc::kDanglingEndpoint, tokens.back().offset, "edge list ends with an unpaired endpoint");
  }
  const long n = tokens.front().value;
  if (n < 1 || n > kMaxOrder) {
    throw GraphError(n < 1 ? GraphErrc::kEmptyOrder : GraphErrc::kOrderTooLarge,
                     "edge list order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    const auto clamp = [](long v) {
      return static_cast<int>(std::max<long>(std::min<long>(v, 1L << 20), -(1L << 20)));
    };
    edges.emplace_back(clamp(tokens[i].value), clamp(tokens[i + 1].value));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
  return out.str();
}

void for_each_graph6(std::istream& in, std::string_view name, const std::function<void(GraphRecord&&)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    std::string source = std::string(name) + ":" + std::to_string(line_no);
    std::optional<Graph> parsed;
    try {
      parsed.emplace(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(e.code(), e.offset(), source + ": " + e.what());
    }
    fn(GraphRecord{std::move(source), std::move(*parsed)});
  }
}

std::vector<GraphRecord> read_graph6_stream(std::istream& in, std::string_view name) {
  std::vector<GraphRecord> out;
  for_each_graph6(in, name, [&](GraphRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

std::vector<GraphRecord> read_graphs(std::istream& in, std::string_view name, InputFormat format) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == InputFormat::kAuto) {
    format = InputFormat::kGraph6;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (line.starts_with(kGraph6Header)) break;
      if (std::isdigit(static_cast<unsigned char>(line[first]))) format = InputFormat::kEdgeList;
      break;
    }
  }
  if (format == InputFormat::kEdgeList) {
    return {GraphRecord{std::string(name) + ":1", parse_edge_list(text)}};
  }
  std::istringstream stream(text);
  return read_graph6_stream(stream, name);
}

}  // namespace hsolab
