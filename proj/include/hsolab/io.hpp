#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hsolab/graph.hpp"

namespace hsolab {

enum class ParseErrc {
  kEmptyInput,
  kEmptyGraph,
  kLongFormUnsupported,
  kBadCharacter,
  kBadLength,
  kTrailingGarbage,
  kNonzeroPadding,
  kBadToken,
  kDanglingEndpoint,
};

const char* to_string(ParseErrc code);

/// Malformed input. offset is the byte offset within the parsed line or
/// text where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, std::size_t offset, const std::string& what)
      : std::runtime_error(what), code_(code), offset_(offset) {}
  ParseErrc code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  ParseErrc code_;
  std::size_t offset_;
};

// Short-form graph6 only: 1 <= n <= 62.
inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "n" followed by whitespace-separated "u v" pairs. Lines whose first
/// non-blank character is '#' are comments.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

struct GraphRecord {
  std::string source;  // "<name>:<line>"
  Graph graph;
};

/// Reads one graph6 string per line, skipping blank lines and an optional
/// ">>graph6<<" header. A ParseError is rethrown with the source location
/// in its message and the in-line byte offset preserved.
void for_each_graph6(std::istream& in, std::string_view name,
                     const std::function<void(GraphRecord&&)>& fn);
std::vector<GraphRecord> read_graph6_stream(std::istream& in, std::string_view name);

enum class InputFormat { kAuto, kGraph6, kEdgeList };

/// Reads a whole input. kAuto picks the edge-list format when the first
/// non-comment token is a decimal integer, graph6 otherwise.
std::vector<GraphRecord> read_graphs(std::istream& in, std::string_view name,
                                     InputFormat format = InputFormat::kAuto);

}  // namespace hsolab
