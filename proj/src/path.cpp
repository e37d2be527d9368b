#include "bhr/path.hpp"

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "bhr/error.hpp"
#include "bhr/kernels.hpp"

namespace bhr {

std::string_view to_string(Mode mode) {
  return mode == Mode::linear ? "linear" : "cyclic";
}

Mode parse_mode(std::string_view text) {
  if (text == "linear") return Mode::linear;
  if (text == "cyclic") return Mode::cyclic;
  throw ParseError("mode must be 'linear' or 'cyclic'", 0);
}

int edge_length(int x, int y, int v) {
  if (x < 0 || y < 0 || x >= v || y >= v)
    throw InvalidEdge("vertex out of range for v=" + std::to_string(v));
  if (x == y) throw InvalidEdge("edge endpoints coincide at " + std::to_string(x));
  int d = std::abs(x - y);
  return std::min(d, v - d);
}

namespace {

std::string permutation_problem(std::span<const int> vertices) {
  const int v = static_cast<int>(vertices.size());
  std::vector<char> seen(vertices.size(), 0);
  for (int x : vertices) {
    if (x < 0 || x >= v) return "vertex " + std::to_string(x) + " outside [0," + std::to_string(v) + ")";
    if (seen[x]) return "vertex " + std::to_string(x) + " repeated";
    seen[x] = 1;
  }
  return {};
}

std::vector<std::int32_t> consecutive(std::span<const int> vertices, Mode mode) {
  if (vertices.size() < 2) return {};
  std::vector<std::int32_t> in(vertices.begin(), vertices.end());
  std::vector<std::int32_t> out(in.size() - 1);
  kernels::consecutive_lengths(in, static_cast<std::int32_t>(in.size()), mode, out);
  return out;
}

EdgeLengthList to_list(const std::vector<std::int32_t>& values) {
  std::map<int, int> counts;
  for (auto x : values) ++counts[x];
  return EdgeLengthList(std::move(counts));
}

}  // namespace

PathRealization::PathRealization(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidPath("path must have at least one vertex");
  if (vertices_.front() != 0) throw InvalidPath("path must start at vertex 0");
  if (auto problem = permutation_problem(vertices_); !problem.empty()) throw InvalidPath(problem);
}

PathRealization PathRealization::parse(std::string_view text) {
  return PathRealization(parse_vertex_sequence(text));
}

std::string PathRealization::to_string() const { return format_vertex_sequence(vertices_); }

std::vector<int> parse_vertex_sequence(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto accept = [&](char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  };
  std::vector<int> out;
  bool bracketed = accept('[');
  skip();
  if (bracketed && accept(']')) {
    if (skip(), pos != text.size()) throw ParseError("unexpected character", pos);
    return out;
  }
  do {
    skip();
    std::size_t start = pos;
    bool negative = pos < text.size() && text[pos] == '-';
    if (negative) ++pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start + (negative ? 1 : 0)) throw ParseError("expected a vertex label", start);
    out.push_back(static_cast<int>(negative ? -value : value));
  } while (accept(','));
  if (bracketed && !accept(']')) throw ParseError("expected ']'", pos);
  skip();
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return out;
}

std::string format_vertex_sequence(std::span<const int> vertices) {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i]);
  }
  return out + "]";
}

EdgeLengthList cyclic_lengths(const PathRealization& path) {
  return to_list(consecutive(path.vertices(), Mode::cyclic));
}

EdgeLengthList linear_lengths(const PathRealization& path) {
  return to_list(consecutive(path.vertices(), Mode::linear));
}

EdgeLengthList lengths(const PathRealization& path, Mode mode) {
  return mode == Mode::linear ? linear_lengths(path) : cyclic_lengths(path);
}

bool is_perfect(const PathRealization& path) { return path.back() == path.order() - 1; }

std::string ValidationReport::describe() const {
  if (!is_permutation) return "fail: not a permutation of {0,...,v-1}";
  if (!starts_at_zero) return "fail: path does not start at 0";
  if (!lengths_match) {
    std::string out = "fail: " + std::string(to_string(mode)) + " lengths differ";
    if (first_mismatch) {
      const auto& m = *first_mismatch;
      out += ", length " + std::to_string(m.length) + " expected " + std::to_string(m.expected) + " got " +
             std::to_string(m.actual);
      out += m.actual > m.expected ? " (surplus)" : " (deficit)";
    }
    return out;
  }
  std::string out = "pass";
  if (perfect) out += *perfect ? ", perfect" : ", not perfect";
  return out;
}

ValidationReport validate(std::span<const int> vertices, const EdgeLengthList& list, Mode mode) {
  if (static_cast<int>(vertices.size()) != list.order())
    throw OrderMismatch("path has " + std::to_string(vertices.size()) + " vertices but the list needs " +
                        std::to_string(list.order()));
  ValidationReport report;
  report.mode = mode;
  report.is_permutation = permutation_problem(vertices).empty();
  report.starts_at_zero = !vertices.empty() && vertices.front() == 0;
  if (!report.is_permutation) return report;

  EdgeLengthList actual = to_list(consecutive(vertices, mode));
  report.lengths_match = actual == list;
  if (!report.lengths_match) {
    std::map<int, int> keys = list.counts();
    for (const auto& [length, mult] : actual.counts()) keys[length];
    for (const auto& [length, unused] : keys) {
      int expected = list.multiplicity(length);
      int got = actual.multiplicity(length);
      if (expected != got) {
        report.first_mismatch = LengthMismatch{length, expected, got};
        break;
      }
    }
  }
  if (mode == Mode::linear && report.starts_at_zero && report.lengths_match)
    report.perfect = vertices.back() == static_cast<int>(vertices.size()) - 1;
  return report;
}

ValidationReport validate(const PathRealization& path, const EdgeLengthList& list, Mode mode) {
  return validate(path.vertices(), list, mode);
}

}  // namespace bhr
