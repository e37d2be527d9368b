#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bhr/edge_list.hpp"

namespace bhr {

enum class Mode { linear, cyclic };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

// Length of the edge [x, y] of K_v: min(|x - y|, v - |x - y|).
int edge_length(int x, int y, int v);

// A Hamiltonian path of K_v written as its vertex sequence. Always a
// permutation of {0, ..., v-1} that starts at 0.
class PathRealization {
 public:
  explicit PathRealization(std::vector<int> vertices);

  // Text form `[0,3,8,2]`; brackets optional.
  static PathRealization parse(std::string_view text);

  int order() const { return static_cast<int>(vertices_.size()); }
  std::span<const int> vertices() const { return vertices_; }
  int back() const { return vertices_.back(); }
  std::string to_string() const;

  friend bool operator==(const PathRealization&, const PathRealization&) = default;

 private:
  std::vector<int> vertices_;
};

// Parses `[x0,x1,...]` without any permutation checks.
std::vector<int> parse_vertex_sequence(std::string_view text);
std::string format_vertex_sequence(std::span<const int> vertices);

EdgeLengthList cyclic_lengths(const PathRealization& path);
EdgeLengthList linear_lengths(const PathRealization& path);
EdgeLengthList lengths(const PathRealization& path, Mode mode);

// Ends at v-1. Only meaningful for linear realizations.
bool is_perfect(const PathRealization& path);

struct LengthMismatch {
  int length = 0;
  int expected = 0;
  int actual = 0;
};

struct ValidationReport {
  Mode mode = Mode::linear;
  bool is_permutation = false;
  bool starts_at_zero = false;
  bool lengths_match = false;
  std::optional<bool> perfect;  // linear mode, valid paths only
  std::optional<LengthMismatch> first_mismatch;

  bool passed() const { return is_permutation && starts_at_zero && lengths_match; }
  std::string describe() const;
};

// Throws OrderMismatch when the sequence length differs from list.order().
ValidationReport validate(std::span<const int> vertices, const EdgeLengthList& list, Mode mode);
ValidationReport validate(const PathRealization& path, const EdgeLengthList& list, Mode mode);

}  // namespace bhr
