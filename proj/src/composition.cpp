#include "bhr/composition.hpp"

#include <cstdint>
#include <numeric>

#include "bhr/error.hpp"
#include "bhr/kernels.hpp"

namespace bhr {

PathRealization compose(const PathRealization& first, const PathRealization& second) {
  if (!is_perfect(first))
    throw CompositionError("left operand " + first.to_string() + " is not perfect");
  const int s = first.back();
  std::vector<int> out(first.vertices().begin(), first.vertices().end());
  out.reserve(out.size() + second.vertices().size() - 1);
  for (std::size_t i = 1; i < second.vertices().size(); ++i) out.push_back(second.vertices()[i] + s);
  PathRealization result(std::move(out));

  auto expected = linear_lengths(first) + linear_lengths(second);
  auto report = validate(result, expected, Mode::linear);
  if (!report.passed()) throw CompositionError("composition broke the length multiset: " + report.describe());
  return result;
}

PathRealization extend_with_ones(const PathRealization& path, int target) {
  int ones = linear_lengths(path).multiplicity(1);
  if (target < ones)
    throw InvalidLength("target ones-count " + std::to_string(target) + " is below the existing " +
                        std::to_string(ones));
  if (target == ones) return path;
  std::vector<int> prefix(static_cast<std::size_t>(target - ones) + 1);
  std::iota(prefix.begin(), prefix.end(), 0);
  return compose(PathRealization(std::move(prefix)), path);
}

std::vector<int> translate(std::span<const int> vertices, int g, int v) {
  if (g < 0 || g >= v) throw OutOfRange("translation " + std::to_string(g) + " outside [0," + std::to_string(v) + ")");
  std::vector<std::int32_t> in(vertices.begin(), vertices.end());
  std::vector<std::int32_t> out(in.size());
  kernels::translate_mod(in, g, v, out);
  return std::vector<int>(out.begin(), out.end());
}

std::vector<int> translate(const PathRealization& path, int g) { return translate(path.vertices(), g, path.order()); }

}  // namespace bhr
