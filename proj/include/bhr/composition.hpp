#pragma once

#include <vector>

#include "bhr/path.hpp"

namespace bhr {

// [0, x1, ..., s] followed by the second path shifted by s, where s is the
// terminal vertex of the perfect first path. The result realizes the union
// of both linear lists and is perfect iff `second` is.
// Throws CompositionError when `first` is not perfect.
PathRealization compose(const PathRealization& first, const PathRealization& second);

// Prefixes the straight path [0, 1, ..., A - a] so the result has `target`
// ones, where a is the number of ones in the linear lengths of `path`.
// Throws InvalidLength when target < a.
PathRealization extend_with_ones(const PathRealization& path, int target);

// Every vertex x becomes (x + g) mod v. The result generally no longer
// starts at 0, so it is a plain vertex sequence.
std::vector<int> translate(std::span<const int> vertices, int g, int v);
std::vector<int> translate(const PathRealization& path, int g);

}  // namespace bhr
