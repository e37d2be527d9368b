#pragma once

#include <span>
#include <string_view>

#include "bhr/edge_list.hpp"

// Data tables behind the linear solver. Nothing here builds paths.
namespace bhr::detail {

enum class Answer { yes, no, open };

// One clause of the linear realizability classification. Clauses are tried
// in order and the first match decides. `open` means the published results
// leave the tuple undecided and the exhaustive oracle has to settle it.
struct Clause {
  std::string_view key;
  bool (*match)(const Exponents&);
  Answer answer;
};

std::span<const Clause> linear_clauses();
const Clause& classify_linear(const Exponents& e);

// L = R{left} + r{L - left}, with `left` realized perfectly.
struct Recursion {
  std::string_view key;
  bool (*guard)(const Exponents&);
  Exponents (*left)(const Exponents&);
};

std::span<const Recursion> linear_recursions();

}  // namespace bhr::detail
