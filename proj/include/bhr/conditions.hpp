#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/path.hpp"

namespace bhr {

// A divisor d of v with more than v - d multiples of d in the list.
struct DivisorWitness {
  int divisor = 0;
  int multiples = 0;
};

// A sublist J, given by the lengths whose whole multiplicity block it takes,
// with |J| < gcd(v, lengths outside J) - 1.
struct SublistWitness {
  std::vector<int> lengths;
  int size = 0;
  int gcd = 0;
};

struct ConditionReport {
  bool holds = true;
  std::optional<DivisorWitness> divisor;
  std::optional<SublistWitness> sublist;

  std::string describe() const;
};

// Ascending positive divisors of n >= 1.
std::vector<int> divisors(int n);

// For every divisor d of v the list has at most v - d multiples of d. The
// smallest failing divisor is reported.
ConditionReport condition_two(const EdgeLengthList& list);

// For every sublist J sharing no value with L \ J,
// |J| >= gcd(v, lengths of L \ J) - 1. Such J are unions of whole
// multiplicity blocks, so only support subsets are tried. Supports larger
// than 20 go through an exact dynamic program over gcd values instead.
ConditionReport condition_one(const EdgeLengthList& list);

// Deletes every path edge whose cyclic length is not a multiple of d and
// counts the remaining components. Each component is checked to sit inside
// one residue class mod d with at most v/d vertices.
int residue_components(const PathRealization& path, int d);

}  // namespace bhr
