#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bhr {

// Exponents of a list over {1,2,3,5}: {1^ones, 2^twos, 3^threes, 5^fives}.
struct Exponents {
  int ones = 0;
  int twos = 0;
  int threes = 0;
  int fives = 0;

  int total() const { return ones + twos + threes + fives; }
  int order() const { return total() + 1; }
  std::string to_string() const;
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

// A multiset of positive edge lengths. The order v of the complete graph it
// refers to is always 1 + (number of elements).
class EdgeLengthList {
 public:
  EdgeLengthList() = default;
  explicit EdgeLengthList(std::map<int, int> counts);

  static EdgeLengthList from_exponents(const Exponents& e);
  // Text form `1,3^3,5^6`. Whitespace is ignored, `^1` may be omitted and
  // repeated lengths are summed. The empty string is the empty list.
  static EdgeLengthList parse(std::string_view text);

  const std::map<int, int>& counts() const { return counts_; }
  int multiplicity(int length) const;
  int size() const { return size_; }
  int order() const { return size_ + 1; }
  int max_length() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }
  std::vector<int> support() const;
  bool empty() const { return counts_.empty(); }

  // max length <= floor(v/2)
  bool cyclic_admissible() const { return max_length() <= order() / 2; }

  // Present only when the support is a subset of {1,2,3,5}.
  std::optional<Exponents> exponents() const;

  // Multiset union.
  EdgeLengthList operator+(const EdgeLengthList& other) const;

  std::string to_string() const;

  friend bool operator==(const EdgeLengthList&, const EdgeLengthList&) = default;

 private:
  std::map<int, int> counts_;
  int size_ = 0;
};

}  // namespace bhr
