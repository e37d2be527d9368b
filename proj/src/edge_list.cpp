#include "bhr/edge_list.hpp"

#include <cctype>
#include <limits>

#include "bhr/error.hpp"

namespace bhr {

std::string Exponents::to_string() const {
  return "(" + std::to_string(ones) + "," + std::to_string(twos) + "," + std::to_string(threes) +
         "," + std::to_string(fives) + ")";
}

EdgeLengthList::EdgeLengthList(std::map<int, int> counts) {
  for (auto it = counts.begin(); it != counts.end();) {
    if (it->first < 1) throw InvalidList("edge length must be positive, got " + std::to_string(it->first));
    if (it->second < 0) throw InvalidList("negative multiplicity for length " + std::to_string(it->first));
    if (it->second == 0) {
      it = counts.erase(it);
      continue;
    }
    size_ += it->second;
    ++it;
  }
  counts_ = std::move(counts);
}

EdgeLengthList EdgeLengthList::from_exponents(const Exponents& e) {
  return EdgeLengthList({{1, e.ones}, {2, e.twos}, {3, e.threes}, {5, e.fives}});
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int number() {
    skip_space();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a non-negative integer", start);
    return static_cast<int>(value);
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EdgeLengthList EdgeLengthList::parse(std::string_view text) {
  Scanner in(text);
  std::map<int, int> counts;
  if (in.done()) return EdgeLengthList();
  bool braced = in.accept('{');
  do {
    std::size_t at = in.position();
    int length = in.number();
    if (length < 1) throw ParseError("edge length must be positive", at);
    int mult = 1;
    if (in.accept('^')) mult = in.number();
    counts[length] += mult;
  } while (in.accept(','));
  if (braced && !in.accept('}')) throw ParseError("expected '}'", in.position());
  if (!in.done()) throw ParseError("unexpected character", in.position());
  return EdgeLengthList(std::move(counts));
}

int EdgeLengthList::multiplicity(int length) const {
  auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<int> EdgeLengthList::support() const {
  std::vector<int> out;
  out.reserve(counts_.size());
  for (const auto& [length, mult] : counts_) out.push_back(length);
  return out;
}

std::optional<Exponents> EdgeLengthList::exponents() const {
  for (const auto& [length, mult] : counts_)
    if (length != 1 && length != 2 && length != 3 && length != 5) return std::nullopt;
  return Exponents{multiplicity(1), multiplicity(2), multiplicity(3), multiplicity(5)};
}

EdgeLengthList EdgeLengthList::operator+(const EdgeLengthList& other) const {
  std::map<int, int> merged = counts_;
  for (const auto& [length, mult] : other.counts_) merged[length] += mult;
  return EdgeLengthList(std::move(merged));
}

std::string EdgeLengthList::to_string() const {
  std::string out;
  for (const auto& [length, mult] : counts_) {
    if (!out.empty()) out += ',';
    out += std::to_string(length);
    if (mult != 1) out += '^' + std::to_string(mult);
  }
  return out;
}

}  // namespace bhr
