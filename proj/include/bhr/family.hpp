#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhr/edge_list.hpp"
#include "bhr/path.hpp"

namespace bhr {

// coefficient * param + constant
struct AffineExpr {
  int coefficient = 0;
  int constant = 0;

  int eval(int param) const { return coefficient * param + constant; }
  bool is_constant() const { return coefficient == 0; }
  // Forms like `5k+3`, `k`, `2t-1`, `7`. A non-constant expression needs a
  // symbol; `symbol` is '\0' for constant-only contexts.
  std::string to_string(char symbol) const;
  // Reads the whole text. Any single lowercase letter is accepted as the
  // symbol and returned through `symbol` (left untouched for constants).
  static AffineExpr parse(std::string_view text, char* symbol = nullptr);

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

enum class FamilyKind { perfect_linear, linear, cyclic };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);
// The length convention a realization of this kind is checked under.
Mode realization_mode(FamilyKind kind);

// Expands to start, start+step, ..., end. step == 0 marks a single vertex.
struct Run {
  AffineExpr start;
  AffineExpr end;
  int step = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

struct FamilyTemplate {
  std::string id;
  FamilyKind kind = FamilyKind::linear;
  char symbol = '\0';   // '\0' for constant templates
  int min_param = 0;    // constant templates only accept param 0
  std::array<AffineExpr, 4> exponents;  // multiplicities of 1, 2, 3, 5
  std::vector<Run> runs;
  std::string origin;

  bool is_constant() const { return symbol == '\0'; }
  bool accepts(int param) const;
  Exponents exponents_at(int param) const;
  EdgeLengthList list_at(int param) const { return EdgeLengthList::from_exponents(exponents_at(param)); }
  std::string to_string() const;
};

// Raw run expansion. Throws TemplateDefect when a run does not reach its end
// by whole steps, OutOfRange when param is outside the template's range.
std::vector<int> expand(const FamilyTemplate& family, int param);

// Expansion checked to be a realization of the claimed list and kind.
// Throws TemplateDefect otherwise.
PathRealization instantiate(const FamilyTemplate& family, int param);

// Column walk on v = m(k+1) vertices realizing {1^(m-1), m^(km)}; perfect.
// Columns j = 0..m-1 hold j, j+m, ..., j+km and are read upward for even j,
// downward for odd j. Rejects even m, m < 3 and k < 1.
PathRealization staircase(int m, int k);

// A catalog template together with the parameter realizing a concrete list.
struct FamilyInstance {
  const FamilyTemplate* family = nullptr;
  int param = 0;
};

struct TemplateFailure {
  std::string id;
  int param = 0;
  std::string message;
};

class Catalog {
 public:
  Catalog() = default;

  // One template per line:
  //   id | kind | range | a,b,c,d | run, run, ... | origin
  // where range is `k>=0` or `-`, and a run is `start..end/step` or a single
  // expression. Blank and `#` lines are kept so printing is byte-stable.
  static Catalog parse(std::string_view text);
  static Catalog load(const std::string& path);
  static const Catalog& builtin();

  std::string to_string() const;

  const std::vector<FamilyTemplate>& templates() const { return templates_; }
  const FamilyTemplate* find(std::string_view id) const;

  // Templates whose exponent expressions cover every instance of the pattern
  // (pattern symbol ranges over k >= 0). Sorted by id.
  std::vector<const FamilyTemplate*> lookup(const std::array<AffineExpr, 4>& pattern,
                                            FamilyKind kind) const;

  // Templates of the given kind realizing exactly these exponents, with the
  // matching parameter. Sorted by id.
  std::vector<FamilyInstance> instances(const Exponents& exponents, FamilyKind kind) const;

  // Instantiates every template for params 0..max_param (constant templates
  // at 0 only) and reports each failure.
  std::vector<TemplateFailure> soundness_sweep(int max_param) const;

 private:
  struct Line {
    std::optional<std::size_t> entry;
    std::string text;
  };
  std::vector<Line> lines_;
  std::vector<FamilyTemplate> templates_;
  bool trailing_newline_ = false;
};

}  // namespace bhr
