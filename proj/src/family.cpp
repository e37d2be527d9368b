#include "bhr/family.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bhr/error.hpp"

namespace bhr {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep`, recording each piece's offset in the original text.
std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      out.emplace_back(s.substr(start), start);
      return out;
    }
    out.emplace_back(s.substr(start, at - start), start);
    start = at + 1;
  }
}

int parse_int(std::string_view s, std::size_t where) {
  s = trim(s);
  bool negative = !s.empty() && s.front() == '-';
  if (negative) s.remove_prefix(1);
  if (s.empty()) throw ParseError("expected an integer", where);
  long long value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected an integer", where);
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000) throw ParseError("integer too large", where);
  }
  return static_cast<int>(negative ? -value : value);
}

}  // namespace

std::string AffineExpr::to_string(char symbol) const {
  if (coefficient == 0) return std::to_string(constant);
  std::string out;
  if (coefficient == -1)
    out = "-";
  else if (coefficient != 1)
    out = std::to_string(coefficient);
  out += symbol ? symbol : '?';
  if (constant > 0) out += '+' + std::to_string(constant);
  if (constant < 0) out += std::to_string(constant);
  return out;
}

AffineExpr AffineExpr::parse(std::string_view text, char* symbol) {
  std::string_view s = trim(text);
  std::size_t letter = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (std::islower(static_cast<unsigned char>(s[i]))) {
      letter = i;
      break;
    }
  if (letter == std::string_view::npos) return AffineExpr{0, parse_int(s, 0)};

  AffineExpr e;
  std::string_view head = s.substr(0, letter);
  if (head.empty())
    e.coefficient = 1;
  else if (head == "-")
    e.coefficient = -1;
  else
    e.coefficient = parse_int(head, 0);
  if (e.coefficient == 0) throw ParseError("zero coefficient in affine expression", 0);
  std::string_view tail = s.substr(letter + 1);
  if (!tail.empty()) {
    if (tail.front() != '+' && tail.front() != '-') throw ParseError("expected '+' or '-'", letter + 1);
    bool negative = tail.front() == '-';
    int value = parse_int(tail.substr(1), letter + 2);
    if (value < 0) throw ParseError("malformed constant term", letter + 2);
    e.constant = negative ? -value : value;
  }
  if (symbol) *symbol = s[letter];
  return e;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::perfect_linear: return "perfect-linear";
    case FamilyKind::linear: return "linear";
    case FamilyKind::cyclic: return "cyclic";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view text) {
  text = trim(text);
  if (text == "perfect-linear") return FamilyKind::perfect_linear;
  if (text == "linear") return FamilyKind::linear;
  if (text == "cyclic") return FamilyKind::cyclic;
  throw ParseError("unknown family kind '" + std::string(text) + "'", 0);
}

Mode realization_mode(FamilyKind kind) { return kind == FamilyKind::cyclic ? Mode::cyclic : Mode::linear; }

bool FamilyTemplate::accepts(int param) const {
  return is_constant() ? param == 0 : param >= min_param;
}

Exponents FamilyTemplate::exponents_at(int param) const {
  return Exponents{exponents[0].eval(param), exponents[1].eval(param), exponents[2].eval(param),
                   exponents[3].eval(param)};
}

std::string FamilyTemplate::to_string() const {
  std::string out = id + " | " + std::string(bhr::to_string(kind)) + " | ";
  out += is_constant() ? "-" : std::string(1, symbol) + ">=" + std::to_string(min_param);
  out += " | ";
  for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + exponents[i].to_string(symbol);
  out += " | ";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ", ";
    const Run& r = runs[i];
    out += r.start.to_string(symbol);
    if (r.step != 0) out += ".." + r.end.to_string(symbol) + "/" + std::to_string(r.step);
  }
  return out + " | " + origin;
}

std::vector<int> expand(const FamilyTemplate& family, int param) {
  if (!family.accepts(param))
    throw OutOfRange(family.id + ": parameter " + std::to_string(param) + " outside its range");
  std::vector<int> out;
  for (const Run& r : family.runs) {
    int s = r.start.eval(param);
    if (r.step == 0) {
      out.push_back(s);
      continue;
    }
    int e = r.end.eval(param);
    if ((e - s) % r.step != 0 || (e - s) / r.step < 0)
      throw TemplateDefect(family.id + " at " + std::to_string(param) + ": run " + std::to_string(s) + ".." +
                           std::to_string(e) + "/" + std::to_string(r.step) + " does not close");
    for (int x = s;; x += r.step) {
      out.push_back(x);
      if (x == e) break;
    }
  }
  return out;
}

PathRealization instantiate(const FamilyTemplate& family, int param) {
  auto vertices = expand(family, param);
  const std::string where = family.id + " at " + std::to_string(param) + ": ";
  EdgeLengthList list;
  try {
    list = family.list_at(param);
  } catch (const InvalidList& e) {
    throw TemplateDefect(where + e.what());
  }
  if (static_cast<int>(vertices.size()) != list.order())
    throw TemplateDefect(where + "expands to " + std::to_string(vertices.size()) + " vertices, expected " +
                         std::to_string(list.order()));
  auto report = validate(vertices, list, realization_mode(family.kind));
  if (!report.passed()) throw TemplateDefect(where + report.describe());
  if (family.kind == FamilyKind::perfect_linear && !report.perfect.value_or(false))
    throw TemplateDefect(where + "claimed perfect but ends at " + std::to_string(vertices.back()));
  return PathRealization(std::move(vertices));
}

PathRealization staircase(int m, int k) {
  if (m < 3 || m % 2 == 0) throw InvalidLength("staircase needs an odd m >= 3, got " + std::to_string(m));
  if (k < 1) throw InvalidLength("staircase needs k >= 1, got " + std::to_string(k));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m) * (k + 1));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i <= k; ++i) out.push_back(j + m * (j % 2 == 0 ? i : k - i));
  return PathRealization(std::move(out));
}

Catalog Catalog::parse(std::string_view text) {
  Catalog catalog;
  catalog.trailing_newline_ = !text.empty() && text.back() == '\n';
  if (catalog.trailing_newline_) text.remove_suffix(1);
  if (text.empty() && !catalog.trailing_newline_) return catalog;
  for (auto [line, offset] : split(text, '\n')) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      catalog.lines_.push_back(Line{std::nullopt, std::string(line)});
      continue;
    }
    auto fields = split(line, '|');
    if (fields.size() != 6) throw ParseError("expected 6 '|'-separated fields", offset);
    auto at = [&](std::size_t i) { return offset + fields[i].second; };
    FamilyTemplate t;
    t.id = std::string(trim(fields[0].first));
    if (t.id.empty()) throw ParseError("empty template id", at(0));
    try {
      t.kind = parse_family_kind(fields[1].first);
    } catch (const ParseError&) {
      throw ParseError("unknown family kind", at(1));
    }
    std::string_view range = trim(fields[2].first);
    if (range != "-") {
      if (range.size() < 4 || !std::islower(static_cast<unsigned char>(range[0])) || range.substr(1, 2) != ">=")
        throw ParseError("expected a range like k>=0 or -", at(2));
      t.symbol = range[0];
      t.min_param = parse_int(range.substr(3), at(2));
    }
    auto read_expr = [&](std::string_view s, std::size_t where) {
      char sym = '\0';
      AffineExpr e;
      try {
        e = AffineExpr::parse(s, &sym);
      } catch (const ParseError& err) {
        throw ParseError("malformed expression", where + err.position());
      }
      if (sym != '\0' && sym != t.symbol) throw ParseError("expression uses an undeclared parameter", where);
      return e;
    };
    auto exps = split(fields[3].first, ',');
    if (exps.size() != 4) throw ParseError("expected four exponents", at(3));
    for (std::size_t i = 0; i < 4; ++i) t.exponents[i] = read_expr(exps[i].first, at(3) + exps[i].second);
    for (auto [piece, rel] : split(fields[4].first, ',')) {
      std::size_t where = at(4) + rel;
      Run r;
      std::size_t dots = piece.find("..");
      if (dots == std::string_view::npos) {
        r.start = r.end = read_expr(piece, where);
      } else {
        std::size_t slash = piece.find('/', dots);
        if (slash == std::string_view::npos) throw ParseError("run needs a /step", where);
        r.start = read_expr(piece.substr(0, dots), where);
        r.end = read_expr(piece.substr(dots + 2, slash - dots - 2), where + dots + 2);
        r.step = parse_int(piece.substr(slash + 1), where + slash + 1);
        if (r.step == 0) throw ParseError("run step must be non-zero", where + slash + 1);
      }
      t.runs.push_back(r);
    }
    t.origin = std::string(trim(fields[5].first));
    if (catalog.find(t.id)) throw ParseError("duplicate template id " + t.id, at(0));
    catalog.lines_.push_back(Line{catalog.templates_.size(), std::string(line)});
    catalog.templates_.push_back(std::move(t));
  }
  return catalog;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = parse(detail::kBuiltinCatalog);
  return catalog;
}

std::string Catalog::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (i) out += '\n';
    out += lines_[i].entry ? templates_[*lines_[i].entry].to_string() : lines_[i].text;
  }
  if (trailing_newline_) out += '\n';
  return out;
}

const FamilyTemplate* Catalog::find(std::string_view id) const {
  for (const auto& t : templates_)
    if (t.id == id) return &t;
  return nullptr;
}

namespace {

// Template parameter as a function of the pattern parameter: p = scale*k + offset.
struct Binding {
  int scale = 0;
  int offset = 0;
  friend bool operator==(const Binding&, const Binding&) = default;
};

// nullopt: no match. Inner nullopt: the slot matches for every parameter.
std::optional<std::optional<Binding>> unify_slot(const AffineExpr& pattern, const AffineExpr& slot) {
  if (slot.is_constant()) {
    if (pattern.is_constant() && pattern.constant == slot.constant) return std::optional<Binding>{};
    return std::nullopt;
  }
  int diff = pattern.constant - slot.constant;
  if (diff % slot.coefficient != 0 || pattern.coefficient % slot.coefficient != 0) return std::nullopt;
  int scale = pattern.coefficient / slot.coefficient;
  if (scale < 0) return std::nullopt;
  return std::optional<Binding>(Binding{scale, diff / slot.coefficient});
}

std::optional<std::optional<Binding>> unify(const std::array<AffineExpr, 4>& pattern, const FamilyTemplate& t) {
  std::optional<Binding> bound;
  for (std::size_t i = 0; i < 4; ++i) {
    auto slot = unify_slot(pattern[i], t.exponents[i]);
    if (!slot) return std::nullopt;
    if (!*slot) continue;
    if (bound && !(*bound == **slot)) return std::nullopt;
    bound = *slot;
  }
  if (bound && !t.accepts(bound->offset)) return std::nullopt;
  return bound;
}

bool by_id(const FamilyTemplate* x, const FamilyTemplate* y) { return x->id < y->id; }

}  // namespace

std::vector<const FamilyTemplate*> Catalog::lookup(const std::array<AffineExpr, 4>& pattern,
                                                   FamilyKind kind) const {
  std::vector<const FamilyTemplate*> out;
  for (const auto& t : templates_)
    if (t.kind == kind && unify(pattern, t)) out.push_back(&t);
  std::sort(out.begin(), out.end(), by_id);
  return out;
}

std::vector<FamilyInstance> Catalog::instances(const Exponents& e, FamilyKind kind) const {
  std::array<AffineExpr, 4> pattern{AffineExpr{0, e.ones}, AffineExpr{0, e.twos}, AffineExpr{0, e.threes},
                                    AffineExpr{0, e.fives}};
  std::vector<FamilyInstance> out;
  for (const auto& t : templates_) {
    if (t.kind != kind) continue;
    auto b = unify(pattern, t);
    if (!b) continue;
    int param = *b ? (*b)->offset : 0;
    if (t.accepts(param)) out.push_back(FamilyInstance{&t, param});
  }
  std::sort(out.begin(), out.end(),
            [](const FamilyInstance& x, const FamilyInstance& y) { return x.family->id < y.family->id; });
  return out;
}

std::vector<TemplateFailure> Catalog::soundness_sweep(int max_param) const {
  std::vector<TemplateFailure> out;
  for (const auto& t : templates_) {
    int last = t.is_constant() ? 0 : max_param;
    for (int p = t.is_constant() ? 0 : t.min_param; p <= last; ++p) {
      try {
        instantiate(t, p);
      } catch (const Error& e) {
        out.push_back(TemplateFailure{t.id, p, e.what()});
      }
    }
  }
  return out;
}

}  // namespace bhr
