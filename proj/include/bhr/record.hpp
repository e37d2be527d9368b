#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "bhr/conditions.hpp"
#include "bhr/search.hpp"
#include "bhr/solver.hpp"

namespace bhr {

inline constexpr std::string_view kRecordSchema = "bhr-record/1";

// One line of machine-readable CLI output:
//   {"schema":"bhr-record/1","command":...,"exit":N,"data":{...}}
struct Record {
  std::string command;
  int exit_code = 0;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  std::string to_line() const;
  // Throws ParseError on malformed JSON, a foreign schema or missing fields.
  static Record parse(std::string_view line);

  friend bool operator==(const Record&, const Record&) = default;
};

nlohmann::ordered_json to_json(const ConditionReport& report);
nlohmann::ordered_json to_json(const Verdict& verdict);
nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const SweepRecord& record);
nlohmann::ordered_json to_json(const SweepReport& report);

}  // namespace bhr
