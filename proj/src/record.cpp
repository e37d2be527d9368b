#include "bhr/record.hpp"

#include "bhr/error.hpp"

namespace bhr {

using nlohmann::ordered_json;

std::string Record::to_line() const {
  ordered_json j;
  j["schema"] = kRecordSchema;
  j["command"] = command;
  j["exit"] = exit_code;
  j["data"] = data;
  return j.dump();
}

Record Record::parse(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& err) {
    throw ParseError("malformed record: " + std::string(err.what()), err.byte);
  }
  if (!j.is_object()) throw ParseError("record is not an object", 0);
  if (!j.contains("schema") || j["schema"] != kRecordSchema) throw ParseError("record schema is not bhr-record/1", 0);
  if (!j.contains("command") || !j["command"].is_string()) throw ParseError("record lacks a command", 0);
  if (!j.contains("exit") || !j["exit"].is_number_integer()) throw ParseError("record lacks an exit code", 0);
  if (!j.contains("data") || !j["data"].is_object()) throw ParseError("record lacks a data object", 0);
  Record r;
  r.command = j["command"].get<std::string>();
  r.exit_code = j["exit"].get<int>();
  r.data = j["data"];
  return r;
}

ordered_json to_json(const ConditionReport& report) {
  ordered_json j;
  j["holds"] = report.holds;
  if (report.divisor) j["divisor"] = {{"d", report.divisor->divisor}, {"multiples", report.divisor->multiples}};
  if (report.sublist)
    j["sublist"] = {{"lengths", report.sublist->lengths}, {"size", report.sublist->size}, {"gcd", report.sublist->gcd}};
  j["describe"] = report.describe();
  return j;
}

ordered_json to_json(const Verdict& verdict) {
  ordered_json j;
  j["status"] = to_string(verdict.status);
  j["mode"] = to_string(verdict.mode);
  if (verdict.witness) {
    j["witness"] = verdict.witness->to_string();
    if (verdict.mode == Mode::linear) j["perfect"] = is_perfect(*verdict.witness);
  }
  if (verdict.trace) j["trace"] = trace_steps(*verdict.trace);
  if (verdict.reason) j["reason"] = *verdict.reason;
  if (verdict.budget) j["budget"] = *verdict.budget;
  j["basis"] = verdict.basis;
  if (!verdict.notes.empty()) j["notes"] = verdict.notes;
  return j;
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json j;
  j["mode"] = to_string(report.mode);
  j["passed"] = report.passed();
  j["permutation"] = report.is_permutation;
  j["starts_at_zero"] = report.starts_at_zero;
  j["lengths_match"] = report.lengths_match;
  if (report.perfect) j["perfect"] = *report.perfect;
  if (report.first_mismatch)
    j["mismatch"] = {{"length", report.first_mismatch->length},
                     {"expected", report.first_mismatch->expected},
                     {"actual", report.first_mismatch->actual}};
  j["describe"] = report.describe();
  return j;
}

ordered_json to_json(const SweepRecord& record) {
  ordered_json j;
  j["list"] = record.list.to_string();
  j["condition_holds"] = record.condition_holds;
  if (record.witness) j["witness"] = record.witness->to_string();
  j["exhausted"] = record.exhausted;
  j["nodes"] = record.nodes;
  j["violation"] = record.violation();
  return j;
}

ordered_json to_json(const SweepReport& report) {
  ordered_json j;
  j["v"] = report.v;
  j["lists"] = report.lists;
  j["condition_holds"] = report.condition_holds;
  j["realizable"] = report.realizable;
  j["agreements"] = report.agreements;
  j["unresolved"] = report.unresolved;
  j["violations"] = report.violations;
  j["resumed"] = report.resumed;
  return j;
}

}  // namespace bhr
