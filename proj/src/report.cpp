#include "lcklab/report.hpp"

#include <sstream>

#include "lcklab/error.hpp"

namespace lcklab {

using nlohmann::json;

void Report::item(const std::string& name, bool pass, const std::string& detail) {
  records_.push_back({{"kind", "item"}, {"name", name}, {"pass", pass}, {"detail", detail}});
}

void Report::value(const std::string& name, const std::string& value) {
  records_.push_back({{"kind", "value"}, {"name", name}, {"value", value}});
}

void Report::message(const std::string& text) { records_.push_back({{"kind", "message"}, {"text", text}}); }

bool Report::all_items_pass() const {
  for (const auto& r : records_)
    if (r["kind"] == "item" && !r["pass"].get<bool>()) return false;
  return true;
}

const json* Report::find(const std::string& kind, const std::string& name) const {
  for (const auto& r : records_)
    if (r["kind"] == kind && r.contains("name") && r["name"] == name) return &r;
  return nullptr;
}

std::string Report::emit_machine() const {
  std::ostringstream os;
  os << json{{"schema", kReportSchema}, {"command", command_}}.dump() << "\n";
  for (const auto& r : records_) os << r.dump() << "\n";
  os << json{{"kind", "exit"}, {"code", exit_code_}}.dump() << "\n";
  return os.str();
}

Report Report::parse_machine(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<json> lines;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      lines.push_back(json::parse(line));
    } catch (const json::parse_error&) {
      throw Error(ErrorCode::ParseError, "report line " + std::to_string(lineno) + ": invalid JSON");
    }
  }
  if (lines.size() < 2 || !lines.front().contains("schema") || lines.front()["schema"] != kReportSchema)
    throw Error(ErrorCode::ParseError, "report header missing or wrong schema");
  const json& tail = lines.back();
  if (tail.value("kind", "") != "exit" || !tail.contains("code"))
    throw Error(ErrorCode::ParseError, "report has no exit record");
  Report r(lines.front().value("command", ""));
  r.exit_code_ = tail["code"].get<int>();
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const std::string kind = lines[i].value("kind", "");
    if (kind != "item" && kind != "value" && kind != "message")
      throw Error(ErrorCode::ParseError, "report line " + std::to_string(i + 1) + ": unknown record kind");
    r.records_.push_back(lines[i]);
  }
  return r;
}

std::string Report::render_human() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    const std::string kind = r["kind"];
    if (kind == "item") {
      os << (r["pass"].get<bool>() ? "  pass  " : "  FAIL  ") << r["name"].get<std::string>();
      const std::string detail = r["detail"];
      if (!detail.empty()) os << "    [" << detail << "]";
      os << "\n";
    } else if (kind == "value") {
      os << r["name"].get<std::string>() << ": " << r["value"].get<std::string>() << "\n";
    } else {
      os << r["text"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

}  // namespace lcklab
