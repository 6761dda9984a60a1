#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lcklab {

inline constexpr const char* kReportSchema = "lck-lab/report/1";

/// Command output as a list of records. The machine form is JSON lines:
/// a header line {"schema", "command"}, one line per record, and a closing
/// {"kind":"exit","code":N}. Human text is rendered from the same records.
///
/// Record kinds: "item" {name, pass, detail}, "value" {name, value},
/// "message" {text}.
class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }
  const std::vector<nlohmann::json>& records() const noexcept { return records_; }
  int exit_code() const noexcept { return exit_code_; }
  void set_exit_code(int code) { exit_code_ = code; }

  void item(const std::string& name, bool pass, const std::string& detail = "");
  void value(const std::string& name, const std::string& value);
  void message(const std::string& text);

  /// False as soon as any item failed.
  bool all_items_pass() const;
  /// First record with this kind and name, or nullptr.
  const nlohmann::json* find(const std::string& kind, const std::string& name) const;

  std::string emit_machine() const;
  /// Throws Error(ParseError).
  static Report parse_machine(std::string_view text);
  std::string render_human() const;

  bool operator==(const Report&) const = default;

 private:
  std::string command_;
  std::vector<nlohmann::json> records_;
  int exit_code_ = 0;
};

}  // namespace lcklab
