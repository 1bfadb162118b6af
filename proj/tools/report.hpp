#pragma once

#include <json.hpp>

#include <ostream>
#include <string>

namespace rca::cli {

inline constexpr const char* kSchema = "rca.record/1";

// Text mode prints `text`; JSON mode prints one self-contained record per line.
class Reporter {
 public:
  Reporter(std::ostream& out, bool json, std::string command) : out_(out), json_(json), command_(std::move(command)) {}

  void check(const std::string& name, bool ok, const std::string& text, nlohmann::json fields = nlohmann::json::object()) {
    if (!ok) ++failures_;
    if (json_) {
      nlohmann::json r = {{"schema", kSchema}, {"command", command_}, {"check", name}, {"ok", ok}};
      for (auto& [k, v] : fields.items()) r[k] = v;
      out_ << r.dump() << '\n';
    } else {
      out_ << (ok ? "ok    " : "FAIL  ") << name << ": " << text << '\n';
    }
  }

  // Informational output; a record with no verdict in JSON mode.
  void info(const std::string& name, const std::string& text, nlohmann::json fields = nlohmann::json::object()) {
    if (json_) {
      nlohmann::json r = {{"schema", kSchema}, {"command", command_}, {"info", name}};
      for (auto& [k, v] : fields.items()) r[k] = v;
      out_ << r.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  bool json() const { return json_; }
  std::size_t failures() const { return failures_; }

 private:
  std::ostream& out_;
  bool json_;
  std::string command_;
  std::size_t failures_ = 0;
};

}  // namespace rca::cli
