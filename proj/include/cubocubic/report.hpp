#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cubocubic {

using Json = nlohmann::ordered_json;

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

/// One verification outcome. Failures are data, not exceptions: `message`
/// carries the error kind and text when a check could not complete.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string message;
  std::vector<std::string> witnesses;
  Json details = Json::object();
  double seconds = 0.0;

  bool passed() const noexcept { return status == CheckStatus::Pass; }
  void fail(std::string why) {
    status = CheckStatus::Fail;
    if (message.empty()) {
      message = std::move(why);
    } else {
      message += "; " + why;
    }
  }
};

struct VerificationReport {
  Json provenance = Json::object();
  std::vector<CheckRecord> checks;

  // Pass iff every non-skipped record passes.
  bool verdict() const noexcept;
  const CheckRecord* find(std::string_view name) const noexcept;

  // Deterministic: timings are only emitted when asked for.
  Json to_json(bool include_timings = false) const;
  std::string to_text(bool include_timings = true) const;
};

}  // namespace cubocubic
