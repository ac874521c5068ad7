#include "cubocubic/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cubocubic {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::verdict() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.status != CheckStatus::Fail;
  });
}

const CheckRecord* VerificationReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Json VerificationReport::to_json(bool include_timings) const {
  Json out = Json::object();
  out["schema"] = 1;
  out["provenance"] = provenance;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json rec = Json::object();
    rec["name"] = c.name;
    rec["status"] = std::string(to_string(c.status));
    if (!c.message.empty()) rec["message"] = c.message;
    rec["witnesses"] = c.witnesses;
    rec["details"] = c.details;
    if (include_timings) rec["seconds"] = c.seconds;
    list.push_back(std::move(rec));
  }
  out["checks"] = std::move(list);
  out["verdict"] = verdict() ? "pass" : "fail";
  return out;
}

std::string VerificationReport::to_text(bool include_timings) const {
  std::ostringstream os;
  os << "tensor: " << provenance.dump() << '\n';
  for (const auto& c : checks) {
    char status[16];
    std::snprintf(status, sizeof status, "[%-7s]", std::string(to_string(c.status)).c_str());
    os << status << ' ' << c.name;
    if (include_timings) {
      char t[32];
      std::snprintf(t, sizeof t, " (%.3fs)", c.seconds);
      os << t;
    }
    os << '\n';
    if (!c.message.empty()) os << "          " << c.message << '\n';
    if (!c.details.empty()) os << "          " << c.details.dump() << '\n';
    const std::size_t shown = std::min<std::size_t>(c.witnesses.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) os << "          witness " << c.witnesses[i] << '\n';
    if (c.witnesses.size() > shown) {
      os << "          ... " << c.witnesses.size() - shown << " more witnesses\n";
    }
  }
  os << "verdict: " << (verdict() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace cubocubic
