#include "unital/report.hpp"

#include <sstream>

namespace unital {

bool VerificationReport::pass() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::add_check(std::string name, bool ok, nlohmann::json detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void VerificationReport::add_witness(nlohmann::json w) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["subject"] = subject;
  if (!profile.empty()) {
    nlohmann::json prof = nlohmann::json::object();
    for (const auto& [size, count] : profile) prof[std::to_string(size)] = count;
    j["profile"] = prof;
  }
  j["verdict"] = pass() ? "pass" : "fail";
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.is_null()) cj["detail"] = c.detail;
    cs.push_back(std::move(cj));
  }
  j["checks"] = cs;
  j["witnesses"] = witnesses;
  if (!metadata.empty()) j["metadata"] = metadata;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "line_kind,intersection_size,count\n";
  for (const auto& [kind, hist] : profile_by_kind)
    for (const auto& [size, count] : hist) os << to_string(kind) << ',' << size << ',' << count << '\n';
  return os.str();
}

VerificationReport combine(std::string subject, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.subject = std::move(subject);
  for (const auto& part : parts) {
    for (const auto& c : part.checks) out.add_check(part.subject + "/" + c.name, c.pass, c.detail);
    for (const auto& w : part.witnesses) out.add_witness(w);
    out.seconds += part.seconds;
  }
  if (parts.size() == 1) {
    out.profile = parts.front().profile;
    out.profile_by_kind = parts.front().profile_by_kind;
    out.metadata = parts.front().metadata;
  }
  return out;
}

}  // namespace unital
