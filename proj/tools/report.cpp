#include "report.hpp"

#include <iomanip>

namespace m0n::cli {

namespace {

std::string scalar_text(const Report::Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_value(std::ostream& os, const std::string& key, const Report::Json& v) {
  if (v.is_array()) {
    os << key << ".count: " << v.size() << '\n';
    for (std::size_t k = 0; k < v.size(); ++k) write_value(os, key + "[" + std::to_string(k) + "]", v[k]);
  } else if (v.is_object()) {
    for (const auto& [sub, value] : v.items()) write_value(os, key + "." + sub, value);
  } else {
    os << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::append(const std::string& key, Json value) {
  if (!results_.contains(key)) results_[key] = Json::array();
  results_[key].push_back(std::move(value));
}

bool Report::check(const std::string& name, bool pass, Json expected, Json actual) {
  checks_.push_back(Json{{"name", name},
                         {"outcome", pass ? "pass" : "fail"},
                         {"expected", std::move(expected)},
                         {"actual", std::move(actual)}});
  if (!pass) ++failures_;
  return pass;
}

void Report::skip(const std::string& name, const std::string& reason) {
  checks_.push_back(Json{{"name", name}, {"outcome", "skip"}, {"reason", reason}});
}

Report::Json Report::to_json() const {
  Json doc;
  doc["command"] = command_;
  doc["params"] = params_;
  doc["results"] = results_;
  doc["checks"] = checks_;
  doc["status"] = passed() ? "ok" : "fail";
  if (timing_ms_ >= 0) doc["timing_ms"] = timing_ms_;
  return doc;
}

void Report::write_text(std::ostream& os) const {
  os << "command: " << command_ << '\n';
  for (const auto& [key, value] : params_.items()) write_value(os, "param." + key, value);
  for (const auto& [key, value] : results_.items()) write_value(os, "result." + key, value);
  for (const Json& c : checks_) {
    const std::string outcome = c["outcome"].get<std::string>();
    os << "check." << c["name"].get<std::string>() << ": " << outcome;
    if (outcome == "skip") {
      os << " (" << c["reason"].get<std::string>() << ")";
    } else {
      os << " expected=" << scalar_text(c["expected"]) << " actual=" << scalar_text(c["actual"]);
    }
    os << '\n';
  }
  os << "status: " << (passed() ? "ok" : "fail") << '\n';
  if (timing_ms_ >= 0) os << "timing_ms: " << std::fixed << std::setprecision(3) << timing_ms_ << '\n';
}

void Report::write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

}  // namespace m0n::cli
