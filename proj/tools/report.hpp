#pragma once

// One report per CLI run. The same ordered content renders either as
// "key: value" lines or as a JSON object; arrays become indexed keys in text.

#include <cstdint>
#include <ostream>
#include <string>

#include "json.hpp"

namespace m0n::cli {

class Report {
 public:
  using Json = nlohmann::ordered_json;

  explicit Report(std::string command);

  void param(const std::string& key, Json value) { params_[key] = std::move(value); }
  void result(const std::string& key, Json value) { results_[key] = std::move(value); }
  void append(const std::string& key, Json value);

  // Records a check; returns whether it passed.
  bool check(const std::string& name, bool pass, Json expected, Json actual);
  bool check_equal(const std::string& name, const Json& expected, const Json& actual) {
    return check(name, expected == actual, expected, actual);
  }
  // A check that was not run at this size.
  void skip(const std::string& name, const std::string& reason);

  void timing_ms(double ms) { timing_ms_ = ms; }

  bool passed() const { return failures_ == 0; }
  int failures() const { return failures_; }

  Json to_json() const;
  void write_text(std::ostream& os) const;
  void write_json(std::ostream& os) const;

 private:
  std::string command_;
  Json params_ = Json::object();
  Json results_ = Json::object();
  Json checks_ = Json::array();
  int failures_ = 0;
  double timing_ms_ = -1.0;
};

}  // namespace m0n::cli
