#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hchain {

/// Shortest text that round-trips a double: 17 significant digits, `.` separator.
std::string format_real(double value);

/// Flat ordered record of named measurements with a pass flag.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  Report& add(const std::string& key, double value);
  Report& note(const std::string& key, const std::string& value);
  Report& set_pass(bool pass) {
    pass_ = pass;
    return *this;
  }

  const std::string& name() const { return name_; }
  bool pass() const { return pass_; }
  double value(const std::string& key) const;
  bool has(const std::string& key) const;

  // `name.key = value` lines, plus `name.pass = true|false`.
  std::string to_kv() const;
  std::string csv_header() const;
  std::string csv_row() const;

 private:
  struct Entry {
    std::string key;
    std::string text;
    double number;
  };

  std::string name_;
  bool pass_ = true;
  std::vector<Entry> entries_;
};

}  // namespace hchain
