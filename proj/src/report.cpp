#include "hchain/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hchain {

std::string format_real(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Report& Report::add(const std::string& key, double value) {
  entries_.push_back({key, format_real(value), value});
  return *this;
}

Report& Report::note(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, std::numeric_limits<double>::quiet_NaN()});
  return *this;
}

bool Report::has(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return true;
  return false;
}

double Report::value(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return e.number;
  throw std::out_of_range("report " + name_ + " has no value '" + key + "'");
}

std::string Report::to_kv() const {
  std::ostringstream out;
  for (const auto& e : entries_) out << name_ << '.' << e.key << " = " << e.text << '\n';
  out << name_ << ".pass = " << (pass_ ? "true" : "false") << '\n';
  return out.str();
}

std::string Report::csv_header() const {
  std::string line = "check";
  for (const auto& e : entries_) line += "," + e.key;
  return line + ",pass";
}

std::string Report::csv_row() const {
  std::string line = name_;
  for (const auto& e : entries_) line += "," + e.text;
  return line + (pass_ ? ",true" : ",false");
}

}  // namespace hchain
