#include "hchain/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hchain {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Collapse runs of inner whitespace so `mode  4` and `mode 4` are the same key.
std::string normalize_key(const std::string& raw) {
  std::string out;
  bool space = false;
  for (char c : trim(raw)) {
    if (c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("config key '" + key + "': expected a real number, got '" + text + "'");
}

long long to_integer(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("config key '" + key + "': expected an integer, got '" + text + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!item.empty()) items.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) items.push_back(item);
  return items;
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = normalize_key(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    cfg.set(key, trim(line.substr(eq + 1)));
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

Config Config::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void Config::set(const std::string& key, const std::string& value) {
  const std::string k = normalize_key(key);
  for (auto& [ek, ev] : entries_) {
    if (ek == k) {
      ev = value;
      return;
    }
  }
  entries_.emplace_back(k, value);
}

const std::string* Config::find(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return &v;
  return nullptr;
}

bool Config::has(const std::string& key) const { return find(key) != nullptr; }

const std::string& Config::require(const std::string& key) const {
  if (const auto* v = find(key)) return *v;
  throw ConfigError("missing required config key '" + key + "'");
}

double Config::get_double(const std::string& key) const { return to_double(key, require(key)); }

double Config::get_double(const std::string& key, double fallback) const {
  const auto* v = find(key);
  return v ? to_double(key, *v) : fallback;
}

int Config::get_int(const std::string& key) const { return static_cast<int>(to_integer(key, require(key))); }

int Config::get_int(const std::string& key, int fallback) const {
  const auto* v = find(key);
  return v ? static_cast<int>(to_integer(key, *v)) : fallback;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::uint64_t out = 0;
  const auto* end = v->data() + v->size();
  const auto [ptr, ec] = std::from_chars(v->data(), end, out);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError("config key '" + key + "': expected an unsigned 64-bit integer, got '" + *v + "'");
  return out;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const auto* v = find(key);
  return v ? *v : fallback;
}

std::vector<int> Config::get_int_list(const std::string& key, const std::vector<int>& fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<int> out;
  for (const auto& item : split_list(*v)) out.push_back(static_cast<int>(to_integer(key, item)));
  return out;
}

std::vector<double> Config::get_double_list(const std::string& key, const std::vector<double>& fallback) const {
  const auto* v = find(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : split_list(*v)) out.push_back(to_double(key, item));
  return out;
}

std::map<int, double> Config::indexed(const std::string& prefix) const {
  std::map<int, double> out;
  const std::string lead = prefix + " ";
  for (const auto& [k, v] : entries_) {
    if (k.rfind(lead, 0) != 0) continue;
    const std::string idx = k.substr(lead.size());
    out[static_cast<int>(to_integer(k, idx))] = to_double(k, v);
  }
  return out;
}

}  // namespace hchain
