#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace g2qm::cli {

using nlohmann::json;

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    // complex numbers and exact field elements print inline
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const json& x) { return flat(x) && !x.is_array(); });
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& r) { return r.is_array() && flat(r); });
}

bool is_record_list(const json& v) {
  if (!v.is_array() || v.empty() || !v[0].is_object()) return false;
  for (const auto& r : v) {
    if (!r.is_object() || r.size() != v[0].size()) return false;
    for (const auto& [k, x] : r.items())
      if (!v[0].contains(k) || !(flat(x) || is_matrix(x))) return false;
  }
  return true;
}

void table(std::ostream& os, const json& rows, const std::string& pad) {
  std::vector<std::string> keys;
  for (const auto& [k, x] : rows[0].items()) keys.push_back(k);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      line.push_back(scalar(r[keys[c]]));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << pad;
    for (std::size_t c = 0; c < line.size(); ++c)
      os << line[c] << std::string(width[c] - line[c].size() + (c + 1 < line.size() ? 2 : 0), ' ');
    os << '\n';
  };
  emit(keys);
  for (const auto& line : cells) emit(line);
}

void render(std::ostream& os, const json& v, const std::string& pad) {
  for (const auto& [k, x] : v.items()) {
    if (flat(x)) {
      os << pad << k << ": " << scalar(x) << '\n';
    } else if (is_record_list(x)) {
      os << pad << k << ":\n";
      table(os, x, pad + "  ");
    } else if (is_matrix(x)) {
      os << pad << k << ":\n";
      for (const auto& r : x) os << pad << "  " << scalar(r) << '\n';
    } else if (x.is_array()) {
      os << pad << k << ":\n";
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_object()) {
          os << pad << "  [" << i + 1 << "]\n";
          render(os, x[i], pad + "    ");
        } else {
          os << pad << "  " << scalar(x[i]) << '\n';
        }
      }
    } else {
      os << pad << k << ":\n";
      render(os, x, pad + "  ");
    }
  }
}

}  // namespace

void print_table(std::ostream& os, const json& report) { render(os, report, ""); }

}  // namespace g2qm::cli
