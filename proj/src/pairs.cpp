#include "lr/pairs.hpp"

#include <charconv>

namespace lr {

std::pair<int, int> pair_at(int n, std::size_t index) {
  for (int i = 0; i + 1 < n; ++i) {
    auto row = static_cast<std::size_t>(n - i - 1);
    if (index < row) return {i, i + 1 + static_cast<int>(index)};
    index -= row;
  }
  fail(ErrorCode::Structural, "pair index out of range");
}

std::vector<std::pair<int, int>> pairs_of(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::string pair_key(int i, int j) {
  if (i > j) std::swap(i, j);
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::pair<int, int> parse_pair_key(const std::string& key, int n) {
  auto comma = key.find(',');
  int i = 0, j = 0;
  bool ok = comma != std::string::npos;
  if (ok) {
    auto r1 = std::from_chars(key.data(), key.data() + comma, i);
    auto r2 = std::from_chars(key.data() + comma + 1, key.data() + key.size(), j);
    ok = r1.ec == std::errc() && r1.ptr == key.data() + comma && r2.ec == std::errc() &&
         r2.ptr == key.data() + key.size();
  }
  if (!ok || i < 1 || j < 1 || i > n || j > n || i == j) {
    fail(ErrorCode::Structural, "bad pair key", key);
  }
  if (i > j) std::swap(i, j);
  return {i - 1, j - 1};
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(s, i)) out.push_back(i + 1);
  return out;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace lr
