#include "gti/report.hpp"

#include <algorithm>
#include <sstream>

namespace gti {

Record& Record::add(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
  return *this;
}

Record& Record::add(const std::string& key, uint64_t value) { return add(key, std::to_string(value)); }
Record& Record::add(const std::string& key, int64_t value) { return add(key, std::to_string(value)); }
Record& Record::add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

std::string Record::line() const {
  std::string out;
  for (const auto& [k, v] : fields_) {
    if (!out.empty()) out += " ";
    out += k;
    out += "=";
    out += v;
  }
  return out;
}

std::string format_id_list(const std::vector<SimpleGroupId>& ids) {
  std::vector<SimpleGroupId> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const SimpleGroupId& id : sorted) {
    if (!out.empty()) out += ",";
    out += id.display();
  }
  return out.empty() ? "-" : out;
}

std::string format_identity_list_compact(const std::vector<Identity>& ids) {
  std::vector<Identity> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const Identity& id : sorted) {
    if (!out.empty()) out += ";";
    out += id.compact();
  }
  return out.empty() ? "-" : out;
}

std::string format_u64_list(const std::vector<uint64_t>& xs, char sep) {
  std::string out;
  for (uint64_t x : xs) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out.empty() ? "-" : out;
}

}  // namespace gti
