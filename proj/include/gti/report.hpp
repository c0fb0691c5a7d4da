#ifndef GTI_REPORT_HPP
#define GTI_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gti/simple_id.hpp"

namespace gti {

// One logical result per line, space-separated key=value fields.
class Record {
public:
  Record& add(const std::string& key, const std::string& value);
  Record& add(const std::string& key, uint64_t value);
  Record& add(const std::string& key, int64_t value);
  Record& add(const std::string& key, bool value);
  std::string line() const;

private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// "Z/2,Z/3" style list of ids (display form, sorted)
std::string format_id_list(const std::vector<SimpleGroupId>& ids);
// compact form joined with ';' ("A1q4;A1q5;Alt5")
std::string format_identity_list_compact(const std::vector<Identity>& ids);
std::string format_u64_list(const std::vector<uint64_t>& xs, char sep = ',');

}  // namespace gti

#endif
