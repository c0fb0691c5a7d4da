#ifndef GTI_GROUP_IO_HPP
#define GTI_GROUP_IO_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gti/group.hpp"

namespace gti {

// Group file format (UTF-8, line oriented):
//   group <name>
//   kind perm <degree>  |  kind matrix <dim> <q>
//   gen <values...>          one line per generator; perm images are 1-based,
//                            matrix entries row-major in [0, q)
//   end
// Blank lines and '#' comments are ignored.  Errors carry line numbers.

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

NamedGroup parse_group_stream(std::istream& in, const Limits& lim, const std::string& what);
NamedGroup parse_group_file(const std::string& path, const Limits& lim);
NamedGroup parse_group_text(const std::string& text, const Limits& lim);

std::string serialize_group(const std::string& name, const FiniteGroup& G);

// Family file format:
//   family <name>
//   prime <ell> group <path-or-catalog:NAME>
//   tuple <label> <label> ...    one label per factor: gK (1-based) or id
//   end
struct FamilyFile {
  std::string name;
  std::vector<uint64_t> primes;
  std::vector<std::string> group_refs;
  std::vector<FiniteGroup> groups;
  std::vector<std::vector<std::string>> tuples;
};

using GroupResolver = std::function<FiniteGroup(const std::string& ref)>;

FamilyFile parse_family_stream(std::istream& in, const GroupResolver& resolve, const std::string& what);
FamilyFile parse_family_file(const std::string& path, const GroupResolver& resolve);

}  // namespace gti

#endif
