#ifndef GTI_CATALOG_HPP
#define GTI_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gti/group.hpp"

namespace gti {

// Built-in named groups: Z<n> and products (Z2xZ4), S<n>/A<n> for n <= 10,
// D<n> (dihedral of order 2n), Q8, GL/SL/PGL/PSL of dim 2-3 over
// q in {3,5,7,9,11,13}, Sp4q3, and diagonal tori T<d>q<q>.  Every build is
// checked against the closed-form order.
bool catalog_has(const std::string& name);
FiniteGroup catalog_build(const std::string& name, const Limits& lim = {});
uint64_t catalog_expected_order(const std::string& name);

// representative list used by the test suites
std::vector<std::string> catalog_names();

// cyclic group of order n on the disjoint prime-power cycles of n
FiniteGroup cyclic_group(uint64_t n, const Limits& lim = {});

// resolves "catalog:NAME" or a group-file path
FiniteGroup resolve_group_ref(const std::string& ref, const Limits& lim = {});

}  // namespace gti

#endif
