#include "gti/catalog.hpp"

#include <algorithm>
#include <map>

#include "gti/classical.hpp"
#include "gti/field.hpp"
#include "gti/group_io.hpp"

namespace gti {

namespace {

const uint32_t kCatalogDims[] = {2, 3};
const uint32_t kCatalogFields[] = {3, 5, 7, 9, 11, 13};

bool in_catalog_field(uint32_t q) {
  return std::find(std::begin(kCatalogFields), std::end(kCatalogFields), q) != std::end(kCatalogFields);
}

std::vector<uint64_t> prime_power_parts(uint64_t n) {
  std::vector<uint64_t> parts;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      uint64_t pe = 1;
      while (n % p == 0) {
        pe *= p;
        n /= p;
      }
      parts.push_back(pe);
    }
  }
  if (n > 1) parts.push_back(n);
  return parts;
}

// parses "Z12", "S5", "GL2q7", "T3q5", ... ; returns false when the shape
// does not match
bool parse_tag(const std::string& name, const std::string& prefix, std::vector<uint64_t>& nums) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
  nums.clear();
  size_t i = prefix.size();
  uint64_t cur = 0;
  bool have = false;
  for (; i < name.size(); ++i) {
    char c = name[i];
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + (c - '0');
      have = true;
    } else if (c == 'q' && have) {
      nums.push_back(cur);
      cur = 0;
      have = false;
    } else {
      return false;
    }
  }
  if (!have) return false;
  nums.push_back(cur);
  return true;
}

GroupElement cycle_on(uint32_t degree, uint32_t start, uint32_t len) {
  std::vector<std::vector<uint32_t>> cyc(1);
  for (uint32_t k = 0; k < len; ++k) cyc[0].push_back(start + k);
  return GroupElement::from_cycles(degree, cyc);
}

FiniteGroup symmetric_group(uint32_t n, const Limits& lim) {
  if (n < 1) fail_input("S_n needs n >= 1");
  std::vector<GroupElement> gens;
  if (n >= 2) gens.push_back(GroupElement::from_cycles(n, {{1, 2}}));
  if (n >= 3) gens.push_back(cycle_on(n, 1, n));
  return FiniteGroup::build(Domain::perm(n), std::move(gens), lim);
}

FiniteGroup alternating_group(uint32_t n, const Limits& lim) {
  if (n < 3) return FiniteGroup::build(Domain::perm(std::max(n, 1u)), {}, lim);
  std::vector<GroupElement> gens;
  for (uint32_t k = 3; k <= n; ++k) gens.push_back(GroupElement::from_cycles(n, {{1, 2, k}}));
  return FiniteGroup::build(Domain::perm(n), std::move(gens), lim);
}

FiniteGroup dihedral_group(uint32_t n, const Limits& lim) {
  if (n < 3) fail_input("D_n needs n >= 3");
  std::vector<uint32_t> rot(n), flip(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return FiniteGroup::build(Domain::perm(n),
                            {GroupElement::perm(std::move(rot)), GroupElement::perm(std::move(flip))}, lim);
}

FiniteGroup quaternion_group(const Limits& lim) {
  // regular action of {1,-1,i,-i,j,-j,k,-k}; multiplication table hardcoded
  // via the sign/axis rules
  auto mul = [](uint32_t a, uint32_t b) -> uint32_t {
    // encode: axis 0..3 (1, i, j, k), sign in bit 2 (value 4)
    uint32_t ax_a = a & 3, ax_b = b & 3;
    bool neg = (a & 4) != (b & 4);
    static const uint32_t axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const bool flip[4][4] = {{false, false, false, false},
                                    {false, true, false, true},
                                    {false, true, true, false},
                                    {false, false, true, true}};
    // flip[r][c]: sign of e_r * e_c relative to e_(axis), rows/cols 1,i,j,k
    uint32_t ax = axis[ax_a][ax_b];
    bool sign = neg ^ flip[ax_a][ax_b];
    return ax | (sign ? 4u : 0u);
  };
  auto perm_of = [&](uint32_t g) {
    std::vector<uint32_t> img(8);
    for (uint32_t x = 0; x < 8; ++x) img[x] = mul(g, x);
    return GroupElement::perm(std::move(img));
  };
  return FiniteGroup::build(Domain::perm(8), {perm_of(1), perm_of(2)}, lim);  // i and j
}

struct ParsedName {
  enum Kind { trivial, cyclic_product, sym, alt, dih, quat, gl, sl, pgl, psl, sp4, torus } kind;
  std::vector<uint64_t> cyc;  // cyclic component orders
  uint64_t n = 0;             // S/A/D parameter
  uint32_t dim = 0, q = 0;    // matrix parameters
};

bool parse_name(const std::string& name, ParsedName& out) {
  if (name == "trivial") {
    out.kind = ParsedName::trivial;
    return true;
  }
  if (name == "Q8") {
    out.kind = ParsedName::quat;
    return true;
  }
  std::vector<uint64_t> nums;
  if (name[0] == 'Z') {
    // Z<n> or Z<a>xZ<b>xZ<c>
    out.cyc.clear();
    size_t pos = 0;
    while (pos < name.size()) {
      if (name[pos] != 'Z') return false;
      ++pos;
      uint64_t v = 0;
      bool have = false;
      while (pos < name.size() && isdigit(static_cast<unsigned char>(name[pos]))) {
        v = v * 10 + (name[pos] - '0');
        ++pos;
        have = true;
      }
      if (!have || v == 0) return false;
      out.cyc.push_back(v);
      if (pos < name.size()) {
        if (name[pos] != 'x') return false;
        ++pos;
      }
    }
    out.kind = ParsedName::cyclic_product;
    return true;
  }
  if (parse_tag(name, "GL", nums) && nums.size() == 2) {
    out.kind = ParsedName::gl;
    out.dim = static_cast<uint32_t>(nums[0]);
    out.q = static_cast<uint32_t>(nums[1]);
    return true;
  }
  if (parse_tag(name, "SL", nums) && nums.size() == 2) {
    out.kind = ParsedName::sl;
    out.dim = static_cast<uint32_t>(nums[0]);
    out.q = static_cast<uint32_t>(nums[1]);
    return true;
  }
  if (parse_tag(name, "PGL", nums) && nums.size() == 2) {
    out.kind = ParsedName::pgl;
    out.dim = static_cast<uint32_t>(nums[0]);
    out.q = static_cast<uint32_t>(nums[1]);
    return true;
  }
  if (parse_tag(name, "PSL", nums) && nums.size() == 2) {
    out.kind = ParsedName::psl;
    out.dim = static_cast<uint32_t>(nums[0]);
    out.q = static_cast<uint32_t>(nums[1]);
    return true;
  }
  if (name == "Sp4q3") {
    out.kind = ParsedName::sp4;
    out.dim = 4;
    out.q = 3;
    return true;
  }
  if (parse_tag(name, "T", nums) && nums.size() == 2) {
    out.kind = ParsedName::torus;
    out.dim = static_cast<uint32_t>(nums[0]);
    out.q = static_cast<uint32_t>(nums[1]);
    return true;
  }
  if (parse_tag(name, "S", nums) && nums.size() == 1) {
    out.kind = ParsedName::sym;
    out.n = nums[0];
    return true;
  }
  if (parse_tag(name, "A", nums) && nums.size() == 1) {
    out.kind = ParsedName::alt;
    out.n = nums[0];
    return true;
  }
  if (parse_tag(name, "D", nums) && nums.size() == 1) {
    out.kind = ParsedName::dih;
    out.n = nums[0];
    return true;
  }
  return false;
}

void check_matrix_params(const ParsedName& p) {
  if (p.kind == ParsedName::sp4) return;
  if (p.dim < 2 || p.dim > 3) fail_input("catalog matrix groups have dim 2 or 3");
  if (!in_catalog_field(p.q)) fail_input("catalog matrix groups live over q in {3,5,7,9,11,13}");
}

uint64_t factorial(uint64_t n) {
  uint64_t f = 1;
  for (uint64_t i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

uint64_t gl_order(uint32_t dim, uint64_t q) {
  uint64_t qd = pow_u64(q, dim);
  uint64_t o = 1;
  uint64_t qi = 1;
  for (uint32_t i = 0; i < dim; ++i) {
    o = checked_mul(o, qd - qi);
    qi *= q;
  }
  return o;
}

}  // namespace

FiniteGroup cyclic_group(uint64_t n, const Limits& lim) {
  if (n == 0) fail_input("cyclic group order must be positive");
  if (n == 1) return FiniteGroup::build(Domain::perm(1), {}, lim);
  std::vector<uint64_t> parts = prime_power_parts(n);
  uint64_t degree = 0;
  for (uint64_t pe : parts) degree += pe;
  if (degree > lim.degree_cap) fail_cap("cyclic group degree " + std::to_string(degree) + " exceeds cap");
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t start = 1;
  for (uint64_t pe : parts) {
    std::vector<uint32_t> c;
    for (uint64_t k = 0; k < pe; ++k) c.push_back(static_cast<uint32_t>(start + k));
    cycles.push_back(std::move(c));
    start += static_cast<uint32_t>(pe);
  }
  GroupElement g = GroupElement::from_cycles(static_cast<uint32_t>(degree), cycles);
  return FiniteGroup::build(Domain::perm(static_cast<uint32_t>(degree)), {g}, lim);
}

bool catalog_has(const std::string& name) {
  ParsedName p;
  return parse_name(name, p);
}

uint64_t catalog_expected_order(const std::string& name) {
  ParsedName p;
  if (!parse_name(name, p)) fail_input("unknown catalog name: " + name);
  switch (p.kind) {
    case ParsedName::trivial: return 1;
    case ParsedName::cyclic_product: {
      uint64_t o = 1;
      for (uint64_t c : p.cyc) o = checked_mul(o, c);
      return o;
    }
    case ParsedName::sym: return factorial(p.n);
    case ParsedName::alt: return p.n < 3 ? 1 : factorial(p.n) / 2;
    case ParsedName::dih: return 2 * p.n;
    case ParsedName::quat: return 8;
    case ParsedName::gl: check_matrix_params(p); return gl_order(p.dim, p.q);
    case ParsedName::sl: check_matrix_params(p); return gl_order(p.dim, p.q) / (p.q - 1);
    case ParsedName::pgl: check_matrix_params(p); return gl_order(p.dim, p.q) / (p.q - 1);
    case ParsedName::psl:
      check_matrix_params(p);
      return gl_order(p.dim, p.q) / (p.q - 1) / gcd_u64(p.dim, p.q - 1);
    case ParsedName::sp4: return 51840;
    case ParsedName::torus: check_matrix_params(p); return pow_u64(p.q - 1, p.dim);
  }
  fail_input("unknown catalog name: " + name);
}

FiniteGroup catalog_build(const std::string& name, const Limits& lim) {
  ParsedName p;
  if (!parse_name(name, p)) fail_input("unknown catalog name: " + name);
  FiniteGroup G;
  switch (p.kind) {
    case ParsedName::trivial: G = FiniteGroup::build(Domain::perm(1), {}, lim); break;
    case ParsedName::cyclic_product: {
      if (p.cyc.size() == 1) {
        G = cyclic_group(p.cyc[0], lim);
      } else {
        uint32_t degree = 0;
        std::vector<std::pair<uint32_t, uint64_t>> comps;
        for (uint64_t c : p.cyc) {
          FiniteGroup comp = cyclic_group(c, lim);  // degree of the factored form
          comps.emplace_back(comp.action_degree(), c);
          degree += comp.action_degree();
        }
        std::vector<GroupElement> gens;
        uint32_t offset = 0;
        for (auto [deg, c] : comps) {
          FiniteGroup comp = cyclic_group(c, lim);
          if (!comp.generators().empty()) {
            const auto& img = comp.generators()[0].images();
            std::vector<uint32_t> full(degree);
            for (uint32_t i = 0; i < degree; ++i) full[i] = i;
            for (uint32_t i = 0; i < deg; ++i) full[offset + i] = offset + img[i];
            gens.push_back(GroupElement::perm(std::move(full)));
          }
          offset += deg;
        }
        G = FiniteGroup::build(Domain::perm(degree), std::move(gens), lim);
      }
      break;
    }
    case ParsedName::sym:
      if (p.n < 1 || p.n > 10) fail_input("catalog S_n has n <= 10");
      G = symmetric_group(static_cast<uint32_t>(p.n), lim);
      break;
    case ParsedName::alt:
      if (p.n < 3 || p.n > 10) fail_input("catalog A_n has 3 <= n <= 10");
      G = alternating_group(static_cast<uint32_t>(p.n), lim);
      break;
    case ParsedName::dih:
      if (p.n < 3 || p.n > 200) fail_input("catalog D_n has 3 <= n <= 200");
      G = dihedral_group(static_cast<uint32_t>(p.n), lim);
      break;
    case ParsedName::quat: G = quaternion_group(lim); break;
    case ParsedName::gl: check_matrix_params(p); G = general_linear(p.dim, p.q, lim); break;
    case ParsedName::sl: check_matrix_params(p); G = special_linear(p.dim, p.q, lim); break;
    case ParsedName::pgl:
      check_matrix_params(p);
      G = projective_image(general_linear(p.dim, p.q, lim), lim);
      break;
    case ParsedName::psl:
      check_matrix_params(p);
      G = projective_image(special_linear(p.dim, p.q, lim), lim);
      break;
    case ParsedName::sp4: G = symplectic(4, 3, lim); break;
    case ParsedName::torus: check_matrix_params(p); G = diagonal_torus(p.dim, p.q, lim); break;
  }
  uint64_t expected = catalog_expected_order(name);
  if (G.order() != expected)
    fail_input("catalog self-test: " + name + " has order " + std::to_string(G.order()) + ", expected " +
               std::to_string(expected));
  return G;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = {"trivial", "Q8"};
  for (uint32_t n = 2; n <= 10; ++n) names.push_back("S" + std::to_string(n));
  for (uint32_t n = 4; n <= 10; ++n) names.push_back("A" + std::to_string(n));
  for (uint32_t n : {3, 4, 5, 6, 8, 10, 12, 15, 24}) names.push_back("D" + std::to_string(n));
  for (uint32_t n : {2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 15, 16, 18, 20,
                     21, 24, 30, 36, 48, 60, 96, 100, 105, 120, 210, 240, 360, 420})
    names.push_back("Z" + std::to_string(n));
  for (const char* s : {"Z2xZ2", "Z2xZ4", "Z2xZ6", "Z4xZ4", "Z2xZ2xZ2", "Z6xZ10", "Z4xZ6", "Z10xZ12"})
    names.push_back(s);
  for (uint32_t d : kCatalogDims)
    for (uint32_t q : kCatalogFields)
      for (const char* k : {"GL", "SL", "PGL", "PSL"})
        names.push_back(std::string(k) + std::to_string(d) + "q" + std::to_string(q));
  names.push_back("Sp4q3");
  for (uint32_t d : kCatalogDims)
    for (uint32_t q : kCatalogFields) names.push_back("T" + std::to_string(d) + "q" + std::to_string(q));
  return names;
}

FiniteGroup resolve_group_ref(const std::string& ref, const Limits& lim) {
  if (ref.rfind("catalog:", 0) == 0) return catalog_build(ref.substr(8), lim);
  return parse_group_file(ref, lim).group;
}

}  // namespace gti
