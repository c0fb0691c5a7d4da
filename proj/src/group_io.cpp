#include "gti/group_io.hpp"

#include <fstream>
#include <sstream>

#include "gti/field.hpp"

namespace gti {

namespace {

struct LineReader {
  std::istream& in;
  std::string what;
  size_t lineno = 0;

  // next meaningful line split into tokens; false at end of stream
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    fail_input(what + ":" + std::to_string(lineno) + ": " + msg);
  }
};

uint64_t parse_u64(const LineReader& r, const std::string& tok) {
  uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') r.fail("expected a number, got '" + tok + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

NamedGroup parse_group_stream(std::istream& in, const Limits& lim, const std::string& what) {
  LineReader r{in, what};
  std::vector<std::string> t;
  if (!r.next(t) || t[0] != "group" || t.size() != 2) r.fail("expected 'group <name>'");
  std::string name = t[1];
  if (!r.next(t) || t[0] != "kind") r.fail("expected 'kind perm <degree>' or 'kind matrix <dim> <q>'");
  Domain dom;
  if (t.size() == 3 && t[1] == "perm") {
    dom = Domain::perm(static_cast<uint32_t>(parse_u64(r, t[2])));
  } else if (t.size() == 4 && t[1] == "matrix") {
    uint64_t dim = parse_u64(r, t[2]);
    uint64_t q = parse_u64(r, t[3]);
    uint64_t p;
    unsigned f;
    if (!prime_power(q, p, f)) r.fail("field size " + t[3] + " is not a prime power");
    dom = Domain::matrix(static_cast<uint32_t>(dim), static_cast<uint32_t>(q));
  } else {
    r.fail("expected 'kind perm <degree>' or 'kind matrix <dim> <q>'");
  }
  std::vector<GroupElement> gens;
  bool ended = false;
  while (r.next(t)) {
    if (t[0] == "end") {
      ended = true;
      break;
    }
    if (t[0] != "gen") r.fail("expected 'gen ...' or 'end'");
    std::vector<uint32_t> vals;
    for (size_t i = 1; i < t.size(); ++i) vals.push_back(static_cast<uint32_t>(parse_u64(r, t[i])));
    try {
      if (dom.kind == ElemKind::perm) {
        if (vals.size() != dom.n) r.fail("permutation needs " + std::to_string(dom.n) + " images");
        gens.push_back(GroupElement::perm_1based(vals));
      } else {
        if (vals.size() != static_cast<size_t>(dom.n) * dom.n)
          r.fail("matrix needs " + std::to_string(dom.n * dom.n) + " entries");
        gens.push_back(GroupElement::matrix(dom.n, dom.q, std::move(vals)));
      }
    } catch (const input_error& e) {
      r.fail(e.what());
    }
  }
  if (!ended) r.fail("missing 'end'");
  return NamedGroup{name, FiniteGroup::build(dom, std::move(gens), lim)};
}

NamedGroup parse_group_file(const std::string& path, const Limits& lim) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open group file: " + path);
  return parse_group_stream(in, lim, path);
}

NamedGroup parse_group_text(const std::string& text, const Limits& lim) {
  std::istringstream in(text);
  return parse_group_stream(in, lim, "<text>");
}

std::string serialize_group(const std::string& name, const FiniteGroup& G) {
  std::ostringstream os;
  os << "group " << name << "\n";
  const Domain& dom = G.domain();
  if (dom.kind == ElemKind::perm) {
    os << "kind perm " << dom.n << "\n";
    for (const GroupElement& g : G.generators()) {
      os << "gen";
      for (uint32_t i = 0; i < dom.n; ++i) os << " " << g.image(i) + 1;
      os << "\n";
    }
  } else {
    os << "kind matrix " << dom.n << " " << dom.q << "\n";
    for (const GroupElement& g : G.generators()) {
      os << "gen";
      for (uint32_t v : g.entries()) os << " " << v;
      os << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

FamilyFile parse_family_stream(std::istream& in, const GroupResolver& resolve, const std::string& what) {
  LineReader r{in, what};
  std::vector<std::string> t;
  if (!r.next(t) || t[0] != "family" || t.size() != 2) r.fail("expected 'family <name>'");
  FamilyFile out;
  out.name = t[1];
  bool ended = false;
  while (r.next(t)) {
    if (t[0] == "end") {
      ended = true;
      break;
    }
    if (t[0] == "prime") {
      if (t.size() != 4 || t[2] != "group") r.fail("expected 'prime <ell> group <ref>'");
      uint64_t ell = parse_u64(r, t[1]);
      if (!is_prime(ell)) r.fail(t[1] + " is not prime");
      if (!out.primes.empty() && ell <= out.primes.back()) r.fail("primes must be strictly increasing");
      out.primes.push_back(ell);
      out.group_refs.push_back(t[3]);
      try {
        out.groups.push_back(resolve(t[3]));
      } catch (const input_error& e) {
        r.fail(e.what());
      }
    } else if (t[0] == "tuple") {
      if (t.size() != out.primes.size() + 1) r.fail("tuple needs one label per factor");
      out.tuples.emplace_back(t.begin() + 1, t.end());
    } else {
      r.fail("expected 'prime', 'tuple' or 'end'");
    }
  }
  if (!ended) r.fail("missing 'end'");
  if (out.primes.empty()) r.fail("family has no factors");
  return out;
}

FamilyFile parse_family_file(const std::string& path, const GroupResolver& resolve) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open family file: " + path);
  return parse_family_stream(in, resolve, path);
}

}  // namespace gti
