#include "gti/classical.hpp"

#include <algorithm>

#include "gti/field.hpp"

namespace gti {

namespace {

std::vector<uint32_t> mat_identity(uint32_t d) {
  std::vector<uint32_t> m(static_cast<size_t>(d) * d, 0);
  for (uint32_t i = 0; i < d; ++i) m[i * d + i] = 1;
  return m;
}

// image of the encoded vector under a matrix, both over F_q
uint32_t apply_point(const Field& F, uint32_t d, const std::vector<uint32_t>& m, uint32_t point) {
  uint32_t q = F.size();
  std::vector<uint32_t> v(d), w(d);
  uint64_t e = point + 1;
  for (uint32_t i = 0; i < d; ++i) {
    v[i] = static_cast<uint32_t>(e % q);
    e /= q;
  }
  for (uint32_t r = 0; r < d; ++r) {
    uint32_t acc = 0;
    for (uint32_t c = 0; c < d; ++c) acc = F.add(acc, F.mul(m[r * d + c], v[c]));
    w[r] = acc;
  }
  uint64_t enc = 0;
  for (uint32_t i = d; i-- > 0;) enc = enc * q + w[i];
  return static_cast<uint32_t>(enc - 1);
}

std::vector<uint32_t> decode_vec(uint32_t q, uint32_t d, uint32_t point) {
  std::vector<uint32_t> v(d);
  uint64_t e = point + 1;
  for (uint32_t i = 0; i < d; ++i) {
    v[i] = static_cast<uint32_t>(e % q);
    e /= q;
  }
  return v;
}

// multi-source orbit of `sources` under the generator matrices
std::vector<bool> orbit_cover(const Field& F, uint32_t d, const std::vector<GroupElement>& gens,
                              const std::vector<uint32_t>& sources, uint64_t npoints) {
  std::vector<bool> seen(npoints, false);
  std::vector<uint32_t> stack;
  for (uint32_t s : sources)
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    uint32_t p = stack.back();
    stack.pop_back();
    for (const GroupElement& g : gens) {
      uint32_t np = apply_point(F, d, g.entries(), p);
      if (!seen[np]) {
        seen[np] = true;
        stack.push_back(np);
      }
    }
  }
  return seen;
}

// F_p-basis of F_q: powers of the primitive element
std::vector<uint32_t> field_basis(const Field& F) {
  std::vector<uint32_t> basis;
  uint32_t z = F.primitive_element();
  uint32_t acc = 1;
  for (uint32_t i = 0; i < F.extension_degree(); ++i) {
    basis.push_back(acc);
    acc = F.mul(acc, z);
  }
  return basis;
}

}  // namespace

FiniteGroup special_linear(uint32_t dim, uint32_t q, const Limits& lim) {
  if (dim < 2) fail_input("special_linear needs dim >= 2");
  const Field& F = Field::get(q);
  std::vector<GroupElement> gens;
  // elementary transvections I + b*E_ij over an F_p-basis generate SL
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      for (uint32_t b : field_basis(F)) {
        std::vector<uint32_t> m = mat_identity(dim);
        m[i * dim + j] = b;
        gens.push_back(GroupElement::matrix(dim, q, std::move(m)));
      }
    }
  return FiniteGroup::build(Domain::matrix(dim, q), std::move(gens), lim);
}

FiniteGroup general_linear(uint32_t dim, uint32_t q, const Limits& lim) {
  FiniteGroup sl = special_linear(dim, q, lim);
  std::vector<GroupElement> gens = sl.generators();
  if (q > 2) {
    std::vector<uint32_t> m = mat_identity(dim);
    m[0] = Field::get(q).primitive_element();
    gens.push_back(GroupElement::matrix(dim, q, std::move(m)));
  }
  return FiniteGroup::build(Domain::matrix(dim, q), std::move(gens), lim);
}

FiniteGroup diagonal_torus(uint32_t dim, uint32_t q, const Limits& lim) {
  if (q < 3) fail_input("diagonal torus is trivial for q = 2");
  const Field& F = Field::get(q);
  std::vector<GroupElement> gens;
  for (uint32_t i = 0; i < dim; ++i) {
    std::vector<uint32_t> m = mat_identity(dim);
    m[i * dim + i] = F.primitive_element();
    gens.push_back(GroupElement::matrix(dim, q, std::move(m)));
  }
  return FiniteGroup::build(Domain::matrix(dim, q), std::move(gens), lim);
}

FiniteGroup symplectic(uint32_t dim, uint32_t q, const Limits& lim) {
  if (dim < 2 || dim % 2) fail_input("symplectic needs even dim >= 2");
  const Field& F = Field::get(q);
  uint32_t n = dim / 2;
  // B(x, y) = sum_i (x_i y_{n+i} - x_{n+i} y_i)
  auto form = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
    uint32_t acc = 0;
    for (uint32_t i = 0; i < n; ++i) {
      acc = F.add(acc, F.mul(x[i], y[n + i]));
      acc = F.sub(acc, F.mul(x[n + i], y[i]));
    }
    return acc;
  };
  auto transvection = [&](const std::vector<uint32_t>& v, uint32_t lambda) {
    // x -> x + lambda * B(x, v) * v
    std::vector<uint32_t> m(static_cast<size_t>(dim) * dim, 0);
    for (uint32_t c = 0; c < dim; ++c) {
      std::vector<uint32_t> e(dim, 0);
      e[c] = 1;
      uint32_t coef = F.mul(lambda, form(e, v));
      for (uint32_t r = 0; r < dim; ++r) m[r * dim + c] = F.add(r == c ? 1 : 0, F.mul(coef, v[r]));
    }
    return GroupElement::matrix(dim, q, std::move(m));
  };
  auto preserves = [&](const GroupElement& g) {
    for (uint32_t a = 0; a < dim; ++a)
      for (uint32_t b = 0; b < dim; ++b) {
        std::vector<uint32_t> ea(dim, 0), eb(dim, 0);
        ea[a] = 1;
        eb[b] = 1;
        std::vector<uint32_t> ga(dim, 0), gb(dim, 0);
        for (uint32_t r = 0; r < dim; ++r) {
          ga[r] = g.entry(r, a);
          gb[r] = g.entry(r, b);
        }
        if (form(ga, gb) != form(ea, eb)) return false;
      }
    return true;
  };

  uint64_t npoints = 1;
  for (uint32_t i = 0; i < dim; ++i) npoints *= q;
  npoints -= 1;
  std::vector<uint32_t> vset;  // encoded transvection vectors
  std::vector<GroupElement> gens;
  auto add_vector = [&](uint32_t point) {
    vset.push_back(point);
    std::vector<uint32_t> v = decode_vec(q, dim, point);
    for (uint32_t lambda : field_basis(F)) {
      GroupElement t = transvection(v, lambda);
      if (!preserves(t)) fail_input("internal: symplectic transvection breaks the form");
      if (!t.is_identity()) gens.push_back(std::move(t));
    }
  };
  for (uint32_t i = 0; i < dim; ++i) {
    uint64_t unit = 1;
    for (uint32_t k = 0; k < i; ++k) unit *= q;
    add_vector(static_cast<uint32_t>(unit - 1));
  }
  // saturate: once the orbit of the transvection vectors covers every nonzero
  // vector, the group contains every transvection and equals Sp
  while (true) {
    std::vector<bool> seen = orbit_cover(F, dim, gens, vset, npoints);
    uint32_t missing = UINT32_MAX;
    for (uint32_t p = 0; p < npoints; ++p)
      if (!seen[p]) {
        missing = p;
        break;
      }
    if (missing == UINT32_MAX) break;
    add_vector(missing);
  }
  return FiniteGroup::build(Domain::matrix(dim, q), std::move(gens), lim);
}

FiniteGroup special_unitary(uint32_t dim, uint32_t q, const Limits& lim) {
  if (dim < 3) fail_input("special_unitary needs dim >= 3");
  if (q == 2 && dim == 3) fail_input("SU_3(2) is solvable and unsupported");
  uint64_t p64;
  unsigned f;
  if (!prime_power(q, p64, f)) fail_input("q must be a prime power");
  uint64_t qq64 = checked_mul(q, q);
  uint32_t qq = static_cast<uint32_t>(qq64);
  const Field& F = Field::get(qq);
  auto conj = [&](uint32_t a) { return F.conj_sqrt(a); };
  // h(x, y) = sum_i x_i conj(y_i)
  auto form = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
    uint32_t acc = 0;
    for (uint32_t i = 0; i < dim; ++i) acc = F.add(acc, F.mul(x[i], conj(y[i])));
    return acc;
  };
  auto preserves = [&](const GroupElement& g) {
    for (uint32_t a = 0; a < dim; ++a)
      for (uint32_t b = 0; b < dim; ++b) {
        std::vector<uint32_t> ga(dim), gb(dim);
        for (uint32_t r = 0; r < dim; ++r) {
          ga[r] = g.entry(r, a);
          gb[r] = g.entry(r, b);
        }
        uint32_t want = (a == b) ? 1u : 0u;
        if (form(ga, gb) != want) return false;
      }
    return true;
  };
  // trace-zero scalars: lambda + lambda^q = 0
  std::vector<uint32_t> trace_zero;
  for (uint32_t a = 1; a < qq; ++a)
    if (F.add(a, F.pow(a, q)) == 0) trace_zero.push_back(a);
  // greedy F_p-basis of the trace-zero line
  std::vector<uint32_t> tz_basis;
  {
    std::vector<bool> span(qq, false);
    span[0] = true;
    for (uint32_t a : trace_zero) {
      if (span[a]) continue;
      tz_basis.push_back(a);
      std::vector<uint32_t> cur;
      for (uint32_t x = 0; x < qq; ++x)
        if (span[x]) cur.push_back(x);
      for (uint32_t x : cur)
        for (uint32_t k = 1; k < p64; ++k) {
          uint32_t y = x;
          for (uint32_t t = 0; t < k; ++t) y = F.add(y, a);
          span[y] = true;
        }
    }
  }

  uint64_t npoints = 1;
  for (uint32_t i = 0; i < dim; ++i) npoints *= qq;
  npoints -= 1;
  auto isotropic = [&](uint32_t point) {
    std::vector<uint32_t> v = decode_vec(qq, dim, point);
    return form(v, v) == 0;
  };
  auto transvection = [&](const std::vector<uint32_t>& v, uint32_t lambda) {
    // x -> x + lambda * h(x, v) * v, v isotropic, trace(lambda) = 0
    std::vector<uint32_t> m(static_cast<size_t>(dim) * dim, 0);
    for (uint32_t c = 0; c < dim; ++c) {
      std::vector<uint32_t> e(dim, 0);
      e[c] = 1;
      uint32_t coef = F.mul(lambda, form(e, v));
      for (uint32_t r = 0; r < dim; ++r) m[r * dim + c] = F.add(r == c ? 1 : 0, F.mul(coef, v[r]));
    }
    return GroupElement::matrix(dim, qq, std::move(m));
  };

  std::vector<uint32_t> vset;
  std::vector<GroupElement> gens;
  auto add_vector = [&](uint32_t point) {
    vset.push_back(point);
    std::vector<uint32_t> v = decode_vec(qq, dim, point);
    for (uint32_t lambda : tz_basis) {
      GroupElement t = transvection(v, lambda);
      if (!preserves(t) || t.det() != 1) fail_input("internal: unitary transvection breaks the form");
      if (!t.is_identity()) gens.push_back(std::move(t));
    }
  };
  uint32_t first_iso = UINT32_MAX;
  for (uint32_t p = 0; p < npoints; ++p)
    if (isotropic(p)) {
      first_iso = p;
      break;
    }
  if (first_iso == UINT32_MAX) fail_input("internal: no isotropic vector found");
  add_vector(first_iso);
  while (true) {
    std::vector<bool> seen = orbit_cover(F, dim, gens, vset, npoints);
    uint32_t missing = UINT32_MAX;
    for (uint32_t p = 0; p < npoints; ++p)
      if (isotropic(p) && !seen[p]) {
        missing = p;
        break;
      }
    if (missing == UINT32_MAX) break;
    add_vector(missing);
  }
  Limits lim2 = lim;
  return FiniteGroup::build(Domain::matrix(dim, qq), std::move(gens), lim2);
}

FiniteGroup orthogonal_odd(uint32_t dim, uint32_t q, const Limits& lim) {
  if (dim % 2 == 0 || dim < 3) fail_input("orthogonal_odd needs odd dim >= 3");
  if (q % 2 == 0) fail_input("orthogonal_odd needs odd q");
  const Field& F = Field::get(q);
  auto form = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
    uint32_t acc = 0;
    for (uint32_t i = 0; i < dim; ++i) acc = F.add(acc, F.mul(x[i], y[i]));
    return acc;
  };
  auto preserves = [&](const GroupElement& g) {
    for (uint32_t a = 0; a < dim; ++a)
      for (uint32_t b = a; b < dim; ++b) {
        std::vector<uint32_t> ga(dim), gb(dim);
        for (uint32_t r = 0; r < dim; ++r) {
          ga[r] = g.entry(r, a);
          gb[r] = g.entry(r, b);
        }
        uint32_t want = (a == b) ? 1u : 0u;
        if (form(ga, gb) != want) return false;
      }
    return true;
  };
  auto reflection = [&](const std::vector<uint32_t>& v) {
    // x -> x - 2 B(x,v)/B(v,v) v
    uint32_t nv = form(v, v);
    uint32_t scale = F.mul(F.add(1, 1), F.inv(nv));
    std::vector<uint32_t> m(static_cast<size_t>(dim) * dim, 0);
    for (uint32_t c = 0; c < dim; ++c) {
      std::vector<uint32_t> e(dim, 0);
      e[c] = 1;
      uint32_t coef = F.mul(scale, form(e, v));
      for (uint32_t r = 0; r < dim; ++r) m[r * dim + c] = F.sub(r == c ? 1 : 0, F.mul(coef, v[r]));
    }
    return GroupElement::matrix(dim, q, std::move(m));
  };

  uint64_t npoints = 1;
  for (uint32_t i = 0; i < dim; ++i) npoints *= q;
  npoints -= 1;
  auto norm_of = [&](uint32_t point) {
    std::vector<uint32_t> v = decode_vec(q, dim, point);
    return form(v, v);
  };
  // squares in F_q^*
  std::vector<bool> is_square(q, false);
  for (uint32_t a = 1; a < q; ++a) is_square[F.mul(a, a)] = true;

  std::vector<uint32_t> vset;
  std::vector<GroupElement> gens;
  auto add_vector = [&](uint32_t point) {
    vset.push_back(point);
    GroupElement r = reflection(decode_vec(q, dim, point));
    if (!preserves(r)) fail_input("internal: reflection breaks the form");
    gens.push_back(std::move(r));
  };
  // seed both square classes of nonsingular vectors
  uint32_t seed_sq = UINT32_MAX, seed_nsq = UINT32_MAX;
  for (uint32_t p = 0; p < npoints && (seed_sq == UINT32_MAX || seed_nsq == UINT32_MAX); ++p) {
    uint32_t nv = norm_of(p);
    if (nv == 0) continue;
    if (is_square[nv] && seed_sq == UINT32_MAX) seed_sq = p;
    if (!is_square[nv] && seed_nsq == UINT32_MAX) seed_nsq = p;
  }
  add_vector(seed_sq);
  if (seed_nsq != UINT32_MAX) add_vector(seed_nsq);
  while (true) {
    std::vector<bool> seen = orbit_cover(F, dim, gens, vset, npoints);
    uint32_t missing = UINT32_MAX;
    for (uint32_t p = 0; p < npoints; ++p)
      if (norm_of(p) != 0 && !seen[p]) {
        missing = p;
        break;
      }
    if (missing == UINT32_MAX) break;
    add_vector(missing);
  }
  return FiniteGroup::build(Domain::matrix(dim, q), std::move(gens), lim);
}

FiniteGroup omega_odd(uint32_t dim, uint32_t q, const Limits& lim) {
  FiniteGroup O = orthogonal_odd(dim, q, lim);
  FiniteGroup D = derived_subgroup(O);
  while (true) {
    FiniteGroup D2 = derived_subgroup(D);
    if (D2.order() == D.order()) return D;
    D = D2;
  }
}

FiniteGroup projective_image(const FiniteGroup& G, const Limits& lim) {
  if (G.domain().kind != ElemKind::matrix) fail_input("projective_image expects a matrix group");
  uint32_t q = G.domain().q;
  uint32_t d = G.domain().n;
  const Field& F = Field::get(q);
  // projective points: vectors whose first nonzero coordinate is 1, indexed
  // in increasing encoding order
  std::vector<uint32_t> reps;
  uint64_t npoints = G.domain().action_degree();
  for (uint32_t p = 0; p < npoints; ++p) {
    std::vector<uint32_t> v = decode_vec(q, d, p);
    uint32_t first = 0;
    while (v[first] == 0) ++first;
    if (v[first] == 1) reps.push_back(p);
  }
  auto normalize = [&](uint32_t point) {
    std::vector<uint32_t> v = decode_vec(q, d, point);
    uint32_t first = 0;
    while (v[first] == 0) ++first;
    uint32_t inv = F.inv(v[first]);
    for (uint32_t i = 0; i < d; ++i) v[i] = F.mul(inv, v[i]);
    uint64_t enc = 0;
    for (uint32_t i = d; i-- > 0;) enc = enc * q + v[i];
    return static_cast<uint32_t>(enc - 1);
  };
  auto index_of = [&](uint32_t point) {
    auto it = std::lower_bound(reps.begin(), reps.end(), point);
    return static_cast<uint32_t>(it - reps.begin());
  };
  std::vector<GroupElement> pgens;
  for (const GroupElement& g : G.generators()) {
    PermVec img(reps.size());
    for (size_t i = 0; i < reps.size(); ++i)
      img[i] = index_of(normalize(apply_point(F, d, g.entries(), reps[i])));
    GroupElement pg = GroupElement::perm(std::move(img));
    if (!pg.is_identity()) pgens.push_back(std::move(pg));
  }
  return FiniteGroup::build(Domain::perm(static_cast<uint32_t>(reps.size())), std::move(pgens), lim);
}

}  // namespace gti
