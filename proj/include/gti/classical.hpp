#ifndef GTI_CLASSICAL_HPP
#define GTI_CLASSICAL_HPP

#include "gti/group.hpp"

namespace gti {

// Matrix-group constructors over F_q.  Generating sets are deterministic:
// GL/SL from elementary transvections plus a scaling, Sp/SU by saturating
// transvection vectors until the generated group is transitive on the
// relevant vectors, O from reflections covering both square classes.  Every
// generator is checked against the defining form at construction time.

FiniteGroup general_linear(uint32_t dim, uint32_t q, const Limits& lim = {});
FiniteGroup special_linear(uint32_t dim, uint32_t q, const Limits& lim = {});

// Sp_dim(q), dim even; preserves the standard alternating form
FiniteGroup symplectic(uint32_t dim, uint32_t q, const Limits& lim = {});

// SU_dim(q) inside GL_dim(q^2); preserves the identity hermitian form
FiniteGroup special_unitary(uint32_t dim, uint32_t q, const Limits& lim = {});

// full orthogonal group O_dim(q) for odd dim and odd q (identity bilinear form)
FiniteGroup orthogonal_odd(uint32_t dim, uint32_t q, const Limits& lim = {});
// the last term of the derived series of O_dim(q): the simple group for dim >= 5
FiniteGroup omega_odd(uint32_t dim, uint32_t q, const Limits& lim = {});

// diagonal matrices, an abelian group of order (q-1)^dim
FiniteGroup diagonal_torus(uint32_t dim, uint32_t q, const Limits& lim = {});

// image of a matrix group acting on projective points (lines of F_q^dim);
// kernel = the scalars it contains, so this builds PGL/PSL from GL/SL
FiniteGroup projective_image(const FiniteGroup& G, const Limits& lim = {});

}  // namespace gti

#endif
