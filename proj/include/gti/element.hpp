#ifndef GTI_ELEMENT_HPP
#define GTI_ELEMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gti/common.hpp"
#include "gti/field.hpp"

namespace gti {

enum class ElemKind : uint8_t { perm, matrix };

// A permutation of {1..n} (stored 0-based) or an invertible d x d matrix over
// F_q.  Composition is function composition: (a*b) applies b first for
// permutations acting on points, and is the ordinary matrix product, so the
// vector action v -> M v is a homomorphism into the permutations of vectors.
class GroupElement {
public:
  static GroupElement perm_identity(uint32_t degree);
  static GroupElement perm(std::vector<uint32_t> images_0based);
  // 1-based image list as it appears in group files
  static GroupElement perm_1based(const std::vector<uint32_t>& images);
  // cycles given 1-based, e.g. {{1,2},{3,4,5}}
  static GroupElement from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cycles);
  static GroupElement matrix_identity(uint32_t dim, uint32_t q);
  static GroupElement matrix(uint32_t dim, uint32_t q, std::vector<uint32_t> entries_row_major);

  ElemKind kind() const { return kind_; }
  uint32_t degree() const { return kind_ == ElemKind::perm ? size_ : 0; }
  uint32_t dim() const { return kind_ == ElemKind::matrix ? size_ : 0; }
  uint32_t field_size() const { return q_; }

  bool is_identity() const;
  bool same_shape(const GroupElement& other) const;

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  GroupElement conjugate_by(const GroupElement& g) const;  // g * (*this) * g^-1
  GroupElement pow(uint64_t e) const;
  uint64_t order() const;

  bool operator==(const GroupElement& rhs) const = default;
  bool operator<(const GroupElement& rhs) const;

  uint32_t image(uint32_t point0) const { return data_[point0]; }
  const std::vector<uint32_t>& images() const { return data_; }
  uint32_t entry(uint32_t r, uint32_t c) const { return data_[r * size_ + c]; }
  const std::vector<uint32_t>& entries() const { return data_; }

  uint32_t det() const;  // matrix only
  std::string to_string() const;

private:
  GroupElement(ElemKind k, uint32_t size, uint32_t q, std::vector<uint32_t> data)
      : kind_(k), size_(size), q_(q), data_(std::move(data)) {}

  ElemKind kind_;
  uint32_t size_;  // perm degree or matrix dim
  uint32_t q_ = 0;
  std::vector<uint32_t> data_;
};

}  // namespace gti

#endif
