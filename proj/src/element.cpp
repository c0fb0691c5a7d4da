#include "gti/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gti {

namespace {

void check_bijection(const std::vector<uint32_t>& img) {
  std::vector<bool> seen(img.size(), false);
  for (uint32_t v : img) {
    if (v >= img.size() || seen[v]) fail_input("permutation image list is not a bijection");
    seen[v] = true;
  }
}

// in-place Gaussian elimination; returns determinant, 0 if singular
uint32_t det_mod(std::vector<uint32_t> m, uint32_t dim, const Field& F) {
  uint32_t det = 1;
  for (uint32_t col = 0; col < dim; ++col) {
    uint32_t pivot = col;
    while (pivot < dim && m[pivot * dim + col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      for (uint32_t j = 0; j < dim; ++j) std::swap(m[pivot * dim + j], m[col * dim + j]);
      det = F.neg(det);
    }
    uint32_t pv = m[col * dim + col];
    det = F.mul(det, pv);
    uint32_t pinv = F.inv(pv);
    for (uint32_t r = col + 1; r < dim; ++r) {
      uint32_t factor = F.mul(m[r * dim + col], pinv);
      if (factor == 0) continue;
      for (uint32_t j = col; j < dim; ++j)
        m[r * dim + j] = F.sub(m[r * dim + j], F.mul(factor, m[col * dim + j]));
    }
  }
  return det;
}

}  // namespace

GroupElement GroupElement::perm_identity(uint32_t degree) {
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return GroupElement(ElemKind::perm, degree, 0, std::move(img));
}

GroupElement GroupElement::perm(std::vector<uint32_t> images) {
  check_bijection(images);
  return GroupElement(ElemKind::perm, static_cast<uint32_t>(images.size()), 0, std::move(images));
}

GroupElement GroupElement::perm_1based(const std::vector<uint32_t>& images) {
  std::vector<uint32_t> img(images.size());
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0 || images[i] > images.size()) fail_input("permutation image out of range");
    img[i] = images[i] - 1;
  }
  check_bijection(img);
  return GroupElement(ElemKind::perm, static_cast<uint32_t>(img.size()), 0, std::move(img));
}

GroupElement GroupElement::from_cycles(uint32_t degree, const std::vector<std::vector<uint32_t>>& cycles) {
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      uint32_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) fail_input("cycle point out of range");
      img[from - 1] = to - 1;
    }
  }
  check_bijection(img);
  return GroupElement(ElemKind::perm, degree, 0, std::move(img));
}

GroupElement GroupElement::matrix_identity(uint32_t dim, uint32_t q) {
  std::vector<uint32_t> e(static_cast<size_t>(dim) * dim, 0);
  for (uint32_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  Field::get(q);
  return GroupElement(ElemKind::matrix, dim, q, std::move(e));
}

GroupElement GroupElement::matrix(uint32_t dim, uint32_t q, std::vector<uint32_t> entries) {
  if (entries.size() != static_cast<size_t>(dim) * dim) fail_input("matrix entry count mismatch");
  const Field& F = Field::get(q);
  for (uint32_t v : entries)
    if (v >= q) fail_input("matrix entry out of field range");
  if (det_mod(entries, dim, F) == 0) fail_input("matrix is singular");
  return GroupElement(ElemKind::matrix, dim, q, std::move(entries));
}

bool GroupElement::is_identity() const {
  if (kind_ == ElemKind::perm) {
    for (uint32_t i = 0; i < size_; ++i)
      if (data_[i] != i) return false;
    return true;
  }
  for (uint32_t r = 0; r < size_; ++r)
    for (uint32_t c = 0; c < size_; ++c)
      if (data_[r * size_ + c] != (r == c ? 1u : 0u)) return false;
  return true;
}

bool GroupElement::same_shape(const GroupElement& o) const {
  return kind_ == o.kind_ && size_ == o.size_ && q_ == o.q_;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (!same_shape(rhs)) fail_input("composing elements of different shapes");
  if (kind_ == ElemKind::perm) {
    std::vector<uint32_t> img(size_);
    for (uint32_t i = 0; i < size_; ++i) img[i] = data_[rhs.data_[i]];
    return GroupElement(ElemKind::perm, size_, 0, std::move(img));
  }
  const Field& F = Field::get(q_);
  std::vector<uint32_t> m(static_cast<size_t>(size_) * size_, 0);
  for (uint32_t i = 0; i < size_; ++i)
    for (uint32_t k = 0; k < size_; ++k) {
      uint32_t a = data_[i * size_ + k];
      if (a == 0) continue;
      for (uint32_t j = 0; j < size_; ++j)
        m[i * size_ + j] = F.add(m[i * size_ + j], F.mul(a, rhs.data_[k * size_ + j]));
    }
  return GroupElement(ElemKind::matrix, size_, q_, std::move(m));
}

GroupElement GroupElement::inverse() const {
  if (kind_ == ElemKind::perm) {
    std::vector<uint32_t> img(size_);
    for (uint32_t i = 0; i < size_; ++i) img[data_[i]] = i;
    return GroupElement(ElemKind::perm, size_, 0, std::move(img));
  }
  const Field& F = Field::get(q_);
  uint32_t d = size_;
  std::vector<uint32_t> a = data_;
  std::vector<uint32_t> inv(static_cast<size_t>(d) * d, 0);
  for (uint32_t i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (uint32_t col = 0; col < d; ++col) {
    uint32_t pivot = col;
    while (pivot < d && a[pivot * d + col] == 0) ++pivot;
    if (pivot == d) fail_input("inverting a singular matrix");
    if (pivot != col)
      for (uint32_t j = 0; j < d; ++j) {
        std::swap(a[pivot * d + j], a[col * d + j]);
        std::swap(inv[pivot * d + j], inv[col * d + j]);
      }
    uint32_t pinv = F.inv(a[col * d + col]);
    for (uint32_t j = 0; j < d; ++j) {
      a[col * d + j] = F.mul(a[col * d + j], pinv);
      inv[col * d + j] = F.mul(inv[col * d + j], pinv);
    }
    for (uint32_t r = 0; r < d; ++r) {
      if (r == col) continue;
      uint32_t factor = a[r * d + col];
      if (factor == 0) continue;
      for (uint32_t j = 0; j < d; ++j) {
        a[r * d + j] = F.sub(a[r * d + j], F.mul(factor, a[col * d + j]));
        inv[r * d + j] = F.sub(inv[r * d + j], F.mul(factor, inv[col * d + j]));
      }
    }
  }
  return GroupElement(ElemKind::matrix, d, q_, std::move(inv));
}

GroupElement GroupElement::conjugate_by(const GroupElement& g) const { return g * (*this) * g.inverse(); }

GroupElement GroupElement::pow(uint64_t e) const {
  GroupElement acc = kind_ == ElemKind::perm ? perm_identity(size_) : matrix_identity(size_, q_);
  GroupElement base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

uint64_t GroupElement::order() const {
  if (kind_ == ElemKind::perm) {
    uint64_t ord = 1;
    std::vector<bool> seen(size_, false);
    for (uint32_t i = 0; i < size_; ++i) {
      if (seen[i]) continue;
      uint32_t len = 0, j = i;
      do {
        seen[j] = true;
        j = data_[j];
        ++len;
      } while (j != i);
      ord = lcm_u64(ord, len);
    }
    return ord;
  }
  GroupElement p = *this;
  uint64_t n = 1;
  const uint64_t cap = 10'000'000;
  while (!p.is_identity()) {
    p = p * (*this);
    if (++n > cap) fail_cap("matrix element order exceeds cap");
  }
  return n;
}

bool GroupElement::operator<(const GroupElement& rhs) const {
  if (kind_ != rhs.kind_) return kind_ < rhs.kind_;
  if (size_ != rhs.size_) return size_ < rhs.size_;
  if (q_ != rhs.q_) return q_ < rhs.q_;
  return data_ < rhs.data_;
}

uint32_t GroupElement::det() const {
  if (kind_ != ElemKind::matrix) fail_input("det of a permutation element");
  return det_mod(data_, size_, Field::get(q_));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (kind_ == ElemKind::perm) {
    os << "perm[";
    for (uint32_t i = 0; i < size_; ++i) os << (i ? " " : "") << data_[i] + 1;
    os << "]";
  } else {
    os << "mat" << size_ << "xF" << q_ << "[";
    for (size_t i = 0; i < data_.size(); ++i) os << (i ? " " : "") << data_[i];
    os << "]";
  }
  return os.str();
}

}  // namespace gti
