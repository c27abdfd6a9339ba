#pragma once

// Sparse linear combinations with exact integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "superhopf/combinat.hpp"

namespace superhopf {

using Coeff = boost::multiprecision::cpp_int;

enum class Basis { Mnc, Q, m, MonF, Mc, L };

/// Name used by the CLI and in serialized output.
std::string basis_name(Basis b);
/// Inverse of basis_name; throws std::invalid_argument on unknown names.
Basis parse_basis(const std::string& name);
/// True for the bases indexed by dotted compositions.
bool is_commutative(Basis b) noexcept;

inline int parity_of(const SetSupercomposition& I) noexcept { return I.parity(); }
inline int parity_of(const DottedComposition& a) noexcept { return a.parity(); }

template <class Index>
class Combination {
 public:
  using Terms = std::map<Index, Coeff>;

  explicit Combination(Basis basis) : basis_(basis) {}

  static Combination single(Basis basis, Index index, Coeff c = 1) {
    Combination x(basis);
    x.add(index, c);
    return x;
  }

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const& noexcept { return terms_; }
  // Rvalues hand over their map so range-for over a temporary stays valid.
  Terms terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Index& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Index& index, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds c * other. Bases must agree.
  void add_scaled(const Combination& other, const Coeff& c) {
    if (other.basis_ != basis_) throw std::invalid_argument("adding combinations over different bases");
    for (const auto& [index, v] : other.terms_) add(index, v * c);
  }

  Combination& operator+=(const Combination& other) {
    add_scaled(other, 1);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    add_scaled(other, -1);
    return *this;
  }
  Combination operator-() const {
    Combination x(basis_);
    x.add_scaled(*this, -1);
    return x;
  }

  /// Common parity of all indices; throws when terms of both parities occur.
  int parity() const {
    int p = -1;
    for (const auto& [index, v] : terms_) {
      int q = parity_of(index);
      if (p >= 0 && p != q) throw std::domain_error("combination is not homogeneous in parity");
      p = q;
    }
    return p < 0 ? 0 : p;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

template <class Index>
class TensorCombination {
 public:
  using Key = std::pair<Index, Index>;
  using Terms = std::map<Key, Coeff>;

  explicit TensorCombination(Basis basis) : basis_(basis) {}

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const& noexcept { return terms_; }
  // Rvalues hand over their map so range-for over a temporary stays valid.
  Terms terms() && noexcept { return std::move(terms_); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Index& a, const Index& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Index& a, const Index& b, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const TensorCombination& other, const Coeff& c) {
    if (other.basis_ != basis_) throw std::invalid_argument("adding tensors over different bases");
    for (const auto& [key, v] : other.terms_) add(key.first, key.second, v * c);
  }

  TensorCombination& operator+=(const TensorCombination& other) {
    add_scaled(other, 1);
    return *this;
  }

  friend bool operator==(const TensorCombination&, const TensorCombination&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

using NcCombination = Combination<SetSupercomposition>;
using CCombination = Combination<DottedComposition>;
using NcTensor = TensorCombination<SetSupercomposition>;
using CTensor = TensorCombination<DottedComposition>;

}  // namespace superhopf
