#pragma once

#include <map>
#include <set>
#include <string>

#include "hecke/basis.hpp"

namespace hecke {

// Free-module element: sparse map basis word -> non-zero coefficient in R.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  HeckeElement(AlgebraPtr alg, TermMap terms);

  static HeckeElement zero(AlgebraPtr alg) { return HeckeElement(std::move(alg)); }
  static HeckeElement unit(AlgebraPtr alg);
  static HeckeElement basis(AlgebraPtr alg, int elem);
  static HeckeElement from_word(AlgebraPtr alg, const Word& w);  // straighten
  static HeckeElement generator_power(AlgebraPtr alg, int gen, long e);

  const AlgebraPtr& algebra() const { return alg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(int elem) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement operator-() const;
  HeckeElement operator*(const HeckeElement& o) const;  // table-based product
  HeckeElement scaled(const Poly& p) const;
  HeckeElement& operator+=(const HeckeElement& o);
  bool operator==(const HeckeElement& o) const;

  // x * T_g - T_g * x
  HeckeElement commutator(int gen) const;
  HeckeElement commutator(const std::string& gen_name) const;

  // rho on every coefficient: group-algebra element, element id -> integer.
  std::map<int, Int> specialize() const;

  // Indices into algebra().cosets(gen) meeting the support.
  std::set<int> support_cosets(int gen) const;

  std::string str() const;

 private:
  void check_same(const HeckeElement& o) const;

  AlgebraPtr alg_;
  TermMap terms_;
};

}  // namespace hecke
