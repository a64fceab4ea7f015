#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

using Int = mpz_class;

// One deformation parameter xi_{c,i}: c is a conjugacy class of generators,
// 1 <= i < order of that class.
struct Param {
  std::string name;
  int cls = 0;
  int index = 0;
};

class ParamSpec {
 public:
  ParamSpec() = default;
  ParamSpec(std::vector<Param> params, std::vector<int> class_orders);

  int size() const { return static_cast<int>(params_.size()); }
  const Param& param(int i) const { return params_.at(i); }
  int find(const std::string& name) const;  // -1 if unknown
  int num_classes() const { return static_cast<int>(class_orders_.size()); }
  int class_order(int cls) const { return class_orders_.at(cls); }
  bool operator==(const ParamSpec& o) const;

 private:
  std::vector<Param> params_;
  std::vector<int> class_orders_;
  std::map<std::string, int> by_name_;
};

using ParamSpecPtr = std::shared_ptr<const ParamSpec>;

// Sparse exponent vector; entries sorted by parameter id, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int param, int exp = 1);

  int degree() const;
  int exponent(int param) const;
  bool is_one() const { return e_.empty(); }
  Monomial operator*(const Monomial& o) const;
  const std::vector<std::pair<int, int>>& entries() const { return e_; }
  void set(int param, int exp);  // exp >= 0, 0 erases

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

 private:
  std::vector<std::pair<int, int>> e_;
};

// Graded lexicographic, largest first, so map iteration is the print order.
struct MonoGrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Element of Z[xi]: sparse map monomial -> non-zero integer.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ParamSpecPtr spec) : spec_(std::move(spec)) {}

  static Poly zero(ParamSpecPtr spec) { return Poly(std::move(spec)); }
  static Poly constant(ParamSpecPtr spec, Int c);
  static Poly var(ParamSpecPtr spec, int param, int exp = 1);
  static Poly var(ParamSpecPtr spec, const std::string& name, int exp = 1);

  const ParamSpecPtr& spec() const { return spec_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, Int, MonoGrlexDesc>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Int& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;

  void add_term(const Monomial& m, const Int& c);

  // xi -> 0; returns the constant term.
  Int rho() const;

  // If the index sums of all monomials agree mod m, that residue.
  std::optional<int> index_sum_residue(int m) const;

  // Exact division; nullopt when o does not divide *this.
  std::optional<Poly> divide_exact(const Poly& o) const;

  std::string text() const;
  static Poly parse(ParamSpecPtr spec, const std::string& s);

 private:
  void check_compatible(const Poly& o) const;

  ParamSpecPtr spec_;
  std::map<Monomial, Int, MonoGrlexDesc> terms_;
};

}  // namespace hecke
