#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "hecke/group.hpp"
#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

class HeckeElement;
class HeckeAlgebra;
using AlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

// Reduced-basis schemes. The two G4 schemes fix the paper's explicit word
// lists; bm-r12 is the t^a s t^b (s) normal form for G(r,1,2).
enum class Scheme { G4Sts, G4Tst, BmR12 };

Scheme scheme_parse(const std::string& id);
std::string scheme_id(Scheme s);

struct StraightenOptions {
  bool alternate = false;  // a second admissible rewrite order
  long step_budget = 1000000;
};

// Coefficient map of an element on the reduced basis, keyed by element id.
using TermMap = std::map<int, Poly>;

// A reduced basis together with its straightening engine and the cached
// generator-multiplication table.
class HeckeAlgebra : public std::enable_shared_from_this<HeckeAlgebra> {
 public:
  static AlgebraPtr create(GroupPtr gd, Scheme scheme, StraightenOptions opt = {});
  static AlgebraPtr create(const std::string& group_spec, const std::string& scheme_id);

  const GroupData& group() const { return *gd_; }
  GroupPtr group_ptr() const { return gd_; }
  Scheme scheme() const { return scheme_; }
  ParamSpecPtr params() const { return gd_->params(); }
  int num_basis() const { return gd_->order(); }

  // The chosen reduced word eta(w); its evaluation is w and its size is l(w).
  const Word& basis_word(int elem) const { return words_.at(elem); }
  // Element whose chosen braid class contains this reduced word, or -1.
  int elem_of_reduced_word(const Word& w) const;

  // Rewrites an arbitrary positive generator word into basis coordinates.
  TermMap straighten(const Word& w) const;

  // Cached expansions of T_w * T_g and T_g * T_w.
  const TermMap& right_expansion(int elem, int gen) const;
  const TermMap& left_expansion(int elem, int gen) const;

  TermMap apply_right(const TermMap& x, int gen) const;  // x * T_g
  TermMap apply_left(const TermMap& x, int gen) const;   // T_g * x

  // Coefficients of T_g^e on {T_{g^i} : 0 <= i < m}.
  std::vector<Poly> power_coeffs(int gen, long e) const;

  // Double cosets of <gen>, cached; and the coset index of each element.
  const std::vector<DCoset>& cosets(int gen) const;
  int coset_of(int gen, int elem) const;

  Poly poly(const std::string& text) const { return Poly::parse(params(), text); }
  Poly one() const { return Poly::constant(params(), 1); }

 private:
  HeckeAlgebra() = default;
  void build_basis_g4();
  void build_basis_bm();
  void build_table();
  void verify_table() const;

  TermMap straighten_impl(const Word& w) const;
  TermMap straighten_g4(const Word& w) const;
  TermMap straighten_bm(const Word& w) const;
  std::set<Word> braid_closure(const Word& w) const;

  GroupPtr gd_;
  Scheme scheme_ = Scheme::G4Sts;
  StraightenOptions opt_;
  std::vector<Word> words_;
  std::map<std::vector<int>, int> reduced_index_;  // word letters -> elem
  struct Identity {
    std::vector<int> pattern;                       // word to rewrite
    std::vector<std::pair<std::vector<int>, Poly>> replacement;
  };
  std::vector<Identity> identities_;  // longest pattern first
  std::vector<TermMap> right_, left_;

  mutable std::map<std::vector<int>, TermMap> memo_;
  mutable std::set<std::vector<int>> in_progress_;
  mutable long steps_ = 0;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<DCoset>> cosets_;
  mutable std::map<int, std::vector<int>> coset_of_;
};

}  // namespace hecke
