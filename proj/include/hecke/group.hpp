#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/poly.hpp"
#include "hecke/word.hpp"

namespace hecke {

struct GroupSpec {
  enum class Kind { G4, Gr1n };
  Kind kind = Kind::G4;
  int r = 0, n = 0;

  static GroupSpec g4() { return {Kind::G4, 0, 0}; }
  static GroupSpec gr1n(int r, int n) { return {Kind::Gr1n, r, n}; }
  static GroupSpec parse(const std::string& s);  // "g4" or "g(r,1,n)"
  std::string str() const;
  bool operator==(const GroupSpec& o) const {
    return kind == o.kind && r == o.r && n == o.n;
  }
};

struct Generator {
  std::string name;
  int order = 0;  // m_s
  int elem = 0;   // element id
};

struct DCoset {
  enum class Kind { Centralizing, Additive, Neither };
  int rep = 0;               // minimal length, ties by smallest id
  std::vector<int> members;  // sorted element ids
  Kind kind = Kind::Neither;
};

// Fully enumerated finite group with multiplication table and BFS lengths.
class GroupData : public std::enable_shared_from_this<GroupData> {
 public:
  static std::shared_ptr<const GroupData> build(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  int order() const { return n_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& gen(int i) const { return gens_.at(i); }
  int gen_index(const std::string& name) const;  // -1 if unknown

  int mult(int a, int b) const { return mult_[static_cast<size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int length(int a) const { return len_[a]; }
  int eval_word(const Word& w) const;
  int conjugate(int g, int w) const;  // g w g^-1

  std::string elem_repr(int a) const;
  // Reduced word from the BFS enumeration (length == l(a)).
  const Word& canonical_word(int a) const { return bfs_word_[a]; }

  // Orbits of W under conjugation by <J>; classes sorted by (min length, min id).
  std::vector<std::vector<int>> j_classes(const std::vector<int>& J) const;
  std::vector<int> centralizer(int a) const;
  std::vector<int> center() const;

  // <g>-<g> double cosets for one generator, sorted by (rep length, rep id).
  std::vector<DCoset> double_cosets(int genIdx) const;

  // Parameter ring of the Hecke algebra of this group.
  ParamSpecPtr params() const { return params_; }
  int param_class_of_gen(int genIdx) const { return gen_cls_[genIdx]; }
  // Parameter id of xi_{c,i} for the class of generator genIdx; -1 for i==0.
  int param_id(int genIdx, int i) const;

  bool is_identity(int a) const { return a == 0; }

 private:
  GroupData() = default;
  void finish_build();
  void make_params();
  void verify_relations() const;

  GroupSpec spec_;
  int n_ = 0;
  std::vector<Generator> gens_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<int> len_;
  std::vector<Word> bfs_word_;
  std::vector<std::string> repr_;
  ParamSpecPtr params_;
  std::vector<int> gen_cls_;                  // generator -> parameter class
  std::vector<std::vector<int>> cls_params_;  // class -> param ids (index 1..m-1)
};

using GroupPtr = std::shared_ptr<const GroupData>;

}  // namespace hecke
