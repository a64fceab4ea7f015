#pragma once

#include <string>
#include <vector>

namespace hecke {

class GroupData;

// Positive word in the standard generators, stored as generator indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  Word operator+(const Word& o) const;
  Word appended(int gen) const;
  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }

  // "t^3st^2" form; empty word prints as "1".
  std::string str(const GroupData& gd) const;
  static Word parse(const GroupData& gd, const std::string& s);
};

}  // namespace hecke
