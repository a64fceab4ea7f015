#include "hecke/word.hpp"

#include <sstream>

#include "hecke/error.hpp"
#include "hecke/group.hpp"

namespace hecke {

Word Word::operator+(const Word& o) const {
  Word r = *this;
  r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
  return r;
}

Word Word::appended(int gen) const {
  Word r = *this;
  r.letters.push_back(gen);
  return r;
}

std::string Word::str(const GroupData& gd) const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    os << gd.gen(letters[i]).name;
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

Word Word::parse(const GroupData& gd, const std::string& s) {
  Word w;
  if (s == "1" || s.empty()) return w;
  size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    // longest generator-name match
    int best = -1;
    size_t best_len = 0;
    for (int g = 0; g < gd.num_gens(); ++g) {
      const std::string& name = gd.gen(g).name;
      if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
        best = g;
        best_len = name.size();
      }
    }
    if (best < 0) throw Error("Word::parse: unknown letter at '" + s.substr(pos) + "'");
    pos += best_len;
    long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw Error("Word::parse: missing exponent in '" + s + "'");
      exp = std::stol(s.substr(start, pos - start));
      if (exp < 0) throw Error("Word::parse: negative exponent");
    }
    for (long k = 0; k < exp; ++k) w.letters.push_back(best);
  }
  return w;
}

}  // namespace hecke
