#include "hecke/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

GroupSpec GroupSpec::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += std::tolower(static_cast<unsigned char>(c));
  if (t == "g4") return g4();
  if (t.size() >= 7 && t.substr(0, 2) == "g(" && t.back() == ')') {
    std::string body = t.substr(2, t.size() - 3);
    int vals[3];
    int k = 0;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',') && k < 3) vals[k++] = std::stoi(part);
    if (k == 3 && vals[1] == 1 && vals[0] >= 1 && vals[2] >= 1)
      return gr1n(vals[0], vals[2]);
  }
  throw Error("bad group spec '" + s + "' (expected g4 or g(r,1,n))");
}

std::string GroupSpec::str() const {
  if (kind == Kind::G4) return "g4";
  return "g(" + std::to_string(r) + ",1," + std::to_string(n) + ")";
}

namespace {

constexpr int kMaxOrder = 4096;

// Concrete models keyed by a canonical string.
struct ConcreteG4 {
  // 2x2 matrix over Z/3, det 1
  int m[4];
  std::string key() const {
    return {char('0' + m[0]), char('0' + m[1]), char('0' + m[2]), char('0' + m[3])};
  }
  ConcreteG4 operator*(const ConcreteG4& o) const {
    ConcreteG4 r;
    r.m[0] = (m[0] * o.m[0] + m[1] * o.m[2]) % 3;
    r.m[1] = (m[0] * o.m[1] + m[1] * o.m[3]) % 3;
    r.m[2] = (m[2] * o.m[0] + m[3] * o.m[2]) % 3;
    r.m[3] = (m[2] * o.m[1] + m[3] * o.m[3]) % 3;
    return r;
  }
  std::string repr() const {
    std::ostringstream os;
    os << "[[" << m[0] << "," << m[1] << "],[" << m[2] << "," << m[3] << "]]";
    return os.str();
  }
};

struct ConcreteWreath {
  // pair (colour vector a in (Z_r)^n, permutation sigma of {0..n-1});
  // (a,sigma)(b,tau) = (a + sigma(b), sigma tau), (sigma(b))_{sigma(i)} = b_i.
  std::vector<int> a;
  std::vector<int> sigma;
  int r = 1;

  std::string key() const {
    std::string k;
    for (int x : a) k += std::to_string(x) + ",";
    k += "|";
    for (int x : sigma) k += std::to_string(x) + ",";
    return k;
  }
  ConcreteWreath operator*(const ConcreteWreath& o) const {
    int n = static_cast<int>(a.size());
    ConcreteWreath res;
    res.r = r;
    res.a.resize(n);
    res.sigma.resize(n);
    for (int i = 0; i < n; ++i) res.a[sigma[i]] = (a[sigma[i]] + o.a[i]) % r;
    for (int i = 0; i < n; ++i) res.sigma[i] = sigma[o.sigma[i]];
    return res;
  }
  std::string repr() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << " | ";
    for (size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i] + 1;
    os << ")";
    return os.str();
  }
};

template <class Elem>
void enumerate(const Elem& id, const std::vector<Elem>& gens, std::vector<Elem>& elems,
               std::vector<int>& len, std::vector<Word>& bfs_word, std::vector<int>& mult_by_gen) {
  std::map<std::string, int> ids;
  elems.clear();
  elems.push_back(id);
  ids[id.key()] = 0;
  len = {0};
  bfs_word = {Word()};
  std::deque<int> queue = {0};
  std::vector<std::vector<int>> step;  // step[e][g]
  step.push_back(std::vector<int>(gens.size(), -1));
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t g = 0; g < gens.size(); ++g) {
      Elem next = elems[cur] * gens[g];
      auto [it, fresh] = ids.emplace(next.key(), static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(next);
        len.push_back(len[cur] + 1);
        bfs_word.push_back(bfs_word[cur].appended(static_cast<int>(g)));
        step.push_back(std::vector<int>(gens.size(), -1));
        queue.push_back(it->second);
        if (elems.size() > kMaxOrder) throw Error("group too large (cap " + std::to_string(kMaxOrder) + ")");
      }
      step[cur][g] = it->second;
    }
  }
  mult_by_gen.resize(elems.size() * gens.size());
  for (size_t e = 0; e < elems.size(); ++e)
    for (size_t g = 0; g < gens.size(); ++g) mult_by_gen[e * gens.size() + g] = step[e][g];
}

template <class Elem>
void fill_mult(const std::vector<Elem>& elems, std::vector<int>& mult) {
  std::map<std::string, int> ids;
  for (size_t i = 0; i < elems.size(); ++i) ids[elems[i].key()] = static_cast<int>(i);
  size_t n = elems.size();
  mult.resize(n * n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) mult[a * n + b] = ids.at((elems[a] * elems[b]).key());
}

}  // namespace

int GroupData::gen_index(const std::string& name) const {
  for (int i = 0; i < num_gens(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

int GroupData::eval_word(const Word& w) const {
  int cur = 0;
  for (int g : w.letters) {
    if (g < 0 || g >= num_gens()) throw Error("eval_word: unknown letter");
    cur = mult(cur, gens_[g].elem);
  }
  return cur;
}

int GroupData::conjugate(int g, int w) const { return mult(mult(g, w), inv_[g]); }

std::string GroupData::elem_repr(int a) const { return repr_.at(a); }

std::shared_ptr<const GroupData> GroupData::build(const GroupSpec& spec) {
  auto gd = std::shared_ptr<GroupData>(new GroupData());
  gd->spec_ = spec;
  if (spec.kind == GroupSpec::Kind::G4) {
    ConcreteG4 id{{1, 0, 0, 1}};
    ConcreteG4 s{{1, 1, 0, 1}};
    ConcreteG4 t{{1, 0, 2, 1}};
    std::vector<ConcreteG4> gens = {s, t};
    std::vector<ConcreteG4> elems;
    std::vector<int> mult_by_gen;
    enumerate(id, gens, elems, gd->len_, gd->bfs_word_, mult_by_gen);
    if (elems.size() != 24)
      throw Error("G4 model: closure has order " + std::to_string(elems.size()) + ", expected 24");
    fill_mult(elems, gd->mult_);
    gd->n_ = 24;
    for (auto& e : elems) gd->repr_.push_back(e.repr());
    gd->gens_ = {{"s", 3, mult_by_gen[0 * 2 + 0]}, {"t", 3, mult_by_gen[0 * 2 + 1]}};
  } else {
    int r = spec.r, n = spec.n;
    double sz = std::pow(static_cast<double>(r), n) * std::tgamma(n + 1.0);
    if (sz > kMaxOrder) throw Error("G(r,1,n) too large (cap " + std::to_string(kMaxOrder) + ")");
    ConcreteWreath id;
    id.r = r;
    id.a.assign(n, 0);
    id.sigma.resize(n);
    std::iota(id.sigma.begin(), id.sigma.end(), 0);
    std::vector<ConcreteWreath> gens;
    ConcreteWreath t = id;
    t.a[0] = 1 % r;
    gens.push_back(t);
    for (int i = 0; i + 1 < n; ++i) {
      ConcreteWreath si = id;
      std::swap(si.sigma[i], si.sigma[i + 1]);
      gens.push_back(si);
    }
    std::vector<ConcreteWreath> elems;
    std::vector<int> mult_by_gen;
    enumerate(id, gens, elems, gd->len_, gd->bfs_word_, mult_by_gen);
    long expect = 1;
    for (int i = 0; i < n; ++i) expect *= r;
    for (int i = 2; i <= n; ++i) expect *= i;
    if (static_cast<long>(elems.size()) != expect)
      throw Error("G(r,1,n) model: closure has order " + std::to_string(elems.size()) +
                  ", expected " + std::to_string(expect));
    fill_mult(elems, gd->mult_);
    gd->n_ = static_cast<int>(elems.size());
    for (auto& e : elems) gd->repr_.push_back(e.repr());
    gd->gens_.push_back({"t", r, mult_by_gen[0 * gens.size() + 0]});
    for (int i = 0; i + 1 < n; ++i) {
      std::string nm = (n == 2) ? "s" : "s" + std::to_string(i + 1);
      gd->gens_.push_back({nm, 2, mult_by_gen[0 * gens.size() + (i + 1)]});
    }
  }
  gd->finish_build();
  return gd;
}

void GroupData::finish_build() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mult(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw Error("group table has no inverse for element " + std::to_string(a));
  verify_relations();
  make_params();
}

void GroupData::verify_relations() const {
  auto check = [&](const std::string& lhs, const std::string& rhs) {
    if (eval_word(Word::parse(*this, lhs)) != eval_word(Word::parse(*this, rhs)))
      throw Error("presentation relation failed: " + lhs + " = " + rhs);
  };
  if (spec_.kind == GroupSpec::Kind::G4) {
    check("s^3", "1");
    check("t^3", "1");
    check("sts", "tst");
  } else {
    check("t^" + std::to_string(spec_.r), "1");
    int n = spec_.n;
    auto sname = [&](int i) { return (n == 2) ? std::string("s") : "s" + std::to_string(i); };
    for (int i = 1; i < n; ++i) check(sname(i) + "^2", "1");
    if (n >= 2) check("t" + sname(1) + "t" + sname(1), sname(1) + "t" + sname(1) + "t");
    for (int i = 1; i + 1 < n; ++i)
      check(sname(i) + sname(i + 1) + sname(i), sname(i + 1) + sname(i) + sname(i + 1));
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) check(sname(i) + sname(j), sname(j) + sname(i));
    // generator order sanity: t really has order r (colour of weight 1)
    for (int k = 1; k < spec_.r; ++k)
      if (eval_word(Word::parse(*this, "t^" + std::to_string(k))) == 0)
        throw Error("generator t has order below r");
  }
}

void GroupData::make_params() {
  int ng = num_gens();
  gen_cls_.assign(ng, -1);
  // conjugacy of generator elements decides shared parameter families
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < ng; ++g) {
    if (gen_cls_[g] >= 0) continue;
    int cid = static_cast<int>(classes.size());
    classes.push_back({g});
    gen_cls_[g] = cid;
    for (int h = g + 1; h < ng; ++h) {
      if (gen_cls_[h] >= 0 || gens_[h].order != gens_[g].order) continue;
      bool conj = false;
      for (int w = 0; w < n_ && !conj; ++w)
        if (conjugate(w, gens_[h].elem) == gens_[g].elem) conj = true;
      if (conj) {
        gen_cls_[h] = cid;
        classes[cid].push_back(h);
      }
    }
  }
  std::vector<Param> params;
  std::vector<int> orders;
  cls_params_.assign(classes.size(), {});
  for (size_t c = 0; c < classes.size(); ++c) {
    int m = gens_[classes[c][0]].order;
    orders.push_back(m);
    cls_params_[c].assign(std::max(0, m), -1);
    for (int i = 1; i < m; ++i) {
      std::string name;
      if (classes.size() == 1) {
        name = "xi" + std::to_string(i);
      } else if (m == 2) {
        name = "xi_" + gens_[classes[c][0]].name;
      } else {
        name = "xi_" + gens_[classes[c][0]].name + std::to_string(i);
      }
      cls_params_[c][i] = static_cast<int>(params.size());
      params.push_back({name, static_cast<int>(c), i});
    }
  }
  params_ = std::make_shared<ParamSpec>(std::move(params), std::move(orders));
}

int GroupData::param_id(int genIdx, int i) const {
  if (i == 0) return -1;
  return cls_params_.at(gen_cls_.at(genIdx)).at(i);
}

std::vector<std::vector<int>> GroupData::j_classes(const std::vector<int>& J) const {
  std::vector<int> cls(n_, -1);
  std::vector<std::vector<int>> out;
  for (int w = 0; w < n_; ++w) {
    if (cls[w] >= 0) continue;
    int cid = static_cast<int>(out.size());
    std::vector<int> orbit = {w};
    cls[w] = cid;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int j : J) {
        int c = conjugate(gens_.at(j).elem, orbit[k]);
        if (cls[c] < 0) {
          cls[c] = cid;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    auto key = [&](const std::vector<int>& v) {
      int best = v[0];
      for (int x : v)
        if (std::make_pair(len_[x], x) < std::make_pair(len_[best], best)) best = x;
      return std::make_pair(len_[best], best);
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<int> GroupData::centralizer(int a) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w)
    if (mult(w, a) == mult(a, w)) out.push_back(w);
  return out;
}

std::vector<int> GroupData::center() const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w) {
    bool central = true;
    for (int a = 0; a < n_ && central; ++a)
      if (mult(w, a) != mult(a, w)) central = false;
    if (central) out.push_back(w);
  }
  return out;
}

std::vector<DCoset> GroupData::double_cosets(int genIdx) const {
  const Generator& g = gens_.at(genIdx);
  int m = g.order;
  std::vector<int> powers;
  int cur = 0;
  for (int i = 0; i < m; ++i) {
    powers.push_back(cur);
    cur = mult(cur, g.elem);
  }
  std::vector<int> owner(n_, -1);
  std::vector<DCoset> out;
  for (int d = 0; d < n_; ++d) {
    if (owner[d] >= 0) continue;
    int cid = static_cast<int>(out.size());
    std::set<int> members;
    for (int p : powers)
      for (int q : powers) members.insert(mult(mult(p, d), q));
    DCoset dc;
    dc.members.assign(members.begin(), members.end());
    for (int w : dc.members) owner[w] = cid;
    dc.rep = dc.members[0];
    for (int w : dc.members)
      if (std::make_pair(len_[w], w) < std::make_pair(len_[dc.rep], dc.rep)) dc.rep = w;
    // classify
    bool centralizing = true;
    for (int w : dc.members)
      if (mult(w, g.elem) != mult(g.elem, w)) {
        centralizing = false;
        break;
      }
    if (centralizing) {
      dc.kind = DCoset::Kind::Centralizing;
    } else {
      dc.kind = DCoset::Kind::Neither;
      int minlen = len_[dc.rep];
      for (int d0 : dc.members) {
        if (len_[d0] != minlen) continue;
        bool additive = true;
        for (int i = 0; i < m && additive; ++i)
          for (int j = 0; j < m && additive; ++j) {
            int w = mult(mult(powers[i], d0), powers[j]);
            if (len_[w] != len_[d0] + i + j) additive = false;
          }
        if (additive) {
          dc.kind = DCoset::Kind::Additive;
          break;
        }
      }
    }
    out.push_back(std::move(dc));
  }
  std::sort(out.begin(), out.end(), [&](const DCoset& a, const DCoset& b) {
    return std::make_pair(len_[a.rep], a.rep) < std::make_pair(len_[b.rep], b.rep);
  });
  return out;
}

}  // namespace hecke
