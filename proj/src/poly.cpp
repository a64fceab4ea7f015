#include "hecke/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hecke {

ParamSpec::ParamSpec(std::vector<Param> params, std::vector<int> class_orders)
    : params_(std::move(params)), class_orders_(std::move(class_orders)) {
  for (int i = 0; i < static_cast<int>(params_.size()); ++i) {
    const Param& p = params_[i];
    if (p.cls < 0 || p.cls >= static_cast<int>(class_orders_.size()))
      throw Error("ParamSpec: bad class id for " + p.name);
    if (p.index < 1 || p.index >= class_orders_[p.cls])
      throw Error("ParamSpec: index out of range for " + p.name);
    if (!by_name_.emplace(p.name, i).second)
      throw Error("ParamSpec: duplicate parameter " + p.name);
  }
}

int ParamSpec::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

bool ParamSpec::operator==(const ParamSpec& o) const {
  if (class_orders_ != o.class_orders_) return false;
  if (params_.size() != o.params_.size()) return false;
  for (size_t i = 0; i < params_.size(); ++i) {
    if (params_[i].name != o.params_[i].name || params_[i].cls != o.params_[i].cls ||
        params_[i].index != o.params_[i].index)
      return false;
  }
  return true;
}

Monomial Monomial::var(int param, int exp) {
  Monomial m;
  if (exp > 0) m.e_.emplace_back(param, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [p, e] : e_) d += e;
  return d;
}

int Monomial::exponent(int param) const {
  for (auto& [p, e] : e_)
    if (p == param) return e;
  return 0;
}

void Monomial::set(int param, int exp) {
  auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(param, 0),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != e_.end() && it->first == param) {
    if (exp == 0)
      e_.erase(it);
    else
      it->second = exp;
  } else if (exp != 0) {
    e_.insert(it, {param, exp});
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i, ++j;
    }
  }
  return r;
}

bool MonoGrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // lex on full exponent vectors, earlier parameter more significant
  size_t i = 0, j = 0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first;
    if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
    ++i, ++j;
  }
  return i < ea.size();
}

Poly Poly::constant(ParamSpecPtr spec, Int c) {
  Poly p(std::move(spec));
  if (c != 0) p.terms_.emplace(Monomial(), std::move(c));
  return p;
}

Poly Poly::var(ParamSpecPtr spec, int param, int exp) {
  if (!spec || param < 0 || param >= spec->size()) throw Error("Poly::var: bad parameter id");
  Poly p(std::move(spec));
  if (exp == 0) return constant(p.spec_, 1);
  p.terms_.emplace(Monomial::var(param, exp), 1);
  return p;
}

Poly Poly::var(ParamSpecPtr spec, const std::string& name, int exp) {
  int id = spec ? spec->find(name) : -1;
  if (id < 0) throw Error("Poly::var: unknown parameter " + name);
  return var(std::move(spec), id, exp);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

void Poly::check_compatible(const Poly& o) const {
  if (spec_ == o.spec_) return;
  if (spec_ && o.spec_ && *spec_ == *o.spec_) return;
  throw Error("Poly: parameter spec mismatch");
}

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  if (!spec_) spec_ = o.spec_;
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  if (!spec_) spec_ = o.spec_;
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(spec_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(spec_ ? spec_ : o.spec_);
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Int& c) const {
  Poly r(spec_);
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

Int Poly::rho() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Int(0) : it->second;
}

std::optional<int> Poly::index_sum_residue(int m) const {
  if (m <= 0) throw Error("index_sum_residue: m must be positive");
  if (terms_.empty()) return std::nullopt;
  int cls = -1;
  std::optional<int> residue;
  for (auto& [mono, c] : terms_) {
    long sum = 0;
    for (auto& [p, e] : mono.entries()) {
      const Param& par = spec_->param(p);
      if (cls == -1) cls = par.cls;
      if (par.cls != cls) throw Error("index_sum_residue: parameters from several classes");
      sum += static_cast<long>(par.index) * e;
    }
    int r = static_cast<int>(sum % m);
    if (!residue)
      residue = r;
    else if (*residue != r)
      return std::nullopt;
  }
  if (cls != -1 && spec_->class_order(cls) != m)
    throw Error("index_sum_residue: m does not match the class order");
  return residue;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  check_compatible(o);
  if (o.is_zero()) throw Error("divide_exact: division by zero");
  Poly rem = *this;
  Poly quot(spec_ ? spec_ : o.spec_);
  const auto& [lm, lc] = *o.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    // monomial divisibility of leading terms
    Monomial q;
    bool ok = true;
    {
      size_t i = 0;
      for (auto& [p, e] : rm.entries()) {
        int eo = lm.exponent(p);
        if (eo > e) {
          ok = false;
          break;
        }
        if (e - eo > 0) q.set(p, e - eo);
        (void)i;
      }
      if (ok) {
        for (auto& [p, e] : lm.entries())
          if (rm.exponent(p) < e) {
            ok = false;
            break;
          }
      }
    }
    if (!ok) return std::nullopt;
    Int qc = rc / lc;
    if (qc * lc != rc) return std::nullopt;
    Poly t(spec_ ? spec_ : o.spec_);
    t.terms_.emplace(q, qc);
    quot += t;
    rem -= t * o;
  }
  return quot;
}

namespace {

void print_mono(std::ostream& os, const ParamSpec& spec, const Monomial& m, const Int& c,
                bool first) {
  Int a = c;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  bool printed = false;
  if (a != 1 || m.is_one()) {
    os << a.get_str();
    printed = true;
  }
  for (auto& [p, e] : m.entries()) {
    if (printed) os << "*";
    os << spec.param(p).name;
    if (e > 1) os << "^" << e;
    printed = true;
  }
}

}  // namespace

std::string Poly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    print_mono(os, *spec_, m, c, first);
    first = false;
  }
  return os.str();
}

// ---- text parser: integers, parameter names, + - * ^ ( ) ----

namespace {

struct Parser {
  ParamSpecPtr spec;
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  Poly parse_expr() {
    Poly r = parse_term();
    while (true) {
      if (eat('+'))
        r += parse_term();
      else if (eat('-'))
        r -= parse_term();
      else
        break;
    }
    return r;
  }

  Poly parse_term() {
    Poly r = parse_factor();
    while (eat('*')) r = r * parse_factor();
    return r;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (eat('^')) {
      int e = parse_int_literal();
      if (e < 0) throw Error("Poly::parse: negative exponent");
      Poly r = Poly::constant(spec, 1);
      for (int i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  int parse_int_literal() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error("Poly::parse: expected integer at '" + s.substr(pos) + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  Poly parse_base() {
    skip();
    if (eat('-')) return -parse_factor();
    if (eat('(')) {
      Poly r = parse_expr();
      if (!eat(')')) throw Error("Poly::parse: missing ')'");
      return r;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Poly::constant(spec, Int(s.substr(start, pos - start)));
    }
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      return Poly::var(spec, name);
    }
    throw Error("Poly::parse: unexpected input at '" + s.substr(pos) + "'");
  }
};

}  // namespace

Poly Poly::parse(ParamSpecPtr spec, const std::string& s) {
  Parser p{std::move(spec), s};
  Poly r = p.parse_expr();
  p.skip();
  if (p.pos != s.size()) throw Error("Poly::parse: trailing input in '" + s + "'");
  return r;
}

}  // namespace hecke
