#include "munarini/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace munarini {

std::string VariableId::name() const {
  switch (kind) {
    case VarKind::Alpha: return "alpha";
    case VarKind::Beta: return "beta";
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Y: return "y" + std::to_string(index);
  }
  throw std::logic_error("VariableId: bad kind");
}

std::optional<VariableId> VariableId::parse(const std::string& s) {
  if (s == "alpha") return alpha();
  if (s == "beta") return beta();
  if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1) return std::nullopt;
    return s[0] == 'x' ? x(idx) : y(idx);
  }
  return std::nullopt;
}

namespace {

long long total_degree(const ExponentMap& e) {
  long long d = 0;
  for (const auto& [v, exp] : e) d += exp;
  return d;
}

// Lex comparison over the ascending VariableId order: the monomial with the
// larger exponent on the earliest differing variable is the greater one.
int lex_cmp(const ExponentMap& a, const ExponentMap& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) return 1;   // a has a positive exponent earlier
    if (ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

ExponentMap merge_exponents(const ExponentMap& a, const ExponentMap& b) {
  ExponentMap out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

}  // namespace

bool TermOrderGreater::operator()(const ExponentMap& a, const ExponentMap& b) const {
  long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return lex_cmp(a, b) > 0;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(ExponentMap{}, c);
  return p;
}

Polynomial Polynomial::variable(VariableId v) {
  Polynomial p;
  p.terms_.emplace(ExponentMap{{v, 1}}, Rational(1));
  return p;
}

void Polynomial::add_term(const ExponentMap& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [ep, cp] : p.terms_)
    for (const auto& [eq, cq] : q.terms_)
      r.add_term(merge_exponents(ep, eq), cp * cq);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Polynomial Polynomial::pow(unsigned long long e) const {
  Polynomial r = constant(1);
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

Rational Polynomial::evaluate(const std::map<VariableId, Rational>& assignment) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (const auto& [v, exp] : e) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: unassigned variable " + v.name());
      term *= rational_pow(it->second, static_cast<unsigned long long>(exp));
    }
    total += term;
  }
  return total;
}

long long Polynomial::degree_where(const std::function<bool(VariableId)>& pred) const {
  long long best = -1;
  for (const auto& [e, c] : terms_) {
    long long d = 0;
    for (const auto& [v, exp] : e)
      if (pred(v)) d += exp;
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::rename(const std::map<VariableId, VariableId>& mapping) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    ExponentMap out;
    out.reserve(e.size());
    for (const auto& [v, exp] : e) {
      auto it = mapping.find(v);
      out.emplace_back(it == mapping.end() ? v : it->second, exp);
    }
    std::sort(out.begin(), out.end());
    r.add_term(out, c);
  }
  return r;
}

std::vector<VariableId> Polynomial::variables() const {
  std::vector<VariableId> vars;
  for (const auto& [e, c] : terms_)
    for (const auto& [v, exp] : e)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool need_coeff = abs_c != 1 || e.empty();
    if (need_coeff) out << to_string(abs_c);
    bool first_var = !need_coeff;
    for (const auto& [v, exp] : e) {
      if (!first_var) out << "*";
      first_var = false;
      out << v.name();
      if (exp > 1) out << "^" << exp;
    }
  }
  return out.str();
}

Polynomial multinomial_poly(const Polynomial& p, const IndexVector& n) {
  if (!in_natural_cone(n)) return Polynomial{};
  Polynomial prod = Polynomial::constant(1);
  long long t = norm(n);
  for (long long j = 0; j < t; ++j)
    prod *= p - Polynomial::constant(Rational(j));
  Integer den = 1;
  for (long long e : n) den *= factorial(static_cast<unsigned long long>(e));
  return Rational(Integer(1), den) * prod;
}

}  // namespace munarini
