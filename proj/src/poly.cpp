#include "hypertutte/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hypertutte {

UniPolynomial UniPolynomial::monomial(int degree, long long coeff) {
  UniPolynomial p;
  p.add_term(degree, coeff);
  return p;
}

UniPolynomial UniPolynomial::from_coeffs(const std::vector<long long>& ascending) {
  UniPolynomial p;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    p.add_term(static_cast<int>(i), ascending[i]);
  return p;
}

void UniPolynomial::add_term(int degree, long long coeff) {
  if (coeff == 0) return;
  if (degree < 0) throw std::invalid_argument("negative degree");
  auto it = coeffs_.find(degree);
  if (it == coeffs_.end()) {
    coeffs_.emplace(degree, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

long long UniPolynomial::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

int UniPolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

long long UniPolynomial::eval_at_one() const {
  long long s = 0;
  for (const auto& [d, c] : coeffs_) s += c;
  return s;
}

UniPolynomial UniPolynomial::operator+(const UniPolynomial& o) const {
  UniPolynomial r = *this;
  for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
  return r;
}

UniPolynomial UniPolynomial::operator*(const UniPolynomial& o) const {
  UniPolynomial r;
  for (const auto& [d1, c1] : coeffs_)
    for (const auto& [d2, c2] : o.coeffs_) r.add_term(d1 + d2, c1 * c2);
  return r;
}

std::vector<long long> UniPolynomial::coeff_vector() const {
  std::vector<long long> v(static_cast<std::size_t>(degree() + 1), 0);
  for (const auto& [d, c] : coeffs_) v[static_cast<std::size_t>(d)] = c;
  return v;
}

std::string UniPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (d == 0 || a != 1) out << a;
    if (d >= 1) {
      out << var;
      if (d >= 2) out << "^" << d;
    }
    first = false;
  }
  return out.str();
}

void MonomialSet::add_term(const std::vector<int>& exponents, long long coeff) {
  if (exponents.size() != vars_.size())
    throw std::invalid_argument("exponent arity mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MonomialSet::all_coeffs_equal(long long c) const {
  for (const auto& [e, v] : terms_)
    if (v != c) return false;
  return true;
}

bool MonomialSet::uniform_sign() const {
  bool pos = false, neg = false;
  for (const auto& [e, v] : terms_) {
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  return !(pos && neg);
}

void MonomialSet::negate() {
  for (auto& [e, v] : terms_) v = -v;
}

MonomialSet MonomialSet::project_onto(const std::vector<std::string>& keep_vars) const {
  std::vector<int> keep_idx;
  for (const auto& k : keep_vars) {
    int idx = -1;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == k) idx = static_cast<int>(i);
    if (idx < 0) throw std::invalid_argument("unknown variable: " + k);
    keep_idx.push_back(idx);
  }
  MonomialSet out(keep_vars);
  for (const auto& [e, v] : terms_) {
    std::vector<int> proj;
    proj.reserve(keep_idx.size());
    for (int i : keep_idx) proj.push_back(e[static_cast<std::size_t>(i)]);
    out.add_term(proj, v);
  }
  return out;
}

std::string MonomialSet::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    long long a = v;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << vars_[i];
      if (e[i] >= 2) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << mono.str();
    }
    first = false;
  }
  return out.str();
}

}  // namespace hypertutte
