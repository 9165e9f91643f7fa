#ifndef HYPERTUTTE_POLY_HPP
#define HYPERTUTTE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hypertutte {

/// Exact-integer univariate polynomial. Zero coefficients are never stored.
class UniPolynomial {
 public:
  UniPolynomial() = default;

  static UniPolynomial zero() { return UniPolynomial(); }
  static UniPolynomial one() { return monomial(0, 1); }
  static UniPolynomial monomial(int degree, long long coeff);
  static UniPolynomial from_coeffs(const std::vector<long long>& ascending);

  void add_term(int degree, long long coeff);
  long long coeff(int degree) const;
  /// Degree of the polynomial, -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  long long eval_at_one() const;

  UniPolynomial operator+(const UniPolynomial& o) const;
  UniPolynomial operator*(const UniPolynomial& o) const;
  bool operator==(const UniPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPolynomial& o) const { return !(*this == o); }
  bool operator<(const UniPolynomial& o) const { return coeffs_ < o.coeffs_; }

  /// Ascending-degree coefficient vector (empty for zero).
  std::vector<long long> coeff_vector() const;

  /// Renders in ascending degree, e.g. "1 + 3v + 3v^2" for var "v".
  std::string str(const std::string& var = "\xce\xbe") const;

  const std::map<int, long long>& terms() const { return coeffs_; }

 private:
  std::map<int, long long> coeffs_;
};

/// Multivariate monomial collection over a fixed, named variable set.
/// Exponent vectors are indexed by the variable list; no zero coefficients.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  void add_term(const std::vector<int>& exponents, long long coeff);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// True when every stored coefficient equals `c`.
  bool all_coeffs_equal(long long c) const;
  /// True when all coefficients share one sign.
  bool uniform_sign() const;
  /// Multiplies every coefficient by -1.
  void negate();
  /// Drops the listed variables (substitutes 1), merging collapsed terms.
  MonomialSet project_onto(const std::vector<std::string>& keep_vars) const;

  bool operator==(const MonomialSet& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, long long> terms_;
};

}  // namespace hypertutte

#endif
