#pragma once

#include <map>
#include <string>

#include "omkit/rational.hpp"

namespace omkit {

// Integer-coefficient polynomial in two indeterminates (x and y by default;
// univariate polynomials simply never use the second).
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(Integer c) {
    BivariatePolynomial p;
    p.add_term(0, 0, std::move(c));
    return p;
  }
  static BivariatePolynomial monomial(int i, int j, Integer c = 1) {
    BivariatePolynomial p;
    p.add_term(i, j, std::move(c));
    return p;
  }

  void add_term(int i, int j, Integer c) {
    if (c == 0) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend BivariatePolynomial operator+(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  BivariatePolynomial pow(unsigned k) const {
    BivariatePolynomial r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  Rational eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms_) {
      Rational t(c);
      for (int i = 0; i < k.first; ++i) t *= x;
      for (int j = 0; j < k.second; ++j) t *= y;
      acc += t;
    }
    return acc;
  }

  // Substitute polynomials for the two variables.
  BivariatePolynomial substitute(const BivariatePolynomial& for_x,
                                 const BivariatePolynomial& for_y) const {
    BivariatePolynomial r;
    for (const auto& [k, c] : terms_) {
      BivariatePolynomial t = constant(c) * for_x.pow(k.first) * for_y.pow(k.second);
      r = r + t;
    }
    return r;
  }

  // Canonical rendering, e.g. "x^2 + x + y" or "t^2 - 4t + 4".
  std::string to_string(const std::string& xname = "x", const std::string& yname = "y") const;

 private:
  std::map<Key, Integer> terms_;
};

}  // namespace omkit
