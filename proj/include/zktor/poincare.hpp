#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zktor {

/// Polynomial in one variable with integer coefficients, used for Poincare
/// series and cell counts.  Stored dense, ascending degree, trailing zeros
/// trimmed so equality is structural.
class PoincarePolynomial {
public:
  PoincarePolynomial() = default;

  explicit PoincarePolynomial(std::vector<long long> coeffs)
      : c_(std::move(coeffs)) {
    trim();
  }

  static PoincarePolynomial zero() { return PoincarePolynomial(); }
  static PoincarePolynomial one() { return monomial(0, 1); }

  static PoincarePolynomial monomial(int degree, long long coeff = 1) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    PoincarePolynomial p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    p.c_.back() = coeff;
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero

  long long coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(d)];
  }

  const std::vector<long long>& coefficients() const { return c_; }

  long long sum() const {
    long long s = 0;
    for (long long x : c_) s += x;
    return s;
  }

  PoincarePolynomial& operator+=(const PoincarePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  friend PoincarePolynomial operator+(PoincarePolynomial a,
                                      const PoincarePolynomial& b) {
    a += b;
    return a;
  }

  friend PoincarePolynomial operator*(const PoincarePolynomial& a,
                                      const PoincarePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    PoincarePolynomial out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
  }

  PoincarePolynomial scaled(long long s) const {
    PoincarePolynomial out = *this;
    for (long long& x : out.c_) x *= s;
    out.trim();
    return out;
  }

  PoincarePolynomial shifted(int degree) const {
    if (is_zero()) return zero();
    if (degree < 0) throw std::invalid_argument("negative shift");
    PoincarePolynomial out;
    out.c_.assign(static_cast<std::size_t>(degree), 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
  }

  bool operator==(const PoincarePolynomial&) const = default;

  /// Ascending text form, e.g. "1+4x+5x^2+2x^3"; the zero polynomial is "0".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d < c_.size(); ++d) {
      long long c = c_[d];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? "+" : "-";
      else if (c < 0) out += "-";
      long long a = c > 0 ? c : -c;
      if (d == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a);
        out += var;
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

private:
  std::vector<long long> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

/// Parse the ascending text form produced by to_string, e.g. "1+4x+5x^2".
/// Accepts an optional explicit coefficient, a variable letter, and "^k".
inline PoincarePolynomial parse_poincare(const std::string& text,
                                         char var = 'x') {
  std::vector<long long> coeffs;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial \"" + text + "\": " +
                                why);
  };
  if (text.empty()) fail("empty string");
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (i == 0 && text[i] == '+') fail("leading '+'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= text.size()) fail("dangling sign");
    long long coeff = 1;
    bool saw_digits = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = coeff * 10 + (text[i] - '0');
        ++i;
      }
      saw_digits = true;
    }
    int deg = 0;
    if (i < text.size() && text[i] == var) {
      ++i;
      deg = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[i])))
          fail("missing exponent");
        deg = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
          deg = deg * 10 + (text[i] - '0');
          ++i;
        }
      }
    } else if (!saw_digits) {
      fail(std::string("expected coefficient or '") + var + "' at position " +
           std::to_string(i));
    }
    if (deg >= static_cast<int>(coeffs.size()))
      coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
    coeffs[static_cast<std::size_t>(deg)] += sign * coeff;
  }
  return PoincarePolynomial(std::move(coeffs));
}

}  // namespace zktor
