#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "legtangle/fraction.hpp"

namespace legtangle {

/// Twist components in notation order: c[0] is the count for the finest
/// stage (stage n), c.back() for stage 1. Stage 1 is the coarsest
/// subdivision stage; its count may be 0 exactly when the fraction is < 1.
struct TwistVector {
  std::vector<Int> c;

  Int n() const { return static_cast<Int>(c.size()); }
  /// Count for stage j, 1 <= j <= n.
  Int stage(Int j) const { return c[c.size() - static_cast<std::size_t>(j)]; }

  friend bool operator==(const TwistVector&, const TwistVector&) = default;
  friend auto operator<=>(const TwistVector&, const TwistVector&) = default;
};

/// Flype exponents, same notation order as TwistVector.
struct FlypeVector {
  std::vector<Int> e;

  Int n() const { return static_cast<Int>(e.size()); }
  Int stage(Int j) const { return e[e.size() - static_cast<std::size_t>(j)]; }
  Int& stage_ref(Int j) { return e[e.size() - static_cast<std::size_t>(j)]; }

  static FlypeVector zeros(Int n) {
    FlypeVector f;
    f.e.assign(static_cast<std::size_t>(n), 0);
    return f;
  }

  friend bool operator==(const FlypeVector&, const FlypeVector&) = default;
  friend auto operator<=>(const FlypeVector&, const FlypeVector&) = default;
};

/// Stage-ordered Euclidean data: counts[j-1] squares of size sizes[j-1] at
/// stage j. sizes is strictly decreasing and ends at 1.
struct StageData {
  std::vector<Int> counts;
  std::vector<Int> sizes;
  Int n() const { return static_cast<Int>(counts.size()); }
};

inline StageData cf_stages(const Fraction& f) {
  StageData s;
  Int rprev = f.p, rcur = f.q;
  for (;;) {
    s.counts.push_back(rprev / rcur);
    s.sizes.push_back(rcur);
    Int rnext = rprev % rcur;
    if (rnext == 0) break;
    rprev = rcur;
    rcur = rnext;
  }
  return s;
}

/// Unique regular continued-fraction vector of a reduced positive rational.
inline TwistVector regular_cf(const Fraction& f) {
  StageData s = cf_stages(f);
  TwistVector v;
  v.c.assign(s.counts.rbegin(), s.counts.rend());
  return v;
}

/// Regularity conditions: last component >= 2 unless the vector is (1);
/// interior components >= 1; first component >= 0.
inline bool is_regular(const TwistVector& v) {
  Int n = v.n();
  if (n == 0) return false;
  if (n == 1) return v.stage(1) >= 1;
  if (v.stage(n) < 2) return false;
  for (Int j = 2; j < n; ++j)
    if (v.stage(j) < 1) return false;
  return v.stage(1) >= 0;
}

/// Exact continued-fraction value. Throws if an inner convergent vanishes,
/// which cannot happen for regular vectors but can for subtangle vectors
/// carrying a trailing zero in a non-final position.
inline Fraction cf_value(const TwistVector& v) {
  if (v.n() == 0) throw std::invalid_argument("empty twist vector");
  for (Int x : v.c)
    if (x < 0) throw std::invalid_argument("negative twist component");
  // innermost to outermost: val = q_j + 1/val
  Int num = v.c.front(), den = 1;  // q_n / 1
  for (std::size_t i = 1; i < v.c.size(); ++i) {
    if (num == 0) throw std::domain_error("continued fraction divides by zero");
    Int q = v.c[i];
    Int nn = q * num + den;
    den = num;
    num = nn;
  }
  if (num <= 0) throw std::domain_error("continued fraction value not positive");
  return Fraction(num, den);
}

inline void validate_flype(const TwistVector& v, const FlypeVector& f) {
  if (f.n() != v.n())
    throw std::invalid_argument("flype vector length " + std::to_string(f.n()) +
                                " does not match twist vector length " + std::to_string(v.n()));
  for (Int j = 1; j <= v.n(); ++j) {
    if (f.stage(j) < 0 || f.stage(j) > v.stage(j))
      throw std::invalid_argument("flype exponent out of range at stage " + std::to_string(j));
  }
}

/// All exponent vectors with zero final-stage component, in lexicographic
/// order of their notation form. There are prod_{j<n}(q_j + 1) of them.
inline std::vector<FlypeVector> enumerate_flype_vectors(const TwistVector& v) {
  if (!is_regular(v)) throw std::invalid_argument("twist vector is not regular");
  Int n = v.n();
  std::vector<FlypeVector> out;
  FlypeVector f = FlypeVector::zeros(n);
  for (;;) {
    out.push_back(f);
    // odometer over notation positions 1..n-1 (stage n is pinned to 0);
    // rightmost position is least significant
    std::size_t i = f.e.size();
    bool carried = true;
    while (i > 1) {
      --i;
      if (f.e[i] < v.c[i]) {
        ++f.e[i];
        carried = false;
        break;
      }
      f.e[i] = 0;
    }
    if (carried) return out;
  }
}

inline std::string vector_notation(const TwistVector& v, const FlypeVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.c[i]);
    if (f.e[i] > 0) s += "^" + std::to_string(f.e[i]);
  }
  return s + ")";
}

inline std::string vector_notation(const TwistVector& v) {
  return vector_notation(v, FlypeVector::zeros(v.n()));
}

/// Parses "(2,1^1,1)" or bare "2,1^1,1"; omitted exponents are zero.
/// Whitespace-insensitive. Does not check regularity or exponent bounds.
inline void parse_vector_notation(const std::string& in, TwistVector& v, FlypeVector& f) {
  std::string s;
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("empty twist vector notation: '" + in + "'");
  v.c.clear();
  f.e.clear();
  std::size_t pos = 0;
  auto read_int = [&](const char* what) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument(std::string("expected ") + what + " in vector notation at '" +
                                  s.substr(start) + "'");
    return static_cast<Int>(std::stoll(s.substr(start, pos - start)));
  };
  for (;;) {
    Int comp = read_int("component");
    Int expo = 0;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      expo = read_int("exponent");
    }
    v.c.push_back(comp);
    f.e.push_back(expo);
    if (pos == s.size()) break;
    if (s[pos] != ',')
      throw std::invalid_argument("unexpected token in vector notation: '" + s.substr(pos) + "'");
    ++pos;
  }
}

}  // namespace legtangle
