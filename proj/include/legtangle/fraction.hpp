#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legtangle {

using Int = long long;

/// Reduced positive rational p/q. Non-reduced input is reduced on
/// construction; callers that need to report the reduction can check
/// with was_reduced(num, den).
struct Fraction {
  Int p = 1;
  Int q = 1;

  Fraction() = default;
  Fraction(Int num, Int den) {
    if (num <= 0 || den <= 0)
      throw std::invalid_argument("fraction must be positive: " +
                                  std::to_string(num) + "/" + std::to_string(den));
    Int g = std::gcd(num, den);
    p = num / g;
    q = den / g;
  }

  static bool was_reduced(Int num, Int den) { return std::gcd(num, den) != 1; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;

  std::string str() const {
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
  }
};

/// Parses "P/Q" or integer "P". Sets *reduced when the input was not in
/// lowest terms.
inline Fraction parse_fraction(const std::string& s, bool* reduced = nullptr) {
  auto bad = [&]() {
    return std::invalid_argument("cannot parse fraction: '" + s + "'");
  };
  std::size_t slash = s.find('/');
  auto to_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t pos = 0;
    Int v;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != t.size()) throw bad();
    return v;
  };
  Int num, den;
  if (slash == std::string::npos) {
    num = to_int(s);
    den = 1;
  } else {
    num = to_int(s.substr(0, slash));
    den = to_int(s.substr(slash + 1));
  }
  if (num <= 0 || den <= 0) throw bad();
  if (reduced) *reduced = Fraction::was_reduced(num, den);
  return Fraction(num, den);
}

/// Point on the half-integer grid, stored with doubled coordinates so all
/// arithmetic stays integral.
struct Pt {
  Int x = 0;
  Int z = 0;
  friend bool operator==(const Pt&, const Pt&) = default;
  friend auto operator<=>(const Pt& a, const Pt& b) {
    // row-major: rows (z) first
    if (auto c = a.z <=> b.z; c != 0) return c;
    return a.x <=> b.x;
  }
};

}  // namespace legtangle
