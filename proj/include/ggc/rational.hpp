#ifndef GGC_RATIONAL_HPP
#define GGC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace ggc {

// Exact rational scalar used throughout the library.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

// High-precision float, used only by the S-matrix fusion oracle
// (62 decimal digits, a bit above 200 bits).
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<62>,
                                  boost::multiprecision::et_off>;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "p", "-p", "p/q".  Throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto ok_part = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!ok_part(s)) throw std::invalid_argument("malformed rational: " + s);
    return Rat(BigInt(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!ok_part(num) || !ok_part(den) || BigInt(den) == 0)
    throw std::invalid_argument("malformed rational: " + s);
  return Rat(BigInt(num)) / Rat(BigInt(den));
}

inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace ggc

#endif
