#ifndef GKZ_NUMBERS_HPP
#define GKZ_NUMBERS_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;

// Library-wide error with a stable machine-readable code.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("BAD-RATIONAL", "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Used by the CLI and fixture loader.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rat(Int(s), 1);
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error("BAD-RATIONAL", "cannot parse rational '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const std::vector<long>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline long coord_sum(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

inline Rat coord_sum(const RatVec& v) {
  Rat s = 0;
  for (const Rat& x : v) s += x;
  return s;
}

inline RatVec to_rat_vec(const std::vector<long>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor/ceil of an exact rational as an Int.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

}  // namespace gkz

#endif
