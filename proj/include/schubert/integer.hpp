#ifndef SCHUBERT_INTEGER_HPP
#define SCHUBERT_INTEGER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schubert {

// All counts and coefficients in this library are exact integers; no
// floating point is used anywhere.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) {
  Int v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
  return v;
}

inline long long to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large: " + v.get_str());
  return v.get_si();
}

}  // namespace schubert

#endif
