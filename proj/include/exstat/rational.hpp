#pragma once

// Exact rational scalar used throughout the library.  All verdict-bearing
// arithmetic (basis conversion, audits, microstate counts) runs on these;
// floating point appears only in spectra and numeric evaluation.
//
// ExactScalar is GMP's canonical rational: always in lowest terms with a
// positive denominator, so equality and sign tests are exact predicates.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace exstat {

using ExactScalar = mpq_class;

inline ExactScalar rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  ExactScalar r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const ExactScalar& r) { return r.get_den() == 1; }

inline bool is_zero(const ExactScalar& r) { return sgn(r) == 0; }

// True iff r is an integer in {0, 1}.
inline bool is_binary(const ExactScalar& r) {
  return is_integer(r) && (r == 0 || r == 1);
}

inline double to_double(const ExactScalar& r) { return r.get_d(); }

// Serializes as "p/q", or just "p" when the value is an integer.  This is the
// wire format for every report and golden file.
inline std::string to_string(const ExactScalar& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parses the "p/q" | "p" format back into an exact rational.
inline ExactScalar parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  ExactScalar r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const std::vector<ExactScalar>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace exstat
