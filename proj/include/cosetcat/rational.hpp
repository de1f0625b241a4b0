#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace cosetcat {

// Exact arithmetic everywhere: all linear algebra is over GMP rationals.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p" / "p/q" form (q > 0, reduced).
std::string rat_str(const Rat& r);

// Accepts "p" or "p/q"; throws Error{InvalidInput} on malformed input.
Rat rat_parse(const std::string& s);

using RatVec = std::vector<Rat>;

bool is_zero(const RatVec& v);

} // namespace cosetcat
