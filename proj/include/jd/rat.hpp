#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace jd {

// Exact rationals. cpp_rational keeps lowest terms and a positive denominator,
// which is exactly the contract the rest of the engine assumes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

inline std::string to_string(const Rat &r)
{
	if (denominator(r) == 1)
		return numerator(r).str();
	return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace jd
