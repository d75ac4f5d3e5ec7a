#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace defq {

// Exact arbitrary-precision rationals; every coefficient in the library is one.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n)
{
	Int r = 1;
	for (unsigned k = 2; k <= n; ++k)
		r *= k;
	return r;
}

inline Int binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	Int r = 1;
	for (unsigned i = 0; i < k; ++i)
	{
		r *= (n - i);
		r /= (i + 1);
	}
	return r;
}

std::string rat_to_string(const Rat &q);

} // namespace defq
