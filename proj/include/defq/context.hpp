#pragma once

#include <stdexcept>
#include <string>

namespace defq {

// Ambient data shared by every value in one computation: the number of
// coordinate variables d of the base ring Q[x1..xd], and the truncation
// order N of the parameter (series keep coefficients of h^0..h^N).
struct Context
{
	int vars = 1;
	int trunc = 0;

	bool operator==(const Context &) const = default;
};

struct Error : std::runtime_error
{
	explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Operands from different ambient contexts (d, N, or localization element).
struct ContextMismatchError : Error
{
	using Error::Error;
};

// A stated precondition of an operation does not hold (e.g. exp of a
// series with nonzero constant term).
struct PreconditionError : Error
{
	using Error::Error;
};

struct ParseError : Error
{
	int line, column;
	ParseError(const std::string &msg, int l, int c)
	    : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
	      line(l), column(c)
	{
	}
};

} // namespace defq
