#pragma once

#include <map>

#include "defq/expr.hpp"

namespace defq {

enum class DeformKind
{
	Associative,
	Poisson
};

// A text document: a header fixing the ambient context, named bindings in
// the shared expression grammar, and command parameters. Line-oriented:
//
//   # comment
//   grammar_version 1
//   kind assoc            (assoc | poisson)
//   d 2
//   N 4
//   let omega = h*(D[1|2] - D[2|1])
//   let gamma1 = h*x1*D[1]
//   param s = x1
//
// Header keys come first; `let` binds an expression; `param` stores an
// expression for the command layer (localization elements s and t).
struct Document
{
	int grammar_version = 1;
	Context ctx;
	DeformKind kind = DeformKind::Associative;
	std::vector<std::pair<std::string, Value>> bindings;
	std::map<std::string, std::string> params;

	const Value *find(const std::string &name) const;
	const Value &require(const std::string &name) const;
	// All bindings whose names start with the prefix, in document order.
	std::vector<Value> all_with_prefix(const std::string &prefix) const;
	std::optional<Poly> param_poly(const std::string &name) const;
};

Document parse_document(const std::string &text);

} // namespace defq
