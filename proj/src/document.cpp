#include "defq/document.hpp"

#include <sstream>

namespace defq {

const Value *Document::find(const std::string &name) const
{
	for (const auto &[n, v] : bindings)
		if (n == name)
			return &v;
	return nullptr;
}

const Value &Document::require(const std::string &name) const
{
	const Value *v = find(name);
	if (!v)
		throw PreconditionError("document does not bind '" + name + "'");
	return *v;
}

std::vector<Value> Document::all_with_prefix(const std::string &prefix) const
{
	std::vector<Value> out;
	for (const auto &[n, v] : bindings)
		if (n.rfind(prefix, 0) == 0)
			out.push_back(v);
	return out;
}

std::optional<Poly> Document::param_poly(const std::string &name) const
{
	auto it = params.find(name);
	if (it == params.end())
		return std::nullopt;
	Value v = parse_expr(it->second, ctx);
	if (v.kind() != ValueKind::Scalar)
		throw PreconditionError("parameter '" + name + "' must be a plain polynomial");
	for (int k = 1; k <= ctx.trunc; ++k)
		if (!v.scalar()[k].is_zero())
			throw PreconditionError("parameter '" + name + "' must be a plain polynomial");
	return v.scalar()[0];
}

namespace {

std::string trim(const std::string &s)
{
	size_t b = s.find_first_not_of(" \t\r");
	size_t e = s.find_last_not_of(" \t\r");
	return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

Document parse_document(const std::string &text)
{
	Document doc;
	bool have_version = false, have_kind = false, have_d = false, have_n = false;
	std::istringstream in(text);
	std::string raw;
	int lineno = 0;
	auto fail = [&](const std::string &msg) -> void { throw ParseError(msg, lineno, 1); };

	while (std::getline(in, raw))
	{
		++lineno;
		std::string line = trim(raw);
		if (line.empty() || line[0] == '#')
			continue;
		std::istringstream ls(line);
		std::string key;
		ls >> key;
		if (key == "grammar_version")
		{
			int v = -1;
			ls >> v;
			if (v != 1)
				fail("unsupported grammar_version (expected 1)");
			have_version = true;
		}
		else if (key == "kind")
		{
			std::string k;
			ls >> k;
			if (k == "assoc")
				doc.kind = DeformKind::Associative;
			else if (k == "poisson")
				doc.kind = DeformKind::Poisson;
			else
				fail("kind must be 'assoc' or 'poisson'");
			have_kind = true;
		}
		else if (key == "d")
		{
			ls >> doc.ctx.vars;
			if (doc.ctx.vars < 1)
				fail("d must be at least 1");
			have_d = true;
		}
		else if (key == "N")
		{
			ls >> doc.ctx.trunc;
			if (doc.ctx.trunc < 0)
				fail("N must be nonnegative");
			have_n = true;
		}
		else if (key == "let" || key == "param")
		{
			if (!(have_version && have_kind && have_d && have_n))
				fail("header (grammar_version, kind, d, N) must precede bindings");
			std::string rest = trim(line.substr(key.size()));
			size_t eq = rest.find('=');
			if (eq == std::string::npos)
				fail("expected 'name = expression'");
			std::string name = trim(rest.substr(0, eq));
			std::string expr = trim(rest.substr(eq + 1));
			if (name.empty() || expr.empty())
				fail("expected 'name = expression'");
			if (key == "param")
				doc.params[name] = expr;
			else
			{
				if (doc.find(name))
					fail("binding '" + name + "' is defined twice");
				try
				{
					doc.bindings.emplace_back(name, parse_expr(expr, doc.ctx));
				}
				catch (const ParseError &e)
				{
					throw ParseError(std::string(e.what()) + " in binding '" + name + "'",
					                 lineno, e.column);
				}
			}
		}
		else
			fail("unknown directive '" + key + "'");
	}
	if (!(have_version && have_kind && have_d && have_n))
		throw ParseError("document is missing header fields (grammar_version, kind, d, N)", lineno,
		                 1);
	return doc;
}

} // namespace defq
