#include "defq/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace defq {

// ---- printers -----------------------------------------------------------

std::string show_poly(const Poly &p) { return p.str(); }

namespace {

bool needs_parens(const Poly &p)
{
	return p.terms().size() > 1 ||
	       (p.terms().size() == 1 && p.terms().begin()->second < 0);
}

// Shared shape of the polyvector/operator printers: a sum of
// coefficient-times-symbol terms.
std::string show_terms(const std::vector<std::pair<Poly, std::string>> &terms)
{
	if (terms.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto &[coeff, sym] : terms)
	{
		Poly c = coeff;
		bool neg = false;
		if (c.terms().size() == 1 && c.terms().begin()->second < 0)
		{
			neg = true;
			c = -c;
		}
		if (first)
			os << (neg ? "-" : "");
		else
			os << (neg ? " - " : " + ");
		first = false;
		bool one = c.is_constant() && c.constant_term() == 1;
		if (one && sym.empty())
			os << "1";
		else if (one)
			os << sym;
		else
		{
			if (needs_parens(c))
				os << "(" << c.str() << ")";
			else
				os << c.str();
			if (!sym.empty())
				os << "*" << sym;
		}
	}
	return os.str();
}

std::string wedge_symbol(const PolyVec::IndexTuple &idx)
{
	std::ostringstream os;
	for (size_t i = 0; i < idx.size(); ++i)
		os << (i ? "^" : "") << "dx" << idx[i];
	return os.str();
}

std::string slots_symbol(const PolyDiffOp::Slots &slots)
{
	std::ostringstream os;
	os << "D[";
	for (size_t s = 0; s < slots.size(); ++s)
	{
		if (s)
			os << "|";
		bool first = true;
		for (size_t v = 0; v < slots[s].size(); ++v)
			for (uint32_t k = 0; k < slots[s][v]; ++k)
			{
				if (!first)
					os << ",";
				os << (v + 1);
				first = false;
			}
	}
	os << "]";
	return os.str();
}

} // namespace

std::string show_coeff(const PolyVec &v)
{
	std::vector<std::pair<Poly, std::string>> terms;
	for (const auto &[idx, f] : v.terms())
		terms.emplace_back(f, wedge_symbol(idx));
	return show_terms(terms);
}

std::string show_coeff(const PolyDiffOp &op)
{
	std::vector<std::pair<Poly, std::string>> terms;
	for (const auto &[slots, f] : op.terms())
		terms.emplace_back(f, op.degree() == -1 ? "" : slots_symbol(slots));
	return show_terms(terms);
}

namespace {

template <class V, class Show>
std::string show_series_impl(const Series<V> &s, Show show)
{
	if (s.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (int k = 0; k <= s.trunc(); ++k)
	{
		if (s[k].is_zero())
			continue;
		std::string c = show(s[k]);
		if (!first)
			os << " + ";
		first = false;
		if (k == 0)
			os << c;
		else
		{
			os << "h";
			if (k > 1)
				os << "^" << k;
			os << "*(" << c << ")";
		}
	}
	return os.str();
}

} // namespace

std::string show_series(const Series<Poly> &s)
{
	return show_series_impl(s, [](const Poly &p) { return p.str(); });
}
std::string show_series(const Series<PolyVec> &s)
{
	return show_series_impl(s, [](const PolyVec &v) { return show_coeff(v); });
}
std::string show_series(const Series<PolyDiffOp> &s)
{
	return show_series_impl(s, [](const PolyDiffOp &op) { return show_coeff(op); });
}

bool Value::is_zero() const
{
	return std::visit([](const auto &s) { return s.is_zero(); }, v);
}

int Value::degree() const
{
	if (kind() == ValueKind::Polyvec)
	{
		for (int k = 0; k <= polyvec().trunc(); ++k)
			if (!polyvec()[k].is_zero())
				return polyvec()[k].degree();
		return polyvec()[0].degree();
	}
	if (kind() == ValueKind::Operator)
	{
		for (int k = 0; k <= op().trunc(); ++k)
			if (!op()[k].is_zero())
				return op()[k].degree();
		return op()[0].degree();
	}
	return 0;
}

std::string Value::str() const
{
	return std::visit([](const auto &s) { return show_series(s); }, v);
}

// ---- parser -------------------------------------------------------------

namespace {

struct Token
{
	enum Type
	{
		Number,
		H,
		Var,   // x<k>, payload = index
		Dx,    // dx<k>, payload = index
		DOp,   // D
		Plus,
		Minus,
		Star,
		Caret,
		Slash,
		LParen,
		RParen,
		LBracket,
		RBracket,
		Bar,
		Comma,
		End
	} type;
	long payload = 0;
	int line = 1, col = 1;
};

struct Lexer
{
	const std::string &text;
	size_t pos = 0;
	int line = 1, col = 1;

	explicit Lexer(const std::string &t) : text(t) {}

	void advance(size_t n)
	{
		for (size_t i = 0; i < n && pos < text.size(); ++i, ++pos)
		{
			if (text[pos] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
	}

	Token next()
	{
		while (pos < text.size() && isspace((unsigned char)text[pos]))
			advance(1);
		Token t;
		t.line = line;
		t.col = col;
		if (pos >= text.size())
		{
			t.type = Token::End;
			return t;
		}
		char c = text[pos];
		if (isdigit((unsigned char)c))
		{
			size_t end = pos;
			while (end < text.size() && isdigit((unsigned char)text[end]))
				++end;
			t.type = Token::Number;
			t.payload = std::stol(text.substr(pos, end - pos));
			advance(end - pos);
			return t;
		}
		if (isalpha((unsigned char)c))
		{
			size_t end = pos;
			while (end < text.size() &&
			       (isalnum((unsigned char)text[end]) || text[end] == '_'))
				++end;
			std::string word = text.substr(pos, end - pos);
			if (word == "h")
				t.type = Token::H;
			else if (word == "D")
				t.type = Token::DOp;
			else if (word.size() > 2 && word[0] == 'd' && word[1] == 'x' &&
			         std::all_of(word.begin() + 2, word.end(),
			                     [](char ch) { return isdigit((unsigned char)ch); }))
			{
				t.type = Token::Dx;
				t.payload = std::stol(word.substr(2));
			}
			else if (word.size() > 1 && word[0] == 'x' &&
			         std::all_of(word.begin() + 1, word.end(),
			                     [](char ch) { return isdigit((unsigned char)ch); }))
			{
				t.type = Token::Var;
				t.payload = std::stol(word.substr(1));
			}
			else
				throw ParseError("unknown identifier '" + word + "'", line, col);
			advance(end - pos);
			return t;
		}
		switch (c)
		{
		case '+': t.type = Token::Plus; break;
		case '-': t.type = Token::Minus; break;
		case '*': t.type = Token::Star; break;
		case '^': t.type = Token::Caret; break;
		case '/': t.type = Token::Slash; break;
		case '(': t.type = Token::LParen; break;
		case ')': t.type = Token::RParen; break;
		case '[': t.type = Token::LBracket; break;
		case ']': t.type = Token::RBracket; break;
		case '|': t.type = Token::Bar; break;
		case ',': t.type = Token::Comma; break;
		default:
			throw ParseError(std::string("unexpected character '") + c + "'", line, col);
		}
		advance(1);
		return t;
	}
};

struct Parser
{
	Lexer lex;
	Token cur;
	Context ctx;

	Parser(const std::string &text, const Context &c) : lex(text), ctx(c) { cur = lex.next(); }

	[[noreturn]] void error(const std::string &msg) const
	{
		throw ParseError(msg, cur.line, cur.col);
	}

	void eat(Token::Type t, const char *what)
	{
		if (cur.type != t)
			error(std::string("expected ") + what);
		cur = lex.next();
	}

	Value make_scalar(const Poly &p, int at = 0) const
	{
		Series<Poly> s(ctx.trunc, Poly::zero(ctx.vars));
		if (at <= ctx.trunc)
			s.set(at, p);
		return Value{s};
	}

	Value parse()
	{
		Value v = expr();
		if (cur.type != Token::End)
			error("trailing input");
		return v;
	}

	Value expr()
	{
		bool neg = false;
		if (cur.type == Token::Minus)
		{
			neg = true;
			cur = lex.next();
		}
		else if (cur.type == Token::Plus)
			cur = lex.next();
		Value acc = term();
		if (neg)
			acc = negate(acc);
		while (cur.type == Token::Plus || cur.type == Token::Minus)
		{
			bool minus = cur.type == Token::Minus;
			cur = lex.next();
			Value rhs = term();
			acc = add(acc, minus ? negate(rhs) : rhs);
		}
		return acc;
	}

	Value term()
	{
		Value acc = factor();
		while (cur.type == Token::Star)
		{
			cur = lex.next();
			acc = multiply(acc, factor());
		}
		return acc;
	}

	Value factor()
	{
		Value base = atom();
		while (cur.type == Token::Caret)
		{
			cur = lex.next();
			if (cur.type != Token::Number)
				error("expected an integer exponent");
			long e = cur.payload;
			cur = lex.next();
			base = power(base, e);
		}
		return base;
	}

	Value atom()
	{
		switch (cur.type)
		{
		case Token::Minus:
			cur = lex.next();
			return negate(atom());
		case Token::Number:
		{
			Rat q(cur.payload);
			cur = lex.next();
			if (cur.type == Token::Slash)
			{
				cur = lex.next();
				if (cur.type != Token::Number || cur.payload == 0)
					error("expected a nonzero integer denominator");
				q /= cur.payload;
				cur = lex.next();
			}
			return make_scalar(Poly::constant(ctx.vars, q));
		}
		case Token::H:
			cur = lex.next();
			return make_scalar(Poly::one(ctx.vars), 1);
		case Token::Var:
		{
			long i = cur.payload;
			if (i < 1 || i > ctx.vars)
				error("unknown variable x" + std::to_string(i) + " (ambient has " +
				      std::to_string(ctx.vars) + ")");
			cur = lex.next();
			return make_scalar(Poly::variable(ctx.vars, (int)i));
		}
		case Token::Dx:
			return dx_chain();
		case Token::DOp:
			return d_atom();
		case Token::LParen:
		{
			cur = lex.next();
			Value v = expr();
			eat(Token::RParen, "')'");
			return v;
		}
		default:
			error("expected a value");
		}
	}

	// dx<i> (^ dx<j>)* -- a wedge of coordinate fields
	Value dx_chain()
	{
		PolyVec::IndexTuple idx;
		auto take = [&]() {
			long i = cur.payload;
			if (i < 1 || i > ctx.vars)
				error("wedge index dx" + std::to_string(i) + " out of range 1.." +
				      std::to_string(ctx.vars));
			idx.push_back((int)i);
			cur = lex.next();
		};
		take();
		while (cur.type == Token::Caret)
		{
			// lookahead: '^' followed by dx continues the chain; an
			// integer exponent is rejected for graded values elsewhere
			size_t save_pos = lex.pos;
			int save_line = lex.line, save_col = lex.col;
			Token save_cur = cur;
			cur = lex.next();
			if (cur.type != Token::Dx)
			{
				lex.pos = save_pos;
				lex.line = save_line;
				lex.col = save_col;
				cur = save_cur;
				break;
			}
			take();
		}
		PolyVec v = PolyVec::term(Poly::one(ctx.vars), idx);
		Series<PolyVec> s(ctx.trunc, PolyVec::zero(ctx.vars, v.degree()));
		s.set(0, v);
		return Value{s};
	}

	// D[slot|slot|...] with comma-separated derivative indices per slot
	Value d_atom()
	{
		cur = lex.next();
		eat(Token::LBracket, "'['");
		std::vector<Exponents> slots;
		Exponents slot((size_t)ctx.vars, 0);
		auto flush = [&]() {
			slots.push_back(slot);
			slot.assign((size_t)ctx.vars, 0);
		};
		while (true)
		{
			if (cur.type == Token::Number)
			{
				long i = cur.payload;
				if (i < 1 || i > ctx.vars)
					error("derivative index " + std::to_string(i) + " out of range 1.." +
					      std::to_string(ctx.vars));
				slot[(size_t)(i - 1)] += 1;
				cur = lex.next();
				if (cur.type == Token::Comma)
				{
					cur = lex.next();
					continue;
				}
			}
			if (cur.type == Token::Bar)
			{
				flush();
				cur = lex.next();
				continue;
			}
			if (cur.type == Token::RBracket)
			{
				flush();
				cur = lex.next();
				break;
			}
			error("expected a derivative index, '|' or ']'");
		}
		PolyDiffOp op = PolyDiffOp::term(Poly::one(ctx.vars), slots);
		Series<PolyDiffOp> s(ctx.trunc, PolyDiffOp::zero(ctx.vars, op.degree()));
		s.set(0, op);
		return Value{s};
	}

	// ---- value arithmetic ------------------------------------------------

	Value negate(const Value &a) const
	{
		return std::visit([](const auto &s) { return Value{-s}; }, a.v);
	}

	Value add(const Value &a, const Value &b) const
	{
		// exact zeros are kind-agnostic
		if (a.is_zero() && a.kind() == ValueKind::Scalar && b.kind() != ValueKind::Scalar)
			return b;
		if (b.is_zero() && b.kind() == ValueKind::Scalar && a.kind() != ValueKind::Scalar)
			return a;
		if (a.kind() != b.kind())
			error("cannot add values of different kinds");
		if (a.kind() == ValueKind::Scalar)
			return Value{a.scalar() + b.scalar()};
		if (a.kind() == ValueKind::Polyvec)
			return Value{a.polyvec() + b.polyvec()};
		return Value{a.op() + b.op()};
	}

	template <class V>
	static Series<V> scalar_mul(const Series<Poly> &a, const Series<V> &b)
	{
		Series<V> r(b.trunc(), b.zero_like());
		for (int i = 0; i <= a.trunc(); ++i)
		{
			if (a[i].is_zero())
				continue;
			for (int j = 0; i + j <= b.trunc(); ++j)
			{
				if (b[j].is_zero())
					continue;
				r.set(i + j, r[i + j] + poly_scale(a[i], b[j]));
			}
		}
		return r;
	}

	static PolyVec poly_scale(const Poly &f, const PolyVec &v)
	{
		PolyVec r(v.vars(), v.degree());
		for (const auto &[idx, c] : v.terms())
			r.add_term(idx, f * c);
		return r;
	}

	static PolyDiffOp poly_scale(const Poly &f, const PolyDiffOp &op)
	{
		PolyDiffOp r(op.vars(), op.degree());
		for (const auto &[slots, c] : op.terms())
			r.add_term(slots, f * c);
		return r;
	}

	Value multiply(const Value &a, const Value &b) const
	{
		if (a.kind() == ValueKind::Scalar && b.kind() == ValueKind::Scalar)
			return Value{a.scalar() * b.scalar()};
		if (a.kind() == ValueKind::Scalar && b.kind() == ValueKind::Polyvec)
			return Value{scalar_mul(a.scalar(), b.polyvec())};
		if (a.kind() == ValueKind::Scalar && b.kind() == ValueKind::Operator)
			return Value{scalar_mul(a.scalar(), b.op())};
		if (b.kind() == ValueKind::Scalar)
			return multiply(b, a);
		if (a.kind() == ValueKind::Polyvec && b.kind() == ValueKind::Polyvec)
			return Value{a.polyvec().mul_with(
			    b.polyvec(), [](const PolyVec &x, const PolyVec &y) { return wedge(x, y); })};
		error("operators cannot be multiplied in an expression");
	}

	Value power(const Value &a, long e) const
	{
		if (e < 0)
			error("negative exponents are not in the grammar");
		if (a.kind() != ValueKind::Scalar)
			error("only scalars can be raised to a power");
		Series<Poly> r(ctx.trunc, Poly::zero(ctx.vars));
		r.set(0, Poly::one(ctx.vars));
		for (long k = 0; k < e; ++k)
			r = r * a.scalar();
		return Value{r};
	}
};

} // namespace

Value parse_expr(const std::string &text, const Context &ctx)
{
	Parser p(text, ctx);
	return p.parse();
}

Value coerce_zero(const Value &val, ValueKind kind, int degree, const Context &ctx)
{
	if (val.kind() == kind)
		return val;
	if (!(val.is_zero() && val.kind() == ValueKind::Scalar))
		throw PreconditionError("value has the wrong kind and is not an exact zero");
	if (kind == ValueKind::Polyvec)
		return Value{Series<PolyVec>(ctx.trunc, PolyVec::zero(ctx.vars, degree))};
	if (kind == ValueKind::Operator)
		return Value{Series<PolyDiffOp>(ctx.trunc, PolyDiffOp::zero(ctx.vars, degree))};
	return val;
}

} // namespace defq
