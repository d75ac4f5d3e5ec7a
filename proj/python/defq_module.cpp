#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "defq/cli.hpp"
#include "defq/deform.hpp"
#include "defq/document.hpp"
#include "defq/expr.hpp"
#include "defq/optable.hpp"

namespace py = pybind11;
using namespace defq;

namespace {

DeformKind kind_of(const std::string &k)
{
	if (k == "assoc")
		return DeformKind::Associative;
	if (k == "poisson")
		return DeformKind::Poisson;
	throw PreconditionError("kind must be 'assoc' or 'poisson'");
}

Series<PolyDiffOp> as_op(const Value &v, int degree, const Context &ctx)
{
	Value c = coerce_zero(v, ValueKind::Operator, degree, ctx);
	if (c.kind() != ValueKind::Operator || (!c.is_zero() && c.degree() != degree))
		throw PreconditionError("expected an operator series of degree " + std::to_string(degree));
	return c.op();
}

Series<PolyVec> as_pv(const Value &v, int degree, const Context &ctx)
{
	Value c = coerce_zero(v, ValueKind::Polyvec, degree, ctx);
	if (c.kind() != ValueKind::Polyvec || (!c.is_zero() && c.degree() != degree))
		throw PreconditionError("expected a polyvector series of degree " +
		                        std::to_string(degree));
	return c.polyvec();
}

Series<Poly> as_scalar(const Value &v)
{
	if (v.kind() != ValueKind::Scalar)
		throw PreconditionError("expected a scalar series");
	return v.scalar();
}

Rat rat_from(const py::handle &h)
{
	if (py::isinstance<py::int_>(h))
		return Rat(Int(py::cast<std::string>(py::str(h))));
	std::string s = py::cast<std::string>(py::str(h));
	size_t slash = s.find('/');
	if (slash == std::string::npos)
		return Rat(Int(s));
	return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
}

py::dict report_to_dict(const Report &r)
{
	py::dict d;
	d["command"] = r.command;
	d["seed"] = r.seed;
	py::list checks;
	for (const auto &c : r.checks)
	{
		py::dict e;
		e["name"] = c.name;
		e["status"] = c.pass ? "pass" : "fail";
		if (!c.witness.empty())
			e["witness"] = c.witness;
		if (!c.note.empty())
			e["note"] = c.note;
		checks.append(e);
	}
	d["checks"] = checks;
	d["passed"] = r.passed();
	d["failed"] = r.failed();
	return d;
}

} // namespace

PYBIND11_MODULE(defq, m)
{
	m.doc() = "exact computational calculus for truncated deformation quantization";

	// translators run newest-first, so the base registration goes first
	py::register_exception<Error>(m, "DefqError", PyExc_RuntimeError);
	py::register_exception<ParseError>(m, "DefqParseError", PyExc_ValueError);

	py::class_<Context>(m, "Context")
	    .def(py::init([](int d, int N) { return Context{d, N}; }), py::arg("d"), py::arg("N"))
	    .def_readonly("d", &Context::vars)
	    .def_readonly("N", &Context::trunc)
	    .def("__repr__", [](const Context &c) {
		    return "Context(d=" + std::to_string(c.vars) + ", N=" + std::to_string(c.trunc) + ")";
	    });

	py::class_<Value>(m, "Value")
	    .def("__str__", &Value::str)
	    .def("__repr__", [](const Value &v) { return "<defq.Value " + v.str() + ">"; })
	    .def("__eq__", [](const Value &a, const Value &b) { return a == b; })
	    .def("is_zero", &Value::is_zero)
	    .def_property_readonly("kind", [](const Value &v) {
		    switch (v.kind())
		    {
		    case ValueKind::Scalar: return "scalar";
		    case ValueKind::Polyvec: return "polyvec";
		    default: return "operator";
		    }
	    });

	m.def("parse", [](const Context &ctx, const std::string &text) { return parse_expr(text, ctx); },
	      py::arg("ctx"), py::arg("text"), "parse an expression in the shared grammar");

	m.def("moyal", [](const Context &ctx, const std::vector<std::vector<py::object>> &pi) {
		      std::vector<std::vector<Rat>> rows;
		      for (const auto &r : pi)
		      {
			      std::vector<Rat> row;
			      for (const auto &e : r)
				      row.push_back(rat_from(e));
			      rows.push_back(row);
		      }
		      return Value{moyal_mc(rows, ctx)};
	      },
	      py::arg("ctx"), py::arg("pi"),
	      "Maurer-Cartan element of the Moyal product for a constant antisymmetric matrix; "
	      "entries may be ints or strings like '1/2'");

	m.def("mc_defect", [](const Context &ctx, const std::string &kind, const Value &omega) {
		      if (kind_of(kind) == DeformKind::Associative)
			      return Value{mc_defect(DPolyDgla{ctx}, as_op(omega, 1, ctx))};
		      return Value{mc_defect(TPolyDgla{ctx}, as_pv(omega, 1, ctx))};
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("omega"));

	m.def("is_mc", [](const Context &ctx, const std::string &kind, const Value &omega) {
		      if (kind_of(kind) == DeformKind::Associative)
			      return mc_defect(DPolyDgla{ctx}, as_op(omega, 1, ctx)).is_zero();
		      return mc_defect(TPolyDgla{ctx}, as_pv(omega, 1, ctx)).is_zero();
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("omega"));

	m.def("star_mul", [](const Context &ctx, const Value &omega, const Value &a, const Value &b) {
		      return Value{star_mul(as_op(omega, 1, ctx), as_scalar(a), as_scalar(b))};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("a"), py::arg("b"));

	m.def("assoc_defect",
	      [](const Context &ctx, const Value &omega, const Value &a, const Value &b,
	         const Value &c) {
		      return Value{assoc_defect(as_op(omega, 1, ctx), as_scalar(a), as_scalar(b),
		                                as_scalar(c))};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("a"), py::arg("b"), py::arg("c"));

	m.def("poisson_bracket",
	      [](const Context &ctx, const Value &omega, const Value &a, const Value &b) {
		      return Value{bracket_of_functions(as_pv(omega, 1, ctx), as_scalar(a), as_scalar(b))};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("a"), py::arg("b"));

	m.def("jacobiator",
	      [](const Context &ctx, const Value &omega, const Value &a, const Value &b,
	         const Value &c) {
		      return Value{poisson_jacobiator(as_pv(omega, 1, ctx), as_scalar(a), as_scalar(b),
		                                      as_scalar(c))};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("a"), py::arg("b"), py::arg("c"));

	m.def("gauge_apply",
	      [](const Context &ctx, const std::string &kind, const Value &gamma, const Value &omega) {
		      if (kind_of(kind) == DeformKind::Associative)
			      return Value{gauge_apply(DPolyDgla{ctx}, as_op(gamma, 0, ctx),
			                               as_op(omega, 1, ctx))};
		      return Value{gauge_apply(TPolyDgla{ctx}, as_pv(gamma, 0, ctx),
		                               as_pv(omega, 1, ctx))};
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("gamma"), py::arg("omega"),
	      "time-1 affine flow of the gauge log on a degree-1 element");

	m.def("exp_apply",
	      [](const Context &ctx, const std::string &kind, const Value &gamma, const Value &a) {
		      if (kind_of(kind) == DeformKind::Associative)
			      return Value{exp_action(DPolyDgla{ctx}, as_op(gamma, 0, ctx), as_scalar(a))};
		      return Value{exp_action(TPolyDgla{ctx}, as_pv(gamma, 0, ctx), as_scalar(a))};
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("gamma"), py::arg("a"),
	      "apply the gauge operator exp(gamma) to a scalar series");

	m.def("bch_log",
	      [](const Context &ctx, const std::string &kind, const Value &g1, const Value &g2) {
		      if (kind_of(kind) == DeformKind::Associative)
			      return Value{bch(DPolyDgla{ctx}, as_op(g1, 0, ctx), as_op(g2, 0, ctx))};
		      return Value{bch(TPolyDgla{ctx}, as_pv(g1, 0, ctx), as_pv(g2, 0, ctx))};
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("g1"), py::arg("g2"),
	      "Baker-Campbell-Hausdorff of two gauge logs");

	m.def("star_exp", [](const Context &ctx, const Value &omega, const Value &alpha) {
		      return Value{star_exp(as_op(omega, 1, ctx), as_scalar(alpha))};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("alpha"));

	m.def("star_inverse", [](const Context &ctx, const Value &omega, const Value &a) -> Value {
		      auto r = star_inverse(as_op(omega, 1, ctx), as_scalar(a));
		      if (!r.ok())
			      throw PreconditionError("augmentation is not a unit; localize at " + r.needed);
		      return Value{*r.inverse};
	      },
	      py::arg("ctx"), py::arg("omega"), py::arg("a"));

	m.def("op_order",
	      [](const Context &ctx, const Value &phi, int max_order,
	         int test_degree) -> std::optional<int> {
		      auto op = as_op(phi, 0, ctx);
		      return op_order(op[0], max_order, test_degree);
	      },
	      py::arg("ctx"), py::arg("phi"), py::arg("max_order") = 3, py::arg("test_degree") = 6);

	m.def("recognize",
	      [](const Context &ctx, const Value &phi, int order, int coeff_degree) -> py::object {
		      auto op = as_op(phi, 0, ctx);
		      auto rec = recognize_diffop(OpTable::from_op(op[0], order + coeff_degree), order,
		                                  coeff_degree);
		      if (!rec.ok())
		      {
			      py::dict fail;
			      fail["witness"] = Poly::monomial(ctx.vars, *rec.witness, 1).str();
			      fail["message"] = rec.message;
			      return fail;
		      }
		      Series<PolyDiffOp> s(ctx.trunc, PolyDiffOp::zero(ctx.vars, 0));
		      s.set(0, *rec.op);
		      return py::cast(Value{s});
	      },
	      py::arg("ctx"), py::arg("phi"), py::arg("order") = 3, py::arg("coeff_degree") = 3);

	m.def("geo_verify",
	      [](const Context &ctx, const std::string &kind, const Value &omega,
	         const std::vector<Value> &gammas, const std::optional<std::string> &s,
	         const std::optional<std::string> &t, int grid_degree, int samples, uint64_t seed) {
		      GeoBudget budget{grid_degree, samples, seed};
		      std::optional<Poly> sp, tp;
		      auto plain_poly = [&](const std::string &text, const char *which) {
			      Value v = parse_expr(text, ctx);
			      if (v.kind() != ValueKind::Scalar)
				      throw PreconditionError(std::string(which) +
				                              " must be a plain polynomial");
			      for (int k = 1; k <= ctx.trunc; ++k)
				      if (!v.scalar()[k].is_zero())
					      throw PreconditionError(std::string(which) +
					                              " must be a plain polynomial");
			      return v.scalar()[0];
		      };
		      if (s)
			      sp = plain_poly(*s, "s");
		      if (t)
			      tp = plain_poly(*t, "t");
		      Report r;
		      if (kind_of(kind) == DeformKind::Associative)
		      {
			      std::vector<Series<PolyDiffOp>> logs;
			      for (const auto &g : gammas)
				      logs.push_back(as_op(g, 0, ctx));
			      r = geo_verify_assoc(ctx, as_op(omega, 1, ctx), logs, sp, tp, budget);
		      }
		      else
		      {
			      std::vector<Series<PolyVec>> logs;
			      for (const auto &g : gammas)
				      logs.push_back(as_pv(g, 0, ctx));
			      r = geo_verify_poisson(ctx, as_pv(omega, 1, ctx), logs, sp, tp, budget);
		      }
		      return report_to_dict(r);
	      },
	      py::arg("ctx"), py::arg("kind"), py::arg("omega"),
	      py::arg("gammas") = std::vector<Value>{}, py::arg("s") = std::nullopt,
	      py::arg("t") = std::nullopt, py::arg("grid_degree") = 3, py::arg("samples") = 4,
	      py::arg("seed") = 1, "run the staged geometrization verifier and return the report");

	m.def("run",
	      [](const std::vector<std::string> &argv) {
		      std::ostringstream out, err;
		      int code = run_command(argv, out, err);
		      return py::make_tuple(code, out.str(), err.str());
	      },
	      py::arg("argv"), "invoke the command-line interface; returns (exit_code, stdout, stderr)");
}
