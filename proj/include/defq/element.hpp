#pragma once

#include "defq/locpoly.hpp"
#include "defq/poly.hpp"

namespace defq {

// Uniform helpers over the two element spaces operators act on: plain
// polynomials (C) and fractions (a principal localization C_s). Operator
// and polyvector coefficients are always plain polynomials; only the
// arguments vary, so coordinate-form operators extend to localizations by
// literal re-evaluation.

inline Poly zero_like(const Poly &p) { return Poly::zero(p.vars()); }
inline LocPoly zero_like(const LocPoly &p) { return LocPoly::zero(p.s()); }

inline Poly one_like(const Poly &p) { return Poly::one(p.vars()); }
inline LocPoly one_like(const LocPoly &p) { return LocPoly::one(p.s()); }

// View a polynomial coefficient inside the element space of `proto`.
inline Poly embed_poly(const Poly &f, const Poly &) { return f; }
inline LocPoly embed_poly(const Poly &f, const LocPoly &proto)
{
	return LocPoly::embed(f, proto.s());
}

inline std::string element_str(const Poly &p) { return p.str(); }
inline std::string element_str(const LocPoly &p) { return p.str(); }

} // namespace defq
