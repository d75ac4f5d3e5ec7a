#pragma once

#include "defq/polydiffop.hpp"
#include "defq/polyvec.hpp"

namespace defq {

// Canonical printers for the shared expression grammar. Everything they
// emit re-parses to the same value (grammar_version 1).

std::string show_poly(const Poly &p);
std::string show_coeff(const PolyVec &v);
std::string show_coeff(const PolyDiffOp &op);

std::string show_series(const Series<Poly> &s);
std::string show_series(const Series<PolyVec> &s);
std::string show_series(const Series<PolyDiffOp> &s);

} // namespace defq
