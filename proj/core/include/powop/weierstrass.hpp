#ifndef POWOP_WEIERSTRASS_HPP
#define POWOP_WEIERSTRASS_HPP

#include <cstdint>
#include <vector>

#include <powop/hpoly.hpp>
#include <powop/laurent.hpp>

namespace powop {

/// Coefficients [w_0, ..., w_{p+1}] of
///
///     w(h, a) = (a - p)(a + (-1)^p)^p - (h - p^2 + (-1)^p) a
///
/// from the binomial closed form
///
///     w_i = (-1)^{p(p-i+1)} [ C(p, i-1) + (-1)^{p+1} p C(p, i) ],  i != 1,
///
/// with C(p, -1) = 0 and w_1 = -h. Throws usage_error for composite p.
std::vector<HPolynomial> w_coefficients(std::uint64_t p);

/// Same list obtained by multiplying out the product form directly.
std::vector<HPolynomial> w_expand_oracle(std::uint64_t p);

/// w(h, a) as an alpha-polynomial of degree p + 1.
AlphaPolynomial w_polynomial(std::uint64_t p);

/// Horner evaluation of f at a, with the h-polynomial coefficients injected
/// into the series ring. Throws window_error if the result could reach
/// exponents above max_exp.
HLaurentSeries evaluate(const AlphaPolynomial& f, const HLaurentSeries& a);

inline HLaurentSeries w_eval(const AlphaPolynomial& w, const HLaurentSeries& a) { return evaluate(w, a); }

inline AlphaPolynomial w_derivative(const AlphaPolynomial& w) { return w.derivative(); }

} // namespace powop

#endif
