#pragma once

// The skew-q-derivative (ratio q^2 in X) and the skew-q^{-1}-derivative
// (ratio q^{-2} in Y), computed on coefficients.
//
// For phi larger than the degree both return the zero polynomial of degree 0.

#include "skewrank/homopoly.hpp"

namespace skewrank {

/// phi-th skew-q-derivative in X: coefficient i becomes f_i beta(r-i, phi),
/// degree r - phi.
HPoly q_derivative(const HPoly& p, int phi);

/// phi-th skew-q^{-1}-derivative in Y: coefficient i becomes
/// g_{i+phi} q^{2(phi(1-i-phi)+sigma(phi))} beta(i+phi, phi), degree s - phi.
HPoly q_inv_derivative(const HPoly& p, int phi);

/// nu^[j](l) evaluated at X = Y = 1. Throws IdentityViolation unless the
/// value is beta(j, j) when l == j and 0 otherwise.
Rational eval_nu_derivative_at_ones(long q, int j, int l);

/// Closed forms of derivatives of the mu and nu powers.
HPoly mu_power_derivative(long q, int k, int phi);      // beta(k,phi) mu^[k-phi]
HPoly nu_power_derivative(long q, int k, int phi);      // beta(k,phi) nu^[k-phi]
HPoly mu_power_inv_derivative(long q, int k, int phi);  // q^{-2 sigma} beta gamma(lambda,phi) mu^[k-phi](lambda-2phi)
HPoly nu_power_inv_derivative(long q, int k, int phi);  // (-1)^phi beta(k,phi) nu^[k-phi]

/// Right side of the Leibniz rule for the skew-q-derivative of f * g.
HPoly leibniz_q(const HPoly& f, const HPoly& g, int phi);
/// Right side of the Leibniz rule for the skew-q^{-1}-derivative of f * g.
HPoly leibniz_q_inv(const HPoly& f, const HPoly& g, int phi);

}  // namespace skewrank
