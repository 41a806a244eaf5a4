#pragma once

namespace copasbias {

// Standard normal density phi(x).
double norm_pdf(double x);

// Standard normal distribution function Phi(x), accurate in both tails.
double norm_cdf(double x);

// log Phi(x). Uses the asymptotic tail expansion for x < -10 so deeply
// negative arguments do not go through an underflowed Phi.
double norm_logcdf(double x);

// Inverse of Phi on (0, 1). Wichura's AS 241 (PPND16), ~1 ulp of double.
double norm_quantile(double p);

// Inverse Mills ratio lambda(z) = phi(z)/Phi(z), the hazard of the
// standard normal. Evaluated through the scaled complementary error
// function so the deep left tail keeps full relative accuracy; for large
// positive z the value underflows smoothly toward 0.
double inverse_mills(double z);

// lambda(z) * (z + lambda(z)). Lies in (0, 1) for all finite z with
// representable result; decreasing in z, -> 1 as z -> -inf.
double shrinkage_c(double z);

// Upper-tail probability of a chi-square with one degree of freedom.
double chi2_1df_sf(double x);

}  // namespace copasbias
