#pragma once

#include "edl/gamma.hpp"
#include "edl/quadrature.hpp"
#include "edl/root_system.hpp"
#include "edl/sampling.hpp"

namespace edl {

// S_n(alpha, beta, gamma): the double gamma product, in log space.
// Domain: Re(a), Re(b) > 0, gamma > -min{1/n, a/(n-1), b/(n-1)}.
GammaProduct selberg_closed(int n, double alpha, double beta, double gamma);

// F_n(gamma) = prod_{j=1..n} Gamma(1 + j gamma)/Gamma(1 + gamma).
GammaProduct mehta_closed(int n, double gamma);
// Gaussian-weighted sampling of prod_{i<j} |t_i - t_j|^{2 gamma}; needs
// samples >= 10^4.
IntegralEstimate mehta_mc(int n, double gamma, McOptions opts);

// C_n(gamma) = Gamma(1 + n gamma)/Gamma(1 + gamma)^n.
GammaProduct circular_closed(int n, double gamma);
// Quadrature for n <= 3 and integer gamma, sampling otherwise.
IntegralEstimate circular_numeric(int n, double gamma, EstimateMethod method,
                                  QuadOptions qopts = {}, McOptions mopts = {});

// prod_i Gamma(s d_i + 1) / (Gamma(s + 1) Gamma(s d_i - s + 1)), Re(s) > 0.
GammaProduct macdonald_closed(const RootSystem& rs, double s);

// The gamma product over positive roots of the full system with exact
// rational pairings <rho(k), a^vee>; k per orbit with Re(k) >= 0.
GammaProduct opdam_closed(const NonReducedRootSystem& R, const MultiplicityFunction& k);

// (1/(2 pi)^r) integral over the torus of prod_{a>0} (2 sin(n_a . z / 2))^{2 k_a}.
IntegralEstimate torus_integral(const NonReducedRootSystem& R, const MultiplicityFunction& k,
                                EstimateMethod method, QuadOptions qopts = {},
                                McOptions mopts = {});

// The |sin|^(2k) forms of the torus integrand, exposed for the geometry checks.
std::vector<SinForm> torus_forms(const NonReducedRootSystem& R, const MultiplicityFunction& k);

}  // namespace edl
