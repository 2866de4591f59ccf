// Theta constants with characteristics p,q in {0,1}, the modular functions
// lambda and zeta, twice formulas, fundamental-domain predicates and
// reduction, and the Schwarz maps.
#ifndef THETAMEANS_THETA_HPP
#define THETAMEANS_THETA_HPP

#include "thetameans/modular.hpp"

namespace thetameans {

// theta_00, theta_01, theta_10 at one tau (theta_11 vanishes identically and
// is not carried). Construction via theta_all validates t00 != 0 and the
// Jacobi identity t00^4 = t01^4 + t10^4 to relative 1e-12.
struct ThetaTriple {
    Cx t00, t01, t10;
};

// Squared theta constants at 2*tau, straight from the twice formulas; kept as
// squares so no branch of a square root is ever chosen.
struct ThetaSquares {
    Cx t00_sq, t01_sq, t10_sq;
};

/// Theta constant theta_pq(tau) by the symmetric q-series; the ring of terms
/// of index n is grown until its magnitude falls below tol. Requires
/// Im tau >= 1e-3 (below that the term count explodes and nothing here needs
/// such points) and tol >= 1e-16.
Cx theta_pq(int p, int q, const Tau& tau, double tol = 1e-16);

/// All three theta constants; validates the ThetaTriple invariant
/// (numerics_bug on violation).
ThetaTriple theta_all(const Tau& tau);

/// lambda(tau) = theta_10^4 / theta_00^4, inverse of the (1/2,1/2,1) Schwarz
/// map; Gamma(2)-invariant.
Cx lambda_map(const Tau& tau);

/// zeta(tau) = 4 theta_01^4 theta_10^4 / theta_00^8, inverse of the
/// (1/4,1/4,1) Schwarz map; Gamma_12-invariant; equals 4 lambda (1 - lambda).
Cx zeta_map(const Tau& tau);

/// Twice formulas: squared theta constants at 2*tau from the triple at tau:
///   theta_00(2t)^2 = (t00^2 + t01^2)/2
///   theta_01(2t)^2 = t00 t01
///   theta_10(2t)^2 = (t00^2 - t01^2)/2
ThetaSquares theta_double(const ThetaTriple& t);

/// Fundamental domain of Gamma(2):
/// -1 < Re <= 1, |tau - 1/2| >= 1/2, |tau + 1/2| > 1/2.
bool in_gamma2_domain(const Tau& tau);

/// Fundamental domain of Gamma_12: (-1 < Re <= 1 and |tau| > 1) or
/// (|tau| = 1 within 1e-12 and 0 <= Re <= 1).
bool in_gamma12_domain(const Tau& tau);

struct ReduceResult {
    Tau reduced;
    GMat g; // in Gamma_12, with tau = g . reduced
};

/// Reduces tau into the Gamma_12 fundamental domain by alternating
/// translations by 2 and inversions tau -> -1/tau, accumulating the exact
/// integer word. Iteration cap 10000 (non_convergence signals degeneracy
/// near the real axis).
ReduceResult reduce_to_gamma12_domain(const Tau& tau);

/// Schwarz map for (1/2,1/2,1) restricted to the lens |z| < 1, |z-1| < 1:
/// tau = i F(1/2,1/2,1;1-z) / F(1/2,1/2,1;z); lambda(tau) = z.
Tau schwarz_half(Cx z);

/// Schwarz map for (1/4,1/4,1) on the same lens, first expression:
/// tau = i (pi F(1/4,1/4,1;z) + B(3/4,3/4) sqrt(1-z) F(3/4,3/4,3/2;1-z))
///         / (pi F(1/4,1/4,1;z));     zeta(tau) = z.
Tau schwarz_quarter(Cx z);

/// Same map through the alternative expression
/// tau = i (-pi F(1/4,1/4,1;z) + B(1/4,1/4) F(1/4,1/4,1/2;1-z))
///         / (pi F(1/4,1/4,1;z)); used as a cross-expression check.
Tau schwarz_quarter_alt(Cx z);

} // namespace thetameans

#endif
