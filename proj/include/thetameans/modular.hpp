// Exact 2x2 matrices over the Gaussian integers Z[i]: group membership
// predicates, the normalization + character of the theta transformation law,
// Moebius action on the upper half plane, and seeded word sampling.
//
// All matrix arithmetic is exact 64-bit integer arithmetic with overflow
// checks; the membership predicates are never tolerance-based.
#ifndef THETAMEANS_MODULAR_HPP
#define THETAMEANS_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "thetameans/scalar.hpp"

namespace thetameans {

// Gaussian integer, exact components.
struct GInt {
    long long re = 0;
    long long im = 0;

    friend bool operator==(const GInt&, const GInt&) = default;
};

GInt gi_add(GInt a, GInt b);
GInt gi_sub(GInt a, GInt b);
GInt gi_mul(GInt a, GInt b);
GInt gi_neg(GInt a);
bool gi_is_unit(GInt a); // one of 1, -1, i, -i
Cx gi_to_cx(GInt a);

// 2x2 matrix over Z[i], entries g11 g12 / g21 g22.
struct GMat {
    GInt g11, g12, g21, g22;

    friend bool operator==(const GMat&, const GMat&) = default;
};

GMat gmat_identity();
// Convenience constructor for purely real integer matrices.
GMat gmat_real(long long a11, long long a12, long long a21, long long a22);

GMat mat_mul(const GMat& a, const GMat& b);
GInt mat_det(const GMat& a);
/// Exact inverse; requires det(a) to be a unit of Z[i].
GMat mat_inv(const GMat& a);
/// p * m * p^{-1} computed exactly through the adjugate; requires the result
/// to have Gaussian-integer entries (throws domain_error otherwise). Unlike
/// mat_inv this also accepts p with non-unit determinant, e.g. the basis
/// change with det = -1+i used for the (1/4,1/4,1) monodromy generators.
GMat mat_conjugate(const GMat& p, const GMat& m);

// Named matrices of the monodromy/theta machinery.
namespace mats {
const GMat& identity();
const GMat& m0_half();      // circuit matrix M0 of (1/2,1/2,1): [[1,-2],[0,1]]
const GMat& m1_half();      // circuit matrix M1 of (1/2,1/2,1): [[1,0],[2,1]]
const GMat& m0_quarter();   // circuit matrix M0 of (1/4,1/4,1): [[1,-1-i],[0,1]]
const GMat& m1_quarter();   // circuit matrix M1 of (1/4,1/4,1): [[-1,0],[1+i,1]]
const GMat& basis_p();      // basis change [[-1+i, i],[0,1]]
const GMat& t_squared();    // [[1,2],[0,1]]  ( = P M0 P^{-1} )
const GMat& s();            // [[0,-1],[1,0]]
const GMat& i_j();          // [[0,i],[-i,0]] ( = P M1 P^{-1} )
} // namespace mats

// Congruence-group membership. gamma2 / gamma24 / gamma12 additionally demand
// purely real integer entries and det = 1.
bool in_gamma2(const GMat& g);       // g == I mod 2
bool in_gamma24(const GMat& g);      // g11, g22 == 1 mod 4; g12, g21 even
bool in_gamma12(const GMat& g);      // g11*g12 and g21*g22 even
bool in_gamma24_iJ(const GMat& g);   // Gamma(2,4) or (iJ) * Gamma(2,4)

/// Multiplies g by the unique unit scalar in {1,-1,i,-i} yielding a purely
/// real det-1 matrix with g21 > 0, or g21 = 0 and g22 > 0. Throws
/// domain_error if no unit scalar works.
GMat normalize_pgamma12(const GMat& g);

/// Fourth root of unity chi(g) of the theta transformation law; g must be
/// normalized (output of normalize_pgamma12). Exactly one of g21, g22 must be
/// even; otherwise throws domain_error (parity violation).
GInt chi(const GMat& g_norm);

// A point of the upper half plane; construction validates Im > 0.
class Tau {
  public:
    explicit Tau(Cx value);
    Cx value() const { return v_; }

  private:
    Cx v_;
};

/// (g11 tau + g12) / (g21 tau + g22); throws pole_error when the denominator
/// vanishes (|.| <= 1e-14) and domain_error through Tau when the image leaves
/// the upper half plane.
Tau mobius(const GMat& g, const Tau& tau);

/// Both sides of the factorization lemma for Gamma(2,4)<iJ>:
/// lhs = g21 tau + g22, rhs = chi(g') (g'21 tau + g'22) with
/// g' = normalize_pgamma12(g). The caller asserts closeness.
std::pair<Cx, Cx> factor_check(const GMat& g, const Tau& tau);

/// Deterministic seeded product of a random word in gens and their inverses;
/// word length uniform in [0, max_len]. Requires gens non-empty and
/// max_len <= 16.
GMat word_sample(const std::vector<GMat>& gens, int max_len, std::uint64_t seed);

} // namespace thetameans

#endif
