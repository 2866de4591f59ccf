#include "thetameans/modular.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "thetameans/rng.hpp"

namespace thetameans {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GInt: add overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("GInt: sub overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GInt: mul overflow");
    return r;
}

long long pos_mod(long long x, long long m) { return ((x % m) + m) % m; }

// i^e for e taken mod 4
GInt unit_power_of_i(long long e) {
    switch (pos_mod(e, 4)) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

bool is_real_mat(const GMat& g) {
    return g.g11.im == 0 && g.g12.im == 0 && g.g21.im == 0 && g.g22.im == 0;
}

bool even(long long x) { return pos_mod(x, 2) == 0; }

} // namespace

GInt gi_add(GInt a, GInt b) { return {checked_add(a.re, b.re), checked_add(a.im, b.im)}; }
GInt gi_sub(GInt a, GInt b) { return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)}; }
GInt gi_neg(GInt a) { return {checked_sub(0, a.re), checked_sub(0, a.im)}; }

GInt gi_mul(GInt a, GInt b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

bool gi_is_unit(GInt a) {
    return (a.re == 1 && a.im == 0) || (a.re == -1 && a.im == 0) ||
           (a.re == 0 && a.im == 1) || (a.re == 0 && a.im == -1);
}

Cx gi_to_cx(GInt a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

GMat gmat_identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }

GMat gmat_real(long long a11, long long a12, long long a21, long long a22) {
    return {{a11, 0}, {a12, 0}, {a21, 0}, {a22, 0}};
}

GMat mat_mul(const GMat& a, const GMat& b) {
    return {gi_add(gi_mul(a.g11, b.g11), gi_mul(a.g12, b.g21)),
            gi_add(gi_mul(a.g11, b.g12), gi_mul(a.g12, b.g22)),
            gi_add(gi_mul(a.g21, b.g11), gi_mul(a.g22, b.g21)),
            gi_add(gi_mul(a.g21, b.g12), gi_mul(a.g22, b.g22))};
}

GInt mat_det(const GMat& a) {
    return gi_sub(gi_mul(a.g11, a.g22), gi_mul(a.g12, a.g21));
}

GMat mat_inv(const GMat& a) {
    const GInt d = mat_det(a);
    if (!gi_is_unit(d)) throw domain_error("mat_inv: determinant is not a unit of Z[i]");
    // 1/d for units: 1->1, -1->-1, i->-i, -i->i
    const GInt dinv = (d.im == 0) ? d : gi_neg(d);
    const GMat adj{a.g22, gi_neg(a.g12), gi_neg(a.g21), a.g11};
    return {gi_mul(dinv, adj.g11), gi_mul(dinv, adj.g12),
            gi_mul(dinv, adj.g21), gi_mul(dinv, adj.g22)};
}

namespace {

// exact division a / d in Z[i]
GInt gi_div_exact(GInt a, GInt d) {
    const long long n = checked_add(checked_mul(d.re, d.re), checked_mul(d.im, d.im));
    if (n == 0) throw domain_error("gi_div_exact: division by zero");
    const GInt num = gi_mul(a, {d.re, -d.im});
    if (pos_mod(num.re, n) != 0 || pos_mod(num.im, n) != 0)
        throw domain_error("gi_div_exact: not divisible in Z[i]");
    return {num.re / n, num.im / n};
}

} // namespace

GMat mat_conjugate(const GMat& p, const GMat& m) {
    const GInt d = mat_det(p);
    const GMat adj{p.g22, gi_neg(p.g12), gi_neg(p.g21), p.g11};
    const GMat num = mat_mul(mat_mul(p, m), adj);
    return {gi_div_exact(num.g11, d), gi_div_exact(num.g12, d),
            gi_div_exact(num.g21, d), gi_div_exact(num.g22, d)};
}

namespace mats {

const GMat& identity() { static const GMat g = gmat_identity(); return g; }
const GMat& m0_half() { static const GMat g = gmat_real(1, -2, 0, 1); return g; }
const GMat& m1_half() { static const GMat g = gmat_real(1, 0, 2, 1); return g; }
const GMat& m0_quarter() { static const GMat g{{1, 0}, {-1, -1}, {0, 0}, {1, 0}}; return g; }
const GMat& m1_quarter() { static const GMat g{{-1, 0}, {0, 0}, {1, 1}, {1, 0}}; return g; }
const GMat& basis_p() { static const GMat g{{-1, 1}, {0, 1}, {0, 0}, {1, 0}}; return g; }
const GMat& t_squared() { static const GMat g = gmat_real(1, 2, 0, 1); return g; }
const GMat& s() { static const GMat g = gmat_real(0, -1, 1, 0); return g; }
const GMat& i_j() { static const GMat g{{0, 0}, {0, 1}, {0, -1}, {0, 0}}; return g; }

} // namespace mats

bool in_gamma2(const GMat& g) {
    if (!is_real_mat(g) || mat_det(g) != GInt{1, 0}) return false;
    return even(g.g11.re - 1) && even(g.g12.re) && even(g.g21.re) && even(g.g22.re - 1);
}

bool in_gamma24(const GMat& g) {
    if (!is_real_mat(g) || mat_det(g) != GInt{1, 0}) return false;
    return pos_mod(g.g11.re, 4) == 1 && pos_mod(g.g22.re, 4) == 1 &&
           even(g.g12.re) && even(g.g21.re);
}

bool in_gamma12(const GMat& g) {
    if (!is_real_mat(g) || mat_det(g) != GInt{1, 0}) return false;
    return (even(g.g11.re) || even(g.g12.re)) && (even(g.g21.re) || even(g.g22.re));
}

bool in_gamma24_iJ(const GMat& g) {
    return in_gamma24(g) || in_gamma24(mat_mul(mats::i_j(), g));
}

GMat normalize_pgamma12(const GMat& g) {
    static const std::array<GInt, 4> units{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (const GInt& u : units) {
        const GMat c{gi_mul(u, g.g11), gi_mul(u, g.g12), gi_mul(u, g.g21), gi_mul(u, g.g22)};
        if (!is_real_mat(c) || mat_det(c) != GInt{1, 0}) continue;
        if (c.g21.re > 0 || (c.g21.re == 0 && c.g22.re > 0)) return c;
    }
    throw domain_error("normalize_pgamma12: no unit scalar yields a normalized real matrix");
}

GInt chi(const GMat& g_norm) {
    const long long g21 = g_norm.g21.re;
    const long long g22 = g_norm.g22.re;
    const bool e21 = even(g21);
    const bool e22 = even(g22);
    if (e21 && !e22) return unit_power_of_i(g22 - 1);
    if (!e21 && e22) return unit_power_of_i(-g21);
    throw domain_error("chi: parity violation (g21, g22 must have opposite parity)");
}

Tau::Tau(Cx value) : v_(value) {
    if (!std::isfinite(v_.real()) || !std::isfinite(v_.imag()) || v_.imag() <= 0.0)
        throw domain_error("Tau: requires finite value with Im > 0");
}

Tau mobius(const GMat& g, const Tau& tau) {
    const Cx t = tau.value();
    const Cx den = gi_to_cx(g.g21) * t + gi_to_cx(g.g22);
    if (std::abs(den) <= 1e-14) throw pole_error("mobius: denominator vanishes");
    return Tau((gi_to_cx(g.g11) * t + gi_to_cx(g.g12)) / den);
}

std::pair<Cx, Cx> factor_check(const GMat& g, const Tau& tau) {
    const Cx t = tau.value();
    const Cx lhs = gi_to_cx(g.g21) * t + gi_to_cx(g.g22);
    const GMat gn = normalize_pgamma12(g);
    const Cx rhs = gi_to_cx(chi(gn)) * (gi_to_cx(gn.g21) * t + gi_to_cx(gn.g22));
    return {lhs, rhs};
}

GMat word_sample(const std::vector<GMat>& gens, int max_len, std::uint64_t seed) {
    if (gens.empty()) throw domain_error("word_sample: gens must be non-empty");
    if (max_len < 0 || max_len > 16) throw domain_error("word_sample: max_len must be in [0, 16]");
    std::vector<GMat> letters;
    letters.reserve(2 * gens.size());
    for (const GMat& g : gens) letters.push_back(g);
    for (const GMat& g : gens) letters.push_back(mat_inv(g));
    SampleRng rng(seed);
    const int len = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_len) + 1));
    GMat w = gmat_identity();
    for (int k = 0; k < len; ++k)
        w = mat_mul(w, letters[rng.next_below(letters.size())]);
    return w;
}

} // namespace thetameans
