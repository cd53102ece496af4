#ifndef P1ENUM_PROJGEOM_HPP
#define P1ENUM_PROJGEOM_HPP

// Homogeneous bivariate polynomials, projective points, places, effective
// divisors, Galois types, and the PGL_2 actions on all of them.

#include "p1enum/gfield.hpp"

namespace p1enum {

/// Homogeneous polynomial of degree c.size()-1 over the view's base field:
/// f = sum c[i] x^i y^(n-i).
struct HomPoly {
    std::vector<FieldElem> c;
    u32 degree() const { return u32(c.size()) - 1; }
};

/// 2x2 matrix with entries in one field of the tower (same core degree).
/// Used projectively; canon() fixes the scaling.
struct Mat2 {
    FieldElem a, b, c, d;
};

/// A point of P^1: infinity = [1:0] or a finite point [alpha:1].
struct ProjPoint {
    bool inf = false;
    FieldElem alpha;  // meaningful iff !inf; for inf, a zero of the right level
};

/// Closed point of degree deg: monic irreducible polynomial together with
/// one chosen root (the key-smallest; the full orbit is its Frobenius orbit).
struct Place {
    u32 deg = 0;
    HomPoly poly;
    ProjPoint root;  // level deg for deg >= 2; base level (possibly inf) for deg 1
};

/// Effective divisor: places with multiplicities, canonically sorted.
struct Divisor {
    std::vector<std::pair<Place, u32>> parts;
    u32 degree() const {
        u32 s = 0;
        for (auto& [pl, m] : parts) s += pl.deg * m;
        return s;
    }
    bool reduced() const {
        for (auto& [pl, m] : parts)
            if (m != 1) return false;
        return true;
    }
};

/// Non-increasing sequence of place degrees.
struct GaloisType {
    std::vector<u32> m;
    u32 degree() const {
        u32 s = 0;
        for (u32 x : m) s += x;
        return s;
    }
    bool operator==(const GaloisType& o) const { return m == o.m; }
};

// ---------------------------------------------------------------- polynomials

HomPoly hp_zero(const TowerView& V, u32 n);
HomPoly hp_y(const TowerView& V);
HomPoly hp_x(const TowerView& V);
bool hp_is_zero(const TowerView& V, const HomPoly& f);
bool hp_eq(const TowerView& V, const HomPoly& f, const HomPoly& g);
/// Largest i with c[i] != 0, i.e. deg f(x,1); -1 for the zero polynomial.
int univ_degree(const TowerView& V, const HomPoly& f);
/// Multiplicity of y in f.
u32 y_valuation(const TowerView& V, const HomPoly& f);
bool hp_is_monic(const TowerView& V, const HomPoly& f);
HomPoly hp_monicize(const TowerView& V, const HomPoly& f);
HomPoly hp_mul(const TowerView& V, const HomPoly& f, const HomPoly& g);
HomPoly hp_scale(const TowerView& V, const HomPoly& f, const FieldElem& s);
HomPoly hp_add(const TowerView& V, const HomPoly& f, const HomPoly& g);
HomPoly hp_sub(const TowerView& V, const HomPoly& f, const HomPoly& g);
/// Coefficient-wise q-power Frobenius.
HomPoly hp_conjugate(const TowerView& V, const HomPoly& f);
bool hp_coeffs_in_subview(const TowerView& V, const HomPoly& f);

/// Ordering key: degree, then coefficient keys from the highest index down.
std::vector<u32> poly_key(const TowerView& V, const HomPoly& f);
int poly_cmp(const TowerView& V, const HomPoly& f, const HomPoly& g);

// ---------------------------------------------------------------- matrices

Mat2 mat_mul(const TowerCore& C, const Mat2& M, const Mat2& N);
FieldElem mat_det(const TowerCore& C, const Mat2& M);
Mat2 mat_inv(const TowerCore& C, const Mat2& M);  // adjugate (projective inverse)
/// Scale so the first nonzero entry in row-major order is 1.
Mat2 mat_canon(const TowerCore& C, const Mat2& M);
bool mat_eq_proj(const TowerCore& C, const Mat2& M, const Mat2& N);
Mat2 mat_identity(const TowerCore& C, u32 core_deg);
/// Entry-wise embedding into a larger field.
Mat2 mat_embed(const TowerCore& C, const Mat2& M, u32 core_deg);

// ---------------------------------------------------------------- actions

/// Monic representative of the class of f(dx - by, -cx + ay); entries of M
/// at the view base.
HomPoly act_on_poly(const TowerView& V, const Mat2& M, const HomPoly& f);
/// The raw substitution f(dx - by, -cx + ay) without normalization.
HomPoly hp_substitute(const TowerView& V, const Mat2& M, const HomPoly& f);

/// Point action [alpha:beta] -> [a alpha + b beta : c alpha + d beta];
/// M entries must live at the same core degree as the point.
ProjPoint act_on_point(const TowerCore& C, const Mat2& M, const ProjPoint& P);

Place act_on_place(const TowerView& V, const Mat2& M, const Place& P);
Divisor act_on_divisor(const TowerView& V, const Mat2& M, const Divisor& D);

// ---------------------------------------------------------------- places

/// The geometric points of P (the Frobenius orbit of the stored root).
std::vector<ProjPoint> place_points(const TowerView& V, const Place& P);
int place_cmp(const TowerView& V, const Place& A, const Place& B);
bool place_eq(const TowerView& V, const Place& A, const Place& B);
/// Degree-1 place from a rational point.
Place place_from_point(const TowerView& V, const ProjPoint& P);
int point_cmp(const TowerView& V, const ProjPoint& A, const ProjPoint& B);

// ---------------------------------------------------------------- divisors

void divisor_sort(const TowerView& V, Divisor& D);
bool divisor_eq(const TowerView& V, const Divisor& A, const Divisor& B);
Divisor divisor_support(const Divisor& D);
GaloisType galois_type_of_support(const Divisor& D);
std::pair<GaloisType, Divisor> galois_type_and_support(const TowerView& V, const Divisor& D);
/// Unique monic polynomial with Div p = D.
HomPoly poly_of_divisor(const TowerView& V, const Divisor& D);

/// Factor f and assemble its divisor (defined here, computed via polyfactor).
Divisor divisor_of_poly(const TowerView& V, const HomPoly& f, u64 seed = 1);

}  // namespace p1enum

#endif
