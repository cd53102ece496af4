#ifndef P1ENUM_ORBITS_HPP
#define P1ENUM_ORBITS_HPP

// PGL_2 machinery: group enumeration, divisor stabilizers, coset
// representatives of PGL_2(F_q) in PGL_2(F_{q^2}), orbit labels, cross
// polynomials, and the lambda invariant for pairs of quadratic places.

#include "p1enum/projgeom.hpp"

#include <functional>

namespace p1enum {

// ---------------------------------------------------------------- group

/// |PGL_2(F_q)| = q^3 - q.
u64 pgl2_order(u64 q);

/// Code space for deterministic group iteration: codes < q^3 are the a=1
/// block (some invalid when det = 0), the rest the a=0, b=1 block.
u64 pgl2_code_space(u64 q);
/// Decode one group element; nullopt for invalid (singular) codes.
std::optional<Mat2> pgl2_elem_at(const TowerView& V, u64 code);
/// All q^3 - q elements in code order.
std::vector<Mat2> enumerate_group(const TowerView& V);
void for_each_group_element(const TowerView& V, const std::function<void(const Mat2&)>& fn);

// ---------------------------------------------------------------- triples

/// Unique projective matrix sending (inf, 0, 1) to the given distinct
/// points; entries at the points' core degree.
Mat2 matrix_from_triple(const TowerCore& C, const ProjPoint& z, const ProjPoint& e,
                        const ProjPoint& t);
/// Images of (inf, 0, 1).
std::array<ProjPoint, 3> triple_of_matrix(const TowerCore& C, const Mat2& M);

/// Canonical-scale M (entries at a view level) and pull it down to the base
/// field if it is rational; nullopt otherwise.
std::optional<Mat2> rational_from_level(const TowerView& V, const Mat2& M);

// ---------------------------------------------------------------- stabilizers

/// Candidate rational maps sending support(D1) to support(D2), generated
/// from point triples (supports of degree >= 3 only).
std::vector<Mat2> support_map_candidates(const TowerView& V, const Divisor& S1,
                                         const Divisor& S2);

/// The PGL_2(F_q) stabilizer of D.  For supports of degree <= 2 this is one
/// of the explicit families (size q(q-1), q-1, 2(q-1) or 2(q+1)); for
/// supports of degree >= 3 it is the finite point-triple stabilizer.
std::vector<Mat2> stabilizer_of_divisor(const TowerView& V, const Divisor& D);
/// Iterate the stabilizer without materializing it.
void for_each_divisor_stabilizer(const TowerView& V, const Divisor& D,
                                 const std::function<void(const Mat2&)>& fn);
u64 stabilizer_size_formula(const TowerView& V, const Divisor& D);

/// Whether some element of PGL_2(F_q) maps D1 to D2 (equal supports).
bool same_orbit_same_support(const TowerView& V, const Divisor& D1, const Divisor& D2);

/// All rational maps sending place A to place B (equal degrees >= 3; at
/// most deg A of them, from point-triple matching).
std::vector<Mat2> maps_place_to_place(const TowerView& V, const Place& A, const Place& B);
/// All rational maps sending the pair {A1, A2} to the pair {B1, B2}
/// (distinct degree-2 places).
std::vector<Mat2> maps_pair_to_pair(const TowerView& V, const Place& A1, const Place& A2,
                                    const Place& B1, const Place& B2);

// ---------------------------------------------------------------- cosets

/// Number of coset representatives of PGL_2(F_q) in PGL_2(F_{q^2}): q^3 + q.
u64 coset_rep_count(u64 q);
/// The idx-th representative (matrix over view level 2), in the frozen
/// five-family order.
Mat2 coset_rep_at(const TowerView& V, u64 idx);

/// Orbit label: a norm-based triple of level-2 elements identifying the
/// left PGL_2(F_q)-coset of a matrix over F_{q^2}.
struct CosetLabel {
    FieldElem x, y, z;
};
CosetLabel orbit_label(const TowerView& V, const Mat2& G);
int label_cmp(const TowerView& V, const CosetLabel& a, const CosetLabel& b);

/// Entry-wise q-power Frobenius (entries at view level 2); an involution.
Mat2 conjugate_mat(const TowerView& V, const Mat2& M);
/// Point-wise q-power Frobenius of a place over the squared view.
Place conjugate_place(const TowerView& base_view, const Place& P);

// ---------------------------------------------------------------- invariants

/// The cross polynomial of an irreducible monic f of degree >= 4: the
/// characteristic polynomial over the base field of the cross ratio of a
/// root and its first three Frobenius conjugates.  Returned low-to-high,
/// monic of degree deg f.  A complete orbit invariant.
std::vector<FieldElem> cross_polynomial(const TowerView& V, const HomPoly& f);

/// Comparison key: cross polynomial for degree >= 4; for degree <= 3 a
/// constant (those places form a single orbit).
std::vector<u32> cross_key(const TowerView& V, const HomPoly& f);

/// lambda invariant of a pair of distinct irreducible monic quadratics; a
/// complete orbit invariant for sums of two degree-2 places.
FieldElem lambda_invariant(const TowerView& V, const HomPoly& f1, const HomPoly& f2);

}  // namespace p1enum

#endif
