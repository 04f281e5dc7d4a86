#ifndef JALG_SIEGEL_HPP
#define JALG_SIEGEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "jalg/affine.hpp"
#include "jalg/jalgebra.hpp"
#include "jalg/poly.hpp"
#include "jalg/rng.hpp"

namespace jalg {

// Points of Sym(3,C) are packed as (z11, z12, z13, z22, z23, z33).
inline constexpr int kSymDim = 6;

/// Packed index of the (i, j) entry, 1-based, i <= j after sorting.
int sym_index(int i, int j);

GMatrix sym_from_coords(const GVector& z);
GVector sym_to_coords(const GMatrix& Z);

/// Induced affine field of a matrix-model element: Z -> AZ + ZA^t + B in
/// packed coordinates.
AffineField siegel_field(const SiegelMatrixElement& e);

/// Basis fields of the given catalog (d5 or siegel3), in catalog order.
std::vector<AffineField> catalog_basis_fields(const NormalJAlgebra& a);

/// Field of an abstract algebra vector, by linearity over the basis fields.
AffineField d5_field_for_vector(const NormalJAlgebra& a, const QVector& v);

/// True iff the evaluated fields are C-linearly independent at p, i.e. the
/// orbit of the spanned group is totally real there.
bool orbit_totally_real_at(const std::vector<AffineField>& fields, const GVector& p);

// ---------------------------------------------------------------------------
// The three-parameter unipotent matrix group acting on Sym(3,C).

struct GroupElement5 {
  GaussianRational a, b, c;

  GMatrix matrix6() const;
  /// Reads the parameters back from a 6x6 matrix and confirms family
  /// membership; nullopt when the matrix is outside the family.
  static std::optional<GroupElement5> from_matrix6(const GMatrix& m);
};

/// Group composition, computed through the 6x6 matrix product. Throws when
/// the product leaves the parameter family (it never does; the check is what
/// the group-closure tests exercise).
GroupElement5 compose(const GroupElement5& g, const GroupElement5& h);

/// The action on packed Sym(3,C) coordinates, entry by entry.
GVector apply_group(const GroupElement5& g, const GVector& z);

/// Independent route: Z -> A Z A^t + B A^t from the 6x6 block matrices.
GVector apply_group_block(const GroupElement5& g, const GVector& z);

/// The action as an affine map of C^6 (for determinant checks).
AffineMap group_action_map(const GroupElement5& g);

bool is_unipotent(const GMatrix& m);

/// All parameters (a, b, c) fixing Z, by exact elimination on the entry
/// equations of the action.
std::vector<GroupElement5> stabilizer_solve(const GVector& z);

// ---------------------------------------------------------------------------
// Domain points.

/// Positive definiteness of the imaginary part, by exact leading minors.
bool in_siegel_upper_halfplane(const GVector& z);

/// Random point of Sym(3,C) with small Gaussian-rational entries.
GVector random_sym_point(Rng& rng);

/// Random point of the fiber z11 = i with Im Z positive definite by
/// construction (Im Z = L L^t with unit-pivot lower-triangular L).
GVector random_domain_fiber_point(Rng& rng);

/// The pinch-point family: z11 = z33 = i, z12 = (tau + i)/(1 + tau^2),
/// z22 = i*alpha, z13 = z23 = 0. Lies in the domain iff alpha > (1+tau^2)^{-2}.
GVector pinch_point(const Rational& tau, const Rational& alpha);

/// Distinguished nilradical vectors of the d5 catalog.
QVector d5_x1(const NormalJAlgebra& a);
QVector d5_x2(const NormalJAlgebra& a);
QVector d5_x3(const NormalJAlgebra& a);
QVector d5_y_tau(const NormalJAlgebra& a, const Rational& tau);

// ---------------------------------------------------------------------------
// Trivialization chain.

struct ChainCheck {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct ChainReport {
  std::vector<ChainCheck> checks;
  bool all_pass() const;
};

enum class ChainMutation {
  none,
  quotient_map,      // corrupts pi
  induced_c2,        // corrupts the displayed C^2 action on C^5
  straightening,     // drops the -2 z2 term from Phi's fourth coordinate
  induced_c4,        // drops the b^2 term from the displayed C^4 action
  projected_flow     // corrupts g(w1)
};

/// Checks, as exact polynomial identities: (1) pi is invariant under the
/// center, (2) the action descends through pi to the displayed C^2 action on
/// C^5, (3) Phi straightens the a-flow to a translation in the first
/// coordinate, (4) the b-flow descends to the displayed C^4 action, (5) the
/// projection to C^3 is the flow (w1, w2 + t f(w1), w3 + t g(w1)) with
/// f = -(w1^2 + 1), g = -2 w1.
ChainReport verify_trivialization_chain(ChainMutation mutation = ChainMutation::none);

struct BezoutResult {
  Poly phi, psi;  // univariate: phi*f + psi*g = 1
  PolyMap map3;   // z -> (z1, g(z1) z2 - f(z1) z3, phi(z1) z2 + psi(z1) z3)
};

/// Bezout certificate for coprime univariate f, g and the determinant-one
/// polynomial map straightening the flow t.z = (z1, z2 + t f(z1), z3 + t g(z1))
/// to a translation in the third coordinate. Throws when f and g share a
/// root.
BezoutResult bezout_trivialize(const Poly& f, const Poly& g);

// ---------------------------------------------------------------------------
// Unit-ball examples on C^3 and C^2.

/// The fields x1 = 2i w1 d/dz + d/dw1, x2 = 2(w1+w2) d/dz + i d/dw1 + i d/dw2,
/// x3 = d/dz on coordinates (z, w1, w2).
std::vector<AffineField> heisenberg_ball3_fields();

/// Random point of { Im z > |w1|^2 + |w2|^2 }.
GVector random_ball3_point(Rng& rng);

/// The affine automorphism (z, w) -> (z + 2(n+im)w + i(m^2+n^2) + 2k, w + m + in).
AffineMap discrete_ball2_element(long k, long m, long n);

/// Extracts (k, m, n) back from a family member; nullopt when the map is
/// outside the family or the parameters are not integers.
std::optional<std::array<long, 3>> discrete_ball2_parameters(const AffineMap& map);

}  // namespace jalg

#endif
