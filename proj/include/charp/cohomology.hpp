#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charp/fpmatrix.hpp"
#include "charp/hypersurface.hpp"

namespace charp {

// Binomial coefficient with the usual convention C(a,k) = 0 for a < k or k < 0.
long long binom(long long a, long long k);

// Generalized binomial: the degree-k polynomial a(a-1)...(a-k+1)/k!, defined
// for every integer a.  This is what makes chi(O_X(j)) a polynomial in j.
long long gbinom(long long a, int k);

struct PnCohomology {
    long long h0;
    long long htop;
};

/// Cohomology of O(j) on P^n: h^0 = C(n+j,n), h^n = C(-j-1,n), middle zero.
PnCohomology h_line_bundle_pn(std::size_t n, long long j);

// Euler characteristic chi(O_X(j)) for the hypersurface, exact over Z.
long long chi_line_bundle(const HypersurfaceDatum& X, long long j);

// h^0(X, O_X(s)) and h^{n-1}(X, O_X(m)) in closed form (the latter via Serre
// duality; the model-level computations below assert agreement).
long long h0_dim(const HypersurfaceDatum& X, long long s);
long long htop_dim(const HypersurfaceDatum& X, long long m);

/// Monomials of the given total degree in `nvars` variables, ascending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree);

/// Exponent vector with all entries <= -1; the Cech basis of H^n(P^n, O(j)).
using NegMonomial = std::vector<long long>;

/// Basis of H^n(P^n, O(j)): all-negative exponent vectors summing to j, in
/// ascending lex order.  Empty unless j <= -(n+1).
std::vector<NegMonomial> neg_monomial_basis(std::size_t n, long long j);

/// The graded model of H^0(X, O_X(s)): degree-s forms modulo f * (degree-(s-d)
/// forms).  The basis is the deterministic monomial complement of the image of
/// multiplication by f; small instances run exact Gaussian elimination, large
/// ones the division normal form against the lex-leading term of f (the two
/// produce the same complement and the same coordinates, which the tests
/// check against each other).
class H0Model {
public:
    H0Model(const HypersurfaceDatum& X, long long s);

    long long twist() const { return s_; }
    const std::vector<Monomial>& basis() const { return basis_; }

    /// Coordinates of a degree-s form in the quotient basis.
    std::vector<std::uint32_t> coords(const MultiPoly& g) const;

private:
    std::vector<std::uint32_t> coords_elimination(const MultiPoly& g) const;
    std::vector<std::uint32_t> coords_division(const MultiPoly& g) const;

    MultiPoly f_;
    long long s_;
    bool use_elimination_;
    // elimination mode: columns are degree-s monomials in descending lex
    std::vector<Monomial> all_monomials_;            // ascending lex
    std::map<Monomial, std::size_t> column_of_;      // monomial -> ascending index
    std::unique_ptr<RowReducer> reducer_;
    std::vector<std::size_t> basis_columns_;         // ascending indices of basis monomials
    // division mode
    Monomial f_lead_;
    std::uint32_t f_lead_coeff_ = 0;
    std::vector<Monomial> basis_;                    // ascending lex
    std::map<Monomial, std::size_t> basis_index_;
};

/// The graded model of H^{n-1}(X, O_X(m)): the kernel of multiplication by f
/// from H^n(P^n, O(m-d)) to H^n(P^n, O(m)), with a deterministic kernel basis.
class HtopModel {
public:
    HtopModel(const HypersurfaceDatum& X, long long m);

    long long twist() const { return m_; }
    const std::vector<NegMonomial>& ambient_basis() const { return ambient_; }
    const std::vector<std::vector<std::uint32_t>>& kernel_basis() const { return kernel_; }
    std::size_t dim() const { return kernel_.size(); }

private:
    long long m_;
    std::vector<NegMonomial> ambient_;               // basis of H^n(P^n, O(m-d))
    std::vector<std::vector<std::uint32_t>> kernel_; // coords in ambient_
};

/// Frobenius-induced map on a cohomology level, between twists m and p*m.
struct FrobTwistMap {
    long long source_twist;
    long long target_twist;
    int level;        // 0 or n-1
    FpMatrix matrix;  // target dim x source dim
    std::size_t rank;
    std::size_t kernel_dim;
    std::string source_basis;
    std::string target_basis;
};

/// Matrix of g -> g^p from H^0(O_X(s)) to H^0(O_X(ps)) in the quotient bases.
/// Injectivity (the p-th power of a nonzero form is nonzero) is asserted.
FrobTwistMap frobenius_h0_map(const HypersurfaceDatum& X, long long s);

/// Matrix of the Frobenius action [x^a] -> [f^{p-1} x^{pa}] from
/// H^{n-1}(O_X(m)) to H^{n-1}(O_X(pm)), rows in the Serre-dual coordinates of
/// the target.  Well-definedness (every image is killed by multiplication by
/// f) is asserted on each call; on small instances the rank is recomputed
/// from the raw ambient image vectors and checked.
FrobTwistMap frobenius_htop_map(const HypersurfaceDatum& X, long long m);

/// Frobenius on H^{n-1}(X, O_X) for a plane curve: the g x g Hasse-Witt matrix.
FpMatrix hasse_witt(const HypersurfaceDatum& X);

/// Dimension row of B^1_X(s): h^0, the single potentially nonzero middle
/// index h^{n-2} (dim X >= 2), and h^{n-1}, from the long exact sequence of
/// 0 -> O_X(s) -> F_*(O_X(ps)) -> B^1_X(s) -> 0.  Middle indices 1..n-3
/// vanish identically.  The chi identity
///   sum (-1)^i h^i = chi(O_X(ps)) - chi(O_X(s))
/// is asserted on every row.
struct B1Row {
    long long twist;
    long long h0;
    long long h_mid;  // h^{n-2}; only meaningful when dim X >= 2
    long long h_top;  // h^{n-1}
    std::size_t frob_rank;
    std::size_t frob_kernel_dim;
};

B1Row b1_dims(const HypersurfaceDatum& X, long long s);

/// Per-twist table of (h^0, h^1) of B^1_X(s) for a curve, over [lo, hi].
struct B1Table {
    std::map<long long, std::pair<long long, long long>> rows;
};

B1Table b1_table_curve(const HypersurfaceDatum& X, long long lo, long long hi);

/// Cohomology dimensions of F_*(O_X)(m) = F_*(O_X(pm)): the dims of O_X(pm).
struct PushforwardDims {
    long long h0;
    long long h_middle;  // identically zero for hypersurfaces
    long long h_top;
};

PushforwardDims pushforward_twist_dims(const HypersurfaceDatum& X, long long m);

}  // namespace charp
