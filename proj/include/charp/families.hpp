#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charp/fpmatrix.hpp"
#include "charp/hypersurface.hpp"

namespace charp {

enum class FamilyKind { Fermat, Dwork, LegendreCubic, RandomPlaneCurve, Hyperelliptic, Custom };

std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& name);

/// Parameters sufficient to rebuild a family member bit for bit.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Custom;
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t d = 0;
    std::optional<std::uint32_t> lambda;
    std::optional<std::uint64_t> seed;
    std::string poly_text;  // custom polynomials only

    HypersurfaceDatum build() const;
};

/// Fermat hypersurface x_0^d + ... + x_n^d.  Rejects p | d (singular).
HypersurfaceDatum make_fermat(std::uint32_t p, std::size_t n, std::uint64_t d);

/// Dwork member x_0^{n+1} + ... + x_n^{n+1} - lambda x_0...x_n.
/// Requires p not dividing n+1.
HypersurfaceDatum make_dwork(std::uint32_t p, std::size_t n, std::uint32_t lambda);

/// Closed form: the Dwork member is singular iff lambda^{n+1} = (n+1)^{n+1}.
bool dwork_is_singular(std::uint32_t p, std::size_t n, std::uint32_t lambda);

/// Legendre plane cubic y^2 z = x(x - z)(x - lambda z); p odd, lambda not 0, 1.
HypersurfaceDatum make_legendre_cubic(std::uint32_t p, std::uint32_t lambda);

/// Deterministic-from-seed dense plane curve of degree d, resampled until
/// smooth (bounded retries).  Returns the curve and the seed actually used
/// for coefficient generation so the draw is reproducible.
struct SampledCurve {
    HypersurfaceDatum X;
    std::uint64_t seed;
    unsigned attempts;
};
SampledCurve random_plane_curve(std::uint32_t p, std::uint64_t d, std::uint64_t seed);

/// Jacobian smoothness check: X is smooth iff the ideal (f, df/dx_0, ...,
/// df/dx_n) contains every form of some degree t <= t_max, with
/// t_max = (n+1)(d-1)+1, raised to (n+1)d+1 when p | d.
struct SmoothnessResult {
    bool smooth;
    long long certified_degree;  // first t with full graded piece, -1 if none
    long long cutoff;
};
SmoothnessResult is_smooth(const HypersurfaceDatum& X);

/// Classical Cartier-Manin matrix of the hyperelliptic curve y^2 = h(x):
/// entry (i,j) = coefficient of x^{ip-j} in h^{(p-1)/2}, 1 <= i,j <= g.
/// h is given by its coefficient list (degree 2g+1, constant term first).
FpMatrix cartier_manin_hyperelliptic(std::uint32_t p, const std::vector<std::int64_t>& h_coeffs,
                                     std::size_t g);

/// Deuring polynomial H(lambda) = sum_i C((p-1)/2, i)^2 lambda^i; zero iff the
/// Legendre curve with that lambda is supersingular.
FpScalar deuring_hasse(std::uint32_t p, std::uint32_t lambda);

}  // namespace charp
