#pragma once

#include <stdexcept>

#include "charp/multipoly.hpp"

namespace charp {

enum class CanonicalType { Fano, CalabiYau, GeneralType };

/// A hypersurface X = V(f) in P^n over F_p, together with the derived data the
/// cohomology routines need: deg f and the canonical level d-n-1, i.e. the
/// twist with omega_X = O_X(d-n-1).
class HypersurfaceDatum {
public:
    HypersurfaceDatum(std::size_t n, MultiPoly f) : n_(n), f_(std::move(f)) {
        if (n_ < 1) throw std::invalid_argument("ambient dimension must be >= 1");
        if (f_.nvars() != n_ + 1)
            throw std::invalid_argument("defining form must have n+1 variables");
        if (f_.is_zero()) throw std::invalid_argument("defining form is zero");
        if (!f_.is_homogeneous())
            throw std::invalid_argument("defining form is not homogeneous");
        d_ = f_.degree();
        if (d_ < 1) throw std::invalid_argument("defining form must have degree >= 1");
    }

    std::uint32_t p() const { return f_.modulus(); }
    std::size_t n() const { return n_; }
    std::size_t nvars() const { return n_ + 1; }
    const MultiPoly& f() const { return f_; }
    std::uint64_t d() const { return d_; }
    std::size_t dim() const { return n_ - 1; }

    long long canonical_level() const {
        return static_cast<long long>(d_) - static_cast<long long>(n_) - 1;
    }

    CanonicalType canonical_type() const {
        long long k = canonical_level();
        if (k < 0) return CanonicalType::Fano;
        if (k == 0) return CanonicalType::CalabiYau;
        return CanonicalType::GeneralType;
    }

    /// Genus of a plane curve (n = 2).
    long long genus() const {
        if (n_ != 2) throw std::invalid_argument("genus is defined here for plane curves only");
        long long d = static_cast<long long>(d_);
        return (d - 1) * (d - 2) / 2;
    }

private:
    std::size_t n_;
    MultiPoly f_;
    std::uint64_t d_;
};

}  // namespace charp
