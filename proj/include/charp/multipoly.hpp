#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charp/fp.hpp"
#include "charp/monomial.hpp"

namespace charp {

/// Sparse multivariate polynomial over F_p.  Terms are kept in canonical form:
/// sorted by graded lex order, no zero coefficients, so equal polynomials have
/// equal term vectors.  Values are immutable after construction.
class MultiPoly {
public:
    using Term = std::pair<Monomial, std::uint32_t>;

    MultiPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) { require_prime(p); }

    // Terms may arrive unsorted, with repeats and unreduced coefficients.
    static MultiPoly from_terms(std::uint32_t p, std::size_t nvars,
                                std::vector<std::pair<Monomial, std::int64_t>> terms);

    static MultiPoly zero(std::uint32_t p, std::size_t nvars) { return MultiPoly(p, nvars); }
    static MultiPoly one(std::uint32_t p, std::size_t nvars);
    static MultiPoly monomial_term(std::uint32_t p, Monomial m, std::int64_t coeff);

    std::uint32_t modulus() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    // Total degree; zero polynomial reports degree 0.
    std::uint64_t degree() const;

    FpScalar coeff(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled_by(std::int64_t c) const;

    /// f^e via the base-p expansion of e: each digit power by binary powering,
    /// each p^k factor by Frobenius exponent scaling.  This keeps f^{p-1} at
    /// O(log p) multiplications instead of p-1.
    MultiPoly pow(std::uint64_t e) const;

    // Frobenius twist: coefficients fixed (we are over F_p), exponents times q.
    MultiPoly frobenius_scaled(std::uint64_t q) const;

    /// Formal partials d/dx_i for i = 0..nvars-1.
    std::vector<MultiPoly> partials() const;

    MultiPoly rename_variables(const std::vector<std::size_t>& perm) const;

    std::string str() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const MultiPoly& o) const;
    MultiPoly mul_packed(const MultiPoly& o) const;
    MultiPoly mul_wide(const MultiPoly& o) const;
    MultiPoly pow_binary(std::uint32_t e) const;

    std::uint32_t p_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

}  // namespace charp
