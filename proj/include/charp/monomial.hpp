#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace charp {

/// Exponent vector of a monomial in a fixed number of variables.  Exponents
/// are non-negative; the Cech bases of top cohomology use plain
/// std::vector<long long> instead (see cohomology.hpp).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
    }

    Monomial operator*(const Monomial& o) const {
        if (nvars() != o.nvars()) throw std::invalid_argument("monomial nvars mismatch");
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    // Frobenius exponent scaling: every exponent times q.
    Monomial scaled(std::uint64_t q) const {
        Monomial r(*this);
        for (auto& e : r.exps_) {
            std::uint64_t v = std::uint64_t(e) * q;
            if (v > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
            e = static_cast<std::uint32_t>(v);
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    // Graded lexicographic: total degree first, then lex on exponents.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps_ < b.exps_;
    }

    std::string str() const {
        if (exps_.empty() || degree() == 0) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
            if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
        }
        return s;
    }

    static constexpr std::uint32_t kMaxExponent = 1u << 20;

private:
    std::vector<std::uint32_t> exps_;
};

// Fixed-width packing used on the multiplication hot path: one byte per
// exponent plus the total degree in the top byte, so that uint64_t order is
// graded lex order and key addition is exponent addition.  Usable whenever
// nvars <= 7 and the product degree stays below 256.
namespace packing {

inline bool packable(std::size_t nvars, std::uint64_t max_degree) {
    return nvars <= 7 && max_degree < 256;
}

inline std::uint64_t pack(const Monomial& m) {
    std::uint64_t key = m.degree() << 56;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        key |= std::uint64_t(m[i]) << (8 * (6 - i));
    return key;
}

inline Monomial unpack(std::uint64_t key, std::size_t nvars) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        m[i] = static_cast<std::uint32_t>((key >> (8 * (6 - i))) & 0xff);
    return m;
}

}  // namespace packing

}  // namespace charp
