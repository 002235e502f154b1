#include "charp/multipoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace charp {

MultiPoly MultiPoly::from_terms(std::uint32_t p, std::size_t nvars,
                                std::vector<std::pair<Monomial, std::int64_t>> terms) {
    MultiPoly r(p, nvars);
    std::map<Monomial, std::uint32_t> acc;
    for (auto& [m, c] : terms) {
        if (m.nvars() != nvars) throw std::invalid_argument("term nvars mismatch");
        std::uint32_t cv = reduce_mod(c, p);
        auto [it, fresh] = acc.emplace(std::move(m), cv);
        if (!fresh) it->second = add_mod(it->second, cv, p);
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, c);
    return r;
}

MultiPoly MultiPoly::one(std::uint32_t p, std::size_t nvars) {
    return monomial_term(p, Monomial(nvars), 1);
}

MultiPoly MultiPoly::monomial_term(std::uint32_t p, Monomial m, std::int64_t coeff) {
    MultiPoly r(p, m.nvars());
    std::uint32_t cv = reduce_mod(coeff, p);
    if (cv != 0) r.terms_.emplace_back(std::move(m), cv);
    return r;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.front().first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::uint64_t MultiPoly::degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

FpScalar MultiPoly::coeff(const Monomial& m) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("coeff: nvars mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    std::uint32_t v = (it != terms_.end() && it->first == m) ? it->second : 0;
    return FpScalar(v, p_);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(p_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            std::uint32_t c = add_mod(a->second, b->second, p_);
            if (c != 0) r.terms_.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + o.scaled_by(-1);
}

MultiPoly MultiPoly::scaled_by(std::int64_t c) const {
    std::uint32_t cv = reduce_mod(c, p_);
    MultiPoly r(p_, nvars_);
    if (cv == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) r.terms_.emplace_back(m, mul_mod(v, cv, p_));
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return zero(p_, nvars_);
    if (packing::packable(nvars_, degree() + o.degree())) return mul_packed(o);
    return mul_wide(o);
}

MultiPoly MultiPoly::mul_packed(const MultiPoly& o) const {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> a, b;
    a.reserve(terms_.size());
    b.reserve(o.terms_.size());
    for (const auto& [m, c] : terms_) a.emplace_back(packing::pack(m), c);
    for (const auto& [m, c] : o.terms_) b.emplace_back(packing::pack(m), c);

    std::unordered_map<std::uint64_t, std::uint64_t> acc;
    acc.reserve(a.size() * 2);
    const std::uint64_t cap = ~std::uint64_t(0) - std::uint64_t(p_ - 1) * (p_ - 1);
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto& slot = acc[ka + kb];
            if (slot >= cap) slot %= p_;
            slot += std::uint64_t(ca) * cb;
        }

    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
    keyed.reserve(acc.size());
    for (const auto& [k, v] : acc) {
        std::uint32_t c = static_cast<std::uint32_t>(v % p_);
        if (c != 0) keyed.emplace_back(k, c);
    }
    std::sort(keyed.begin(), keyed.end());

    MultiPoly r(p_, nvars_);
    r.terms_.reserve(keyed.size());
    for (const auto& [k, c] : keyed) r.terms_.emplace_back(packing::unpack(k, nvars_), c);
    return r;
}

MultiPoly MultiPoly::mul_wide(const MultiPoly& o) const {
    std::map<Monomial, std::uint64_t> acc;
    const std::uint64_t cap = ~std::uint64_t(0) - std::uint64_t(p_ - 1) * (p_ - 1);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto& slot = acc[ma * mb];
            if (slot >= cap) slot %= p_;
            slot += std::uint64_t(ca) * cb;
        }
    MultiPoly r(p_, nvars_);
    r.terms_.reserve(acc.size());
    for (const auto& [m, v] : acc) {
        std::uint32_t c = static_cast<std::uint32_t>(v % p_);
        if (c != 0) r.terms_.emplace_back(m, c);
    }
    return r;
}

MultiPoly MultiPoly::frobenius_scaled(std::uint64_t q) const {
    MultiPoly r(p_, nvars_);
    r.terms_.reserve(terms_.size());
    // scaling by q preserves graded lex order, so the term vector stays sorted
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m.scaled(q), c);
    return r;
}

MultiPoly MultiPoly::pow_binary(std::uint32_t e) const {
    MultiPoly acc = one(p_, nvars_);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    if (e == 0) return one(p_, nvars_);
    if (degree() * e > Monomial::kMaxExponent)
        throw std::overflow_error("poly pow: resulting degree exceeds exponent guard");
    // e = sum e_k p^k; f^e = prod (f^{e_k})^{p^k}
    MultiPoly result = one(p_, nvars_);
    std::uint64_t pk = 1;
    while (e) {
        std::uint32_t digit = static_cast<std::uint32_t>(e % p_);
        if (digit != 0) result = result * pow_binary(digit).frobenius_scaled(pk);
        e /= p_;
        pk *= p_;
    }
    return result;
}

std::vector<MultiPoly> MultiPoly::partials() const {
    std::vector<MultiPoly> out;
    out.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        MultiPoly d(p_, nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            std::uint32_t k = reduce_mod(m[i], p_);
            if (k == 0) continue;  // exponent divisible by p
            Monomial dm = m;
            dm[i] -= 1;
            // lowering one fixed exponent preserves graded lex order
            d.terms_.emplace_back(std::move(dm), mul_mod(c, k, p_));
        }
        out.push_back(std::move(d));
    }
    return out;
}

MultiPoly MultiPoly::rename_variables(const std::vector<std::size_t>& perm) const {
    if (perm.size() != nvars_) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Monomial pm(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) pm[perm[i]] = m[i];
        ts.emplace_back(std::move(pm), c);
    }
    return from_terms(p_, nvars_, std::move(ts));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        const auto& [m, c] = *it;
        if (c != 1 || m.degree() == 0) {
            s += std::to_string(c);
            if (m.degree() > 0) s += "*";
        }
        if (m.degree() > 0) s += m.str();
    }
    return s;
}

}  // namespace charp
