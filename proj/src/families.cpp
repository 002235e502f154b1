#include "charp/families.hpp"

#include <random>
#include <stdexcept>

#include "charp/cohomology.hpp"
#include "charp/parse.hpp"

namespace charp {

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Fermat: return "fermat";
        case FamilyKind::Dwork: return "dwork";
        case FamilyKind::LegendreCubic: return "legendre";
        case FamilyKind::RandomPlaneCurve: return "random-plane-curve";
        case FamilyKind::Hyperelliptic: return "hyperelliptic";
        case FamilyKind::Custom: return "custom";
    }
    throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
    if (name == "fermat") return FamilyKind::Fermat;
    if (name == "dwork") return FamilyKind::Dwork;
    if (name == "legendre") return FamilyKind::LegendreCubic;
    if (name == "random-plane-curve" || name == "random") return FamilyKind::RandomPlaneCurve;
    if (name == "hyperelliptic") return FamilyKind::Hyperelliptic;
    if (name == "custom") return FamilyKind::Custom;
    throw std::invalid_argument("unknown family: " + name);
}

HypersurfaceDatum FamilySpec::build() const {
    switch (kind) {
        case FamilyKind::Fermat:
            return make_fermat(p, n, d);
        case FamilyKind::Dwork:
            if (!lambda) throw std::invalid_argument("dwork family needs lambda");
            return make_dwork(p, n, *lambda);
        case FamilyKind::LegendreCubic:
            if (!lambda) throw std::invalid_argument("legendre family needs lambda");
            return make_legendre_cubic(p, *lambda);
        case FamilyKind::RandomPlaneCurve:
            if (!seed) throw std::invalid_argument("random family needs seed");
            return random_plane_curve(p, d, *seed).X;
        case FamilyKind::Custom:
            return HypersurfaceDatum(n, poly_parse(poly_text, p, n + 1));
        case FamilyKind::Hyperelliptic:
            break;
    }
    throw std::invalid_argument("family has no hypersurface model");
}

HypersurfaceDatum make_fermat(std::uint32_t p, std::size_t n, std::uint64_t d) {
    require_prime(p);
    if (d == 0) throw std::invalid_argument("fermat: degree must be positive");
    if (d % p == 0)
        throw std::invalid_argument("fermat: p divides d, the member is singular");
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t i = 0; i <= n; ++i) {
        Monomial m(n + 1);
        m[i] = static_cast<std::uint32_t>(d);
        terms.emplace_back(std::move(m), 1);
    }
    return HypersurfaceDatum(n, MultiPoly::from_terms(p, n + 1, std::move(terms)));
}

bool dwork_is_singular(std::uint32_t p, std::size_t n, std::uint32_t lambda) {
    std::uint64_t e = n + 1;
    std::uint32_t lhs = pow_mod(lambda % p, e, p);
    std::uint32_t rhs = pow_mod(static_cast<std::uint32_t>(e % p), e, p);
    return lhs == rhs;
}

HypersurfaceDatum make_dwork(std::uint32_t p, std::size_t n, std::uint32_t lambda) {
    require_prime(p);
    if ((n + 1) % p == 0)
        throw std::invalid_argument("dwork: p divides n+1");
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t i = 0; i <= n; ++i) {
        Monomial m(n + 1);
        m[i] = static_cast<std::uint32_t>(n + 1);
        terms.emplace_back(std::move(m), 1);
    }
    Monomial prod(n + 1);
    for (std::size_t i = 0; i <= n; ++i) prod[i] = 1;
    terms.emplace_back(std::move(prod), -static_cast<std::int64_t>(lambda % p));
    return HypersurfaceDatum(n, MultiPoly::from_terms(p, n + 1, std::move(terms)));
}

HypersurfaceDatum make_legendre_cubic(std::uint32_t p, std::uint32_t lambda) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("legendre: p must be odd");
    std::uint32_t l = lambda % p;
    if (l == 0 || l == 1)
        throw std::invalid_argument("legendre: lambda must avoid 0 and 1");
    // y^2 z - x(x - z)(x - lambda z) = y^2 z - x^3 + (1+lambda) x^2 z - lambda x z^2
    // with (x, y, z) = (x0, x1, x2)
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    auto mono = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        Monomial m(std::size_t{3});
        m[0] = a;
        m[1] = b;
        m[2] = c;
        return m;
    };
    terms.emplace_back(mono(0, 2, 1), 1);
    terms.emplace_back(mono(3, 0, 0), -1);
    terms.emplace_back(mono(2, 0, 1), 1 + static_cast<std::int64_t>(l));
    terms.emplace_back(mono(1, 0, 2), -static_cast<std::int64_t>(l));
    return HypersurfaceDatum(2, MultiPoly::from_terms(p, 3, std::move(terms)));
}

SampledCurve random_plane_curve(std::uint32_t p, std::uint64_t d, std::uint64_t seed) {
    require_prime(p);
    if (d == 0) throw std::invalid_argument("random curve: degree must be positive");
    constexpr unsigned kMaxAttempts = 1000;
    auto monos = monomials_of_degree(3, d);
    for (unsigned attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::uint64_t draw_seed = seed + attempt;
        // mt19937_64 is fully specified by the standard, so draws are
        // byte-stable across platforms; plain % p keeps it that way
        std::mt19937_64 rng(draw_seed);
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        terms.reserve(monos.size());
        for (const auto& m : monos)
            terms.emplace_back(m, static_cast<std::int64_t>(rng() % p));
        HypersurfaceDatum X(2, MultiPoly::from_terms(p, 3, std::move(terms)));
        if (X.f().is_zero() || X.f().degree() != d) continue;
        if (is_smooth(X).smooth) return {std::move(X), draw_seed, attempt + 1};
    }
    throw std::runtime_error("random curve: retry budget exhausted without a smooth member");
}

SmoothnessResult is_smooth(const HypersurfaceDatum& X) {
    const std::uint32_t p = X.p();
    const std::size_t nvars = X.nvars();
    const long long n = static_cast<long long>(X.n());
    const long long d = static_cast<long long>(X.d());

    std::vector<MultiPoly> gens = X.f().partials();
    gens.push_back(X.f());

    // socle-degree style cutoff; raised when p | d since the Euler relation
    // no longer puts f in the partial-derivative ideal
    long long cutoff = (d % p == 0) ? (n + 1) * d + 1 : (n + 1) * (d - 1) + 1;

    for (long long t = 1; t <= cutoff; ++t) {
        auto monos = monomials_of_degree(nvars, static_cast<std::uint64_t>(t));
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

        RowReducer red(p, monos.size());
        bool full = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            long long shift = t - static_cast<long long>(g.degree());
            if (shift < 0) continue;
            for (const auto& m : monomials_of_degree(nvars, static_cast<std::uint64_t>(shift))) {
                std::vector<std::uint32_t> row(monos.size(), 0);
                for (const auto& [gm, gc] : g.terms()) row[index.at(gm * m)] = gc;
                red.add_row(std::move(row));
                if (red.rank() == monos.size()) {
                    full = true;
                    break;
                }
            }
            if (full) break;
        }
        if (full) return {true, t, cutoff};
    }
    return {false, -1, cutoff};
}

FpMatrix cartier_manin_hyperelliptic(std::uint32_t p, const std::vector<std::int64_t>& h_coeffs,
                                     std::size_t g) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("cartier-manin: p must be odd");
    if (h_coeffs.size() != 2 * g + 2)
        throw std::invalid_argument("cartier-manin: h must have degree 2g+1");
    if (h_coeffs.back() % static_cast<std::int64_t>(p) == 0)
        throw std::invalid_argument("cartier-manin: leading coefficient vanishes mod p");

    // univariate h as a 1-variable MultiPoly, then h^{(p-1)/2}
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t i = 0; i < h_coeffs.size(); ++i) {
        Monomial m(std::size_t{1});
        m[0] = static_cast<std::uint32_t>(i);
        terms.emplace_back(std::move(m), h_coeffs[i]);
    }
    MultiPoly h = MultiPoly::from_terms(p, 1, std::move(terms));
    MultiPoly hpow = h.pow((p - 1) / 2);

    FpMatrix cm(p, g, g);
    for (std::size_t i = 1; i <= g; ++i)
        for (std::size_t j = 1; j <= g; ++j) {
            long long e = static_cast<long long>(i) * p - static_cast<long long>(j);
            Monomial m(std::size_t{1});
            m[0] = static_cast<std::uint32_t>(e);
            cm.set(i - 1, j - 1, hpow.coeff(m).value);
        }
    return cm;
}

FpScalar deuring_hasse(std::uint32_t p, std::uint32_t lambda) {
    require_prime(p);
    if (p == 2) throw std::invalid_argument("deuring: p must be odd");
    std::uint32_t l = lambda % p;
    if (l == 0 || l == 1) throw std::invalid_argument("deuring: lambda must avoid 0 and 1");
    std::uint32_t half = (p - 1) / 2;
    // binomials C(half, i) mod p by the multiplicative recurrence
    std::uint64_t c = 1, acc = 0, lpow = 1;
    for (std::uint32_t i = 0;; ++i) {
        acc = (acc + c % p * (c % p) % p * lpow) % p;
        if (i == half) break;
        c = c % p * ((half - i) % p) % p * inv_mod((i + 1) % p, p) % p;
        lpow = lpow * l % p;
    }
    return FpScalar(static_cast<std::int64_t>(acc), p);
}

}  // namespace charp
