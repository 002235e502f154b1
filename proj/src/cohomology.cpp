#include "charp/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace charp {

long long binom(long long a, long long k) {
    if (k < 0 || a < k) return 0;
    k = std::min(k, a - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (a - k + i) / i;
    return r;
}

long long gbinom(long long a, int k) {
    if (k < 0) return 0;
    long long num = 1;
    for (int i = 0; i < k; ++i) num *= a - i;
    long long den = 1;
    for (int i = 2; i <= k; ++i) den *= i;
    return num / den;
}

PnCohomology h_line_bundle_pn(std::size_t n, long long j) {
    long long nn = static_cast<long long>(n);
    return {binom(nn + j, nn), binom(-j - 1, nn)};
}

long long chi_line_bundle(const HypersurfaceDatum& X, long long j) {
    long long nn = static_cast<long long>(X.n());
    long long d = static_cast<long long>(X.d());
    return gbinom(nn + j, static_cast<int>(nn)) - gbinom(nn + j - d, static_cast<int>(nn));
}

long long h0_dim(const HypersurfaceDatum& X, long long s) {
    if (s < 0) return 0;
    long long nn = static_cast<long long>(X.n());
    long long d = static_cast<long long>(X.d());
    return binom(nn + s, nn) - binom(nn + s - d, nn);
}

long long htop_dim(const HypersurfaceDatum& X, long long m) {
    return h0_dim(X, X.canonical_level() - m);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    Monomial current(nvars);
    // iterative enumeration in ascending lex order
    struct Frame {
        std::size_t var;
        std::uint64_t left;
        std::uint64_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({0, degree, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.var == nvars - 1) {
            current[f.var] = static_cast<std::uint32_t>(f.left);
            out.push_back(current);
            stack.pop_back();
            continue;
        }
        if (f.next > f.left) {
            stack.pop_back();
            continue;
        }
        current[f.var] = static_cast<std::uint32_t>(f.next);
        stack.push_back({f.var + 1, f.left - f.next, 0});
        ++f.next;
    }
    return out;
}

std::vector<NegMonomial> neg_monomial_basis(std::size_t n, long long j) {
    std::vector<NegMonomial> out;
    std::size_t nvars = n + 1;
    long long t = -j - static_cast<long long>(nvars);  // degree of the complement
    if (t < 0) return out;
    // a = -1 - b with b running over degree-t monomials; descending lex on b
    // is ascending lex on a
    auto bs = monomials_of_degree(nvars, static_cast<std::uint64_t>(t));
    out.reserve(bs.size());
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
        NegMonomial a(nvars);
        for (std::size_t i = 0; i < nvars; ++i) a[i] = -1 - static_cast<long long>((*it)[i]);
        out.push_back(std::move(a));
    }
    return out;
}

namespace {

// lex-max term of f (coefficient included)
std::pair<Monomial, std::uint32_t> leading_term(const MultiPoly& f) {
    const auto& terms = f.terms();
    auto best = terms.begin();
    for (auto it = terms.begin(); it != terms.end(); ++it)
        if (best->first.exponents() < it->first.exponents()) best = it;
    return *best;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

constexpr std::size_t kEliminationColumnLimit = 2200;

}  // namespace

H0Model::H0Model(const HypersurfaceDatum& X, long long s)
    : f_(X.f()), s_(s), f_lead_(X.f().nvars()) {
    const std::uint32_t p = X.p();
    if (s < 0) {
        use_elimination_ = false;
        return;
    }
    all_monomials_ = monomials_of_degree(X.nvars(), static_cast<std::uint64_t>(s));
    std::tie(f_lead_, f_lead_coeff_) = leading_term(f_);

    long long gen_degree = s - static_cast<long long>(X.d());
    use_elimination_ = all_monomials_.size() <= kEliminationColumnLimit;

    if (use_elimination_) {
        for (std::size_t i = 0; i < all_monomials_.size(); ++i)
            column_of_[all_monomials_[i]] = i;
        // columns scan in descending lex while storage stays ascending:
        // column c of the reducer is all_monomials_[N-1-c]
        const std::size_t N = all_monomials_.size();
        reducer_ = std::make_unique<RowReducer>(p, N);
        if (gen_degree >= 0) {
            for (const auto& m : monomials_of_degree(X.nvars(), static_cast<std::uint64_t>(gen_degree))) {
                std::vector<std::uint32_t> row(N, 0);
                for (const auto& [fm, fc] : f_.terms()) {
                    Monomial prod = fm * m;
                    row[N - 1 - column_of_.at(prod)] = fc;
                }
                reducer_->add_row(std::move(row));
            }
        }
        for (std::size_t i = 0; i < N; ++i)
            if (!reducer_->is_pivot(N - 1 - i)) basis_columns_.push_back(i);
        basis_.reserve(basis_columns_.size());
        for (std::size_t i : basis_columns_) basis_.push_back(all_monomials_[i]);
    } else {
        // complement of the lex-leading-term multiples
        for (const auto& m : all_monomials_) {
            if (gen_degree >= 0 && divides(f_lead_, m)) continue;
            basis_.push_back(m);
        }
    }

    long long expected = h0_dim(X, s);
    if (static_cast<long long>(basis_.size()) != expected)
        throw std::logic_error("h0 quotient basis size disagrees with closed form");
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i]] = i;
}

std::vector<std::uint32_t> H0Model::coords(const MultiPoly& g) const {
    if (g.modulus() != f_.modulus() || g.nvars() != f_.nvars())
        throw std::invalid_argument("h0 coords: incompatible polynomial");
    if (!g.is_zero() && (!g.is_homogeneous() || static_cast<long long>(g.degree()) != s_))
        throw std::invalid_argument("h0 coords: wrong degree");
    if (s_ < 0) {
        if (!g.is_zero()) throw std::invalid_argument("h0 coords: negative twist");
        return {};
    }
    return use_elimination_ ? coords_elimination(g) : coords_division(g);
}

std::vector<std::uint32_t> H0Model::coords_elimination(const MultiPoly& g) const {
    const std::size_t N = all_monomials_.size();
    std::vector<std::uint32_t> row(N, 0);
    for (const auto& [m, c] : g.terms()) row[N - 1 - column_of_.at(m)] = c;
    row = reducer_->reduce(std::move(row));
    std::vector<std::uint32_t> out(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_columns_.size(); ++i)
        out[i] = row[N - 1 - basis_columns_[i]];
    return out;
}

std::vector<std::uint32_t> H0Model::coords_division(const MultiPoly& g) const {
    const std::uint32_t p = f_.modulus();
    const auto lead_inv = inv_mod(f_lead_coeff_, p);
    // work map in descending lex order
    std::map<std::vector<std::uint32_t>, std::uint32_t, std::greater<>> work;
    for (const auto& [m, c] : g.terms()) work[m.exponents()] = c;

    std::vector<std::uint32_t> out(basis_.size(), 0);
    while (!work.empty()) {
        auto it = work.begin();
        Monomial m(it->first);
        std::uint32_t c = it->second;
        work.erase(it);
        if (c == 0) continue;
        if (divides(f_lead_, m)) {
            // subtract (c / lc(f)) * f * (m / lt(f))
            std::uint32_t q = mul_mod(c, static_cast<std::uint32_t>(lead_inv), p);
            Monomial quot(m.nvars());
            for (std::size_t i = 0; i < m.nvars(); ++i) quot[i] = m[i] - f_lead_[i];
            for (const auto& [fm, fc] : f_.terms()) {
                Monomial t = fm * quot;
                std::uint32_t sub = mul_mod(q, fc, p);
                auto& slot = work[t.exponents()];
                slot = sub_mod(slot, sub, p);
            }
            // the leading position itself cancels exactly
            work.erase(m.exponents());
        } else {
            out[basis_index_.at(m)] = c;
        }
    }
    return out;
}

HtopModel::HtopModel(const HypersurfaceDatum& X, long long m) : m_(m) {
    const std::uint32_t p = X.p();
    const long long d = static_cast<long long>(X.d());
    ambient_ = neg_monomial_basis(X.n(), m - d);
    auto target = neg_monomial_basis(X.n(), m);
    std::map<NegMonomial, std::size_t> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) target_index[target[i]] = i;

    FpMatrix mult(p, target.size(), ambient_.size());
    for (std::size_t col = 0; col < ambient_.size(); ++col) {
        for (const auto& [fm, fc] : X.f().terms()) {
            NegMonomial e = ambient_[col];
            bool negative = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += static_cast<long long>(fm[i]);
                if (e[i] >= 0) negative = false;
            }
            if (!negative) continue;  // truncated away in the Cech model
            mult.set(target_index.at(e), col,
                     add_mod(mult.at(target_index.at(e), col), fc, p));
        }
    }
    kernel_ = mat_kernel_basis(mult);

    if (static_cast<long long>(kernel_.size()) != htop_dim(X, m))
        throw std::logic_error("htop kernel dimension disagrees with Serre duality");
}

namespace {

// sparse image f^{p-1} * x^{p a} truncated to all-negative exponents, with `a`
// a linear combination of ambient monomials given by `coords`
std::map<NegMonomial, std::uint32_t> frobenius_image(const HypersurfaceDatum& X,
                                                     const MultiPoly& f_pow,
                                                     const std::vector<NegMonomial>& ambient,
                                                     const std::vector<std::uint32_t>& coords) {
    const std::uint32_t p = X.p();
    std::map<NegMonomial, std::uint32_t> image;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        for (const auto& [fm, fc] : f_pow.terms()) {
            NegMonomial e(ambient[k].size());
            bool negative = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = static_cast<long long>(p) * ambient[k][i] + static_cast<long long>(fm[i]);
                if (e[i] >= 0) negative = false;
            }
            if (!negative) continue;
            auto& slot = image[e];
            slot = add_mod(slot, mul_mod(coords[k], fc, p), p);
        }
    }
    // drop exact zeros
    for (auto it = image.begin(); it != image.end();)
        it = it->second == 0 ? image.erase(it) : std::next(it);
    return image;
}

// multiply a sparse Cech class by f and truncate; used for the
// well-definedness assertion (the result must be identically zero)
bool killed_by_f(const HypersurfaceDatum& X, const std::map<NegMonomial, std::uint32_t>& v) {
    const std::uint32_t p = X.p();
    std::map<NegMonomial, std::uint32_t> acc;
    for (const auto& [e, c] : v) {
        for (const auto& [fm, fc] : X.f().terms()) {
            NegMonomial t(e);
            bool negative = true;
            for (std::size_t i = 0; i < t.size(); ++i) {
                t[i] += static_cast<long long>(fm[i]);
                if (t[i] >= 0) negative = false;
            }
            if (!negative) continue;
            auto& slot = acc[t];
            slot = add_mod(slot, mul_mod(c, fc, p), p);
        }
    }
    for (const auto& [e, c] : acc)
        if (c != 0) return false;
    return true;
}

constexpr std::size_t kAmbientRankCheckLimit = 4000;

}  // namespace

FrobTwistMap frobenius_htop_map(const HypersurfaceDatum& X, long long m) {
    const std::uint32_t p = X.p();
    const long long d = static_cast<long long>(X.d());
    const long long K = X.canonical_level();
    const long long pm = static_cast<long long>(p) * m;

    HtopModel source(X, m);
    const std::size_t src_dim = source.dim();

    // Serre-dual coordinates of the target: the kernel of multiplication by f
    // inside H^n(O(pm-d)) pairs perfectly with H^0(O_X(K-pm)); the coordinate
    // of a class at the quotient-basis monomial c is its coefficient at the
    // exponent vector -1-c.
    H0Model dual(X, K - pm);
    const auto& dual_basis = dual.basis();

    MultiPoly f_pow = X.f().pow(p - 1);

    std::vector<std::map<NegMonomial, std::uint32_t>> images;
    images.reserve(src_dim);
    for (std::size_t col = 0; col < src_dim; ++col) {
        auto img = frobenius_image(X, f_pow, source.ambient_basis(), source.kernel_basis()[col]);
        if (!killed_by_f(X, img))
            throw std::logic_error("frobenius image escapes the kernel of multiplication by f");
        images.push_back(std::move(img));
    }

    FpMatrix mat(p, dual_basis.size(), src_dim);
    for (std::size_t col = 0; col < src_dim; ++col) {
        for (std::size_t row = 0; row < dual_basis.size(); ++row) {
            NegMonomial key(X.nvars());
            for (std::size_t i = 0; i < X.nvars(); ++i)
                key[i] = -1 - static_cast<long long>(dual_basis[row][i]);
            auto it = images[col].find(key);
            if (it != images[col].end()) mat.set(row, col, it->second);
        }
    }

    std::size_t rank = mat_rank(mat);

    // cross-check the dual-coordinate extraction against the raw ambient
    // image vectors where that is affordable
    std::size_t ambient_dim = neg_monomial_basis(X.n(), pm - d).size();
    if (ambient_dim <= kAmbientRankCheckLimit && src_dim <= kAmbientRankCheckLimit) {
        std::map<NegMonomial, std::size_t> index;
        std::size_t next = 0;
        for (const auto& img : images)
            for (const auto& [e, c] : img)
                if (index.emplace(e, next).second) ++next;
        FpMatrix raw(p, next, src_dim);
        for (std::size_t col = 0; col < src_dim; ++col)
            for (const auto& [e, c] : images[col]) raw.set(index.at(e), col, c);
        if (mat_rank(raw) != rank)
            throw std::logic_error("dual-coordinate rank disagrees with ambient rank");
    }

    FrobTwistMap out{m,
                     pm,
                     static_cast<int>(X.n()) - 1,
                     std::move(mat),
                     rank,
                     src_dim - rank,
                     "kernel basis of multiplication by f at twist " + std::to_string(m - d),
                     "Serre-dual monomial coordinates at twist " + std::to_string(K - pm)};
    return out;
}

FrobTwistMap frobenius_h0_map(const HypersurfaceDatum& X, long long s) {
    if (s < 0) throw std::invalid_argument("frobenius_h0_map: twist must be >= 0");
    const std::uint32_t p = X.p();
    const long long ps = static_cast<long long>(p) * s;

    H0Model source(X, s);
    H0Model target(X, ps);

    FpMatrix mat(p, target.basis().size(), source.basis().size());
    for (std::size_t col = 0; col < source.basis().size(); ++col) {
        MultiPoly power = MultiPoly::monomial_term(p, source.basis()[col].scaled(p), 1);
        auto coords = target.coords(power);
        for (std::size_t row = 0; row < coords.size(); ++row)
            if (coords[row] != 0) mat.set(row, col, coords[row]);
    }

    std::size_t rank = mat_rank(mat);
    if (rank != source.basis().size())
        throw std::logic_error("p-th power map on H^0 is not injective");

    return FrobTwistMap{s,
                        ps,
                        0,
                        std::move(mat),
                        rank,
                        0,
                        "monomial quotient basis at twist " + std::to_string(s),
                        "monomial quotient basis at twist " + std::to_string(ps)};
}

FpMatrix hasse_witt(const HypersurfaceDatum& X) {
    if (X.n() != 2) throw std::invalid_argument("hasse_witt: plane curves only (n = 2)");
    auto map = frobenius_htop_map(X, 0);
    long long g = X.genus();
    if (static_cast<long long>(map.matrix.rows()) != g ||
        static_cast<long long>(map.matrix.cols()) != g)
        throw std::logic_error("Hasse-Witt matrix size differs from genus");
    return map.matrix;
}

B1Row b1_dims(const HypersurfaceDatum& X, long long s) {
    const long long p = X.p();
    const long long ps = p * s;
    const std::size_t D = X.dim();

    FrobTwistMap top = frobenius_htop_map(X, s);
    long long h0_s = h0_dim(X, s), h0_ps = h0_dim(X, ps);
    long long rank = static_cast<long long>(top.rank);
    long long ker = static_cast<long long>(top.kernel_dim);

    B1Row row{};
    row.twist = s;
    row.frob_rank = top.rank;
    row.frob_kernel_dim = top.kernel_dim;
    if (D == 1) {
        row.h0 = (h0_ps - h0_s) + ker;
        row.h_mid = 0;
        row.h_top = htop_dim(X, ps) - rank;
    } else {
        row.h0 = h0_ps - h0_s;
        row.h_mid = ker;  // h^{n-2}; indices 1..n-3 vanish
        row.h_top = htop_dim(X, ps) - rank;
    }
    if (row.h0 < 0 || row.h_mid < 0 || row.h_top < 0)
        throw std::logic_error("negative cohomology dimension in B1 row");

    // chi additivity, exact over Z
    long long nn = static_cast<long long>(X.n());
    long long lhs = row.h0;
    if (D == 1) {
        lhs -= row.h_top;
    } else {
        lhs += (nn % 2 == 0 ? 1 : -1) * row.h_mid;   // (-1)^{n-2}
        lhs += (nn % 2 == 0 ? -1 : 1) * row.h_top;   // (-1)^{n-1}
    }
    if (lhs != chi_line_bundle(X, ps) - chi_line_bundle(X, s))
        throw std::logic_error("chi additivity violated on B1 row");
    return row;
}

B1Table b1_table_curve(const HypersurfaceDatum& X, long long lo, long long hi) {
    if (X.n() != 2) throw std::invalid_argument("b1_table_curve: plane curves only");
    B1Table table;
    for (long long s = lo; s <= hi; ++s) {
        B1Row row = b1_dims(X, s);
        table.rows[s] = {row.h0, row.h_top};
    }
    return table;
}

PushforwardDims pushforward_twist_dims(const HypersurfaceDatum& X, long long m) {
    const long long pm = static_cast<long long>(X.p()) * m;
    return {h0_dim(X, pm), 0, htop_dim(X, pm)};
}

}  // namespace charp
