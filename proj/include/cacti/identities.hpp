#pragma once

/// Evaluated identity checking for the cacti operations, generic over the two
/// realizations (cobar construction and Hochschild complex).  Every identity
/// is checked by exact evaluation on seeded random homogeneous tuples; the
/// first failing tuple is reported as a witness.
///
/// Identity list: brace_relation, distributivity, boundary_of_Bm (m = 2,3,4),
/// preLie, ext1_associativity, diagonal_action (cobar only), well-graded
/// vanishing, left distributivity of B_2 over the tensor product, and the
/// derivation property of d over the cup product.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cacti/cacti_ops.hpp"
#include "cacti/cobar.hpp"
#include "cacti/hochschild.hpp"
#include "cacti/rng.hpp"

namespace cacti {

enum class IdentityId {
    BraceRelation,
    Distributivity,
    BoundaryOfBm,
    PreLie,
    Ext1Associativity,
    DiagonalAction,
    WellGradedVanishing,
    LeftDistributivityB2,
    DIsDerivation,
};

inline const std::vector<std::pair<IdentityId, std::string>>& identity_names() {
    static const std::vector<std::pair<IdentityId, std::string>> names = {
        {IdentityId::BraceRelation, "brace_relation"},
        {IdentityId::Distributivity, "distributivity"},
        {IdentityId::BoundaryOfBm, "boundary_of_Bm"},
        {IdentityId::PreLie, "preLie"},
        {IdentityId::Ext1Associativity, "ext1_associativity"},
        {IdentityId::DiagonalAction, "diagonal_action"},
        {IdentityId::WellGradedVanishing, "well_graded_vanishing"},
        {IdentityId::LeftDistributivityB2, "left_distributivity_B2"},
        {IdentityId::DIsDerivation, "d_is_derivation"},
    };
    return names;
}

inline std::string identity_name(IdentityId id) {
    for (const auto& [i, n] : identity_names())
        if (i == id) return n;
    return "?";
}

inline std::optional<IdentityId> identity_from_name(const std::string& s) {
    for (const auto& [i, n] : identity_names())
        if (n == s) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// cobar side adapter

struct CobarSide {
    std::shared_ptr<const CounitKernel> K;
    int max_ext = 3;

    using Elt = CobarElement;

    Elt d(const Elt& e) const { return differential(e); }
    Elt cup2(const Elt& a, const Elt& b) const { return cup(a, b); }
    Elt bm(const Elt& x, const std::vector<Elt>& ys) const { return brace(x, ys); }
    Elt gv(const Elt& x, const std::vector<Elt>& ys) const { return gv_brace(x, ys); }
    Elt star2(const Elt& a, const Elt& b) const { return star(a, b); }
    Elt combine(const Elt& a, const Elt& b, int sign) const {
        Elt r = a;
        r.add(b, sign >= 0 ? Scalar::one(K->field()) : -Scalar::one(K->field()));
        return r;
    }
    Elt scaled(const Elt& a, int sign) const {
        Elt r = cobar_zero(K);
        r.add(a, sign >= 0 ? Scalar::one(K->field()) : -Scalar::one(K->field()));
        return r;
    }
    bool zero(const Elt& e) const { return e.is_zero(); }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }
    long total(const Elt& e) const { return total_degree_of(e); }
    long ext(const Elt& e) const { return bidegree_of(e).external; }
    std::string render(const Elt& e) const { return render_element(e); }

    Elt sample_ext(SplitMix64& rng, int e) const {
        if (K->dim() == 0) return cobar_zero(K); // everything is vacuous over V = 0
        Word w(e);
        for (int i = 0; i < e; ++i) w[i] = static_cast<int>(rng.below(K->dim()));
        Bidegree bd = word_bidegree(*K, w);
        Elt out = cobar_zero(K);
        long c0 = rng.range(-3, 3);
        if (c0 == 0) c0 = 1;
        out.add_term(w, Scalar::of_int(K->field(), c0));
        // a few extra words of the same bidegree
        int extras = static_cast<int>(rng.below(2));
        for (int t = 0; t < extras * 8; ++t) {
            Word v(e);
            for (int i = 0; i < e; ++i) v[i] = static_cast<int>(rng.below(K->dim()));
            if (word_bidegree(*K, v) == bd) {
                long c = rng.range(-3, 3);
                if (c != 0) out.add_term(v, Scalar::of_int(K->field(), c));
                break;
            }
        }
        if (out.is_zero()) out.add_term(w, Scalar::one(K->field()));
        return out;
    }

    Elt sample(SplitMix64& rng) const { return sample_ext(rng, 1 + static_cast<int>(rng.below(max_ext))); }

    std::vector<Elt> basis_up_to(int max_e) const {
        std::vector<Elt> out;
        for (int e = 1; e <= max_e; ++e) {
            Word w(e, 0);
            while (true) {
                out.push_back(word_element(K, w, Scalar::one(K->field())));
                int pos = e - 1;
                while (pos >= 0 && w[pos] == K->dim() - 1) { w[pos] = 0; --pos; }
                if (pos < 0) break;
                ++w[pos];
            }
        }
        return out;
    }

    /// the diagonal-action identity for a random letter x and words y, z:
    /// x*(y u z) = sum (-1)^{|x|+|x2|+|y|+|x2||y|} (x1*y) u (x2*z)
    std::optional<std::string> diagonal_action_witness(SplitMix64& rng) const {
        const auto& H = *K->parent;
        int letter = static_cast<int>(rng.below(K->dim()));
        Elt x = word_element(K, {letter}, Scalar::one(K->field()));
        Elt y = sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
        Elt z = sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
        Elt lhs = star(x, cup(y, z));
        long tx = K->total_letter_degree(letter);
        long ty = total_degree_of(y);
        Elt rhs = cobar_zero(K);
        Vec lift = K->lift(letter);
        for (int i = 0; i < H.dim(); ++i) {
            if (lift[i].is_zero()) continue;
            for (int a = 0; a < H.dim(); ++a)
                for (int b = 0; b < H.dim(); ++b) {
                    const Scalar& c = H.comult[i][a][b];
                    if (c.is_zero()) continue;
                    long tb = H.degree[b] + 1;
                    long e = tx + tb + ty + tb * ty;
                    Elt left = h_star_action(K, a, y);
                    Elt right = h_star_action(K, b, z);
                    Elt prod = cup(left, right);
                    Scalar coeff = lift[i] * c;
                    if (parity_sign(e) < 0) coeff = -coeff;
                    rhs.add(prod, coeff);
                }
        }
        if (lhs == rhs) return std::nullopt;
        return "x = " + render(x) + ", y = " + render(y) + ", z = " + render(z) +
               "; lhs = " + render(lhs) + ", rhs = " + render(rhs);
    }

    /// diagonal action of a basis element of H on a cobar element
    static Elt h_star_action(std::shared_ptr<const CounitKernel> K, int h_basis, const Elt& y) {
        Elt out = cobar_zero(K);
        for (const auto& [w, c] : y.terms) {
            auto blocks = detail::diag_star_basis(*K, h_basis, w);
            for (const auto& [bw, bc] : blocks) out.add_term(bw, c * bc);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Hochschild side adapter; elements are sums of bihomogeneous cochains

struct HochschildSide {
    std::shared_ptr<const AlgebraPresentation> A;
    int max_q = 2;

    using Elt = SumCochain;

    Elt wrap(const Cochain& c) const {
        Elt e{A, {}};
        e.add_part(c, Scalar::one(A->field));
        return e;
    }

    Elt d(const Elt& e) const {
        Elt out{A, {}};
        for (const auto& p : e.parts) {
            out.add_part(hdiff_external(p), Scalar::one(A->field));
            if (A->has_differential()) out.add_part(hdiff_internal(p), Scalar::one(A->field));
        }
        return out;
    }

    Elt cup2(const Elt& a, const Elt& b) const {
        Elt out{A, {}};
        for (const auto& pa : a.parts)
            for (const auto& pb : b.parts) out.add_part(hcup(pa, pb), Scalar::one(A->field));
        return out;
    }

    template <class F>
    Elt multi(const Elt& x, const std::vector<Elt>& ys, F&& op) const {
        Elt out{A, {}};
        std::vector<int> sel(ys.size(), 0);
        for (const auto& px : x.parts) {
            if (ys.empty()) {
                out.add_part(op(px, {}), Scalar::one(A->field));
                continue;
            }
            std::fill(sel.begin(), sel.end(), 0);
            while (true) {
                std::vector<Cochain> args;
                args.reserve(ys.size());
                bool skip = false;
                for (std::size_t k = 0; k < ys.size(); ++k) {
                    if (ys[k].parts.empty()) { skip = true; break; }
                    args.push_back(ys[k].parts[sel[k]]);
                }
                if (skip) break;
                out.add_part(op(px, args), Scalar::one(A->field));
                int k = static_cast<int>(ys.size()) - 1;
                while (k >= 0 && sel[k] + 1 == static_cast<int>(ys[k].parts.size())) { sel[k] = 0; --k; }
                if (k < 0) break;
                ++sel[k];
            }
        }
        return out;
    }

    Elt bm(const Elt& x, const std::vector<Elt>& ys) const {
        return multi(x, ys, [](const Cochain& f, const std::vector<Cochain>& gs) { return hbrace(f, gs); });
    }
    Elt gv(const Elt& x, const std::vector<Elt>& ys) const {
        return multi(x, ys, [](const Cochain& f, const std::vector<Cochain>& gs) { return gv_hbrace(f, gs); });
    }
    Elt star2(const Elt& a, const Elt& b) const {
        return multi(a, {b}, [](const Cochain& f, const std::vector<Cochain>& gs) { return hstar(f, gs[0]); });
    }
    Elt combine(const Elt& a, const Elt& b, int sign) const {
        Elt r = a;
        Scalar s = sign >= 0 ? Scalar::one(A->field) : -Scalar::one(A->field);
        for (const auto& p : b.parts) r.add_part(p, s);
        return r;
    }
    Elt scaled(const Elt& a, int sign) const {
        if (sign >= 0) return a;
        Elt r{A, {}};
        for (const auto& p : a.parts) r.add_part(p, -Scalar::one(A->field));
        return r;
    }
    bool zero(const Elt& e) const { return e.is_zero(); }
    bool eq(const Elt& a, const Elt& b) const { return a == b; }

    long total(const Elt& e) const {
        if (e.is_zero()) return 0;
        long t = e.parts.front().total_degree();
        for (const auto& p : e.parts)
            if (p.total_degree() != t) throw NonHomogeneous("mixed total degrees");
        return t;
    }
    long ext(const Elt& e) const {
        if (e.is_zero()) return 0;
        long q = e.parts.front().arity;
        for (const auto& p : e.parts)
            if (p.arity != q) throw NonHomogeneous("mixed arities");
        return q;
    }
    std::string render(const Elt& e) const {
        if (e.is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i) s += "  (+)  ";
            s += render_cochain(e.parts[i]);
        }
        return s;
    }

    Elt sample_ext(SplitMix64& rng, int q) const {
        const auto& P = *A;
        const int dim = P.dim();
        const long qpow = hdetail::pow_dim(dim, q);
        // choose an achievable internal degree from a random entry's defect
        std::vector<int> args;
        int out0 = static_cast<int>(rng.below(dim));
        long code0 = static_cast<long>(rng.below(static_cast<std::uint64_t>(qpow)));
        hdetail::decode(code0, dim, q, args);
        long p = P.degree[out0];
        for (int a : args) p -= P.degree[a];
        Cochain c = cochain_zero(A, p, q);
        bool nonzero = false;
        for (int out = 0; out < dim; ++out)
            for (long code = 0; code < qpow; ++code) {
                hdetail::decode(code, dim, q, args);
                long din = 0;
                for (int a : args) din += P.degree[a];
                if (P.degree[out] != p + din) continue;
                if (rng.below(2) == 0) continue; // sparse fill
                long v = rng.range(-3, 3);
                if (v == 0) continue;
                c.coeffs[out * qpow + code] = Scalar::of_int(P.field, v);
                nonzero = true;
            }
        if (!nonzero) c.coeffs[out0 * qpow + code0] = Scalar::one(P.field);
        return wrap(c);
    }

    Elt sample(SplitMix64& rng) const { return sample_ext(rng, static_cast<int>(rng.below(max_q + 1))); }

    std::vector<Elt> basis_up_to(int max_arity) const {
        std::vector<Elt> out;
        const int dim = A->dim();
        for (int q = 0; q <= max_arity; ++q) {
            const long qpow = hdetail::pow_dim(dim, q);
            std::vector<int> args;
            for (int o = 0; o < dim; ++o)
                for (long code = 0; code < qpow; ++code) {
                    hdetail::decode(code, dim, q, args);
                    long p = A->degree[o];
                    for (int a : args) p -= A->degree[a];
                    Cochain c = cochain_zero(A, p, q);
                    c.coeffs[o * qpow + code] = Scalar::one(A->field);
                    out.push_back(wrap(c));
                }
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// the generic checker

namespace idet {

template <class Side>
using EltOf = typename Side::Elt;

template <class Side>
std::optional<std::string> check_brace_relation_once(Side& side, SplitMix64& rng, int max_ext) {
    const int a = 1 + static_cast<int>(rng.below(2));
    const int b = 1 + static_cast<int>(rng.below(2));
    auto x = side.sample_ext(rng, std::max(2, std::min(max_ext, a + 1)));
    std::vector<EltOf<Side>> ys, zs;
    for (int i = 0; i < a; ++i) ys.push_back(side.sample_ext(rng, 1 + static_cast<int>(rng.below(2))));
    for (int i = 0; i < b; ++i) zs.push_back(side.sample_ext(rng, 1 + static_cast<int>(rng.below(2))));

    auto lhs = side.gv(side.gv(x, ys), zs);

    std::vector<long> sy(a), sz(b);
    for (int i = 0; i < a; ++i) sy[i] = side.total(ys[i]) - 1;
    for (int i = 0; i < b; ++i) sz[i] = side.total(zs[i]) - 1;

    EltOf<Side> rhs = side.scaled(lhs, 1);
    rhs = side.combine(rhs, rhs, -1); // zero of the right shape

    // enumerate 0 <= i_1 <= j_1 <= ... <= j_a <= b
    std::vector<int> ij(2 * a, 0);
    std::function<void(int, int)> enumerate = [&](int k, int low) {
        if (k == 2 * a) {
            std::vector<EltOf<Side>> args;
            long e = 0;
            int cursor = 0;
            for (int t = 0; t < a; ++t) {
                int i_t = ij[2 * t], j_t = ij[2 * t + 1];
                for (int l = cursor; l < i_t; ++l) args.push_back(zs[l]);
                std::vector<EltOf<Side>> inner(zs.begin() + i_t, zs.begin() + j_t);
                args.push_back(side.gv(ys[t], inner));
                for (int l = 0; l < i_t; ++l) e += sy[t] * sz[l];
                cursor = j_t;
            }
            for (int l = cursor; l < b; ++l) args.push_back(zs[l]);
            rhs = side.combine(rhs, side.scaled(side.gv(x, args), parity_sign(e)), 1);
            return;
        }
        for (int v = low; v <= b; ++v) {
            ij[k] = v;
            enumerate(k + 1, v);
        }
    };
    enumerate(0, 0);

    if (side.eq(lhs, rhs)) return std::nullopt;
    return "x = " + side.render(x) + "; lhs = " + side.render(lhs) + "; rhs = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_distributivity_once(Side& side, SplitMix64& rng, int max_ext) {
    const int b = 1 + static_cast<int>(rng.below(2));
    auto x = side.sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
    auto y = side.sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
    std::vector<EltOf<Side>> zs;
    for (int i = 0; i < b; ++i) zs.push_back(side.sample_ext(rng, 1 + static_cast<int>(rng.below(2))));

    auto lhs = side.gv(side.cup2(x, y), zs);
    std::vector<long> sz(b);
    for (int i = 0; i < b; ++i) sz[i] = side.total(zs[i]) - 1;

    // (x u y){z_1..z_b} = sum_i (-1)^{e_i} x{z_1..z_i} u y{z_{i+1}..z_b} with
    // e_i = sum_{k>i} s(z_k) * t(x{z_1..z_i}): arguments routed into y pass
    // the whole left composite
    auto rhs = side.combine(lhs, lhs, -1);
    for (int i = 0; i <= b; ++i) {
        long t_left = side.total(x);
        for (int l = 0; l < i; ++l) t_left += sz[l];
        long e = 0;
        for (int k = i; k < b; ++k) e += sz[k] * t_left;
        std::vector<EltOf<Side>> left(zs.begin(), zs.begin() + i), right(zs.begin() + i, zs.end());
        rhs = side.combine(rhs, side.scaled(side.cup2(side.gv(x, left), side.gv(y, right)), parity_sign(e)), 1);
    }
    if (side.eq(lhs, rhs)) return std::nullopt;
    return "x = " + side.render(x) + ", y = " + side.render(y) + "; lhs = " + side.render(lhs) +
           "; rhs = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_boundary_bm_once(Side& side, SplitMix64& rng, int max_ext, int m) {
    if (max_ext < m - 1) return std::nullopt;
    auto x = side.sample_ext(rng, m - 1 + static_cast<int>(rng.below(std::max(1, max_ext - m + 2))));
    std::vector<EltOf<Side>> ys;
    for (int i = 0; i < m - 1; ++i) ys.push_back(side.sample_ext(rng, 1 + static_cast<int>(rng.below(2))));

    long tx = side.total(x);
    std::vector<long> ty(m - 1);
    for (int i = 0; i < m - 1; ++i) ty[i] = side.total(ys[i]);

    // delta B_m(x, ys) = d(B_m(x,ys)) - (-1)^{m-1} B_m(dx, ys)
    //   - sum_k (-1)^{m-1+t(x)+t(y_1)+..+t(y_{k-1})} B_m(x, .., dy_k, ..)
    auto lhs = side.d(side.bm(x, ys));
    lhs = side.combine(lhs, side.scaled(side.bm(side.d(x), ys), -parity_sign(m - 1)), 1);
    long acc = m - 1 + tx;
    for (int k = 0; k < m - 1; ++k) {
        std::vector<EltOf<Side>> mod = ys;
        mod[k] = side.d(ys[k]);
        lhs = side.combine(lhs, side.scaled(side.bm(x, mod), -parity_sign(acc)), 1);
        acc += ty[k];
    }

    // rhs = (-1)^{t(y_1)(t(x)+m-2)} y_1 u B_{m-1}(x, y_2..)
    //     + sum_{i=1}^{m-2} (-1)^i B_{m-1}(x, .., y_i u y_{i+1}, ..)
    //     + (-1)^{m+1} B_{m-1}(x, y_1..y_{m-2}) u y_{m-1}
    auto b_m1 = [&](const std::vector<EltOf<Side>>& args) {
        if (args.empty()) return x;
        return side.bm(x, args);
    };
    std::vector<EltOf<Side>> tail(ys.begin() + 1, ys.end());
    auto rhs = side.scaled(side.cup2(ys[0], b_m1(tail)), parity_sign(ty[0] * (tx + m - 2)));
    for (int i = 1; i <= m - 2; ++i) {
        std::vector<EltOf<Side>> merged;
        for (int k = 0; k < m - 1; ++k) {
            if (k == i - 1) {
                merged.push_back(side.cup2(ys[k], ys[k + 1]));
                ++k;
            } else {
                merged.push_back(ys[k]);
            }
        }
        rhs = side.combine(rhs, side.scaled(b_m1(merged), parity_sign(i)), 1);
    }
    std::vector<EltOf<Side>> head(ys.begin(), ys.end() - 1);
    rhs = side.combine(rhs, side.scaled(side.cup2(b_m1(head), ys[m - 2]), parity_sign(m + 1)), 1);

    if (side.eq(lhs, rhs)) return std::nullopt;
    return "m = " + std::to_string(m) + ", x = " + side.render(x) + "; lhs = " + side.render(lhs) +
           "; rhs = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_prelie_once(Side& side, SplitMix64& rng, int max_ext) {
    auto a = side.sample(rng);
    auto b = side.sample(rng);
    auto c = side.sample(rng);
    (void)max_ext;
    auto assoc = [&](const EltOf<Side>& p, const EltOf<Side>& q, const EltOf<Side>& r) {
        return side.combine(side.star2(side.star2(p, q), r), side.star2(p, side.star2(q, r)), -1);
    };
    long sb = side.total(b) - 1, sc = side.total(c) - 1;
    auto lhs = assoc(a, b, c);
    auto rhs = side.scaled(assoc(a, c, b), parity_sign(sb * sc));
    if (side.eq(lhs, rhs)) return std::nullopt;
    return "a = " + side.render(a) + ", b = " + side.render(b) + ", c = " + side.render(c);
}

template <class Side>
std::optional<std::string> check_ext1_assoc_once(Side& side, SplitMix64& rng, int max_ext) {
    auto x = side.sample_ext(rng, 1);
    auto y = side.sample(rng);
    auto z = side.sample(rng);
    (void)max_ext;
    auto lhs = side.star2(side.star2(x, y), z);
    auto rhs = side.star2(x, side.star2(y, z));
    if (side.eq(lhs, rhs)) return std::nullopt;
    return "x = " + side.render(x) + ", y = " + side.render(y) + ", z = " + side.render(z) +
           "; (x*y)*z = " + side.render(lhs) + ", x*(y*z) = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_left_dist_once(Side& side, SplitMix64& rng, int max_ext) {
    auto a = side.sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
    auto b = side.sample_ext(rng, 1 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
    auto c = side.sample(rng);
    long tb = side.total(b), tc = side.total(c);
    auto lhs = side.star2(side.cup2(a, b), c);
    auto rhs = side.combine(side.cup2(a, side.star2(b, c)),
                            side.scaled(side.cup2(side.star2(a, c), b), parity_sign(tb * (tc + 1))), 1);
    if (side.eq(lhs, rhs)) return std::nullopt;
    return "a = " + side.render(a) + ", b = " + side.render(b) + ", c = " + side.render(c) +
           "; lhs = " + side.render(lhs) + "; rhs = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_d_derivation_once(Side& side, SplitMix64& rng, int max_ext) {
    auto a = side.sample(rng);
    auto b = side.sample(rng);
    (void)max_ext;
    auto lhs = side.d(side.cup2(a, b));
    auto rhs = side.combine(side.cup2(side.d(a), b),
                            side.scaled(side.cup2(a, side.d(b)), parity_sign(side.total(a))), 1);
    if (side.eq(lhs, rhs)) return std::nullopt;
    return "a = " + side.render(a) + ", b = " + side.render(b) + "; d(a u b) = " + side.render(lhs) +
           "; rhs = " + side.render(rhs);
}

template <class Side>
std::optional<std::string> check_vanishing(Side& side, SplitMix64& rng, int max_ext) {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& a : side.basis_up_to(std::min(max_ext, n - 2))) {
            if (side.ext(a) >= n - 1) continue;
            std::vector<EltOf<Side>> ys;
            for (int i = 0; i < n - 1; ++i) ys.push_back(side.sample(rng));
            auto r = side.bm(a, ys);
            if (!side.zero(r))
                return "B_" + std::to_string(n) + "(" + side.render(a) + ", ...) = " + side.render(r);
        }
    }
    return std::nullopt;
}

} // namespace idet

/// XORs a per-identity tag into the seed so each identity gets its own stream.
template <class Side>
AxiomReport check_identity(IdentityId id, Side& side, int samples, std::uint64_t seed, int max_ext) {
    AxiomReport rep;
    std::string name = identity_name(id);
    std::optional<std::string> witness;
    int ran = 0;

    auto run = [&](auto&& once) {
        SplitMix64 rng(seed ^ (0x9e37u + static_cast<std::uint64_t>(id)));
        for (int s = 0; s < samples && !witness; ++s) {
            witness = once(side, rng, max_ext);
            ++ran;
            if (witness) *witness = "sample " + std::to_string(s) + ": " + *witness;
        }
    };

    switch (id) {
    case IdentityId::BraceRelation:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_brace_relation_once(s, r, m); });
        break;
    case IdentityId::Distributivity:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_distributivity_once(s, r, m); });
        break;
    case IdentityId::BoundaryOfBm: {
        SplitMix64 rng(seed ^ (0x9e37u + static_cast<std::uint64_t>(id)));
        for (int s = 0; s < samples && !witness; ++s) {
            int m = 2 + s % 3;
            witness = idet::check_boundary_bm_once(side, rng, max_ext, m);
            ++ran;
            if (witness) *witness = "sample " + std::to_string(s) + ": " + *witness;
        }
        break;
    }
    case IdentityId::PreLie:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_prelie_once(s, r, m); });
        break;
    case IdentityId::Ext1Associativity:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_ext1_assoc_once(s, r, m); });
        break;
    case IdentityId::DiagonalAction:
        if constexpr (requires(Side& s, SplitMix64& r) { s.diagonal_action_witness(r); }) {
            SplitMix64 rng(seed ^ (0x9e37u + static_cast<std::uint64_t>(id)));
            for (int s = 0; s < samples && !witness; ++s) {
                witness = side.diagonal_action_witness(rng);
                ++ran;
                if (witness) *witness = "sample " + std::to_string(s) + ": " + *witness;
            }
        } else {
            rep.add(name + " [n/a: needs a coproduct; vacuous here]", true);
            return rep;
        }
        break;
    case IdentityId::WellGradedVanishing: {
        SplitMix64 rng(seed ^ (0x9e37u + static_cast<std::uint64_t>(id)));
        witness = idet::check_vanishing(side, rng, max_ext);
        ran = 1;
        break;
    }
    case IdentityId::LeftDistributivityB2:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_left_dist_once(s, r, m); });
        break;
    case IdentityId::DIsDerivation:
        run([](Side& s, SplitMix64& r, int m) { return idet::check_d_derivation_once(s, r, m); });
        break;
    }

    rep.add(name + " [" + std::to_string(ran) + " samples]", !witness.has_value(),
            witness.value_or(""));
    return rep;
}

/// the full identity suite on one side
template <class Side>
AxiomReport check_all_identities(Side& side, int samples, std::uint64_t seed, int max_ext) {
    AxiomReport rep;
    for (const auto& [id, n] : identity_names()) {
        AxiomReport one = check_identity(id, side, samples, seed, max_ext);
        for (auto& c : one.checks) rep.checks.push_back(std::move(c));
    }
    return rep;
}

/// the cacti identity suite on the Hochschild complex of A
inline AxiomReport well_graded_report(std::shared_ptr<const AlgebraPresentation> A, int max_q,
                                      int samples, std::uint64_t seed) {
    HochschildSide side{std::move(A), max_q};
    return check_all_identities(side, samples, seed, max_q);
}

} // namespace cacti
