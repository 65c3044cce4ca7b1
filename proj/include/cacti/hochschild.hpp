#pragma once

/// The Hochschild complex C^{p,q}(A) = Hom(A^{(x)q}, A)_p of a finite
/// dimensional (d.g.) algebra, as dense coefficient tensors over the algebra
/// basis, with the coboundary, cup product, brace operations, the * product
/// and Gerstenhaber bracket, and the skew-derivation cocycle constructor.
///
/// Sign conventions.  A q-cochain of internal degree p has total degree
/// t = p + q and shifted degree s = t - 1.  The insertion brace carries the
/// Koszul sign sum_k s(g_k) * W_k with W_k the suspended degree (internal
/// degree + 1) of the arguments standing before the k-th insertion, dressed
/// by the positional suspension twist of every argument tuple.  The cup
/// product is (f u g)(a) = (-1)^{p(g) sum_{j<=q_f} |a_j| + p(f) t(g)}
/// f(..) g(..); the external coboundary is d_e f = (-1)^{s(f)+1} mu{f} +
/// f{mu}, which in low arity reads (d_e f)(a, b) = -a f(b) + f(ab) - f(a) b.
/// B_m relates to the insertion brace by the shared bridging sign of
/// signs.hpp.  On trivially graded algebras every one of these signs reduces
/// to the classical ungraded convention.

#include <memory>
#include <string>
#include <vector>

#include "cacti/algebra.hpp"
#include "cacti/linalg.hpp"
#include "cacti/signs.hpp"

namespace cacti {

struct Cochain {
    std::shared_ptr<const AlgebraPresentation> parent;
    int arity = 0;     // q
    long internal = 0; // p
    std::vector<Scalar> coeffs; // size dim^{q+1}, index = out * dim^q + input code

    long total_degree() const { return internal + arity; }
    long shifted_degree() const { return total_degree() - 1; }

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const Cochain& o) const {
        if (parent != o.parent) return false;
        if (is_zero() && o.is_zero()) return true;
        if (arity != o.arity || internal != o.internal) return false;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != o.coeffs[i]) return false;
        return true;
    }
};

namespace hdetail {

/// positional suspension twist: sum over pairs i < j of |a_i|, the
/// argument-dependent part of moving desuspensions into a tensor slot
/// (normalized to vanish on trivially graded input)
inline long susp_twist(const AlgebraPresentation& A, const std::vector<int>& args) {
    long e = 0;
    long suffix = 0;
    for (int i = static_cast<int>(args.size()) - 1; i >= 0; --i) {
        e += static_cast<long>(A.degree[args[i]]) * suffix;
        ++suffix;
    }
    return e;
}

inline long pow_dim(int dim, int e) {
    long r = 1;
    while (e-- > 0) {
        r *= dim;
        if (r > 10000000L) throw TruncationExceeded("cochain tensor above 10^7 entries");
    }
    return r;
}

inline void decode(long code, int dim, int q, std::vector<int>& out) {
    out.assign(q, 0);
    for (int i = q - 1; i >= 0; --i) {
        out[i] = static_cast<int>(code % dim);
        code /= dim;
    }
}

inline long encode(const std::vector<int>& args, int dim) {
    long code = 0;
    for (int a : args) code = code * dim + a;
    return code;
}

} // namespace hdetail

inline Cochain cochain_zero(std::shared_ptr<const AlgebraPresentation> A, long p, int q) {
    Cochain c;
    c.parent = std::move(A);
    c.arity = q;
    c.internal = p;
    c.coeffs.assign(hdetail::pow_dim(c.parent->dim(), q + 1), Scalar::zero(c.parent->field));
    return c;
}

inline Scalar& cochain_at(Cochain& c, int out, const std::vector<int>& args) {
    const int dim = c.parent->dim();
    return c.coeffs[out * hdetail::pow_dim(dim, c.arity) + hdetail::encode(args, dim)];
}

inline const Scalar& cochain_at(const Cochain& c, int out, const std::vector<int>& args) {
    const int dim = c.parent->dim();
    return c.coeffs[out * hdetail::pow_dim(dim, c.arity) + hdetail::encode(args, dim)];
}

/// checks the bidegree invariant: coefficient zero unless deg(out) = p + sum deg(inputs)
inline bool cochain_homogeneous(const Cochain& c) {
    const auto& A = *c.parent;
    const int dim = A.dim();
    const long qpow = hdetail::pow_dim(dim, c.arity);
    std::vector<int> args;
    for (int out = 0; out < dim; ++out)
        for (long code = 0; code < qpow; ++code) {
            if (c.coeffs[out * qpow + code].is_zero()) continue;
            hdetail::decode(code, dim, c.arity, args);
            long din = 0;
            for (int a : args) din += A.degree[a];
            if (A.degree[out] != c.internal + din) return false;
        }
    return true;
}

inline void cochain_add(Cochain& acc, const Cochain& o, const Scalar& scale) {
    if (o.is_zero() || scale.is_zero()) return;
    if (acc.is_zero() && acc.arity != o.arity) {
        acc = cochain_zero(acc.parent, o.internal, o.arity);
    }
    if (acc.arity != o.arity) throw NonHomogeneous("adding cochains of different arity");
    if (acc.is_zero()) acc.internal = o.internal;
    else if (acc.internal != o.internal) throw NonHomogeneous("adding cochains of different internal degree");
    for (std::size_t i = 0; i < acc.coeffs.size(); ++i) acc.coeffs[i] += scale * o.coeffs[i];
}

/// the multiplication 2-cochain
inline Cochain multiplication_cochain(std::shared_ptr<const AlgebraPresentation> A) {
    Cochain mu = cochain_zero(A, 0, 2);
    const int dim = mu.parent->dim();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int out = 0; out < dim; ++out) {
                const Scalar& c = mu.parent->mult[a][b][out];
                if (!c.is_zero()) cochain_at(mu, out, {a, b}) += c;
            }
    return mu;
}

/// identity 1-cochain
inline Cochain identity_cochain(std::shared_ptr<const AlgebraPresentation> A) {
    Cochain f = cochain_zero(A, 0, 1);
    for (int i = 0; i < f.parent->dim(); ++i) cochain_at(f, i, {i}) = Scalar::one(f.parent->field);
    return f;
}

/// insertion brace f{g_1,...,g_k}
inline Cochain gv_hbrace(const Cochain& f, const std::vector<Cochain>& gs) {
    for (const auto& g : gs)
        if (g.parent != f.parent) throw ParentMismatch();
    if (gs.empty()) return f;
    const auto& A = *f.parent;
    const int dim = A.dim();
    const int k = static_cast<int>(gs.size());
    int N = f.arity - k;
    long p = f.internal;
    for (const auto& g : gs) {
        N += g.arity;
        p += g.internal;
    }
    if (k > f.arity || N < 0) return cochain_zero(f.parent, p, std::max(N, 0));
    Cochain out = cochain_zero(f.parent, p, N);
    if (f.is_zero()) return out;
    for (const auto& g : gs)
        if (g.is_zero()) return out;

    const long fq_pow = hdetail::pow_dim(dim, f.arity);
    std::vector<long> s_g(k);
    for (int j = 0; j < k; ++j) s_g[j] = gs[j].shifted_degree();

    // iterate increasing slot positions in [0, f.arity)
    std::vector<int> slot(k);
    for (int j = 0; j < k; ++j) slot[j] = j;
    while (true) {
        // recursive assembly over f's argument positions
        std::vector<int> f_args(f.arity), res_args;
        res_args.reserve(N);

        struct Rec {
            const Cochain& f;
            const std::vector<Cochain>& gs;
            const std::vector<int>& slot;
            const std::vector<long>& s_g;
            Cochain& out;
            const int dim;
            std::vector<int>& f_args;
            std::vector<int>& res_args;
            long fq_pow;

            void go(int pos, int next_slot, const Scalar& coeff, long w_susp, long conv) {
                if (coeff.is_zero()) return;
                const auto& A = *f.parent;
                if (pos == f.arity) {
                    long code = hdetail::encode(f_args, dim);
                    long rq = hdetail::encode(res_args, dim);
                    long npow = hdetail::pow_dim(dim, out.arity);
                    long e = conv + hdetail::susp_twist(A, f_args) + hdetail::susp_twist(A, res_args);
                    Scalar c = coeff;
                    if (parity_sign(e) < 0) c = -c;
                    for (int o = 0; o < dim; ++o) {
                        const Scalar& cf = f.coeffs[o * fq_pow + code];
                        if (!cf.is_zero()) out.coeffs[o * npow + rq] += c * cf;
                    }
                    return;
                }
                if (next_slot < static_cast<int>(slot.size()) && pos == slot[next_slot]) {
                    const Cochain& g = gs[next_slot];
                    const long gq_pow = hdetail::pow_dim(dim, g.arity);
                    std::vector<int> g_args;
                    for (int og = 0; og < dim; ++og)
                        for (long gc = 0; gc < gq_pow; ++gc) {
                            const Scalar& cg = g.coeffs[og * gq_pow + gc];
                            if (cg.is_zero()) continue;
                            hdetail::decode(gc, dim, g.arity, g_args);
                            Scalar c2 = coeff * cg;
                            if ((s_g[next_slot] * w_susp) % 2 != 0) c2 = -c2;
                            f_args[pos] = og;
                            std::size_t mark = res_args.size();
                            long w2 = w_susp;
                            for (int a : g_args) {
                                res_args.push_back(a);
                                w2 += A.degree[a] + 1;
                            }
                            go(pos + 1, next_slot + 1, c2, w2, conv + hdetail::susp_twist(A, g_args));
                            res_args.resize(mark);
                        }
                } else {
                    for (int a = 0; a < dim; ++a) {
                        f_args[pos] = a;
                        res_args.push_back(a);
                        go(pos + 1, next_slot, coeff, w_susp + A.degree[a] + 1, conv);
                        res_args.pop_back();
                    }
                }
            }
        } rec{f, gs, slot, s_g, out, dim, f_args, res_args, fq_pow};
        rec.go(0, 0, Scalar::one(A.field), 0, 0);

        int j = k - 1;
        while (j >= 0 && slot[j] == f.arity - (k - j)) --j;
        if (j < 0) break;
        ++slot[j];
        for (int l = j + 1; l < k; ++l) slot[l] = slot[l - 1] + 1;
    }
    return out;
}

/// cup product
inline Cochain hcup(const Cochain& f, const Cochain& g) {
    if (f.parent != g.parent) throw ParentMismatch();
    const auto& A = *f.parent;
    const int dim = A.dim();
    Cochain out = cochain_zero(f.parent, f.internal + g.internal, f.arity + g.arity);
    if (f.is_zero() || g.is_zero()) return out;
    const long fq = hdetail::pow_dim(dim, f.arity);
    const long gq = hdetail::pow_dim(dim, g.arity);
    const long nq = hdetail::pow_dim(dim, out.arity);
    std::vector<int> fa, ga;
    for (int of = 0; of < dim; ++of)
        for (long cf = 0; cf < fq; ++cf) {
            const Scalar& vf = f.coeffs[of * fq + cf];
            if (vf.is_zero()) continue;
            hdetail::decode(cf, dim, f.arity, fa);
            long degsum = 0;
            for (int a : fa) degsum += A.degree[a];
            for (int og = 0; og < dim; ++og)
                for (long cg = 0; cg < gq; ++cg) {
                    const Scalar& vg = g.coeffs[og * gq + cg];
                    if (vg.is_zero()) continue;
                    Scalar c = vf * vg;
                    // graded cup sign: p(g) past the inputs of f, p(f) past g
                    if ((g.internal * degsum + f.internal * g.total_degree()) % 2 != 0) c = -c;
                    const Vec& prod = A.mult[of][og];
                    long rq = cf * gq + cg;
                    for (int o = 0; o < dim; ++o)
                        if (!prod[o].is_zero()) out.coeffs[o * nq + rq] += c * prod[o];
                }
        }
    return out;
}

/// B_m(f, g_1..g_{m-1}) bridged from the insertion brace
inline Cochain hbrace(const Cochain& f, const std::vector<Cochain>& gs) {
    std::vector<long> t_gs;
    for (const auto& g : gs) t_gs.push_back(g.total_degree());
    long sigma = brace_bridge_exponent(f.total_degree(), t_gs);
    Cochain r = gv_hbrace(f, gs);
    if (parity_sign(sigma) < 0)
        for (auto& c : r.coeffs) c = -c;
    return r;
}

inline Cochain hbrace(int m, const Cochain& f, const std::vector<Cochain>& gs) {
    if (m < 2 || static_cast<int>(gs.size()) != m - 1)
        throw Error("brace arity mismatch: B_" + std::to_string(m) + " takes " + std::to_string(m - 1) + " arguments");
    return hbrace(f, gs);
}

/// f * g = (-1)^{s(f) s(g)} f{g}
inline Cochain hstar(const Cochain& f, const Cochain& g) {
    Cochain r = gv_hbrace(f, {g});
    if ((f.shifted_degree() * g.shifted_degree()) % 2 != 0)
        for (auto& c : r.coeffs) c = -c;
    return r;
}

/// [f, g] = f*g - (-1)^{s(f)s(g)} g*f
inline Cochain hgbracket(const Cochain& f, const Cochain& g) {
    Cochain r = hstar(f, g);
    Scalar sgn = (f.shifted_degree() * g.shifted_degree()) % 2 != 0
                     ? Scalar::one(f.parent->field)
                     : -Scalar::one(f.parent->field);
    cochain_add(r, hstar(g, f), sgn);
    return r;
}

/// external coboundary (bidegree (0,1)):
///   d_e f = (-1)^{s(f)+1} mu{f} + f{mu}
/// through the insertion brace; in low arity this is the
/// -a f(b) + f(ab) - f(a) b convention.
inline Cochain hdiff_external(const Cochain& f) {
    Cochain out = cochain_zero(f.parent, f.internal, f.arity + 1);
    if (f.is_zero()) return out;
    Cochain mu = multiplication_cochain(f.parent);
    Scalar outer = parity_sign(f.shifted_degree() + 1) < 0 ? -Scalar::one(f.parent->field)
                                                           : Scalar::one(f.parent->field);
    cochain_add(out, gv_hbrace(mu, {f}), outer);
    cochain_add(out, gv_hbrace(f, {mu}), Scalar::one(f.parent->field));
    return out;
}

/// internal part (bidegree (1,0)):
///   d_i f = (-1)^{q-1} [ d_A(f(..)) - sum_i (-1)^{p + |a_1|+..+|a_{i-1}|} f(.., d_A a_i, ..) ]
/// which in arity one is d(f(a)) - (-1)^{|f|} f(d a); the global twist makes
/// d_i anticommute with d_e so the total differential squares to zero.
inline Cochain hdiff_internal(const Cochain& f) {
    const auto& A = *f.parent;
    const int dim = A.dim();
    const int q = f.arity;
    Cochain out = cochain_zero(f.parent, f.internal + 1, q);
    if (!A.has_differential() || f.is_zero()) return out;
    const long fq = hdetail::pow_dim(dim, q);
    const long glob = q - 1;
    std::vector<int> fa;
    for (int of = 0; of < dim; ++of)
        for (long cf = 0; cf < fq; ++cf) {
            const Scalar& vf = f.coeffs[of * fq + cf];
            if (vf.is_zero()) continue;
            hdetail::decode(cf, dim, q, fa);
            for (int o = 0; o < dim; ++o)
                if (!A.differential[of][o].is_zero()) {
                    Scalar t = vf * A.differential[of][o];
                    if (parity_sign(glob) < 0) t = -t;
                    out.coeffs[o * fq + cf] += t;
                }
            for (int i = 0; i < q; ++i) {
                long prefix = glob + f.internal;
                for (int j = 0; j < i; ++j) prefix += A.degree[fa[j]];
                for (int u = 0; u < dim; ++u) {
                    const Scalar& m = A.differential[u][fa[i]];
                    if (m.is_zero()) continue;
                    std::vector<int> args = fa;
                    args[i] = u;
                    Scalar t = vf * m;
                    if (parity_sign(prefix) >= 0) t = -t;
                    out.coeffs[of * fq + hdetail::encode(args, dim)] += t;
                }
            }
        }
    return out;
}

inline Cochain hdifferential(const Cochain& f) {
    Cochain e = hdiff_external(f);
    if (!f.parent->has_differential()) return e;
    // d_e and d_i land in different bidegrees; zero cochains merge silently
    Cochain i = hdiff_internal(f);
    if (i.is_zero()) return e;
    if (e.is_zero()) return i;
    throw NonHomogeneous("d splits across bidegrees; use hdiff_external/hdiff_internal");
}

/// sum of bihomogeneous cochains, closed under the split differential
struct SumCochain {
    std::shared_ptr<const AlgebraPresentation> parent;
    std::vector<Cochain> parts; // distinct (p, q), no zero parts

    bool is_zero() const { return parts.empty(); }

    void add_part(const Cochain& c, const Scalar& scale) {
        if (c.is_zero() || scale.is_zero()) return;
        for (auto& p : parts) {
            if (p.arity == c.arity && p.internal == c.internal) {
                cochain_add(p, c, scale);
                if (p.is_zero()) {
                    p = parts.back();
                    parts.pop_back();
                    normalize();
                }
                return;
            }
        }
        Cochain nc = cochain_zero(c.parent, c.internal, c.arity);
        cochain_add(nc, c, scale);
        parts.push_back(std::move(nc));
        normalize();
    }

    void normalize() {
        std::sort(parts.begin(), parts.end(), [](const Cochain& a, const Cochain& b) {
            return a.arity != b.arity ? a.arity < b.arity : a.internal < b.internal;
        });
    }

    bool operator==(const SumCochain& o) const {
        if (parts.size() != o.parts.size()) return false;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!(parts[i] == o.parts[i])) return false;
        return true;
    }
};

inline std::string render_cochain(const Cochain& c, std::size_t max_terms = 12) {
    if (c.is_zero()) return "0";
    const auto& A = *c.parent;
    const int dim = A.dim();
    const long fq = hdetail::pow_dim(dim, c.arity);
    std::string s;
    std::size_t count = 0;
    std::vector<int> args;
    for (int out = 0; out < dim; ++out)
        for (long code = 0; code < fq; ++code) {
            const Scalar& v = c.coeffs[out * fq + code];
            if (v.is_zero()) continue;
            if (count >= max_terms) return s + " + ...";
            if (count) s += " + ";
            hdetail::decode(code, dim, c.arity, args);
            s += v.str() + " * " + A.basis[out] + "<-";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) s += ",";
                s += A.basis[args[i]];
            }
            ++count;
        }
    return s;
}

// ---------------------------------------------------------------------------
// skew-derivation cocycles

struct LinearMap {
    // col[i] = image of basis element e_i
    std::vector<Vec> col;

    Vec apply(const AlgebraPresentation& A, const Vec& v) const {
        Vec out = A.zero_vec();
        for (int i = 0; i < A.dim(); ++i) {
            if (v[i].is_zero()) continue;
            for (int k = 0; k < A.dim(); ++k)
                if (!col[i][k].is_zero()) out[k] += v[i] * col[i][k];
        }
        return out;
    }
};

inline LinearMap identity_map(const AlgebraPresentation& A) {
    LinearMap m;
    m.col.resize(A.dim());
    for (int i = 0; i < A.dim(); ++i) m.col[i] = A.basis_vec(i);
    return m;
}

struct SkewDerivationChain {
    std::vector<LinearMap> ds, gs, hs; // equal lengths
    int length() const { return static_cast<int>(ds.size()); }
};

/// chain invariants: every g_i, h_i is a unital algebra automorphism and
/// d_i(ab) = g_i(a) d_i(b) + d_i(a) h_i(b) on all basis pairs
inline AxiomReport check_skew_chain(const AlgebraPresentation& A, const SkewDerivationChain& ch) {
    AxiomReport rep;
    auto check_auto = [&](const LinearMap& m, const std::string& which) {
        bool ok = detail::vec_eq(m.apply(A, A.unit_vec()), A.unit_vec());
        std::string wit = ok ? "" : "1";
        for (int i = 0; i < A.dim() && ok; ++i)
            for (int j = 0; j < A.dim() && ok; ++j) {
                Vec lhs = m.apply(A, A.mult[i][j]);
                Vec rhs = A.multiply(m.apply(A, A.basis_vec(i)), m.apply(A, A.basis_vec(j)));
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + A.basis[i] + ", " + A.basis[j] + ")";
                }
            }
        if (ok) {
            SparseMatrix M(A.dim(), A.dim(), A.field);
            for (int i = 0; i < A.dim(); ++i)
                for (int k = 0; k < A.dim(); ++k)
                    if (!m.col[i][k].is_zero()) M.add(k, i, m.col[i][k]);
            if (rank(M) != A.dim()) {
                ok = false;
                wit = "not invertible";
            }
        }
        rep.add(which + " is a unital automorphism", ok, wit);
    };
    for (int l = 0; l < ch.length(); ++l) {
        check_auto(ch.gs[l], "g_" + std::to_string(l + 1));
        check_auto(ch.hs[l], "h_" + std::to_string(l + 1));
        bool ok = true;
        std::string wit;
        for (int i = 0; i < A.dim() && ok; ++i)
            for (int j = 0; j < A.dim() && ok; ++j) {
                Vec lhs = ch.ds[l].apply(A, A.mult[i][j]);
                Vec rhs = A.multiply(ch.gs[l].apply(A, A.basis_vec(i)), ch.ds[l].apply(A, A.basis_vec(j)));
                Vec r2 = A.multiply(ch.ds[l].apply(A, A.basis_vec(i)), ch.hs[l].apply(A, A.basis_vec(j)));
                for (int k = 0; k < A.dim(); ++k) rhs[k] += r2[k];
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + A.basis[i] + ", " + A.basis[j] + ")";
                }
            }
        rep.add("d_" + std::to_string(l + 1) + " is a (g,h)-skew derivation", ok, wit);
    }
    return rep;
}

struct SkewCocycleResult {
    Cochain f;
    bool compatible = true;      // g_1 = id, h_n = id, h_i = g_{i+1}
    std::string incompatibility; // first violated condition
};

/// f(a_1,...,a_n) = d_1(a_1) ... d_n(a_n).  Compatibility failures are
/// flagged, not thrown, so negative tests can evaluate the coboundary.
inline SkewCocycleResult skew_cocycle(std::shared_ptr<const AlgebraPresentation> Ap,
                                      const SkewDerivationChain& ch) {
    const auto& A = *Ap;
    AxiomReport inv = check_skew_chain(A, ch);
    if (!inv.all_passed())
        throw MalformedPresentation("skew chain invariant fails: " + inv.first_failure()->axiom +
                                    " witness " + inv.first_failure()->witness);
    const int n = ch.length();
    SkewCocycleResult res;
    auto maps_equal = [&](const LinearMap& a, const LinearMap& b) {
        for (int i = 0; i < A.dim(); ++i)
            if (!detail::vec_eq(a.col[i], b.col[i])) return false;
        return true;
    };
    LinearMap id = identity_map(A);
    if (!maps_equal(ch.gs[0], id)) {
        res.compatible = false;
        res.incompatibility = "g_1 != id";
    } else if (!maps_equal(ch.hs[n - 1], id)) {
        res.compatible = false;
        res.incompatibility = "h_" + std::to_string(n) + " != id";
    } else {
        for (int i = 0; i + 1 < n; ++i)
            if (!maps_equal(ch.hs[i], ch.gs[i + 1])) {
                res.compatible = false;
                res.incompatibility = "h_" + std::to_string(i + 1) + " != g_" + std::to_string(i + 2);
                break;
            }
    }

    const int dim = A.dim();
    const long nq = hdetail::pow_dim(dim, n);
    Cochain f = cochain_zero(Ap, 0, n);
    std::vector<int> args;
    bool first_term = true;
    long p = 0;
    for (long code = 0; code < nq; ++code) {
        hdetail::decode(code, dim, n, args);
        Vec acc = A.unit_vec();
        for (int l = 0; l < n; ++l) acc = A.multiply(acc, ch.ds[l].apply(A, A.basis_vec(args[l])));
        for (int o = 0; o < dim; ++o) {
            if (acc[o].is_zero()) continue;
            long din = 0;
            for (int a : args) din += A.degree[a];
            long defect = A.degree[o] - din;
            if (first_term) {
                p = defect;
                first_term = false;
            } else if (defect != p) {
                throw NonHomogeneous("skew cocycle is not internally homogeneous");
            }
            f.coeffs[o * nq + code] += acc[o];
        }
    }
    f.internal = p;
    res.f = f;
    return res;
}

} // namespace cacti
