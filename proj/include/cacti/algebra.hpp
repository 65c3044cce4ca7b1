#pragma once

/// Finite-dimensional graded (co/bi)algebras given by structure constants over
/// an exact field, together with exhaustive axiom checkers.  Presentations are
/// immutable after validation; all checks run over every basis tuple and
/// report a witness for each failure.
///
/// Conventions: the unit is an explicit basis element; internal degrees live
/// on basis elements; the Koszul sign in graded statements uses internal
/// degrees only.

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "cacti/errors.hpp"
#include "cacti/scalar.hpp"
#include "cacti/signs.hpp"

namespace cacti {

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string witness; // empty when passing
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    void add(const std::string& axiom, bool pass, const std::string& witness = "") {
        checks.push_back({axiom, pass, pass ? "" : witness});
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const AxiomCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    std::string str() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.pass ? "[ok]   " : "[FAIL] ";
            out += c.axiom;
            if (!c.pass && !c.witness.empty()) out += "  witness: " + c.witness;
            out += "\n";
        }
        return out;
    }
};

using Vec = std::vector<Scalar>;          // dense coefficient vector over a basis
using TensorSquare = std::vector<Vec>;    // dense dim x dim element of H (x) H

struct AlgebraPresentation {
    std::string name;
    Field field;
    std::vector<std::string> basis;
    std::vector<int> degree;
    int unit = 0;
    // mult[i][j] = coefficient vector of e_i * e_j
    std::vector<std::vector<Vec>> mult;
    // d[i] = coefficient vector of d(e_i); empty vector <=> no differential
    std::vector<Vec> differential;

    int dim() const { return static_cast<int>(basis.size()); }
    bool has_differential() const { return !differential.empty(); }

    Vec zero_vec() const { return Vec(basis.size(), Scalar::zero(field)); }

    Vec unit_vec() const {
        Vec v = zero_vec();
        v[unit] = Scalar::one(field);
        return v;
    }

    Vec basis_vec(int i) const {
        Vec v = zero_vec();
        v[i] = Scalar::one(field);
        return v;
    }

    int index_of(const std::string& label) const {
        for (int i = 0; i < dim(); ++i)
            if (basis[i] == label) return i;
        return -1;
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec r = zero_vec();
        for (int i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                Scalar c = a[i] * b[j];
                const Vec& m = mult[i][j];
                for (int k = 0; k < dim(); ++k)
                    if (!m[k].is_zero()) r[k] += c * m[k];
            }
        }
        return r;
    }

    Vec apply_d(const Vec& a) const {
        Vec r = zero_vec();
        if (!has_differential()) return r;
        for (int i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (int k = 0; k < dim(); ++k)
                if (!differential[i][k].is_zero()) r[k] += a[i] * differential[i][k];
        }
        return r;
    }

    /// Structural sanity; throws MalformedPresentation.  Degree-homogeneity of
    /// the constants is an axiom (reported by check_axioms), not a shape error.
    void validate_shape() const {
        const std::size_t n = basis.size();
        if (n == 0) throw MalformedPresentation(name + ": empty basis");
        if (degree.size() != n) throw MalformedPresentation(name + ": degree list has wrong length");
        if (unit < 0 || unit >= static_cast<int>(n)) throw MalformedPresentation(name + ": unit index out of range");
        if (mult.size() != n) throw MalformedPresentation(name + ": mult table has wrong shape");
        for (const auto& row : mult) {
            if (row.size() != n) throw MalformedPresentation(name + ": mult table has wrong shape");
            for (const auto& v : row) {
                if (v.size() != n) throw MalformedPresentation(name + ": mult entry has wrong length");
                for (const auto& s : v)
                    if (s.field() != field) throw MalformedPresentation(name + ": mult constant over wrong field");
            }
        }
        if (!differential.empty()) {
            if (differential.size() != n) throw MalformedPresentation(name + ": differential has wrong shape");
            for (const auto& v : differential)
                if (v.size() != n) throw MalformedPresentation(name + ": differential entry has wrong length");
        }
        for (int i = 0; i < static_cast<int>(n); ++i)
            for (int j = 0; j < static_cast<int>(n); ++j)
                if (i != j && basis[i] == basis[j])
                    throw MalformedPresentation(name + ": duplicate basis label " + basis[i]);
    }
};

struct BialgebraPresentation : AlgebraPresentation {
    // comult[i][j][k] = coefficient of e_j (x) e_k in Delta(e_i)
    std::vector<TensorSquare> comult;
    Vec counit;

    TensorSquare zero_tensor() const {
        return TensorSquare(basis.size(), zero_vec());
    }

    TensorSquare comult_of(const Vec& a) const {
        TensorSquare t = zero_tensor();
        for (int i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k)
                    if (!comult[i][j][k].is_zero()) t[j][k] += a[i] * comult[i][j][k];
        }
        return t;
    }

    Scalar counit_of(const Vec& a) const {
        Scalar s = Scalar::zero(field);
        for (int i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) s += a[i] * counit[i];
        return s;
    }

    /// Product in H (x) H with the Koszul sign (a(x)b)(c(x)d) = (-1)^{|b||c|} ac (x) bd.
    TensorSquare tensor_multiply(const TensorSquare& m, const TensorSquare& n) const {
        TensorSquare r = zero_tensor();
        for (int a = 0; a < dim(); ++a)
            for (int b = 0; b < dim(); ++b) {
                if (m[a][b].is_zero()) continue;
                for (int c = 0; c < dim(); ++c)
                    for (int d = 0; d < dim(); ++d) {
                        if (n[c][d].is_zero()) continue;
                        Scalar coeff = m[a][b] * n[c][d];
                        if ((degree[b] * degree[c]) % 2 != 0) coeff = -coeff;
                        const Vec& left = mult[a][c];
                        const Vec& right = mult[b][d];
                        for (int u = 0; u < dim(); ++u) {
                            if (left[u].is_zero()) continue;
                            Scalar cu = coeff * left[u];
                            for (int v = 0; v < dim(); ++v)
                                if (!right[v].is_zero()) r[u][v] += cu * right[v];
                        }
                    }
            }
        return r;
    }

    void validate_shape() const {
        AlgebraPresentation::validate_shape();
        const std::size_t n = basis.size();
        if (comult.size() != n) throw MalformedPresentation(name + ": comult table has wrong shape");
        for (const auto& t : comult) {
            if (t.size() != n) throw MalformedPresentation(name + ": comult entry has wrong shape");
            for (const auto& v : t)
                if (v.size() != n) throw MalformedPresentation(name + ": comult entry has wrong shape");
        }
        if (counit.size() != n) throw MalformedPresentation(name + ": counit has wrong length");
    }
};

namespace detail {

inline bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline bool vec_eq(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool tensor_eq(const TensorSquare& a, const TensorSquare& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

} // namespace detail

/// Exhaustive algebra axioms: associativity, two-sided unit, grading
/// homogeneity, and the differential conditions when one is present.
inline AxiomReport check_axioms(const AlgebraPresentation& P) {
    P.validate_shape();
    AxiomReport rep;
    const int n = P.dim();

    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k) {
                Vec lhs = P.multiply(P.multiply(P.basis_vec(i), P.basis_vec(j)), P.basis_vec(k));
                Vec rhs = P.multiply(P.basis_vec(i), P.multiply(P.basis_vec(j), P.basis_vec(k)));
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + P.basis[i] + ", " + P.basis[j] + ", " + P.basis[k] + ")";
                }
            }
    rep.add("associativity", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i) {
        if (!detail::vec_eq(P.mult[P.unit][i], P.basis_vec(i)) ||
            !detail::vec_eq(P.mult[i][P.unit], P.basis_vec(i))) {
            ok = false;
            wit = P.basis[i];
        }
    }
    rep.add("unit", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k)
                if (!P.mult[i][j][k].is_zero() && P.degree[k] != P.degree[i] + P.degree[j]) {
                    ok = false;
                    wit = P.basis[i] + "*" + P.basis[j] + " -> " + P.basis[k];
                }
    rep.add("mult homogeneous", ok, wit);

    if (P.has_differential()) {
        ok = true; wit.clear();
        for (int i = 0; i < n && ok; ++i)
            if (!detail::vec_is_zero(P.apply_d(P.apply_d(P.basis_vec(i))))) {
                ok = false;
                wit = P.basis[i];
            }
        rep.add("d squared", ok, wit);

        ok = true; wit.clear();
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                Vec lhs = P.apply_d(P.mult[i][j]);
                Vec rhs = P.multiply(P.apply_d(P.basis_vec(i)), P.basis_vec(j));
                Vec r2 = P.multiply(P.basis_vec(i), P.apply_d(P.basis_vec(j)));
                for (int k = 0; k < n; ++k)
                    rhs[k] += (P.degree[i] % 2 == 0) ? r2[k] : -r2[k];
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + P.basis[i] + ", " + P.basis[j] + ")";
                    break;
                }
            }
        rep.add("d derivation", ok, wit);

        ok = true; wit.clear();
        for (int i = 0; i < n && ok; ++i)
            for (int k = 0; k < n && ok; ++k)
                if (!P.differential[i][k].is_zero() && P.degree[k] != P.degree[i] + 1) {
                    ok = false;
                    wit = P.basis[i];
                }
        rep.add("d degree +1", ok, wit);
    }

    return rep;
}

/// Bialgebra axioms on top of the algebra ones: coassociativity, counit,
/// multiplicativity of Delta and epsilon, and the coderivation condition.
inline AxiomReport check_axioms(const BialgebraPresentation& P) {
    P.validate_shape();
    AxiomReport rep = check_axioms(static_cast<const AlgebraPresentation&>(P));
    const int n = P.dim();

    bool ok = true;
    std::string wit;
    for (int i = 0; i < n && ok; ++i) {
        // (Delta (x) id) Delta e_i  vs  (id (x) Delta) Delta e_i, as dense cubes
        std::vector<TensorSquare> lhs(n, P.zero_tensor()), rhs(n, P.zero_tensor());
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = P.comult[i][j][k];
                if (c.is_zero()) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (!P.comult[j][a][b].is_zero()) lhs[a][b][k] += c * P.comult[j][a][b];
                        if (!P.comult[k][a][b].is_zero()) rhs[j][a][b] += c * P.comult[k][a][b];
                    }
            }
        for (int a = 0; a < n && ok; ++a)
            if (!detail::tensor_eq(lhs[a], rhs[a])) {
                ok = false;
                wit = P.basis[i];
            }
    }
    rep.add("coassociativity", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i) {
        Vec left = P.zero_vec(), right = P.zero_vec();
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = P.comult[i][j][k];
                if (c.is_zero()) continue;
                left[k] += c * P.counit[j];
                right[j] += c * P.counit[k];
            }
        if (!detail::vec_eq(left, P.basis_vec(i)) || !detail::vec_eq(right, P.basis_vec(i))) {
            ok = false;
            wit = P.basis[i];
        }
    }
    rep.add("counit", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!P.comult[i][j][k].is_zero() && P.degree[j] + P.degree[k] != P.degree[i]) {
                    ok = false;
                    wit = P.basis[i];
                }
    rep.add("comult homogeneous", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            TensorSquare lhs = P.comult_of(P.mult[i][j]);
            TensorSquare rhs = P.tensor_multiply(P.comult[i], P.comult[j]);
            if (!detail::tensor_eq(lhs, rhs)) {
                ok = false;
                wit = "(" + P.basis[i] + ", " + P.basis[j] + ")";
            }
        }
    rep.add("delta multiplicative", ok, wit);

    {
        TensorSquare d1 = P.comult[P.unit];
        TensorSquare expect = P.zero_tensor();
        expect[P.unit][P.unit] = Scalar::one(P.field);
        rep.add("delta unit", detail::tensor_eq(d1, expect), P.basis[P.unit]);
    }

    ok = true; wit.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
            Scalar lhs = P.counit_of(P.mult[i][j]);
            if (lhs != P.counit[i] * P.counit[j]) {
                ok = false;
                wit = "(" + P.basis[i] + ", " + P.basis[j] + ")";
            }
        }
    if (ok && P.counit[P.unit] != Scalar::one(P.field)) {
        ok = false;
        wit = "epsilon(1) != 1";
    }
    rep.add("epsilon multiplicative", ok, wit);

    if (P.has_differential()) {
        ok = true; wit.clear();
        for (int i = 0; i < n && ok; ++i) {
            // Delta d(e_i) vs (d (x) id + Koszul id (x) d) Delta e_i
            TensorSquare lhs = P.comult_of(P.apply_d(P.basis_vec(i)));
            TensorSquare rhs = P.zero_tensor();
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& c = P.comult[i][j][k];
                    if (c.is_zero()) continue;
                    for (int a = 0; a < n; ++a) {
                        if (P.has_differential() && !P.differential[j][a].is_zero())
                            rhs[a][k] += c * P.differential[j][a];
                        if (P.has_differential() && !P.differential[k][a].is_zero()) {
                            Scalar t = c * P.differential[k][a];
                            rhs[j][a] += (P.degree[j] % 2 == 0) ? t : -t;
                        }
                    }
                }
            if (!detail::tensor_eq(lhs, rhs)) {
                ok = false;
                wit = P.basis[i];
            }
        }
        rep.add("d coderivation", ok, wit);

        ok = true; wit.clear();
        for (int i = 0; i < n && ok; ++i)
            if (!P.counit_of(P.apply_d(P.basis_vec(i))).is_zero()) {
                ok = false;
                wit = P.basis[i];
            }
        rep.add("epsilon after d", ok, wit);
    }

    return rep;
}

inline bool presentations_equal(const AlgebraPresentation& P, const AlgebraPresentation& Q) {
    if (P.basis != Q.basis || P.degree != Q.degree || P.unit != Q.unit || P.field != Q.field) return false;
    for (int i = 0; i < P.dim(); ++i)
        for (int j = 0; j < P.dim(); ++j)
            if (!detail::vec_eq(P.mult[i][j], Q.mult[i][j])) return false;
    if (P.has_differential() != Q.has_differential()) return false;
    if (P.has_differential())
        for (int i = 0; i < P.dim(); ++i)
            if (!detail::vec_eq(P.differential[i], Q.differential[i])) return false;
    return true;
}

inline bool presentations_equal(const BialgebraPresentation& P, const BialgebraPresentation& Q) {
    if (!presentations_equal(static_cast<const AlgebraPresentation&>(P),
                             static_cast<const AlgebraPresentation&>(Q))) return false;
    for (int i = 0; i < P.dim(); ++i)
        if (!detail::tensor_eq(P.comult[i], Q.comult[i])) return false;
    return detail::vec_eq(P.counit, Q.counit);
}

/// V = Ker(epsilon) with the canonical complement given by v_b = b - eps(b) 1
/// for each non-unit basis element b.  Stores the reduced coproduct and the
/// letter-level product table used by the cobar construction.
struct CounitKernel {
    std::shared_ptr<const BialgebraPresentation> parent;
    std::vector<int> letter_to_basis;              // letter -> parent basis index
    std::vector<std::string> letter_labels;
    std::vector<int> letter_degrees;               // internal degrees
    // Delta'(v_i) as (j, k, coeff) triples over letters
    std::vector<std::vector<std::tuple<int, int, Scalar>>> reduced_comult;
    // d_V(v_i) over letters; empty when the parent has no differential
    std::vector<Vec> dV;
    // star_table[i][j] = pi(iota(v_i) * iota(v_j)) over letters
    std::vector<std::vector<Vec>> star_table;
    // hstar_table[b][j] = pi(e_b * iota(v_j)) over letters, for H basis b;
    // Ker eps is an ideal, so the product already lies in V
    std::vector<std::vector<Vec>> hstar_table;

    int dim() const { return static_cast<int>(letter_to_basis.size()); }
    const Field& field() const { return parent->field; }

    Vec zero_letter_vec() const { return Vec(letter_to_basis.size(), Scalar::zero(field())); }

    /// iota: letter coordinates -> parent coordinates
    Vec lift(int letter) const {
        Vec v = parent->zero_vec();
        int b = letter_to_basis[letter];
        v[b] = Scalar::one(field());
        v[parent->unit] -= parent->counit[b];
        return v;
    }

    /// pi: parent coordinates -> letter coordinates (valid on Ker eps,
    /// drops the unit component otherwise, which matches b |-> b - eps(b) 1)
    Vec project(const Vec& h) const {
        Vec v = zero_letter_vec();
        for (int l = 0; l < dim(); ++l) v[l] = h[letter_to_basis[l]];
        return v;
    }

    int total_letter_degree(int letter) const { return letter_degrees[letter] + 1; }
};

inline CounitKernel counit_kernel(std::shared_ptr<const BialgebraPresentation> H) {
    H->validate_shape();
    CounitKernel K;
    K.parent = H;
    const int n = H->dim();
    for (int i = 0; i < n; ++i) {
        if (i == H->unit) continue;
        K.letter_to_basis.push_back(i);
        K.letter_labels.push_back(H->counit[i].is_zero() ? H->basis[i] : "u_" + H->basis[i]);
        K.letter_degrees.push_back(H->degree[i]);
    }
    const int m = K.dim();
    K.reduced_comult.resize(m);
    for (int l = 0; l < m; ++l) {
        // Delta'(v) = (pi (x) pi) Delta(iota v)
        Vec h = K.lift(l);
        TensorSquare t = H->comult_of(h);
        for (int lj = 0; lj < m; ++lj)
            for (int lk = 0; lk < m; ++lk) {
                const Scalar& c = t[K.letter_to_basis[lj]][K.letter_to_basis[lk]];
                if (!c.is_zero()) K.reduced_comult[l].push_back({lj, lk, c});
            }
    }
    if (H->has_differential()) {
        K.dV.resize(m);
        for (int l = 0; l < m; ++l) K.dV[l] = K.project(H->apply_d(K.lift(l)));
    }
    K.star_table.assign(m, std::vector<Vec>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            K.star_table[i][j] = K.project(H->multiply(K.lift(i), K.lift(j)));
    K.hstar_table.assign(n, std::vector<Vec>(m));
    for (int b = 0; b < n; ++b)
        for (int j = 0; j < m; ++j)
            K.hstar_table[b][j] = K.project(H->multiply(H->basis_vec(b), K.lift(j)));
    return K;
}

/// H* on the dual basis: product = transpose of Delta (convolution), coproduct
/// = transpose of mult, unit = epsilon, counit = evaluation at 1_H.  Dual
/// basis elements carry negated internal degree.  When epsilon is not itself
/// a dual basis functional, the dual of the unit element is replaced by
/// epsilon via a change of basis so the unit stays an explicit basis element.
///
/// When `values` is non-null it receives the evaluation table
/// values[j][i] = (j-th basis functional of H*)(e_i), which identifies H with
/// its double dual: ev(e_i) has coordinates values[.][i] in the dual basis of
/// the returned presentation.
inline BialgebraPresentation dual_bialgebra(const BialgebraPresentation& H,
                                            std::vector<Vec>* values = nullptr) {
    H.validate_shape();
    const int n = H.dim();
    BialgebraPresentation D;
    D.name = H.name + "^*";
    D.field = H.field;
    for (int i = 0; i < n; ++i) D.basis.push_back(H.basis[i] + "^");
    for (int i = 0; i < n; ++i) D.degree.push_back(-H.degree[i]);

    // convolution: (e_i^ * e_j^)(e_k) = +- (coefficient of e_i (x) e_j in Delta e_k)
    D.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar::zero(H.field))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar c = H.comult[k][i][j];
                if (c.is_zero()) continue;
                if ((D.degree[j] * H.degree[i]) % 2 != 0) c = -c;
                D.mult[i][j][k] = c;
            }

    D.comult.assign(n, TensorSquare(n, Vec(n, Scalar::zero(H.field))));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar& c = H.mult[i][j][k];
                if (!c.is_zero()) D.comult[k][i][j] = c;
            }

    // counit of H*: evaluation at 1_H
    D.counit.assign(n, Scalar::zero(H.field));
    D.counit[H.unit] = Scalar::one(H.field);

    // unit of H*: the functional epsilon, with coordinates H.counit
    int eps_basis = -1;
    for (int i = 0; i < n && eps_basis < 0; ++i) {
        bool matches = true;
        for (int j = 0; j < n; ++j) {
            Scalar want = (j == i) ? Scalar::one(H.field) : Scalar::zero(H.field);
            if (H.counit[j] != want) { matches = false; break; }
        }
        if (matches) eps_basis = i;
    }
    if (values) {
        values->assign(n, Vec(n, Scalar::zero(H.field)));
        for (int j = 0; j < n; ++j) (*values)[j][j] = Scalar::one(H.field);
    }
    if (eps_basis >= 0) {
        D.unit = eps_basis;
    } else {
        // replace the dual of 1_H by epsilon; eps(1_H) = 1 keeps this invertible
        const int r = H.unit;
        const Vec eps = H.counit;
        auto to_new = [&](const Vec& old) {
            Vec v = old;
            Scalar cr = v[r] / eps[r];
            for (int j = 0; j < n; ++j) v[j] = (j == r) ? cr : v[j] - cr * eps[j];
            return v;
        };
        auto old_coords = [&](int i) {
            Vec v(n, Scalar::zero(H.field));
            if (i == r) v = eps;
            else v[i] = Scalar::one(H.field);
            return v;
        };
        BialgebraPresentation E = D;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec a = old_coords(i), b = old_coords(j);
                Vec prod(n, Scalar::zero(H.field));
                for (int s = 0; s < n; ++s) {
                    if (a[s].is_zero()) continue;
                    for (int t = 0; t < n; ++t) {
                        if (b[t].is_zero()) continue;
                        for (int k = 0; k < n; ++k)
                            if (!D.mult[s][t][k].is_zero()) prod[k] += a[s] * b[t] * D.mult[s][t][k];
                    }
                }
                E.mult[i][j] = to_new(prod);
            }
        for (int i = 0; i < n; ++i) {
            Vec bi = old_coords(i);
            TensorSquare t(n, Vec(n, Scalar::zero(H.field)));
            for (int w = 0; w < n; ++w) {
                if (bi[w].is_zero()) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (!D.comult[w][a][b].is_zero()) t[a][b] += bi[w] * D.comult[w][a][b];
            }
            // rewrite both tensor legs in the new coordinates
            TensorSquare t2(n, Vec(n, Scalar::zero(H.field)));
            for (int b = 0; b < n; ++b) {
                Vec col(n, Scalar::zero(H.field));
                for (int a = 0; a < n; ++a) col[a] = t[a][b];
                Vec nc = to_new(col);
                for (int a = 0; a < n; ++a) t2[a][b] = nc[a];
            }
            for (int a = 0; a < n; ++a) t2[a] = to_new(t2[a]);
            E.comult[i] = t2;
        }
        for (int i = 0; i < n; ++i) {
            Vec bi = old_coords(i);
            Scalar s = Scalar::zero(H.field);
            for (int j = 0; j < n; ++j)
                if (!bi[j].is_zero()) s += bi[j] * D.counit[j];
            E.counit[i] = s;
        }
        E.unit = r;
        E.basis[r] = "eps";
        D = E;
        if (values)
            for (int i = 0; i < n; ++i) (*values)[r][i] = eps[i]; // new_r = epsilon
    }

    if (H.has_differential()) {
        // transpose with the Hom-complex sign; catalog inputs are
        // differential-free, provided for completeness
        D.differential.assign(n, Vec(n, Scalar::zero(H.field)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                Scalar c = H.differential[k][i];
                if (c.is_zero()) continue;
                if (D.degree[i] % 2 != 0) c = -c;
                D.differential[i][k] = c;
            }
    }
    return D;
}

struct MorphismMatrix {
    std::shared_ptr<const BialgebraPresentation> source;
    std::shared_ptr<const BialgebraPresentation> target;
    int degree = 0;
    // matrix[t][s] = coefficient of target basis t in f(source basis s)
    std::vector<Vec> matrix;

    Vec apply(const Vec& v) const {
        Vec out(target->dim(), Scalar::zero(target->field));
        for (int s = 0; s < source->dim(); ++s) {
            if (v[s].is_zero()) continue;
            for (int t = 0; t < target->dim(); ++t)
                if (!matrix[t][s].is_zero()) out[t] += v[s] * matrix[t][s];
        }
        return out;
    }
};

/// Verifies that f is a morphism of d.g. bialgebras: multiplicative, unital,
/// comultiplicative, counital, chain map, degree 0.
inline AxiomReport check_bialgebra_morphism(const MorphismMatrix& f) {
    const auto& S = *f.source;
    const auto& T = *f.target;
    if (S.field != T.field) throw MalformedPresentation("morphism between different fields");
    if (f.matrix.size() != static_cast<std::size_t>(T.dim()))
        throw MalformedPresentation("morphism matrix has wrong shape");
    for (const auto& row : f.matrix)
        if (row.size() != static_cast<std::size_t>(S.dim()))
            throw MalformedPresentation("morphism matrix has wrong shape");
    AxiomReport rep;

    bool ok = true;
    std::string wit;
    for (int i = 0; i < S.dim() && ok; ++i)
        for (int j = 0; j < S.dim() && ok; ++j) {
            Vec lhs = f.apply(S.mult[i][j]);
            Vec rhs = T.multiply(f.apply(S.basis_vec(i)), f.apply(S.basis_vec(j)));
            if (!detail::vec_eq(lhs, rhs)) {
                ok = false;
                wit = "(" + S.basis[i] + ", " + S.basis[j] + ")";
            }
        }
    rep.add("f(ab) = f(a)f(b)", ok, wit);

    rep.add("f(1) = 1", detail::vec_eq(f.apply(S.unit_vec()), T.unit_vec()), "1");

    ok = true; wit.clear();
    for (int i = 0; i < S.dim() && ok; ++i) {
        TensorSquare lhs = T.comult_of(f.apply(S.basis_vec(i)));
        TensorSquare rhs(T.dim(), Vec(T.dim(), Scalar::zero(T.field)));
        for (int a = 0; a < S.dim(); ++a)
            for (int b = 0; b < S.dim(); ++b) {
                const Scalar& c = S.comult[i][a][b];
                if (c.is_zero()) continue;
                Vec fa = f.apply(S.basis_vec(a)), fb = f.apply(S.basis_vec(b));
                for (int u = 0; u < T.dim(); ++u) {
                    if (fa[u].is_zero()) continue;
                    for (int v = 0; v < T.dim(); ++v)
                        if (!fb[v].is_zero()) rhs[u][v] += c * fa[u] * fb[v];
                }
            }
        if (!detail::tensor_eq(lhs, rhs)) {
            ok = false;
            wit = S.basis[i];
        }
    }
    rep.add("Delta f = (f (x) f) Delta", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < S.dim() && ok; ++i)
        if (T.counit_of(f.apply(S.basis_vec(i))) != S.counit[i]) {
            ok = false;
            wit = S.basis[i];
        }
    rep.add("eps f = eps", ok, wit);

    ok = true; wit.clear();
    for (int i = 0; i < S.dim() && ok; ++i) {
        Vec lhs = f.apply(S.apply_d(S.basis_vec(i)));
        Vec rhs = T.apply_d(f.apply(S.basis_vec(i)));
        if (!detail::vec_eq(lhs, rhs)) {
            ok = false;
            wit = S.basis[i];
        }
    }
    rep.add("f d = d f", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < S.dim() && ok; ++s)
        for (int t = 0; t < T.dim() && ok; ++t)
            if (!f.matrix[t][s].is_zero() && T.degree[t] != S.degree[s] + f.degree) {
                ok = false;
                wit = S.basis[s] + " -> " + T.basis[t];
            }
    rep.add("degree homogeneous", ok, wit);
    if (f.degree != 0) rep.add("degree 0", false, "declared degree " + std::to_string(f.degree));

    return rep;
}

} // namespace cacti
