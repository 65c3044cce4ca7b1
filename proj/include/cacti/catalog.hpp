#pragma once

/// Named example (bi)algebras: the four-dimensional Sweedler algebra, general
/// Taft algebras, group algebras of cyclic groups and their duals, truncated
/// polynomial rings, matrix algebras and the super line.  All constructors
/// return presentations that pass check_axioms.

#include <memory>
#include <string>
#include <vector>

#include "cacti/algebra.hpp"

namespace cacti {

inline BialgebraPresentation sweedler4(const Field& field) {
    if (field.characteristic() == 2) throw UnsupportedParams("sweedler4 needs characteristic != 2");
    BialgebraPresentation H;
    H.name = "sweedler4";
    H.field = field;
    H.basis = {"1", "g", "x", "xg"};
    H.degree = {0, 0, 0, 0};
    H.unit = 0;
    const Scalar z = Scalar::zero(field), o = Scalar::one(field);
    auto vec = [&](int i, Scalar c) {
        Vec v(4, z);
        if (i >= 0) v[i] = c;
        return v;
    };
    // rows of e_i * e_j from x^2 = 0, g^2 = 1, xg = -gx
    H.mult.assign(4, std::vector<Vec>(4, Vec(4, z)));
    for (int i = 0; i < 4; ++i) {
        H.mult[0][i] = vec(i, o);
        H.mult[i][0] = vec(i, o);
    }
    H.mult[1][1] = vec(0, o);   // g*g = 1
    H.mult[1][2] = vec(3, -o);  // g*x = -xg
    H.mult[1][3] = vec(2, -o);  // g*xg = -x
    H.mult[2][1] = vec(3, o);   // x*g = xg
    H.mult[2][2] = vec(-1, z);  // x*x = 0
    H.mult[2][3] = vec(-1, z);
    H.mult[3][1] = vec(2, o);   // xg*g = x
    H.mult[3][2] = vec(-1, z);
    H.mult[3][3] = vec(-1, z);

    H.comult.assign(4, TensorSquare(4, Vec(4, z)));
    H.comult[0][0][0] = o;              // Delta 1 = 1 (x) 1
    H.comult[1][1][1] = o;              // Delta g = g (x) g
    H.comult[2][2][0] = o;              // Delta x = x (x) 1 + g (x) x
    H.comult[2][1][2] = o;
    H.comult[3][3][1] = o;              // Delta xg = xg (x) g + 1 (x) xg
    H.comult[3][0][3] = o;
    H.counit = {o, o, z, z};
    return H;
}

namespace detail {

/// elements of multiplicative order exactly m in F_p, ascending
inline std::vector<long> roots_of_order(long p, long m) {
    std::vector<long> out;
    for (long a = 1; a < p; ++a) {
        long x = 1 % p;
        long order = 0;
        for (long k = 1; k <= m; ++k) {
            x = static_cast<long>((static_cast<__int128>(x) * a) % p);
            if (x == 1) { order = k; break; }
        }
        if (order == m) out.push_back(a);
    }
    return out;
}

} // namespace detail

/// Taft algebra T_m: g^m = 1, x^m = 0, gx = xi x g with xi a primitive m-th
/// root of unity, Delta g = g (x) g, Delta x = x (x) g + 1 (x) x.
inline BialgebraPresentation taft(const Field& field, int m, int xi_index = 0) {
    if (m < 2) throw UnsupportedParams("taft needs m >= 2");
    Scalar xi = Scalar::zero(field);
    if (field.kind == FieldKind::Rational) {
        if (m != 2) throw UnsupportedParams("taft over QQ supports only m = 2 (no primitive roots)");
        if (xi_index != 0) throw UnsupportedParams("taft over QQ has a single root choice");
        xi = -Scalar::one(field);
    } else {
        if ((field.p - 1) % m != 0)
            throw UnsupportedParams("taft(" + std::to_string(m) + ") needs m | p-1 over F_" + std::to_string(field.p));
        auto roots = detail::roots_of_order(field.p, m);
        if (xi_index < 0 || xi_index >= static_cast<int>(roots.size()))
            throw UnsupportedParams("taft root index out of range");
        xi = Scalar::of_int(field, roots[xi_index]);
    }

    const int dim = m * m;
    const Scalar z = Scalar::zero(field), o = Scalar::one(field);
    auto idx = [&](int i, int j) { return i * m + j; }; // g^i x^j
    BialgebraPresentation H;
    H.name = "taft(" + std::to_string(m) + ")";
    H.field = field;
    H.basis.resize(dim);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            std::string s;
            if (i == 1) s += "g";
            else if (i > 1) s += "g^" + std::to_string(i);
            if (j == 1) s += "x";
            else if (j > 1) s += "x^" + std::to_string(j);
            H.basis[idx(i, j)] = s.empty() ? "1" : s;
        }
    H.degree.assign(dim, 0);
    H.unit = 0;

    // (g^i x^j)(g^k x^l) = xi^{-jk} g^{i+k} x^{j+l}
    auto xi_pow = [&](long e) {
        long mm = ((e % m) + m) % m;
        Scalar r = o;
        for (long t = 0; t < mm; ++t) r *= xi;
        return r;
    };
    H.mult.assign(dim, std::vector<Vec>(dim, Vec(dim, z)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    if (j + l >= m) continue;
                    H.mult[idx(i, j)][idx(k, l)][idx((i + k) % m, j + l)] = xi_pow(-static_cast<long>(j) * k);
                }

    // Delta is built multiplicatively from Delta g and Delta x
    H.comult.assign(dim, TensorSquare(dim, Vec(dim, z)));
    auto tmul = [&](const TensorSquare& A, const TensorSquare& B) {
        TensorSquare R(dim, Vec(dim, z));
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                if (A[a][b].is_zero()) continue;
                for (int c = 0; c < dim; ++c)
                    for (int d = 0; d < dim; ++d) {
                        if (B[c][d].is_zero()) continue;
                        Scalar cf = A[a][b] * B[c][d];
                        const Vec& left = H.mult[a][c];
                        const Vec& right = H.mult[b][d];
                        for (int u = 0; u < dim; ++u) {
                            if (left[u].is_zero()) continue;
                            for (int v = 0; v < dim; ++v)
                                if (!right[v].is_zero()) R[u][v] += cf * left[u] * right[v];
                        }
                    }
            }
        return R;
    };
    TensorSquare dg(dim, Vec(dim, z)), dx(dim, Vec(dim, z)), unit_t(dim, Vec(dim, z));
    dg[idx(1, 0)][idx(1, 0)] = o;
    dx[idx(0, 1)][idx(1, 0)] = o; // x (x) g
    dx[idx(0, 0)][idx(0, 1)] = o; // 1 (x) x
    unit_t[0][0] = o;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            TensorSquare t = unit_t;
            for (int a = 0; a < i; ++a) t = tmul(t, dg);
            for (int b = 0; b < j; ++b) t = tmul(t, dx);
            H.comult[idx(i, j)] = t;
        }
    H.counit.assign(dim, z);
    for (int i = 0; i < m; ++i) H.counit[idx(i, 0)] = o;
    return H;
}

inline BialgebraPresentation group_algebra_cyclic(const Field& field, int n) {
    if (n < 1) throw UnsupportedParams("group algebra needs n >= 1");
    BialgebraPresentation H;
    H.name = "group_algebra(Z_" + std::to_string(n) + ")";
    H.field = field;
    const Scalar z = Scalar::zero(field), o = Scalar::one(field);
    for (int i = 0; i < n; ++i)
        H.basis.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    H.degree.assign(n, 0);
    H.unit = 0;
    H.mult.assign(n, std::vector<Vec>(n, Vec(n, z)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H.mult[i][j][(i + j) % n] = o;
    H.comult.assign(n, TensorSquare(n, Vec(n, z)));
    for (int i = 0; i < n; ++i) H.comult[i][i][i] = o;
    H.counit.assign(n, o);
    return H;
}

/// Functions on Z_n, realized as the dual of the group algebra (the unit
/// becomes the explicit basis element "eps").
inline BialgebraPresentation dual_group_algebra_cyclic(const Field& field, int n) {
    BialgebraPresentation D = dual_bialgebra(group_algebra_cyclic(field, n));
    D.name = "dual_group_algebra(Z_" + std::to_string(n) + ")";
    return D;
}

inline AlgebraPresentation trunc_poly(const Field& field, int m) {
    if (m < 2) throw UnsupportedParams("trunc_poly needs m >= 2");
    AlgebraPresentation A;
    A.name = "trunc_poly(" + std::to_string(m) + ")";
    A.field = field;
    const Scalar z = Scalar::zero(field), o = Scalar::one(field);
    for (int i = 0; i < m; ++i)
        A.basis.push_back(i == 0 ? "1" : (i == 1 ? "y" : "y^" + std::to_string(i)));
    A.degree.assign(m, 0);
    A.unit = 0;
    A.mult.assign(m, std::vector<Vec>(m, Vec(m, z)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i + j < m) A.mult[i][j][i + j] = o;
    return A;
}

/// M_n(k) with basis {1} u {E_ij : (i,j) != (n,n)}; E_nn = 1 - sum E_ii.
inline AlgebraPresentation matrix_algebra(const Field& field, int n) {
    if (n < 2) throw UnsupportedParams("matrix_algebra needs n >= 2");
    AlgebraPresentation A;
    A.name = "matrix_algebra(" + std::to_string(n) + ")";
    A.field = field;
    const Scalar z = Scalar::zero(field), o = Scalar::one(field);
    A.basis.push_back("1");
    std::vector<std::pair<int, int>> units;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == n && j == n) continue;
            units.push_back({i, j});
            A.basis.push_back("E" + std::to_string(i) + std::to_string(j));
        }
    const int dim = 1 + static_cast<int>(units.size());
    A.degree.assign(dim, 0);
    A.unit = 0;

    // dense n x n matrix picture of each basis element
    auto matrix_of = [&](int b) {
        std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n, z));
        if (b == 0) {
            for (int i = 0; i < n; ++i) M[i][i] = o;
        } else {
            auto [i, j] = units[b - 1];
            M[i - 1][j - 1] = o;
        }
        return M;
    };
    auto express = [&](const std::vector<std::vector<Scalar>>& M) {
        Vec v(dim, z);
        Scalar corner = M[n - 1][n - 1];
        v[0] = corner;
        for (std::size_t u = 0; u < units.size(); ++u) {
            auto [i, j] = units[u];
            Scalar c = M[i - 1][j - 1];
            if (i == j) c -= corner;
            v[1 + u] = c;
        }
        return v;
    };
    A.mult.assign(dim, std::vector<Vec>(dim, Vec(dim, z)));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            auto M = matrix_of(a), N = matrix_of(b);
            std::vector<std::vector<Scalar>> P(n, std::vector<Scalar>(n, z));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) P[i][j] += M[i][k] * N[k][j];
            A.mult[a][b] = express(P);
        }
    return A;
}

/// k[y]/y^2 with y in odd internal degree
inline AlgebraPresentation super_line(const Field& field) {
    AlgebraPresentation A = trunc_poly(field, 2);
    A.name = "super_line";
    A.degree = {0, 1};
    return A;
}

struct CatalogEntry {
    std::shared_ptr<BialgebraPresentation> bialgebra; // one of the two is set
    std::shared_ptr<AlgebraPresentation> algebra;
};

/// Parses catalog ids: sweedler4, taft(m[,j]), group_algebra(n),
/// dual_group_algebra(n), trunc_poly(m), matrix_algebra(n), super_line.
inline CatalogEntry make_example(const std::string& id, const Field& field) {
    auto args_of = [&](const std::string& head) -> std::vector<int> {
        std::string rest = id.substr(head.size());
        if (rest.empty() || rest.front() != '(' || rest.back() != ')')
            throw UnsupportedParams("catalog id needs arguments: " + id);
        std::vector<int> out;
        std::string cur;
        for (std::size_t i = 1; i + 1 < rest.size(); ++i) {
            if (rest[i] == ',') { out.push_back(std::stoi(cur)); cur.clear(); }
            else cur += rest[i];
        }
        if (!cur.empty()) out.push_back(std::stoi(cur));
        if (out.empty()) throw UnsupportedParams("catalog id needs arguments: " + id);
        return out;
    };
    CatalogEntry e;
    if (id == "sweedler4") {
        e.bialgebra = std::make_shared<BialgebraPresentation>(sweedler4(field));
    } else if (id.rfind("taft", 0) == 0) {
        auto a = args_of("taft");
        e.bialgebra = std::make_shared<BialgebraPresentation>(taft(field, a[0], a.size() > 1 ? a[1] : 0));
    } else if (id.rfind("group_algebra", 0) == 0) {
        e.bialgebra = std::make_shared<BialgebraPresentation>(group_algebra_cyclic(field, args_of("group_algebra")[0]));
    } else if (id.rfind("dual_group_algebra", 0) == 0) {
        e.bialgebra = std::make_shared<BialgebraPresentation>(dual_group_algebra_cyclic(field, args_of("dual_group_algebra")[0]));
    } else if (id.rfind("trunc_poly", 0) == 0) {
        e.algebra = std::make_shared<AlgebraPresentation>(trunc_poly(field, args_of("trunc_poly")[0]));
    } else if (id.rfind("matrix_algebra", 0) == 0) {
        e.algebra = std::make_shared<AlgebraPresentation>(matrix_algebra(field, args_of("matrix_algebra")[0]));
    } else if (id == "super_line") {
        e.algebra = std::make_shared<AlgebraPresentation>(super_line(field));
    } else {
        throw UnsupportedParams("unknown catalog id: " + id);
    }
    return e;
}

} // namespace cacti
