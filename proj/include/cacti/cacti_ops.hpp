#pragma once

/// The cacti operations on the cobar construction: the cup product C_2
/// (concatenation), the brace operations B_m given by the insertion formula
///
///   B_m(x, y_1..y_{m-1}) = sum over 1 <= i_1 < ... < i_{m-1} <= n of
///     +- x_1 (x) ... (x) (x_{i_1} * y_1) (x) ... (x) (x_{i_{m-1}} * y_{m-1}) (x) ... (x) x_n
///
/// with the Koszul permutation sign of the symbol reordering (each * carries
/// degree one, each symbol its total degree), the * product and Gerstenhaber
/// bracket derived from B_2, and the extraction of a bialgebra presentation
/// from cobar-shaped cacti data.
///
/// The letter-by-word product x * (y_1 (x) ... (x) y_k) is the diagonal
/// action: the iterated coproduct of the lift of x is distributed across the
/// block, multiplying letterwise in H, with the sign
///   x * (y (x) z) = (-1)^{|x| + |x_(2)| + |y| + |x_(2)||y|} (x_(1)*y) (x) (x_(2)*z)
/// (total degrees) applied recursively along the block.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cacti/cobar.hpp"
#include "cacti/signs.hpp"

namespace cacti {

inline void require_same_parent(const CobarElement& a, const CobarElement& b) {
    if (a.parent != b.parent) throw ParentMismatch();
}

inline CobarElement cup(const CobarElement& a, const CobarElement& b) {
    require_same_parent(a, b);
    CobarElement out = cobar_zero(a.parent);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

namespace detail {

/// diagonal action of the H basis element e_h on a word, recursive over the block
inline std::map<Word, Scalar> diag_star_basis(const CounitKernel& K, int h, const Word& w) {
    std::map<Word, Scalar> out;
    const auto& H = *K.parent;
    if (w.size() == 1) {
        const Vec& prod = K.hstar_table[h][w[0]];
        for (int l = 0; l < K.dim(); ++l)
            if (!prod[l].is_zero()) out[{l}] = prod[l];
        return out;
    }
    Word tail(w.begin() + 1, w.end());
    long t_w0 = K.total_letter_degree(w[0]);
    long t_h = H.degree[h] + 1;
    for (int a = 0; a < H.dim(); ++a)
        for (int b = 0; b < H.dim(); ++b) {
            const Scalar& c = H.comult[h][a][b];
            if (c.is_zero()) continue;
            const Vec& first = K.hstar_table[a][w[0]];
            bool first_zero = true;
            for (int l = 0; l < K.dim() && first_zero; ++l)
                if (!first[l].is_zero()) first_zero = false;
            if (first_zero) continue;
            long t_b = H.degree[b] + 1;
            long e = t_h + t_b + t_w0 + t_b * t_w0;
            std::map<Word, Scalar> rest = diag_star_basis(K, b, tail);
            for (const auto& [rw, rc] : rest)
                for (int l = 0; l < K.dim(); ++l) {
                    if (first[l].is_zero()) continue;
                    Word nw;
                    nw.reserve(w.size());
                    nw.push_back(l);
                    nw.insert(nw.end(), rw.begin(), rw.end());
                    Scalar coeff = c * first[l] * rc;
                    if (parity_sign(e) < 0) coeff = -coeff;
                    auto it = out.find(nw);
                    if (it == out.end()) out.emplace(nw, coeff);
                    else {
                        it->second += coeff;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
        }
    return out;
}

/// x_letter * y_word: lift the letter and act diagonally
inline std::map<Word, Scalar> diag_star_letter(const CounitKernel& K, int letter, const Word& w) {
    std::map<Word, Scalar> out;
    const auto& H = *K.parent;
    int b = K.letter_to_basis[letter];
    out = diag_star_basis(K, b, w);
    // iota(v) = e_b - eps(e_b) 1: subtract the unit part
    const Scalar& eps = H.counit[b];
    if (!eps.is_zero()) {
        std::map<Word, Scalar> unit_part = diag_star_basis(K, H.unit, w);
        for (const auto& [uw, uc] : unit_part) {
            auto it = out.find(uw);
            Scalar sub = eps * uc;
            if (it == out.end()) out.emplace(uw, -sub);
            else {
                it->second -= sub;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace detail

/// B_m(x, ys) with ys.size() = m-1; zero when a word of x is shorter than m-1.
inline CobarElement brace(const CobarElement& x, const std::vector<CobarElement>& ys) {
    for (const auto& y : ys) require_same_parent(x, y);
    const CounitKernel& K = *x.parent;
    const int m1 = static_cast<int>(ys.size());
    CobarElement out = cobar_zero(x.parent);
    if (m1 == 0) return out.add(x, Scalar::one(K.field()));

    std::vector<long> ty(m1);
    for (int k = 0; k < m1; ++k) ty[k] = total_degree_of(ys[k]); // throws on mixed degrees

    for (const auto& [w, cx] : x.terms) {
        const int n = static_cast<int>(w.size());
        if (m1 > n) continue;
        // prefix sums of letter total degrees: T[i] = t(x_1) + ... + t(x_i)
        std::vector<long> T(n + 1, 0);
        for (int i = 0; i < n; ++i) T[i + 1] = T[i] + K.total_letter_degree(w[i]);

        // iterate strictly increasing insertion positions (1-based)
        std::vector<int> pos(m1);
        for (int k = 0; k < m1; ++k) pos[k] = k + 1;
        while (true) {
            long e = 0;
            for (int k = 0; k < m1; ++k) {
                e += T[pos[k]];
                for (int l = 0; l < k; ++l) e += ty[l];
                e += ty[k] * (T[n] - T[pos[k]]);
            }
            int base_sign = parity_sign(e);

            // distribute the terms of each y_k through the diagonal action
            std::vector<std::vector<std::pair<Word, Scalar>>> block_choices(m1);
            bool any_empty = false;
            for (int k = 0; k < m1 && !any_empty; ++k) {
                std::map<Word, Scalar> acc;
                for (const auto& [yw, yc] : ys[k].terms) {
                    auto blocks = detail::diag_star_letter(K, w[pos[k] - 1], yw);
                    for (const auto& [bw, bc] : blocks) {
                        Scalar add = yc * bc;
                        auto it = acc.find(bw);
                        if (it == acc.end()) acc.emplace(bw, add);
                        else {
                            it->second += add;
                            if (it->second.is_zero()) acc.erase(it);
                        }
                    }
                }
                if (acc.empty()) any_empty = true;
                else block_choices[k].assign(acc.begin(), acc.end());
            }
            if (!any_empty) {
                // assemble words: cartesian product over block choices
                std::vector<int> sel(m1, 0);
                while (true) {
                    Word nw;
                    Scalar coeff = cx;
                    if (base_sign < 0) coeff = -coeff;
                    int cursor = 0;
                    for (int k = 0; k < m1; ++k) {
                        for (int i = cursor; i < pos[k] - 1; ++i) nw.push_back(w[i]);
                        const auto& [bw, bc] = block_choices[k][sel[k]];
                        nw.insert(nw.end(), bw.begin(), bw.end());
                        coeff *= bc;
                        cursor = pos[k];
                    }
                    for (int i = cursor; i < n; ++i) nw.push_back(w[i]);
                    out.add_term(nw, coeff);

                    int k = m1 - 1;
                    while (k >= 0 && sel[k] + 1 == static_cast<int>(block_choices[k].size())) { sel[k] = 0; --k; }
                    if (k < 0) break;
                    ++sel[k];
                }
            }

            // next increasing position tuple
            int k = m1 - 1;
            while (k >= 0 && pos[k] == n - (m1 - 1 - k)) --k;
            if (k < 0) break;
            ++pos[k];
            for (int l = k + 1; l < m1; ++l) pos[l] = pos[l - 1] + 1;
        }
    }
    return out;
}

inline CobarElement brace(int m, const CobarElement& x, const std::vector<CobarElement>& ys) {
    if (m < 2 || static_cast<int>(ys.size()) != m - 1)
        throw Error("brace arity mismatch: B_" + std::to_string(m) + " takes " + std::to_string(m - 1) + " arguments");
    return brace(x, ys);
}

/// a * b = (-1)^{|a|} B_2(a, b), total degree in the sign
inline CobarElement star(const CobarElement& a, const CobarElement& b) {
    long t = total_degree_of(a);
    CobarElement r = brace(a, {b});
    if (parity_sign(t) < 0) {
        CobarElement neg = cobar_zero(a.parent);
        neg.add(r, -Scalar::one(a.parent->field()));
        return neg;
    }
    return r;
}

/// insertion-brace notation x{y_1..y_k}, bridged from B_{k+1}
inline CobarElement gv_brace(const CobarElement& x, const std::vector<CobarElement>& ys) {
    if (ys.empty()) return x;
    std::vector<long> t_gs;
    for (const auto& y : ys) t_gs.push_back(total_degree_of(y));
    long sigma = brace_bridge_exponent(total_degree_of(x), t_gs);
    CobarElement r = brace(x, ys);
    if (parity_sign(sigma) < 0) {
        CobarElement neg = cobar_zero(x.parent);
        neg.add(r, -Scalar::one(x.parent->field()));
        return neg;
    }
    return r;
}

/// [a, b] = a*b - (-1)^{(|a|-1)(|b|-1)} b*a, total degrees
inline CobarElement gbracket(const CobarElement& a, const CobarElement& b) {
    long sa = total_degree_of(a) - 1, sb = total_degree_of(b) - 1;
    CobarElement r = star(a, b);
    r.add(star(b, a), parity_sign(sa * sb) < 0 ? Scalar::one(a.parent->field()) : -Scalar::one(a.parent->field()));
    return r;
}

// ---------------------------------------------------------------------------
// bialgebra extraction from cobar-shaped cacti data

struct CobarShapedData {
    Field field;
    std::vector<std::string> letter_labels;
    std::vector<int> letter_degrees;
    // star_table[i][j]: the associative product on letters induced by B_2
    std::vector<std::vector<Vec>> star_table;
    // d restricted to letters, split by bidegree
    std::vector<Vec> d_internal;                                     // empty when absent
    std::vector<std::vector<std::tuple<int, int, Scalar>>> d_external;
    // provenance: when extracted from a presentation's kernel, the original
    // basis data allows reconstruction in the original coordinates
    std::vector<std::string> original_basis;
    std::vector<Scalar> original_counit;
    int original_unit = -1;
};

inline CobarShapedData cobar_shaped_data(const CounitKernel& K) {
    CobarShapedData d;
    d.field = K.field();
    d.letter_labels = K.letter_labels;
    d.letter_degrees = K.letter_degrees;
    d.star_table = K.star_table;
    d.d_internal = K.dV;
    d.d_external = K.reduced_comult;
    d.original_basis = K.parent->basis;
    d.original_counit = K.parent->counit;
    d.original_unit = K.parent->unit;
    return d;
}

/// H = V + k1 with product extended from the letter star table, coproduct
/// Delta v = d_e(v) + v (x) 1 + 1 (x) v, internal differential from d_i.  The
/// result must pass every bialgebra axiom (multiplicativity of Delta is the
/// nontrivial one); otherwise the input was not a well-graded cacti structure
/// and ExtractionFailure is thrown.
inline BialgebraPresentation extract_bialgebra(const CobarShapedData& D) {
    const int nv = static_cast<int>(D.letter_labels.size());
    const Scalar z = Scalar::zero(D.field), o = Scalar::one(D.field);
    const bool with_provenance = !D.original_basis.empty();
    const int n = nv + 1;

    // basis layout without provenance: index 0 = 1_H, letter l at l+1
    // with provenance: original basis order, letters located after the unit
    std::vector<int> letter_pos(nv); // position of letter l in the new basis
    BialgebraPresentation H;
    H.field = D.field;
    H.name = "extracted";
    std::vector<Scalar> eps_val(nv, z); // eps of the original element over letter l
    if (with_provenance) {
        H.basis = D.original_basis;
        H.unit = D.original_unit;
        H.counit = D.original_counit;
        H.degree.assign(n, 0);
        int l = 0;
        for (int i = 0; i < n; ++i) {
            if (i == H.unit) continue;
            letter_pos[l] = i;
            H.degree[i] = D.letter_degrees[l];
            eps_val[l] = D.original_counit[i];
            ++l;
        }
        if (l != nv) throw ExtractionFailure("provenance basis does not match letter count");
    } else {
        H.basis.push_back("1");
        H.unit = 0;
        H.degree.assign(n, 0);
        H.counit.assign(n, z);
        H.counit[0] = o;
        for (int l = 0; l < nv; ++l) {
            H.basis.push_back(D.letter_labels[l]);
            letter_pos[l] = l + 1;
            H.degree[l + 1] = D.letter_degrees[l];
        }
    }

    // change of coordinates: original basis element over letter l is v_l + eps_l 1
    auto letters_to_basis = [&](const Vec& lv, const Scalar& unit_coeff) {
        Vec v(n, z);
        Scalar u = unit_coeff;
        for (int l = 0; l < nv; ++l) {
            if (lv[l].is_zero()) continue;
            v[letter_pos[l]] += lv[l];
            u -= lv[l] * eps_val[l];
        }
        v[H.unit] += u;
        return v;
    };
    auto basis_to_letters = [&](int i, Scalar& unit_out) {
        // e_i = v_(letter at i) + eps_i 1; unit basis element = 1
        Vec lv(nv, z);
        unit_out = z;
        if (i == H.unit) { unit_out = o; return lv; }
        for (int l = 0; l < nv; ++l)
            if (letter_pos[l] == i) {
                lv[l] = o;
                unit_out = eps_val[l];
                return lv;
            }
        throw ExtractionFailure("basis index out of range");
    };

    H.mult.assign(n, std::vector<Vec>(n, Vec(n, z)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar ui, uj;
            Vec a = basis_to_letters(i, ui), b = basis_to_letters(j, uj);
            // (a + ui 1)(b + uj 1) = a*b + uj a + ui b + ui uj 1
            Vec prod(nv, z);
            for (int la = 0; la < nv; ++la) {
                if (a[la].is_zero()) continue;
                for (int lb = 0; lb < nv; ++lb) {
                    if (b[lb].is_zero()) continue;
                    const Vec& st = D.star_table[la][lb];
                    for (int l = 0; l < nv; ++l)
                        if (!st[l].is_zero()) prod[l] += a[la] * b[lb] * st[l];
                }
            }
            for (int l = 0; l < nv; ++l) prod[l] += uj * a[l] + ui * b[l];
            H.mult[i][j] = letters_to_basis(prod, ui * uj);
        }

    H.comult.assign(n, TensorSquare(n, Vec(n, z)));
    for (int i = 0; i < n; ++i) {
        TensorSquare t(n, Vec(n, z));
        Scalar ui;
        Vec a = basis_to_letters(i, ui);
        // Delta(a + ui 1) = d_e(a) + a (x) 1 + 1 (x) a + ui 1 (x) 1
        for (int l = 0; l < nv; ++l) {
            if (a[l].is_zero()) continue;
            for (const auto& [p, q, c] : D.d_external[l]) {
                Vec left(nv, z), right(nv, z);
                left[p] = o; right[q] = o;
                Vec lb = letters_to_basis(left, z), rb = letters_to_basis(right, z);
                for (int u = 0; u < n; ++u) {
                    if (lb[u].is_zero()) continue;
                    for (int v = 0; v < n; ++v)
                        if (!rb[v].is_zero()) t[u][v] += a[l] * c * lb[u] * rb[v];
                }
            }
            Vec av(nv, z);
            av[l] = o;
            Vec ab = letters_to_basis(av, z);
            for (int u = 0; u < n; ++u) {
                if (ab[u].is_zero()) continue;
                t[u][H.unit] += a[l] * ab[u];
                t[H.unit][u] += a[l] * ab[u];
            }
        }
        t[H.unit][H.unit] += ui;
        H.comult[i] = t;
    }

    if (!D.d_internal.empty()) {
        H.differential.assign(n, Vec(n, z));
        for (int i = 0; i < n; ++i) {
            Scalar ui;
            Vec a = basis_to_letters(i, ui);
            Vec dv(nv, z);
            for (int l = 0; l < nv; ++l) {
                if (a[l].is_zero()) continue;
                for (int k = 0; k < nv; ++k)
                    if (!D.d_internal[l][k].is_zero()) dv[k] += a[l] * D.d_internal[l][k];
            }
            H.differential[i] = letters_to_basis(dv, z);
        }
        bool all_zero = true;
        for (const auto& row : H.differential)
            for (const auto& s : row)
                if (!s.is_zero()) all_zero = false;
        if (all_zero) H.differential.clear();
    }

    AxiomReport rep = check_axioms(H);
    if (!rep.all_passed()) {
        const AxiomCheck* f = rep.first_failure();
        throw ExtractionFailure("axiom '" + f->axiom + "' fails, witness " + f->witness);
    }
    return H;
}

} // namespace cacti
