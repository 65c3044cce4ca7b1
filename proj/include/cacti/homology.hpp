#pragma once

/// Cohomology of the cobar construction and of the Hochschild complex by
/// exact rank computations: differential matrices per bidegree, Betti tables,
/// canonical representative cocycles, coboundary membership with witnesses,
/// and the induced Gerstenhaber bracket on classes.
///
/// When the input carries no internal differential the complex splits per
/// internal degree and the table is indexed by bidegree; otherwise rows are
/// aggregated by total degree.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cacti/cacti_ops.hpp"
#include "cacti/cobar.hpp"
#include "cacti/hochschild.hpp"
#include "cacti/linalg.hpp"

namespace cacti {

// ---------------------------------------------------------------------------
// complex views

/// cobar basis component: lexicographically ordered words of fixed bidegree
struct CobarComplex {
    std::shared_ptr<const CounitKernel> K;
    long cap = 10000000L;

    using Elt = CobarElement;

    bool split() const { return K->dV.empty(); }
    int min_ext() const { return 1; }
    const Field& field() const { return K->field(); }

    void check_cap(int q) const {
        double size = 1;
        for (int i = 0; i < q; ++i) size *= K->dim();
        if (size > static_cast<double>(cap))
            throw TruncationExceeded("external degree " + std::to_string(q) + " needs " +
                                     std::to_string(size) + " words");
    }

    std::vector<Word> basis(long p, int q) const {
        check_cap(q);
        std::vector<Word> out;
        if (q == 0 || K->dim() == 0) return out; // reduced tensor algebra: no empty word
        Word w(q, 0);
        while (true) {
            if (word_bidegree(*K, w).internal == p) out.push_back(w);
            int pos = q - 1;
            while (pos >= 0 && w[pos] == K->dim() - 1) { w[pos] = 0; --pos; }
            if (pos < 0) break;
            ++w[pos];
        }
        return out;
    }

    /// internal degrees realized in external degree q
    std::vector<long> internal_degrees(int q) const {
        check_cap(q);
        std::map<long, bool> seen;
        if (q == 0 || K->dim() == 0) return {};
        Word w(q, 0);
        while (true) {
            seen[word_bidegree(*K, w).internal] = true;
            int pos = q - 1;
            while (pos >= 0 && w[pos] == K->dim() - 1) { w[pos] = 0; --pos; }
            if (pos < 0) break;
            ++w[pos];
        }
        std::vector<long> out;
        for (const auto& [p, b] : seen) out.push_back(p);
        return out;
    }

    SparseVecS to_vec(const Elt& e, const std::vector<Word>& basis_words) const {
        SparseVecS v;
        for (const auto& [w, c] : e.terms) {
            auto it = std::lower_bound(basis_words.begin(), basis_words.end(), w);
            if (it == basis_words.end() || *it != w)
                throw Error("element outside the bidegree component");
            sv_add_term(v, static_cast<int>(it - basis_words.begin()), c);
        }
        return v;
    }

    Elt from_vec(const SparseVecS& v, const std::vector<Word>& basis_words) const {
        Elt e = cobar_zero(K);
        for (const auto& [i, c] : v) e.add_term(basis_words[i], c);
        return e;
    }

    Elt d(const Elt& e) const { return differential(e); }
    Elt d_ext_only(const Elt& e) const { return d_external(e); }
    Elt bracket(const Elt& a, const Elt& b) const { return gbracket(a, b); }
    bool zero(const Elt& e) const { return e.is_zero(); }
    std::string render(const Elt& e) const { return render_element(e); }

    Elt basis_element(const Word& w) const { return word_element(K, w, Scalar::one(field())); }
};

/// Hochschild basis component: elementary cochains ordered by (out, input code)
struct HochschildComplex {
    std::shared_ptr<const AlgebraPresentation> A;
    long cap = 10000000L;

    using Elt = SumCochain;
    using BasisItem = std::pair<int, long>; // (out, input code)

    bool split() const { return !A->has_differential(); }
    int min_ext() const { return 0; }
    const Field& field() const { return A->field; }

    void check_cap(int q) const {
        double size = 1;
        for (int i = 0; i <= q; ++i) size *= A->dim();
        if (size > static_cast<double>(cap))
            throw TruncationExceeded("arity " + std::to_string(q) + " cochains need " +
                                     std::to_string(size) + " coefficients");
    }

    std::vector<BasisItem> basis(long p, int q) const {
        check_cap(q);
        std::vector<BasisItem> out;
        const int dim = A->dim();
        const long qpow = hdetail::pow_dim(dim, q);
        std::vector<int> args;
        for (int o = 0; o < dim; ++o)
            for (long code = 0; code < qpow; ++code) {
                hdetail::decode(code, dim, q, args);
                long defect = A->degree[o];
                for (int a : args) defect -= A->degree[a];
                if (defect == p) out.push_back({o, code});
            }
        return out;
    }

    std::vector<long> internal_degrees(int q) const {
        check_cap(q);
        std::map<long, bool> seen;
        const int dim = A->dim();
        const long qpow = hdetail::pow_dim(dim, q);
        std::vector<int> args;
        for (int o = 0; o < dim; ++o)
            for (long code = 0; code < qpow; ++code) {
                hdetail::decode(code, dim, q, args);
                long defect = A->degree[o];
                for (int a : args) defect -= A->degree[a];
                seen[defect] = true;
            }
        std::vector<long> out;
        for (const auto& [p, b] : seen) out.push_back(p);
        return out;
    }

    SparseVecS to_vec(const Elt& e, const std::vector<BasisItem>& items) const {
        SparseVecS v;
        const int dim = A->dim();
        for (const auto& part : e.parts) {
            const long qpow = hdetail::pow_dim(dim, part.arity);
            for (std::size_t i = 0; i < items.size(); ++i) {
                const Scalar& c = part.coeffs[items[i].first * qpow + items[i].second];
                if (!c.is_zero()) sv_add_term(v, static_cast<int>(i), c);
            }
            // verify nothing falls outside the component
            long nnz_part = 0;
            for (const auto& c : part.coeffs)
                if (!c.is_zero()) ++nnz_part;
            long nnz_claimed = 0;
            for (const auto& it : items)
                if (!part.coeffs[it.first * qpow + it.second].is_zero()) ++nnz_claimed;
            if (nnz_part != nnz_claimed) throw Error("cochain outside the bidegree component");
        }
        return v;
    }

    Elt from_vec_pq(const SparseVecS& v, long p, int q, const std::vector<BasisItem>& items) const {
        Cochain c = cochain_zero(A, p, q);
        const long qpow = hdetail::pow_dim(A->dim(), q);
        for (const auto& [i, s] : v) c.coeffs[items[i].first * qpow + items[i].second] = s;
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
    Elt d_ext_only(const Elt& e) const {
        Elt out{A, {}};
        for (const auto& p : e.parts) out.add_part(hdiff_external(p), Scalar::one(A->field));
        return out;
    }
    Elt bracket(const Elt& a, const Elt& b) const {
        Elt out{A, {}};
        for (const auto& pa : a.parts)
            for (const auto& pb : b.parts) out.add_part(hgbracket(pa, pb), Scalar::one(A->field));
        return out;
    }
    bool zero(const Elt& e) const { return e.is_zero(); }
    std::string render(const Elt& e) const {
        if (e.is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < e.parts.size(); ++i) {
            if (i) s += "  (+)  ";
            s += render_cochain(e.parts[i]);
        }
        return s;
    }

    Elt basis_element(long p, int q, const BasisItem& item) const {
        Cochain c = cochain_zero(A, p, q);
        c.coeffs[item.first * hdetail::pow_dim(A->dim(), q) + item.second] = Scalar::one(A->field);
        Elt e{A, {}};
        e.add_part(c, Scalar::one(A->field));
        return e;
    }
};

// ---------------------------------------------------------------------------
// matrices and Betti tables

/// matrix of d_e restricted to component (p, q), mapping into (p, q+1);
/// rows = target basis, cols = source basis
template <class C>
SparseMatrix differential_matrix(const C& complex, long p, int q) {
    auto src = complex.basis(p, q);
    auto tgt = complex.basis(p, q + 1);
    SparseMatrix M(static_cast<int>(tgt.size()), static_cast<int>(src.size()), complex.field());
    for (std::size_t j = 0; j < src.size(); ++j) {
        typename C::Elt e = [&] {
            if constexpr (std::is_same_v<C, CobarComplex>) return complex.basis_element(src[j]);
            else return complex.basis_element(p, q, src[j]);
        }();
        typename C::Elt de = complex.d_ext_only(e);
        SparseVecS col = complex.to_vec(de, tgt);
        for (const auto& [r, s] : col) M.add(r, static_cast<int>(j), s);
    }
    return M;
}

struct BettiRow {
    long p = 0;           // internal degree (split mode) or total degree (dg mode)
    int q = 0;            // external degree; -1 in dg mode
    long dim = 0;
    int rank_out = 0;
    int rank_in = 0;
    long betti = 0;
    bool lower_bound_only = false;
};

struct BettiTable {
    std::string complex_id;
    bool split_mode = true;
    std::vector<BettiRow> rows;
};

/// Betti numbers for external degrees q_min..q_max (split complexes)
template <class C>
BettiTable betti_table(const C& complex, int q_min, int q_max) {
    if (!complex.split())
        throw Error("per-bidegree table needs a split complex; input carries a differential");
    BettiTable table;
    table.split_mode = true;
    std::map<std::pair<int, long>, SparseMatrix> mats; // (q, p) -> d: (p,q)->(p,q+1)
    auto matrix_at = [&](long p, int q) -> SparseMatrix& {
        auto key = std::make_pair(q, p);
        auto it = mats.find(key);
        if (it == mats.end()) it = mats.emplace(key, differential_matrix(complex, p, q)).first;
        return it->second;
    };
    for (int q = q_min; q <= q_max; ++q) {
        for (long p : complex.internal_degrees(q)) {
            BettiRow row;
            row.p = p;
            row.q = q;
            row.dim = static_cast<long>(complex.basis(p, q).size());
            if (q > complex.min_ext()) {
                SparseMatrix& din = matrix_at(p, q - 1);
                row.rank_in = rank(din);
            }
            bool out_ok = true;
            try {
                complex.check_cap(q + 1);
            } catch (const TruncationExceeded&) {
                out_ok = false;
            }
            if (out_ok) {
                SparseMatrix& dout = matrix_at(p, q);
                row.rank_out = rank(dout);
                row.betti = row.dim - row.rank_out - row.rank_in;
            } else {
                row.lower_bound_only = true;
                row.betti = std::max(0L, row.dim - row.rank_in - row.dim);
            }
            table.rows.push_back(row);
        }
    }
    return table;
}

/// canonical representative cocycles spanning H^{p,q}: kernel vectors reduced
/// against the image and re-echelonized
template <class C>
std::vector<typename C::Elt> representatives(const C& complex, long p, int q) {
    auto src = complex.basis(p, q);
    SparseMatrix dout = differential_matrix(complex, p, q);
    std::vector<SparseVecS> kernel = kernel_basis(dout);

    Echelon image;
    image.cols = static_cast<int>(src.size());
    image.field = complex.field();
    if (q > complex.min_ext()) {
        SparseMatrix din = differential_matrix(complex, p, q - 1);
        image = rref(din.transpose());
    }

    SparseMatrix reduced(static_cast<int>(kernel.size()), static_cast<int>(src.size()), complex.field());
    for (std::size_t i = 0; i < kernel.size(); ++i) reduced.row_data[i] = image.reduce(kernel[i]);
    Echelon reps = rref(reduced);

    std::vector<typename C::Elt> out;
    for (const auto& row : reps.rows) {
        if constexpr (std::is_same_v<C, CobarComplex>) out.push_back(complex.from_vec(row, src));
        else out.push_back(complex.from_vec_pq(row, p, q, src));
    }
    return out;
}

/// coboundary membership; returns a primitive w with d w = z when one exists
template <class C>
std::optional<typename C::Elt> is_coboundary(const C& complex, const typename C::Elt& z, long p, int q) {
    if (!complex.zero(complex.d(z))) throw NotACocycle();
    if (complex.zero(z)) {
        if constexpr (std::is_same_v<C, CobarComplex>) return cobar_zero(complex.K);
        else return typename C::Elt{complex.A, {}};
    }
    if (q <= complex.min_ext()) return std::nullopt;
    auto src = complex.basis(p, q - 1);
    auto tgt = complex.basis(p, q);
    SparseMatrix din = differential_matrix(complex, p, q - 1);
    SparseVecS zv = complex.to_vec(z, tgt);
    std::optional<SparseVecS> w = solve(din, zv);
    if (!w) return std::nullopt;
    if constexpr (std::is_same_v<C, CobarComplex>) return complex.from_vec(*w, src);
    else return complex.from_vec_pq(*w, p, q - 1, src);
}

template <class C>
struct CohomologyClass {
    typename C::Elt representative;
    long p = 0;
    int q = 0;
    bool zero_class = false;
    std::optional<typename C::Elt> coboundary_witness; // for zero classes
};

/// chain-level bracket of class representatives, reduced to a canonical class
template <class C>
CohomologyClass<C> class_bracket(const C& complex, const CohomologyClass<C>& c1,
                                 const CohomologyClass<C>& c2) {
    typename C::Elt chain = complex.bracket(c1.representative, c2.representative);
    CohomologyClass<C> out;
    out.p = c1.p + c2.p;
    out.q = c1.q + c2.q - 1;
    out.representative = chain;
    if (complex.zero(chain)) {
        out.zero_class = true;
        return out;
    }
    auto witness = is_coboundary(complex, chain, out.p, out.q);
    if (witness) {
        out.zero_class = true;
        out.coboundary_witness = witness;
        return out;
    }
    // reduce modulo the image for a canonical representative
    auto src = complex.basis(out.p, out.q);
    SparseVecS v = complex.to_vec(chain, src);
    if (out.q > complex.min_ext()) {
        SparseMatrix din = differential_matrix(complex, out.p, out.q - 1);
        Echelon image = rref(din.transpose());
        v = image.reduce(v);
    }
    if constexpr (std::is_same_v<C, CobarComplex>) out.representative = complex.from_vec(v, src);
    else out.representative = complex.from_vec_pq(v, out.p, out.q, src);
    return out;
}

// ---------------------------------------------------------------------------
// total-degree mode for inputs with an internal differential

struct TotalBettiRow {
    long n = 0;
    long dim = 0;
    int rank_out = 0;
    int rank_in = 0;
    long betti = 0;
};

/// cobar cohomology by total degree when d_i is present; components gather
/// every bidegree (p, q) with p + q = n and q <= q_cap
inline std::vector<TotalBettiRow> cobar_total_betti(const CobarComplex& complex, long n_min,
                                                    long n_max, int q_cap) {
    auto total_basis = [&](long n) {
        std::vector<Word> out;
        for (int q = 1; q <= q_cap; ++q)
            for (const Word& w : complex.basis(n - q, q)) out.push_back(w);
        return out;
    };
    auto matrix_at = [&](long n) {
        auto src = total_basis(n);
        auto tgt = total_basis(n + 1);
        std::map<Word, int> tgt_index;
        for (std::size_t i = 0; i < tgt.size(); ++i) tgt_index[tgt[i]] = static_cast<int>(i);
        SparseMatrix M(static_cast<int>(tgt.size()), static_cast<int>(src.size()), complex.field());
        for (std::size_t j = 0; j < src.size(); ++j) {
            CobarElement de = complex.d(complex.basis_element(src[j]));
            for (const auto& [w, c] : de.terms) {
                auto it = tgt_index.find(w);
                if (it == tgt_index.end()) continue; // beyond the q cap: truncated
                M.add(it->second, static_cast<int>(j), c);
            }
        }
        return M;
    };
    std::vector<TotalBettiRow> rows;
    for (long n = n_min; n <= n_max; ++n) {
        TotalBettiRow row;
        row.n = n;
        row.dim = static_cast<long>(total_basis(n).size());
        row.rank_in = n > 1 ? rank(matrix_at(n - 1)) : 0;
        row.rank_out = rank(matrix_at(n));
        row.betti = row.dim - row.rank_in - row.rank_out;
        rows.push_back(row);
    }
    return rows;
}

} // namespace cacti
