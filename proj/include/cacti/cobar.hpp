#pragma once

/// The cobar construction on a counit kernel: the reduced tensor algebra on
/// V = Ker(eps) with the bigraded differential d = d_i + d_e, where d_i
/// extends the internal differential of H and d_e extends the reduced
/// coproduct.  Words carry bidegree (sum of letter degrees, length); the
/// differential is a total-degree-one derivation with Koszul signs taken with
/// respect to total degree.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cacti/algebra.hpp"

namespace cacti {

struct Bidegree {
    long internal = 0;
    long external = 0;
    long total() const { return internal + external; }
    bool operator==(const Bidegree& o) const { return internal == o.internal && external == o.external; }
};

using Word = std::vector<int>; // letter indices into the counit kernel basis

struct CobarElement {
    std::shared_ptr<const CounitKernel> parent;
    std::map<Word, Scalar> terms; // lexicographic word order; no zero coefficients

    bool is_zero() const { return terms.empty(); }

    CobarElement& add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return *this;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
        return *this;
    }

    CobarElement& add(const CobarElement& o, const Scalar& scale) {
        for (const auto& [w, c] : o.terms) add_term(w, c * scale);
        return *this;
    }

    bool operator==(const CobarElement& o) const {
        if (terms.size() != o.terms.size()) return false;
        auto it = o.terms.begin();
        for (const auto& [w, c] : terms) {
            if (w != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
};

inline CobarElement cobar_zero(std::shared_ptr<const CounitKernel> K) {
    return CobarElement{std::move(K), {}};
}

inline CobarElement word_element(std::shared_ptr<const CounitKernel> K, const Word& w, const Scalar& c) {
    CobarElement e = cobar_zero(std::move(K));
    e.add_term(w, c);
    return e;
}

inline Bidegree word_bidegree(const CounitKernel& K, const Word& w) {
    Bidegree b;
    b.external = static_cast<long>(w.size());
    for (int l : w) b.internal += K.letter_degrees[l];
    return b;
}

inline long word_total_degree(const CounitKernel& K, const Word& w) {
    return word_bidegree(K, w).total();
}

/// Bidegree of a homogeneous element; throws NonHomogeneous on mixed terms.
inline Bidegree bidegree_of(const CobarElement& e) {
    if (e.is_zero()) return Bidegree{0, 0};
    bool first = true;
    Bidegree b;
    for (const auto& [w, c] : e.terms) {
        Bidegree wb = word_bidegree(*e.parent, w);
        if (first) { b = wb; first = false; }
        else if (!(wb == b)) throw NonHomogeneous("mixed bidegrees in element");
    }
    return b;
}

inline long total_degree_of(const CobarElement& e) {
    if (e.is_zero()) return 0;
    bool first = true;
    long t = 0;
    for (const auto& [w, c] : e.terms) {
        long wt = word_total_degree(*e.parent, w);
        if (first) { t = wt; first = false; }
        else if (wt != t) throw NonHomogeneous("mixed total degrees in element");
    }
    return t;
}

inline std::string render_word(const CounitKernel& K, const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += K.letter_labels[w[i]];
    }
    return s;
}

/// `c1 * a|b|c + c2 * ...` in lexicographic word order
inline std::string render_element(const CobarElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : e.terms) {
        if (!first) s += " + ";
        first = false;
        s += c.str() + " * " + render_word(*e.parent, w);
    }
    return s;
}

/// Delta'(v) as an external-degree-2 element
inline CobarElement reduced_coproduct(std::shared_ptr<const CounitKernel> K, int letter) {
    CobarElement e = cobar_zero(K);
    for (const auto& [j, k, c] : K->reduced_comult[letter]) e.add_term({j, k}, c);
    return e;
}

/// u_g = g - 1 for a group-like basis element g; u_{1_H} is the zero element.
inline CobarElement u_of_grouplike(std::shared_ptr<const CounitKernel> K, int h_basis) {
    const auto& H = *K->parent;
    if (!H.counit[h_basis].is_zero() || h_basis == H.unit) {
        // group-like check on the nose: Delta g = g (x) g and eps g = 1
        TensorSquare t = H.comult[h_basis];
        bool ok = H.counit[h_basis] == Scalar::one(H.field);
        for (int a = 0; a < H.dim() && ok; ++a)
            for (int b = 0; b < H.dim() && ok; ++b) {
                Scalar want = (a == h_basis && b == h_basis) ? Scalar::one(H.field) : Scalar::zero(H.field);
                if (t[a][b] != want) ok = false;
            }
        if (!ok) throw NotGroupLike(H.basis[h_basis]);
        if (h_basis == H.unit) return cobar_zero(K);
        for (int l = 0; l < K->dim(); ++l)
            if (K->letter_to_basis[l] == h_basis)
                return word_element(K, {l}, Scalar::one(H.field));
    }
    throw NotGroupLike(H.basis[h_basis] + " (eps != 1)");
}

namespace detail {

/// d applied to a single word, as a sum of words; d_i and d_e parts selectable.
inline CobarElement word_differential(std::shared_ptr<const CounitKernel> Kp, const Word& w,
                                      bool internal_part, bool external_part) {
    const CounitKernel& K = *Kp;
    CobarElement out = cobar_zero(Kp);
    long prefix_total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int sgn = parity_sign(prefix_total);
        if (internal_part && !K.dV.empty()) {
            const Vec& dv = K.dV[w[i]];
            for (int l = 0; l < K.dim(); ++l) {
                if (dv[l].is_zero()) continue;
                Word nw = w;
                nw[i] = l;
                Scalar c = dv[l];
                if (sgn < 0) c = -c;
                out.add_term(nw, c);
            }
        }
        if (external_part) {
            for (const auto& [a, b, c0] : K.reduced_comult[w[i]]) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.push_back(a);
                nw.push_back(b);
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                Scalar c = c0;
                // graded coalgebra twist: d_e(v) = (-1)^{|v_(1)|} v_(1) (x) v_(2)
                if (K.letter_degrees[a] % 2 != 0) c = -c;
                if (sgn < 0) c = -c;
                out.add_term(nw, c);
            }
        }
        prefix_total += K.total_letter_degree(w[i]);
    }
    return out;
}

} // namespace detail

inline CobarElement d_internal(const CobarElement& e) {
    CobarElement out = cobar_zero(e.parent);
    for (const auto& [w, c] : e.terms) out.add(detail::word_differential(e.parent, w, true, false), c);
    return out;
}

inline CobarElement d_external(const CobarElement& e) {
    CobarElement out = cobar_zero(e.parent);
    for (const auto& [w, c] : e.terms) out.add(detail::word_differential(e.parent, w, false, true), c);
    return out;
}

inline CobarElement differential(const CobarElement& e) {
    CobarElement out = cobar_zero(e.parent);
    for (const auto& [w, c] : e.terms) out.add(detail::word_differential(e.parent, w, true, true), c);
    return out;
}

/// d^2 = 0 on every basis word of external degree <= max_ext; failing words
/// surface the coassociativity defect of the underlying coalgebra.
inline AxiomReport check_d_squared(std::shared_ptr<const CounitKernel> K, int max_ext) {
    AxiomReport rep;
    bool ok = true;
    std::string wit;
    const int nv = K->dim();
    if (nv == 0) {
        rep.add("d^2 = 0 (external degree <= " + std::to_string(max_ext) + ")", true);
        return rep;
    }
    for (int len = 1; len <= max_ext && ok; ++len) {
        Word w(len, 0);
        while (true) {
            CobarElement dd = differential(differential(word_element(K, w, Scalar::one(K->field()))));
            if (!dd.is_zero()) {
                ok = false;
                wit = render_word(*K, w) + "  (d^2 = " + render_element(dd) + ")";
                break;
            }
            int pos = len - 1;
            while (pos >= 0 && w[pos] == nv - 1) { w[pos] = 0; --pos; }
            if (pos < 0) break;
            ++w[pos];
        }
    }
    rep.add("d^2 = 0 (external degree <= " + std::to_string(max_ext) + ")", ok, wit);
    return rep;
}

} // namespace cacti
