#pragma once

/// H-module-algebra structures rho: H (x) A -> A, their axiom checker, the
/// induced map from the cobar construction to the Hochschild complex
///
///   x_1 (x) ... (x) x_n |-> (a_1 (x) ... (x) a_n |-> rho_{x_1}(a_1) ... rho_{x_n}(a_n))
///
/// with its morphism verification, the evaluation pairing action of H* on H,
/// and the lift of bialgebra morphisms to word-level maps of cobar
/// constructions.

#include <memory>
#include <string>
#include <vector>

#include "cacti/cacti_ops.hpp"
#include "cacti/cobar.hpp"
#include "cacti/hochschild.hpp"
#include "cacti/identities.hpp"

namespace cacti {

struct ActionMap {
    std::shared_ptr<const BialgebraPresentation> H;
    std::shared_ptr<const AlgebraPresentation> A;
    // rho[h][a] = coefficient vector of e_h . e_a over A's basis
    std::vector<std::vector<Vec>> rho;

    Vec act(int h, const Vec& a) const {
        Vec out = A->zero_vec();
        for (int i = 0; i < A->dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (int o = 0; o < A->dim(); ++o)
                if (!rho[h][i][o].is_zero()) out[o] += a[i] * rho[h][i][o];
        }
        return out;
    }

    Vec act_vec(const Vec& h, const Vec& a) const {
        Vec out = A->zero_vec();
        for (int j = 0; j < H->dim(); ++j) {
            if (h[j].is_zero()) continue;
            Vec part = act(j, a);
            for (int o = 0; o < A->dim(); ++o) out[o] += h[j] * part[o];
        }
        return out;
    }

    void validate_shape() const {
        if (!H || !A) throw MalformedPresentation("action without parents");
        if (H->field != A->field) throw MalformedPresentation("action across different fields");
        if (rho.size() != static_cast<std::size_t>(H->dim()))
            throw MalformedPresentation("action table has wrong shape");
        for (const auto& row : rho) {
            if (row.size() != static_cast<std::size_t>(A->dim()))
                throw MalformedPresentation("action table has wrong shape");
            for (const auto& v : row)
                if (v.size() != static_cast<std::size_t>(A->dim()))
                    throw MalformedPresentation("action entry has wrong length");
        }
    }
};

/// module axiom, unit, h(ab) = sum +- h_(1)(a) h_(2)(b), h(1) = eps(h) 1,
/// degree homogeneity, and the d.g. compatibility when differentials are
/// present; all exhaustive over basis tuples
inline AxiomReport check_module_algebra(const ActionMap& act) {
    act.validate_shape();
    const auto& H = *act.H;
    const auto& A = *act.A;
    AxiomReport rep;

    bool ok = true;
    std::string wit;
    for (int a = 0; a < A.dim() && ok; ++a)
        if (!detail::vec_eq(act.rho[H.unit][a], A.basis_vec(a))) {
            ok = false;
            wit = A.basis[a];
        }
    rep.add("1_H acts as identity", ok, wit);

    ok = true; wit.clear();
    for (int h = 0; h < H.dim() && ok; ++h)
        for (int k = 0; k < H.dim() && ok; ++k)
            for (int a = 0; a < A.dim() && ok; ++a) {
                // (h k)(a) vs h(k(a))
                Vec lhs = A.zero_vec();
                for (int m = 0; m < H.dim(); ++m)
                    if (!H.mult[h][k][m].is_zero()) {
                        Vec part = act.act(m, A.basis_vec(a));
                        for (int o = 0; o < A.dim(); ++o) lhs[o] += H.mult[h][k][m] * part[o];
                    }
                Vec rhs = act.act(h, act.act(k, A.basis_vec(a)));
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + H.basis[h] + ", " + H.basis[k] + ", " + A.basis[a] + ")";
                }
            }
    rep.add("module axiom (hk)(a) = h(k(a))", ok, wit);

    ok = true; wit.clear();
    for (int h = 0; h < H.dim() && ok; ++h)
        for (int a = 0; a < A.dim() && ok; ++a)
            for (int b = 0; b < A.dim() && ok; ++b) {
                Vec lhs = act.act(h, A.mult[a][b]);
                Vec rhs = A.zero_vec();
                for (int u = 0; u < H.dim(); ++u)
                    for (int v = 0; v < H.dim(); ++v) {
                        const Scalar& c = H.comult[h][u][v];
                        if (c.is_zero()) continue;
                        Vec prod = A.multiply(act.act(u, A.basis_vec(a)), act.act(v, A.basis_vec(b)));
                        Scalar coeff = c;
                        if ((H.degree[v] * A.degree[a]) % 2 != 0) coeff = -coeff;
                        for (int o = 0; o < A.dim(); ++o) rhs[o] += coeff * prod[o];
                    }
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + H.basis[h] + ", " + A.basis[a] + ", " + A.basis[b] + ")";
                }
            }
    rep.add("h(ab) = h_(1)(a) h_(2)(b)", ok, wit);

    ok = true; wit.clear();
    for (int h = 0; h < H.dim() && ok; ++h) {
        Vec lhs = act.act(h, A.unit_vec());
        Vec rhs = A.zero_vec();
        rhs[A.unit] = H.counit[h];
        if (!detail::vec_eq(lhs, rhs)) {
            ok = false;
            wit = H.basis[h];
        }
    }
    rep.add("h(1_A) = eps(h) 1_A", ok, wit);

    ok = true; wit.clear();
    for (int h = 0; h < H.dim() && ok; ++h)
        for (int a = 0; a < A.dim() && ok; ++a)
            for (int o = 0; o < A.dim(); ++o)
                if (!act.rho[h][a][o].is_zero() && A.degree[o] != H.degree[h] + A.degree[a]) {
                    ok = false;
                    wit = H.basis[h] + " . " + A.basis[a] + " -> " + A.basis[o];
                }
    rep.add("action degree homogeneous", ok, wit);

    if (A.has_differential() || H.has_differential()) {
        ok = true; wit.clear();
        for (int h = 0; h < H.dim() && ok; ++h)
            for (int a = 0; a < A.dim() && ok; ++a) {
                Vec lhs = A.apply_d(act.act(h, A.basis_vec(a)));
                Vec rhs = A.zero_vec();
                if (H.has_differential()) {
                    Vec dh = H.apply_d(H.basis_vec(h));
                    rhs = act.act_vec(dh, A.basis_vec(a));
                }
                Vec hda = act.act(h, A.apply_d(A.basis_vec(a)));
                int sgn = parity_sign(H.degree[h]);
                for (int o = 0; o < A.dim(); ++o) rhs[o] += sgn > 0 ? hda[o] : -hda[o];
                if (!detail::vec_eq(lhs, rhs)) {
                    ok = false;
                    wit = "(" + H.basis[h] + ", " + A.basis[a] + ")";
                }
            }
        rep.add("d.g. condition d(h(a)) = d_H(h)(a) + (-1)^{|h|} h(d_A(a))", ok, wit);
    }

    return rep;
}

/// the trivial action h(a) = eps(h) a
inline ActionMap trivial_action(std::shared_ptr<const BialgebraPresentation> H,
                                std::shared_ptr<const AlgebraPresentation> A) {
    ActionMap act;
    act.H = H;
    act.A = A;
    act.rho.assign(H->dim(), std::vector<Vec>(A->dim(), A->zero_vec()));
    for (int h = 0; h < H->dim(); ++h)
        for (int a = 0; a < A->dim(); ++a) act.rho[h][a][a] = H->counit[h];
    return act;
}

/// evaluation pairing action of H* on H: f . h = h_(1) <f, h_(2)>
inline ActionMap pairing_action(const BialgebraPresentation& H) {
    auto Hp = std::make_shared<const BialgebraPresentation>(H);
    std::vector<Vec> values;
    auto Dp = std::make_shared<const BialgebraPresentation>(dual_bialgebra(H, &values));
    ActionMap act;
    act.H = Dp;
    act.A = std::static_pointer_cast<const AlgebraPresentation>(Hp);
    act.rho.assign(Dp->dim(), std::vector<Vec>(H.dim(), H.zero_vec()));
    for (int f = 0; f < Dp->dim(); ++f)
        for (int h = 0; h < H.dim(); ++h) {
            Vec out = H.zero_vec();
            for (int u = 0; u < H.dim(); ++u)
                for (int v = 0; v < H.dim(); ++v) {
                    const Scalar& c = H.comult[h][u][v];
                    if (c.is_zero()) continue;
                    out[u] += c * values[f][v];
                }
            act.rho[f][h] = out;
        }
    return act;
}

/// phi-hat on a single word: the arity-n cochain a |-> rho(x_1)(a_1)...rho(x_n)(a_n)
inline Cochain induced_cochain(const ActionMap& act, const CounitKernel& K, const Word& w) {
    const auto& A = *act.A;
    const int dim = A.dim();
    const int q = static_cast<int>(w.size());
    Bidegree bd = word_bidegree(K, w);
    Cochain c = cochain_zero(act.A, bd.internal, q);
    const long qpow = hdetail::pow_dim(dim, q);
    // H coordinates of each letter
    std::vector<Vec> lifts;
    for (int l : w) lifts.push_back(K.lift(l));
    std::vector<int> args;
    for (long code = 0; code < qpow; ++code) {
        hdetail::decode(code, dim, q, args);
        Vec acc = A.unit_vec();
        for (int l = 0; l < q; ++l) acc = A.multiply(acc, act.act_vec(lifts[l], A.basis_vec(args[l])));
        for (int o = 0; o < dim; ++o)
            if (!acc[o].is_zero()) c.coeffs[o * qpow + code] += acc[o];
    }
    return c;
}

/// linear extension of phi-hat over a cobar element
inline SumCochain induced(const ActionMap& act, const CounitKernel& K, const CobarElement& omega) {
    SumCochain out{act.A, {}};
    for (const auto& [w, coeff] : omega.terms) out.add_part(induced_cochain(act, K, w), coeff);
    return out;
}

/// Morphism verification in two layers: (a) the generating conditions,
/// exhaustive on basis letters and letter pairs; (b) sampled commutation of
/// phi-hat with d, cup, B_2 and B_3 on words up to max_ext.
inline AxiomReport verify_cacti_morphism(const ActionMap& act, std::shared_ptr<const CounitKernel> K,
                                         int max_ext, int samples, std::uint64_t seed) {
    const auto& A = *act.A;
    AxiomReport rep;
    HochschildSide hoch{act.A, std::max(2, max_ext)};

    // (a1) algebra morphism: phi-hat of a two-letter word is the cup of the images
    bool ok = true;
    std::string wit;
    for (int v = 0; v < K->dim() && ok; ++v)
        for (int u = 0; u < K->dim() && ok; ++u) {
            Cochain lhs = induced_cochain(act, *K, {v, u});
            Cochain rhs = hcup(induced_cochain(act, *K, {v}), induced_cochain(act, *K, {u}));
            if (!(lhs == rhs)) {
                ok = false;
                wit = "(" + K->letter_labels[v] + ", " + K->letter_labels[u] + ")";
            }
        }
    rep.add("layer a: phi-hat multiplicative on letter pairs", ok, wit);

    // (a2) chain map on letters, split by bidegree
    ok = true; wit.clear();
    for (int v = 0; v < K->dim() && ok; ++v) {
        CobarElement letter = word_element(K, {v}, Scalar::one(K->field()));
        Cochain img = induced_cochain(act, *K, {v});
        SumCochain lhs_e = induced(act, *K, d_external(letter));
        SumCochain rhs_e{act.A, {}};
        rhs_e.add_part(hdiff_external(img), Scalar::one(A.field));
        if (!(lhs_e == rhs_e)) {
            ok = false;
            wit = K->letter_labels[v] + " (external part)";
            break;
        }
        SumCochain lhs_i = induced(act, *K, d_internal(letter));
        SumCochain rhs_i{act.A, {}};
        if (A.has_differential()) rhs_i.add_part(hdiff_internal(img), Scalar::one(A.field));
        if (!(lhs_i == rhs_i)) {
            ok = false;
            wit = K->letter_labels[v] + " (internal part)";
        }
    }
    rep.add("layer a: phi-hat(d v) = d phi-hat(v) on letters", ok, wit);

    // (a3) *-morphism on letters
    ok = true; wit.clear();
    for (int v = 0; v < K->dim() && ok; ++v)
        for (int u = 0; u < K->dim() && ok; ++u) {
            CobarElement sv = star(word_element(K, {v}, Scalar::one(K->field())),
                                   word_element(K, {u}, Scalar::one(K->field())));
            SumCochain lhs = induced(act, *K, sv);
            Cochain rhs = hstar(induced_cochain(act, *K, {v}), induced_cochain(act, *K, {u}));
            SumCochain rhs_s{act.A, {}};
            rhs_s.add_part(rhs, Scalar::one(A.field));
            if (!(lhs == rhs_s)) {
                ok = false;
                wit = "(" + K->letter_labels[v] + ", " + K->letter_labels[u] + ")";
            }
        }
    rep.add("layer a: phi-hat is a *-morphism on letters", ok, wit);

    // (a4) bidegree bookkeeping
    ok = true; wit.clear();
    for (int v = 0; v < K->dim() && ok; ++v) {
        Cochain img = induced_cochain(act, *K, {v});
        if (!cochain_homogeneous(img)) {
            ok = false;
            wit = K->letter_labels[v];
        }
    }
    rep.add("layer a: images are bidegree homogeneous", ok, wit);

    // (b) sampled commutation
    CobarSide cobar{K, max_ext};
    SplitMix64 rng(seed);
    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement omega = cobar.sample(rng);
        SumCochain lhs = induced(act, *K, differential(omega));
        SumCochain rhs = hoch.d(induced(act, *K, omega));
        if (!(lhs == rhs)) {
            ok = false;
            wit = "sample " + std::to_string(s) + ": omega = " + render_element(omega);
        }
    }
    rep.add("layer b: phi-hat(d omega) = d phi-hat(omega) [" + std::to_string(samples) + " samples]", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = cobar.sample(rng), b = cobar.sample(rng);
        SumCochain lhs = induced(act, *K, cup(a, b));
        SumCochain rhs = hoch.cup2(induced(act, *K, a), induced(act, *K, b));
        if (!(lhs == rhs)) {
            ok = false;
            wit = "sample " + std::to_string(s);
        }
    }
    rep.add("layer b: phi-hat(a u b) = phi-hat(a) u phi-hat(b) [" + std::to_string(samples) + " samples]", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = cobar.sample(rng), b = cobar.sample(rng);
        SumCochain lhs = induced(act, *K, brace(2, a, {b}));
        SumCochain rhs = hoch.bm(induced(act, *K, a), {induced(act, *K, b)});
        if (!(lhs == rhs)) {
            ok = false;
            wit = "sample " + std::to_string(s) + ": a = " + render_element(a) + ", b = " + render_element(b);
        }
    }
    rep.add("layer b: phi-hat(B_2) = B_2(phi-hat, phi-hat) [" + std::to_string(samples) + " samples]", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = cobar.sample_ext(rng, 2 + static_cast<int>(rng.below(std::max(1, max_ext - 1))));
        CobarElement b = cobar.sample(rng), c = cobar.sample(rng);
        SumCochain lhs = induced(act, *K, brace(3, a, {b, c}));
        SumCochain rhs = hoch.bm(induced(act, *K, a), {induced(act, *K, b), induced(act, *K, c)});
        if (!(lhs == rhs)) {
            ok = false;
            wit = "sample " + std::to_string(s);
        }
    }
    rep.add("layer b: phi-hat(B_3) = B_3(phi-hat, ..) [" + std::to_string(samples) + " samples]", ok, wit);

    return rep;
}

// ---------------------------------------------------------------------------
// lifting bialgebra morphisms to the cobar constructions

struct CactiLift {
    std::shared_ptr<const CounitKernel> source;
    std::shared_ptr<const CounitKernel> target;
    // letter_image[l] = pi'(f(iota v_l)) over target letters
    std::vector<Vec> letter_image;

    CobarElement apply(const CobarElement& e) const {
        CobarElement out = cobar_zero(target);
        for (const auto& [w, c] : e.terms) {
            // expand the tensor product of letter images
            std::map<Word, Scalar> acc;
            acc.emplace(Word{}, c);
            for (int l : w) {
                std::map<Word, Scalar> next;
                for (const auto& [pw, pc] : acc)
                    for (int t = 0; t < target->dim(); ++t) {
                        const Scalar& lc = letter_image[l][t];
                        if (lc.is_zero()) continue;
                        Word nw = pw;
                        nw.push_back(t);
                        Scalar nc = pc * lc;
                        auto it = next.find(nw);
                        if (it == next.end()) next.emplace(nw, nc);
                        else {
                            it->second += nc;
                            if (it->second.is_zero()) next.erase(it);
                        }
                    }
                acc = std::move(next);
            }
            for (const auto& [nw, nc] : acc)
                if (!nw.empty()) out.add_term(nw, nc);
        }
        return out;
    }
};

/// Corollary-level lift: a bialgebra morphism induces a cacti morphism of the
/// cobar constructions, verified here on samples.
inline std::pair<CactiLift, AxiomReport> lift_bialgebra_morphism(const MorphismMatrix& f,
                                                                 int max_ext = 3, int samples = 25,
                                                                 std::uint64_t seed = 1) {
    AxiomReport base = check_bialgebra_morphism(f);
    if (!base.all_passed()) {
        const AxiomCheck* fail = base.first_failure();
        throw NotABialgebraMorphism(fail->axiom + " fails, witness " + fail->witness);
    }
    CactiLift lift;
    lift.source = std::make_shared<const CounitKernel>(counit_kernel(f.source));
    lift.target = std::make_shared<const CounitKernel>(counit_kernel(f.target));
    for (int l = 0; l < lift.source->dim(); ++l)
        lift.letter_image.push_back(lift.target->project(f.apply(lift.source->lift(l))));

    AxiomReport rep;
    CobarSide side{lift.source, max_ext};
    SplitMix64 rng(seed);
    bool ok = true;
    std::string wit;
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = side.sample(rng);
        if (!(lift.apply(differential(a)) == differential(lift.apply(a)))) {
            ok = false;
            wit = "sample " + std::to_string(s) + ": a = " + render_element(a);
        }
    }
    rep.add("lift commutes with d [" + std::to_string(samples) + " samples]", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = side.sample(rng), b = side.sample(rng);
        if (!(lift.apply(cup(a, b)) == cup(lift.apply(a), lift.apply(b)))) {
            ok = false;
            wit = "sample " + std::to_string(s);
        }
    }
    rep.add("lift commutes with cup [" + std::to_string(samples) + " samples]", ok, wit);

    ok = true; wit.clear();
    for (int s = 0; s < samples && ok; ++s) {
        CobarElement a = side.sample(rng), b = side.sample(rng);
        if (!(lift.apply(brace(2, a, {b})) == brace(2, lift.apply(a), {lift.apply(b)}))) {
            ok = false;
            wit = "sample " + std::to_string(s);
        }
    }
    rep.add("lift commutes with B_2 [" + std::to_string(samples) + " samples]", ok, wit);

    return {lift, rep};
}

} // namespace cacti
