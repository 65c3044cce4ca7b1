#include <gtest/gtest.h>

#include "cacti/catalog.hpp"
#include "cacti/identities.hpp"

using namespace cacti;

namespace {
const Field Q = Field::rationals();

std::shared_ptr<const AlgebraPresentation> shared_alg(const AlgebraPresentation& A) {
    return std::make_shared<const AlgebraPresentation>(A);
}

Cochain map_cochain(std::shared_ptr<const AlgebraPresentation> A, const LinearMap& m) {
    const int dim = A->dim();
    long p = 0;
    bool first = true;
    Cochain c = cochain_zero(A, 0, 1);
    for (int i = 0; i < dim; ++i)
        for (int o = 0; o < dim; ++o) {
            if (m.col[i][o].is_zero()) continue;
            long defect = A->degree[o] - A->degree[i];
            if (first) { p = defect; first = false; }
            EXPECT_EQ(defect, p);
            cochain_at(c, o, {i}) = m.col[i][o];
        }
    c.internal = p;
    return c;
}

LinearMap zero_map(const AlgebraPresentation& A) {
    LinearMap m;
    m.col.assign(A.dim(), A.zero_vec());
    return m;
}
} // namespace

TEST(Hochschild, MultiplicationIsACocycle) {
    auto A = shared_alg(trunc_poly(Q, 2));
    EXPECT_TRUE(hdiff_external(multiplication_cochain(A)).is_zero());
    auto M = shared_alg(matrix_algebra(Q, 2));
    EXPECT_TRUE(hdiff_external(multiplication_cochain(M)).is_zero());
}

TEST(Hochschild, DerivationIsACocycle) {
    auto A = shared_alg(trunc_poly(Q, 3));
    // Euler derivation y d/dy
    LinearMap D = zero_map(*A);
    D.col[1][1] = Scalar::one(Q);
    D.col[2][2] = Scalar::of_int(Q, 2);
    EXPECT_TRUE(hdiff_external(map_cochain(A, D)).is_zero());
}

TEST(Hochschild, IdentityMapCoboundaryValue) {
    // (d_e id)(a, b) = -ab + ab - ab = -ab
    auto A = shared_alg(trunc_poly(Q, 2));
    Cochain d = hdiff_external(identity_cochain(A));
    Cochain expect = cochain_zero(A, 0, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int o = 0; o < 2; ++o) {
                const Scalar& m = A->mult[a][b][o];
                if (!m.is_zero()) cochain_at(expect, o, {a, b}) -= m;
            }
    EXPECT_TRUE(d == expect);
    EXPECT_FALSE(d.is_zero());
}

TEST(Hochschild, BraceOnArityOneIsComposition) {
    auto A = shared_alg(matrix_algebra(Q, 2));
    LinearMap D = zero_map(*A), E = zero_map(*A);
    // two arbitrary arity-1 maps
    D.col[1][2] = Scalar::of_int(Q, 3);
    D.col[0][1] = Scalar::one(Q);
    E.col[2][1] = Scalar::of_int(Q, -2);
    E.col[3][3] = Scalar::one(Q);
    Cochain cd = map_cochain(A, D), ce = map_cochain(A, E);
    Cochain comp = gv_hbrace(cd, {ce});
    // evaluate both on basis and compare with matrix composition
    for (int i = 0; i < A->dim(); ++i) {
        Vec lhs = A->zero_vec();
        for (int o = 0; o < A->dim(); ++o) lhs[o] = cochain_at(comp, o, {i});
        Vec rhs = D.apply(*A, E.apply(*A, A->basis_vec(i)));
        for (int o = 0; o < A->dim(); ++o) EXPECT_EQ(lhs[o], rhs[o]);
    }
}

TEST(Hochschild, ArityVanishing) {
    auto A = shared_alg(trunc_poly(Q, 2));
    Cochain f = identity_cochain(A);
    Cochain g = multiplication_cochain(A);
    EXPECT_TRUE(gv_hbrace(f, {g, g}).is_zero()); // f{g,h} = 0 when arity f < 2
    EXPECT_TRUE(hbrace(3, f, {g, g}).is_zero());
}

TEST(Hochschild, BracketOfDerivationsIsCommutator) {
    auto A = shared_alg(matrix_algebra(Q, 2));
    // inner derivations ad(E11), ad(E12)
    auto ad = [&](int b) {
        LinearMap m = zero_map(*A);
        for (int i = 0; i < A->dim(); ++i) {
            Vec v = A->multiply(A->basis_vec(b), A->basis_vec(i));
            Vec w = A->multiply(A->basis_vec(i), A->basis_vec(b));
            for (int o = 0; o < A->dim(); ++o) m.col[i][o] = v[o] - w[o];
        }
        return m;
    };
    int e11 = A->index_of("E11"), e12 = A->index_of("E12");
    Cochain c1 = map_cochain(A, ad(e11)), c2 = map_cochain(A, ad(e12));
    Cochain lhs = hgbracket(c1, c2);
    // [ad a, ad b] = ad [a,b]; [E11, E12] = E12
    Cochain rhs = map_cochain(A, ad(e12));
    EXPECT_TRUE(lhs == rhs);
}

TEST(Hochschild, DSquaredExhaustive) {
    for (const auto& A0 : {trunc_poly(Q, 2), super_line(Q), matrix_algebra(Q, 2)}) {
        auto A = shared_alg(A0);
        const int dim = A->dim();
        for (int q = 0; q <= (dim > 2 ? 2 : 3); ++q) {
            const long qpow = hdetail::pow_dim(dim, q);
            std::vector<int> args;
            for (int o = 0; o < dim; ++o)
                for (long code = 0; code < qpow; ++code) {
                    hdetail::decode(code, dim, q, args);
                    long p = A->degree[o];
                    for (int a : args) p -= A->degree[a];
                    Cochain c = cochain_zero(A, p, q);
                    c.coeffs[o * qpow + code] = Scalar::one(Q);
                    EXPECT_TRUE(hdiff_external(hdiff_external(c)).is_zero())
                        << A->name << " q=" << q << " o=" << o << " code=" << code;
                }
        }
    }
}

TEST(Hochschild, DSquaredSampledAtHigherArity) {
    auto A = shared_alg(trunc_poly(Q, 2));
    HochschildSide side{A, 4};
    SplitMix64 rng(17);
    for (int i = 0; i < 20; ++i) {
        auto e = side.sample_ext(rng, 4);
        EXPECT_TRUE(side.d(side.d(e)).is_zero());
    }
}

TEST(Hochschild, IdentitySuiteTruncPoly) {
    auto A = shared_alg(trunc_poly(Q, 2));
    HochschildSide side{A, 2};
    AxiomReport rep = check_all_identities(side, 40, 42, 2);
    EXPECT_TRUE(rep.all_passed()) << rep.str();
}

TEST(Hochschild, IdentitySuiteMatrixAlgebra) {
    auto A = shared_alg(matrix_algebra(Q, 2));
    HochschildSide side{A, 2};
    AxiomReport rep = check_all_identities(side, 15, 43, 2);
    EXPECT_TRUE(rep.all_passed()) << rep.str();
}

TEST(Hochschild, IdentitySuiteSuperLine) {
    auto A = shared_alg(super_line(Q));
    HochschildSide side{A, 3};
    AxiomReport rep = check_all_identities(side, 40, 44, 3);
    EXPECT_TRUE(rep.all_passed()) << rep.str();
}

namespace {
// negative control: a degree-dependent sign error in the cup product
struct TwistedCupSide : HochschildSide {
    Elt cup2(const Elt& a, const Elt& b) const {
        Elt r = HochschildSide::cup2(a, b);
        long t = 0;
        if (!a.parts.empty()) t = a.parts.front().total_degree();
        return scaled(r, parity_sign(t));
    }
};
} // namespace

TEST(Hochschild, TwistedCupFailsDerivationIdentity) {
    auto A = shared_alg(trunc_poly(Q, 2));
    TwistedCupSide side{{A, 2}};
    AxiomReport rep = check_identity(IdentityId::DIsDerivation, side, 25, 42, 2);
    EXPECT_FALSE(rep.all_passed());
}

// ---------------------------------------------------------------------------
// skew-derivation cocycles

namespace {
SkewDerivationChain psi_chain(const AlgebraPresentation& A) {
    // A = k[y]/y^2; d_1 = action of xg (1 -> 0, y -> -1), d_2 = action of x
    // (1 -> 0, y -> 1), with the parity automorphism g(y) = -y
    LinearMap id = identity_map(A);
    LinearMap g = id;
    g.col[1][1] = -Scalar::one(A.field);
    LinearMap dxg = zero_map(A);
    dxg.col[1][0] = -Scalar::one(A.field);
    LinearMap dx = zero_map(A);
    dx.col[1][0] = Scalar::one(A.field);
    SkewDerivationChain ch;
    ch.ds = {dxg, dx};
    ch.gs = {id, g};
    ch.hs = {g, id};
    return ch;
}
} // namespace

TEST(Hochschild, PsiIsACompatibleSkewCocycle) {
    auto A = shared_alg(trunc_poly(Q, 2));
    SkewDerivationChain ch = psi_chain(*A);
    EXPECT_TRUE(check_skew_chain(*A, ch).all_passed());
    SkewCocycleResult res = skew_cocycle(A, ch);
    EXPECT_TRUE(res.compatible);
    // Psi(y, y) = (xg)(y) x(y) = -1
    EXPECT_EQ(cochain_at(res.f, 0, {1, 1}), -Scalar::one(Q));
    EXPECT_TRUE(hdiff_external(res.f).is_zero());
    // [Psi, Psi] vanishes on the nose here
    EXPECT_TRUE(hgbracket(res.f, res.f).is_zero());
}

TEST(Hochschild, SkewCocycleArityOneAndThree) {
    auto A = shared_alg(trunc_poly(Q, 2));
    // arity 1: an honest derivation
    LinearMap D = zero_map(*A);
    D.col[1][1] = Scalar::one(Q);
    SkewDerivationChain one;
    one.ds = {D};
    one.gs = {identity_map(*A)};
    one.hs = {identity_map(*A)};
    SkewCocycleResult r1 = skew_cocycle(A, one);
    EXPECT_TRUE(r1.compatible);
    EXPECT_TRUE(hdiff_external(r1.f).is_zero());

    // arity 3: chain (xg | g,id ... ) extended by the Euler derivation
    SkewDerivationChain ch = psi_chain(*A);
    ch.ds.push_back(D);
    ch.gs.push_back(identity_map(*A));
    ch.hs.push_back(identity_map(*A));
    EXPECT_TRUE(check_skew_chain(*A, ch).all_passed());
    SkewCocycleResult r3 = skew_cocycle(A, ch);
    EXPECT_TRUE(r3.compatible);
    EXPECT_TRUE(hdiff_external(r3.f).is_zero());
}

TEST(Hochschild, BoundaryViolationGivesNonCocycle) {
    // x itself declared as a (g, id)-skew derivation: g_1 != id, and indeed
    // (d x)(y, y) = -2y != 0
    auto A = shared_alg(trunc_poly(Q, 2));
    LinearMap g = identity_map(*A);
    g.col[1][1] = -Scalar::one(Q);
    LinearMap dx = zero_map(*A);
    dx.col[1][0] = Scalar::one(Q);
    SkewDerivationChain ch;
    ch.ds = {dx};
    ch.gs = {g};
    ch.hs = {identity_map(*A)};
    EXPECT_TRUE(check_skew_chain(*A, ch).all_passed());
    SkewCocycleResult res = skew_cocycle(A, ch);
    EXPECT_FALSE(res.compatible);
    EXPECT_EQ(res.incompatibility, "g_1 != id");
    Cochain df = hdiff_external(res.f);
    EXPECT_FALSE(df.is_zero());
    EXPECT_EQ(cochain_at(df, 1, {1, 1}), -Scalar::of_int(Q, 2));
}

TEST(Hochschild, MiddleViolationGivesNonCocycle) {
    // over F_7 on k[y]/y^3: d_1 = 2-derivative (id, sigma)-skew with
    // sigma(y) = 2y, d_2 = Euler derivation (id, id): h_1 != g_2
    Field F7 = Field::prime(7);
    auto A = shared_alg(trunc_poly(F7, 3));
    LinearMap sigma = identity_map(*A);
    sigma.col[1][1] = Scalar::of_int(F7, 2);
    sigma.col[2][2] = Scalar::of_int(F7, 4);
    LinearMap dq = zero_map(*A); // y -> 1, y^2 -> [2]_2 y = 3y
    dq.col[1][0] = Scalar::one(F7);
    dq.col[2][1] = Scalar::of_int(F7, 3);
    LinearMap euler = zero_map(*A);
    euler.col[1][1] = Scalar::one(F7);
    euler.col[2][2] = Scalar::of_int(F7, 2);
    SkewDerivationChain ch;
    ch.ds = {dq, euler};
    ch.gs = {identity_map(*A), identity_map(*A)};
    ch.hs = {sigma, identity_map(*A)};
    EXPECT_TRUE(check_skew_chain(*A, ch).all_passed());
    SkewCocycleResult res = skew_cocycle(A, ch);
    EXPECT_FALSE(res.compatible);
    EXPECT_EQ(res.incompatibility, "h_1 != g_2");
    Cochain df = hdiff_external(res.f);
    EXPECT_FALSE(df.is_zero());
    // witness (y, y, y): coefficient of y^2
    EXPECT_EQ(cochain_at(df, 2, {1, 1, 1}), Scalar::one(F7));
}

TEST(Hochschild, InvalidChainInvariantsThrow) {
    auto A = shared_alg(trunc_poly(Q, 2));
    // declare x as an (id, id)-derivation: the skew condition fails
    LinearMap dx = zero_map(*A);
    dx.col[1][0] = Scalar::one(Q);
    SkewDerivationChain ch;
    ch.ds = {dx};
    ch.gs = {identity_map(*A)};
    ch.hs = {identity_map(*A)};
    EXPECT_FALSE(check_skew_chain(*A, ch).all_passed());
    EXPECT_THROW(skew_cocycle(A, ch), MalformedPresentation);
}

TEST(Hochschild, SplitDifferentialSquaresToZero) {
    // on a d.g. algebra: d_e^2 = 0, d_i^2 = 0 and d_e d_i + d_i d_e = 0,
    // exhaustively over basis cochains of arity <= 2
    AlgebraPresentation A0;
    A0.name = "dg3";
    A0.field = Q;
    A0.basis = {"1", "y", "z"};
    A0.degree = {0, 0, 1};
    A0.unit = 0;
    const Scalar z = Scalar::zero(Q), o = Scalar::one(Q);
    A0.mult.assign(3, std::vector<Vec>(3, Vec(3, z)));
    for (int i = 0; i < 3; ++i) {
        A0.mult[0][i][i] = o;
        A0.mult[i][0][i] = o;
    }
    A0.differential.assign(3, Vec(3, z));
    A0.differential[1][2] = o;
    ASSERT_TRUE(check_axioms(A0).all_passed());
    auto A = shared_alg(A0);
    const int dim = 3;
    for (int q = 0; q <= 2; ++q) {
        const long qpow = hdetail::pow_dim(dim, q);
        std::vector<int> args;
        for (int out = 0; out < dim; ++out)
            for (long code = 0; code < qpow; ++code) {
                hdetail::decode(code, dim, q, args);
                long p = A->degree[out];
                for (int a : args) p -= A->degree[a];
                Cochain c = cochain_zero(A, p, q);
                c.coeffs[out * qpow + code] = o;
                EXPECT_TRUE(hdiff_external(hdiff_external(c)).is_zero());
                EXPECT_TRUE(hdiff_internal(hdiff_internal(c)).is_zero());
                Cochain cross = hdiff_external(hdiff_internal(c));
                cochain_add(cross, hdiff_internal(hdiff_external(c)), o);
                EXPECT_TRUE(cross.is_zero()) << "q=" << q << " out=" << out << " code=" << code;
            }
    }
}

TEST(Hochschild, EvenDegreeSelfBracket) {
    // for f of even total degree, [f, f] = 2 f*f
    auto A = shared_alg(matrix_algebra(Q, 2));
    HochschildSide side{A, 2};
    SplitMix64 rng(5);
    int found = 0;
    for (int i = 0; i < 30 && found < 8; ++i) {
        auto e = side.sample(rng);
        if (e.is_zero() || side.total(e) % 2 != 0) continue;
        ++found;
        const Cochain& f = e.parts.front();
        Cochain lhs = hgbracket(f, f);
        Cochain rhs = hstar(f, f);
        Cochain twice = cochain_zero(A, rhs.internal, rhs.arity);
        cochain_add(twice, rhs, Scalar::of_int(Q, 2));
        EXPECT_TRUE(lhs == twice);
    }
    EXPECT_GE(found, 4);
}
