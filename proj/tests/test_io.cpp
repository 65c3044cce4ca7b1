#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "cacti/catalog.hpp"
#include "cacti/homology.hpp"
#include "cacti/io.hpp"

using namespace cacti;

namespace {
const Field Q = Field::rationals();

std::string temp_path(const std::string& name) {
    return std::string(::testing::TempDir()) + "/" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}
} // namespace

TEST(Io, PresentationRoundTrip) {
    for (const auto& H : {sweedler4(Q), taft(Field::prime(7), 3), dual_group_algebra_cyclic(Q, 3)}) {
        std::string path = temp_path("rt.bia");
        write_file(path, io::bialgebra_to_json(H).dump(2));
        BialgebraPresentation L = io::load_bialgebra(path);
        EXPECT_TRUE(presentations_equal(H, L)) << H.name;
    }
    AlgebraPresentation A = super_line(Q);
    std::string path = temp_path("rt.alg");
    write_file(path, io::algebra_core_to_json(A).dump(2));
    EXPECT_TRUE(presentations_equal(A, io::load_algebra(path)));
}

TEST(Io, MissingEntriesMeanZero) {
    write_file(temp_path("min.bia"), R"({
      "name": "k", "field": {"kind": "Rational"}, "basis": ["1"], "unit": "1",
      "mult": {"1*1": {"1": "1"}}, "comult": {"1": {"1|1": "1"}}, "counit": {"1": "1"}
    })");
    BialgebraPresentation P = io::load_bialgebra(temp_path("min.bia"));
    EXPECT_TRUE(check_axioms(P).all_passed());
    EXPECT_EQ(P.degree, std::vector<int>{0});
}

TEST(Io, ScalarsAcceptIntegers) {
    write_file(temp_path("ints.alg"), R"({
      "name": "a", "field": {"kind": "Prime", "p": 5}, "basis": ["1", "t"], "unit": "1",
      "mult": {"1*1": {"1": 1}, "1*t": {"t": 1}, "t*1": {"t": 1}, "t*t": {"1": -1}}
    })");
    AlgebraPresentation P = io::load_algebra(temp_path("ints.alg"));
    EXPECT_TRUE(check_axioms(P).all_passed());
    EXPECT_EQ(P.mult[1][1][0].str(), "4");
}

TEST(Io, ParseErrorsSurface) {
    write_file(temp_path("bad.bia"), "{ not json");
    EXPECT_THROW(io::load_bialgebra(temp_path("bad.bia")), ParseError);

    write_file(temp_path("badlabel.bia"), R"({
      "name": "k", "field": {"kind": "Rational"}, "basis": ["a*b"], "unit": "a*b",
      "mult": {}, "comult": {}, "counit": {}
    })");
    EXPECT_THROW(io::load_bialgebra(temp_path("badlabel.bia")), MalformedPresentation);

    write_file(temp_path("badunit.bia"), R"({
      "name": "k", "field": {"kind": "Rational"}, "basis": ["1"], "unit": "e",
      "mult": {}, "comult": {}, "counit": {}
    })");
    EXPECT_THROW(io::load_bialgebra(temp_path("badunit.bia")), MalformedPresentation);

    EXPECT_THROW(io::load_bialgebra(temp_path("missing.bia")), Error);
}

TEST(Io, CochainJsonRoundTrip) {
    auto A = std::make_shared<const AlgebraPresentation>(trunc_poly(Q, 2));
    Cochain psi = cochain_zero(A, 0, 2);
    cochain_at(psi, 0, {1, 1}) = -Scalar::one(Q);
    ordered_json j = io::cochain_to_json(psi);
    Cochain back = io::cochain_from_json(j, A);
    EXPECT_TRUE(psi == back);
    EXPECT_EQ(j["coeffs"]["1<-y,y"], "-1");
}

TEST(Io, MatrixTriplets) {
    SparseMatrix M(2, 3, Q);
    M.add(0, 1, Scalar::of_int(Q, 2));
    M.add(1, 0, -Scalar::one(Q));
    EXPECT_EQ(io::matrix_triplets(M), "0 1 2\n1 0 -1\n");
}

TEST(Io, FieldCast) {
    BialgebraPresentation H = sweedler4(Q);
    BialgebraPresentation H5 = io::field_cast(H, Field::prime(5));
    EXPECT_TRUE(check_axioms(H5).all_passed());
    EXPECT_EQ(H5.mult[1][2][3].str(), "4"); // -1 mod 5
}

TEST(Io, BettiLowerBoundFlagNearCap) {
    CobarComplex C{std::make_shared<const CounitKernel>(counit_kernel(
        std::make_shared<const BialgebraPresentation>(sweedler4(Q))))};
    C.cap = 27; // 3^3: external degree 4 is beyond reach
    BettiTable t = betti_table(C, 1, 3);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_FALSE(t.rows[1].lower_bound_only);
    EXPECT_TRUE(t.rows[2].lower_bound_only);
    std::string text = io::betti_text(t);
    EXPECT_NE(text.find("lower bound"), std::string::npos);
}

TEST(Io, ActionFileDefaultsUnitRow) {
    // 1_H rows may be omitted; explicit rows override
    std::string dir = ::testing::TempDir();
    write_file(dir + "/h.bia", io::bialgebra_to_json(group_algebra_cyclic(Q, 2)).dump(2));
    write_file(dir + "/a.alg", io::algebra_core_to_json(trunc_poly(Q, 2)).dump(2));
    write_file(dir + "/t.act", R"({
      "bialgebra": "h.bia", "algebra": "a.alg",
      "action": {"g.1": {"1": "1"}, "g.y": {"y": "-1"}}
    })");
    ActionMap act = io::load_action(dir + "/t.act");
    EXPECT_TRUE(check_module_algebra(act).all_passed());
}
