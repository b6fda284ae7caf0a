#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cgknot/witt.hpp"

using namespace cgknot;

namespace {
const CycLaurent kTrefoil = CycLaurent::t(2) - CycLaurent::t(1) + CycLaurent(1);

WittElement one_dim_element()
{
    WittElement w;
    w.add(TwoLocal(1), HermitianAtom::one_dim_from_poly(kTrefoil, {6}), "demo");
    return w;
}
}

TEST_CASE("one dimensional form signatures and jumps")
{
    HermitianAtom a1 = HermitianAtom::one_dim_from_poly(kTrefoil, {6});
    CHECK(a1.dim() == 1);
    CHECK(signature_at(a1, UnitAngle(1, 2)) == 1);
    CHECK(signature_at(a1, UnitAngle(1, 6)) == 0);   // averaged across the jump
    CHECK(signature_at(a1, UnitAngle(1, 12)) == -1);

    WittElement w1 = one_dim_element();
    JumpFunction j1 = jump_function(w1);
    CHECK(j1.support().size() == 2);
    CHECK(j1.at(UnitAngle(1, 6)) == TwoLocal(1));
    CHECK(j1.at(UnitAngle(5, 6)) == TwoLocal(-1));

    CanonicalDisc d1 = disc_pm(w1);
    CHECK(d1.roots().size() == 2);
    CHECK(d1.contains(UnitAngle(1, 6)));
    CHECK(delta_omega(w1, UnitAngle(1, 6)) == 1);
    CHECK(delta_omega(w1, UnitAngle(1, 5)) == 0);
}

TEST_CASE("coefficient scaling acts through the 2-adic valuation")
{
    HermitianAtom a1 = HermitianAtom::one_dim_from_poly(kTrefoil, {6});
    CanonicalDisc d1 = disc_pm(one_dim_element());

    WittElement w2;
    w2.add(TwoLocal(2), a1, "");
    CHECK(disc_pm(w2).is_trivial());

    WittElement w3;
    w3.add(TwoLocal(3, 5), a1, "");
    CHECK(disc_pm(w3) == d1);
    CHECK(jump_function(w3).at(UnitAngle(1, 6)) == TwoLocal(3, 5));
}

TEST_CASE("hyperbolic and metabolic forms vanish")
{
    HermitianAtom hyp = HermitianAtom::diagonal({CycLaurent(1), CycLaurent(-1)});
    CHECK(signature_at(hyp, UnitAngle(1, 7)) == 0);

    CycLaurent f = CycLaurent::t(1) - CycLaurent(Cyclotomic::zeta(3));
    HermitianAtom pair({{CycLaurent(), f}, {involution_J(f), CycLaurent()}}, {3});
    CHECK(signature_at(pair, UnitAngle(1, 7)) == 0);
    CHECK(signature_at(pair, UnitAngle(1, 3)) == 0);
    CHECK(atom_jump_function(pair, {3}).is_zero());

    WittElement w1 = one_dim_element();
    CycLaurent g = symmetric_from_angles({{UnitAngle(1, 5), 1}, {UnitAngle(4, 5), 1}});
    WittElement w5 = w1;
    w5.add(TwoLocal(1), HermitianAtom::diagonal({g, -g}, {5}), "metabolic");
    CHECK(jump_function(w5) == jump_function(w1));
    CHECK(disc_pm(w5) == disc_pm(w1));
}

TEST_CASE("support certification rejects roots off the unit circle")
{
    CycLaurent bad = CycLaurent::t(1) + CycLaurent(2);
    HermitianAtom badpair({{CycLaurent(), bad}, {involution_J(bad), CycLaurent()}});
    CHECK_THROWS_AS(atom_jump_function(badpair, {1}), std::domain_error);
}

TEST_CASE("psi vectors and parity")
{
    WittElement w1 = one_dim_element();
    PsiResult p13 = psi(w1, 13);
    REQUIRE(p13.values.has_value());
    CHECK(p13.values->size() == 6);
    for (const auto& v : *p13.values) CHECK(v.is_zero());
    for (int b : p13.parity) CHECK(b == 0);

    PsiResult ptriv = psi(WittElement(), 5);
    REQUIRE(ptriv.values.has_value());
    CHECK(ptriv.values->size() == 2);
    CHECK((*ptriv.values)[0].is_zero());

    DiscOnlyAtom donly{CanonicalDisc({UnitAngle(2, 5), UnitAngle(3, 5)})};
    WittElement w4;
    w4.add(TwoLocal(1), donly, "tau");
    PsiResult p5 = psi(w4, 5);
    CHECK(!p5.values.has_value());
    REQUIRE(p5.parity.size() == 2);
    CHECK(p5.parity[0] == 0);
    CHECK(p5.parity[1] == 1);
    CHECK_THROWS_AS(jump_function(w4), std::domain_error);
}

TEST_CASE("element arithmetic is linear")
{
    WittElement w1 = one_dim_element();
    JumpFunction j1 = jump_function(w1);
    CHECK(jump_function(w1.scaled(TwoLocal(3))) == j1.scaled(TwoLocal(3)));
    CHECK(signature_at(w1 + w1, UnitAngle(1, 2)) == mpq_class(2));
    CHECK(jump_function(w1 + w1.scaled(TwoLocal(-1))).is_zero());

    HermitianAtom a1 = HermitianAtom::one_dim_from_poly(kTrefoil, {6});
    CHECK(signature_at(a1, UnitAngle(1, 3)) == signature_at(a1, UnitAngle(1, 2)));
}
