#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace otl;
using otl::test::check_source;
using otl::test::codes;
using otl::test::load_fixture;
using otl::test::load_source;

using Ids = std::vector<std::string>;

TEST(Validate, FixturesAreClean) {
  for (const char* name : {"mouse.otl", "porphyry.otl", "universe.otl", "two_genera.otl", "redness.otl"}) {
    auto r = parse(test::read_file(test::data_path(name)), name);
    ASSERT_TRUE(r.model) << name;
    auto v = validate(std::move(*r.model));
    EXPECT_TRUE(v.model) << name;
    for (const auto& d : v.diagnostics) ADD_FAILURE() << name << ": " << format_diagnostic(d);
  }
}

TEST(Validate, DuplicateIntension) {
  auto diags = check_source(
      "concept PointingDevice\naxis DetectionMechanism of PointingDevice { mechanical, optical }\n"
      "concept OpticalMouse := PointingDevice + optical\nconcept LightMouse := PointingDevice + optical\n");
  EXPECT_EQ(codes(diags), Ids{"E_DUP_INTENSION"});
  EXPECT_EQ(diags[0].entity, "LightMouse");
  EXPECT_EQ(diags[0].span->line, 4u);
}

TEST(Validate, DuplicateIntensionAcrossGenera) {
  // same intension reached through different genus paths
  auto diags = check_source("concept A + a\nconcept B + b\nconcept X := A + b\nconcept Y := B + a\n");
  EXPECT_EQ(codes(diags), Ids{"E_DUP_INTENSION"});
}

TEST(Validate, TwoEmptyRootsCollide) {
  EXPECT_EQ(codes(check_source("concept A\nconcept B\n")), Ids{"E_DUP_INTENSION"});
}

TEST(Validate, NoDelimiting) {
  EXPECT_EQ(codes(check_source("concept A\nconcept B := A\n")), Ids{"E_NO_DELIMITING"});
  EXPECT_EQ(codes(check_source("concept A + x\nconcept B := A + x\n")), Ids{"E_NO_DELIMITING"});
}

TEST(Validate, AxisContradiction) {
  auto diags = check_source(
      "concept PointingDevice\naxis DetectionMechanism of PointingDevice { mechanical, optical }\n"
      "concept Odd := PointingDevice + mechanical, optical\n");
  EXPECT_EQ(codes(diags), Ids{"E_AXIS_CONTRADICTION"});
  EXPECT_NE(diags[0].message.find("DetectionMechanism"), std::string::npos);
}

TEST(Validate, AxisContradictionReportedOnceWhereIntroduced) {
  auto diags = check_source(
      "concept P\naxis D of P { m, o }\nconcept M := P + m\nconcept MO := M + o\nconcept Deeper := MO + z\n");
  EXPECT_EQ(codes(diags), Ids{"E_AXIS_CONTRADICTION"});
  EXPECT_EQ(diags[0].entity, "MO");
}

TEST(Validate, NonExclusiveAxisAllowsCombination) {
  auto vm = load_source("concept P\naxis D of P nonexclusive { m, o }\nconcept M := P + m\nconcept MO := M + o\n");
  EXPECT_TRUE(subsumes(vm, "M", "MO"));
}

TEST(Validate, AxisScope) {
  auto diags = check_source("concept Thing + t\nconcept P := Thing + p\naxis D of P { m, o }\nconcept Stray := Thing + m\n");
  EXPECT_EQ(codes(diags), Ids{"E_AXIS_SCOPE"});
  EXPECT_EQ(diags[0].entity, "Stray");
}

TEST(Validate, AxisScopeHonoursDerivedSubsumption) {
  // Q is not declared under P but its intension contains P's
  auto vm = load_source("concept P + p\naxis D of P { m, o }\nconcept Q + p, q\nconcept R := Q + m\n");
  EXPECT_TRUE(subsumes(vm, "P", "R"));
}

TEST(Validate, AxisMembership) {
  EXPECT_EQ(codes(check_source("concept P\naxis D of P { m }\nconcept M := P + m\n")), Ids{"E_AXIS_MEMBERS"});
  EXPECT_EQ(codes(check_source("concept P\naxis D of P { m, o }\naxis E of P { o, z }\nconcept M := P + m\n")),
            Ids{"E_AXIS_SHARED"});
}

TEST(Validate, Unresolved) {
  EXPECT_EQ(codes(check_source("concept A := Missing + x\n")), Ids{"E_UNRESOLVED"});
  EXPECT_EQ(codes(check_source("concept A\nobject o : B\n")), Ids{"E_UNRESOLVED"});
  EXPECT_EQ(codes(check_source("concept A\nattribute c : text on A\nobject o : A { size = 1 }\n")),
            Ids{"E_UNRESOLVED"});
  EXPECT_EQ(codes(check_source("concept A\nclass K := { x | in Nope }\n")), Ids{"E_UNRESOLVED"});
}

TEST(Validate, GenusCycle) {
  auto diags = check_source("concept A := B + x\nconcept B := A + y\n");
  EXPECT_EQ(codes(diags), Ids{"E_GENUS_CYCLE"});
  EXPECT_EQ(codes(check_source("concept A := A + x\n")), Ids{"E_GENUS_CYCLE"});
}

TEST(Validate, StopsAtFirstFailingStage) {
  // unresolved reference hides the duplicate intension further down
  auto diags = check_source("concept A\nconcept B\nconcept C := Nope + x\n");
  EXPECT_EQ(codes(diags), Ids{"E_UNRESOLVED"});
}

TEST(Validate, AttributeChecks) {
  const std::string base = "concept Thing\nconcept P := Thing + p\nconcept Car := Thing + v\nattribute colour : text on P\n";
  EXPECT_EQ(codes(check_source(base + "object c : Car { colour = \"red\" }\n")), Ids{"E_ATTR_DOMAIN"});
  EXPECT_EQ(codes(check_source(base + "object m : P { colour = 3 }\n")), Ids{"E_ATTR_KIND"});
  EXPECT_TRUE(check_source(base + "object m : P { colour = \"red\" }\n").empty());
}

TEST(Validate, PartCycles) {
  const std::string base = "concept T\nconcept A := T + a\nconcept B := T + b\n";
  EXPECT_EQ(codes(check_source(base + "part A has B\npart B has A\n")), Ids{"E_PART_CYCLE"});
  EXPECT_EQ(codes(check_source(base + "part A has A\n")), Ids{"E_PART_CYCLE"});
  EXPECT_TRUE(check_source(base + "part A has B\npart T has B\n").empty());
}

TEST(Validate, TermWarnings) {
  auto diags = check_source(
      "concept T\nconcept A := T + a\nterm \"ay\" (en, admitted) for A\nterm \"tee\" (fr, preferred) for T\n");
  ASSERT_EQ(codes(diags), (Ids{"W_NO_PREFERRED_TERM", "W_NO_PREFERRED_TERM", "W_NO_PREFERRED_TERM"}));
  auto r = validate(test::parse_ok("concept T\nterm \"tee\" (en, admitted) for T\n"));
  EXPECT_TRUE(r.model) << "warnings do not block validation";
}

TEST(Validate, DescriptionOnlyWarning) {
  auto diags = check_source("concept Engine + e\nconcept Piston + p\npart Engine has Piston\n");
  EXPECT_EQ(codes(diags), Ids{"W_DESCRIPTION_ONLY"});
  EXPECT_EQ(diags[0].entity, "Engine");
}

TEST(Validate, UndistinguishedCoordinatesAreUnreachable) {
  // equal differentiae under a shared genus are always duplicate intensions first
  auto diags = check_source("concept G\nconcept A := G + x\nconcept B := G + x\n");
  EXPECT_EQ(codes(diags), Ids{"E_DUP_INTENSION"});
}

TEST(Subsumes, Irreflexive) {
  auto vm = load_fixture("mouse.otl");
  for (const auto& c : vm.model().concepts) EXPECT_FALSE(subsumes(vm, c.id, c.id));
}

TEST(Subsumes, MouseFixture) {
  auto vm = load_fixture("mouse.otl");
  oracle::Reference ref(vm.model());
  EXPECT_TRUE(subsumes(vm, "PointingDevice", "OpticalMouse"));
  EXPECT_FALSE(subsumes(vm, "OpticalMouse", "PointingDevice"));
  EXPECT_FALSE(subsumes(vm, "MechanicalMouse", "OpticalMouse"));
  for (const auto& a : vm.model().concepts) {
    for (const auto& b : vm.model().concepts) EXPECT_EQ(subsumes(vm, a.id, b.id), ref.subsumes(a.id, b.id));
  }
}

TEST(Subsumes, UnknownConceptThrows) {
  auto vm = load_fixture("mouse.otl");
  EXPECT_THROW(subsumes(vm, "PointingDevice", "Nope"), Error);
}

TEST(Hierarchy, SingleRoot) {
  auto vm = load_source("concept Only\n");
  EXPECT_EQ(compute_hierarchy(vm).roots, Ids{"Only"});
  EXPECT_TRUE(compute_hierarchy(vm).direct_super.empty());
}

TEST(Hierarchy, TwoGeneraAboveOneSpecies) {
  auto vm = load_fixture("two_genera.otl");
  const auto& h = compute_hierarchy(vm);
  EXPECT_EQ(h.supers_of("C3"), (Ids{"C1", "C2"}));
  EXPECT_EQ(h.roots, (Ids{"C1", "C2"}));
}

TEST(Hierarchy, PorphyryChain) {
  auto vm = load_fixture("porphyry.otl");
  oracle::Reference ref(vm.model());
  const auto& h = compute_hierarchy(vm);
  EXPECT_EQ(h.supers_of("Human"), Ids{"Animal"});
  EXPECT_EQ(h.supers_of("Animal"), Ids{"LivingThing"});
  EXPECT_EQ(h.supers_of("LivingThing"), Ids{"Body"});
  EXPECT_EQ(h.supers_of("Body"), Ids{"Substance"});
  EXPECT_EQ(h.roots, Ids{"Substance"});
  for (const auto& c : vm.model().concepts) {
    const auto& got = h.supers_of(c.id);
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), ref.direct_supers(c.id)) << c.id;
  }
}

TEST(Hierarchy, EmptyRootSubsumesEverything) {
  auto vm = load_source("concept Top\nconcept A + a\nconcept B := Top + b\n");
  EXPECT_TRUE(subsumes(vm, "Top", "A"));
  EXPECT_EQ(compute_hierarchy(vm).roots, Ids{"Top"});
}

TEST(Coordinates, SharedSuperordinate) {
  auto vm = load_fixture("mouse.otl");
  EXPECT_EQ(coordinates(vm, "MechanicalMouse"), std::set<std::string>{"OpticalMouse"});
  EXPECT_TRUE(coordinates(vm, "PointingDevice").empty());
}

TEST(Coordinates, OnlyChild) {
  auto vm = load_source("concept R\nconcept Child := R + c\n");
  EXPECT_TRUE(coordinates(vm, "Child").empty());
}

TEST(Coordinates, DependOnCommonRoot) {
  auto separate = load_fixture("two_genera.otl");
  EXPECT_TRUE(coordinates(separate, "C1").empty());
  auto shared = load_source("concept Top\nconcept C1 := Top + a\nconcept C2 := Top + b\nconcept C3 := C1 + b\n");
  EXPECT_EQ(coordinates(shared, "C1"), std::set<std::string>{"C2"});
}

TEST(Classify, MostSpecificFirst) {
  EXPECT_EQ(classify_object(load_fixture("mouse.otl"), "thisOpticalMouse"), (Ids{"OpticalMouse", "PointingDevice"}));
  EXPECT_EQ(classify_object(load_fixture("porphyry.otl"), "socrates"),
            (Ids{"Human", "Animal", "LivingThing", "Body", "Substance"}));
}

TEST(Classify, RootObject) {
  auto vm = load_source("concept R\nobject r : R\n");
  EXPECT_EQ(classify_object(vm, "r"), Ids{"R"});
}

TEST(Classify, TiesBreakByIdentifier) {
  auto vm = load_source("concept C1 + a\nconcept C2 + b\nconcept C3 := C1 + b\nobject x : C3\n");
  EXPECT_EQ(classify_object(vm, "x"), (Ids{"C3", "C1", "C2"}));
}

TEST(ConceptsTopDown, GeneraBeforeSpecies) {
  auto vm = load_fixture("porphyry.otl");
  auto order = concepts_top_down(vm);
  auto pos = [&](const std::string& id) { return std::find(order.begin(), order.end(), id) - order.begin(); };
  for (const auto& a : vm.model().concepts) {
    for (const auto& b : vm.model().concepts) {
      if (subsumes(vm, a.id, b.id)) {
        EXPECT_LT(pos(a.id), pos(b.id));
      }
    }
  }
}
