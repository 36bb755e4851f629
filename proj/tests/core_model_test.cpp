#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace otl;
using otl::test::load_fixture;
using otl::test::load_source;
using otl::test::parse_ok;

TEST(Decimal, NormalizesSpelling) {
  EXPECT_EQ(Decimal::parse("250000.00")->str(), "250000");
  EXPECT_EQ(Decimal::parse("007.50")->str(), "7.5");
  EXPECT_EQ(Decimal::parse("-0.0")->str(), "0");
  EXPECT_EQ(Decimal::parse("-3.25")->str(), "-3.25");
  EXPECT_EQ(*Decimal::parse("1.10"), *Decimal::parse("1.1"));
}

TEST(Decimal, RejectsMalformed) {
  for (const char* bad : {"", "-", ".5", "5.", "1e3", "+1", "1.2.3", "0x10", " 1"}) {
    EXPECT_FALSE(Decimal::parse(bad).has_value()) << bad;
  }
}

TEST(Value, FormatQuotesAndEscapes) {
  EXPECT_EQ(format_value(Value{std::string("a\"b\\c\n")}), "\"a\\\"b\\\\c\\n\"");
  EXPECT_EQ(format_value(Value{true}), "true");
  EXPECT_EQ(format_value(Value{*Decimal::parse("2.50")}), "2.5");
}

TEST(Intension, EmptyRoot) {
  Model m = parse_ok("concept Root\n");
  EXPECT_TRUE(intension(m, "Root").empty());
}

TEST(Intension, GenusPlusDifferentiae) {
  Model m = parse_ok(test::read_file(test::data_path("two_genera.otl")));
  EXPECT_EQ(intension(m, "C3"), (std::set<std::string>{"a", "b"}));
}

TEST(Intension, InheritsThroughChain) {
  Model m = parse_ok(test::read_file(test::data_path("porphyry.otl")));
  auto human = intension(m, "Human");
  EXPECT_TRUE(human.count("mortal"));
  EXPECT_TRUE(human.count("rational"));
  EXPECT_EQ(human, (std::set<std::string>{"corporeal", "animate", "sensitive", "mortal", "rational"}));
}

TEST(Intension, UnknownAndCyclic) {
  Model m = parse_ok("concept A := B + x\nconcept B := A + y\n");
  try {
    intension(m, "A");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "E_GENUS_CYCLE");
  }
  try {
    intension(m, "Nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "E_NOT_FOUND");
  }
}

TEST(Intension, MatchesNaiveWalkOnFixtures) {
  for (const char* name : {"mouse.otl", "porphyry.otl", "universe.otl", "two_genera.otl"}) {
    Model m = parse_ok(test::read_file(test::data_path(name)));
    oracle::Reference ref(m);
    auto vm = test::validate_ok(m);
    for (const auto& c : m.concepts) EXPECT_EQ(intension(vm, c.id), ref.intension(c.id)) << name << " " << c.id;
  }
}

TEST(Extension, EmptyForUninstantiatedLeaf) {
  auto vm = load_fixture("mouse.otl");
  EXPECT_TRUE(extension(vm, "MechanicalMouse").empty());
  EXPECT_EQ(extension(vm, "PointingDevice"), (std::set<std::string>{"thisOpticalMouse"}));
}

TEST(Resolve, FindsConcept) {
  auto vm = load_fixture("mouse.otl");
  auto ref = resolve(vm.model(), "OpticalMouse");
  EXPECT_EQ(ref.kind, EntityKind::concept_entity);
  EXPECT_EQ(ref.id, "OpticalMouse");
  EXPECT_EQ(resolve(vm.model(), "optical").kind, EntityKind::difference);
  EXPECT_EQ(resolve(vm.model(), "thisOpticalMouse").kind, EntityKind::object);
}

TEST(Resolve, EmptyNameNotFound) {
  auto vm = load_fixture("mouse.otl");
  try {
    resolve(vm.model(), "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "E_NOT_FOUND");
  }
}

TEST(Resolve, AmbiguityListsCandidates) {
  auto vm = load_source("concept Red\nattribute colour : text on Red\nclass Red := { x | colour = \"red\" }\n");
  try {
    resolve(vm.model(), "Red");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "E_AMBIGUOUS");
    std::string msg = e.what();
    EXPECT_NE(msg.find("concept Red"), std::string::npos) << msg;
    EXPECT_NE(msg.find("class Red"), std::string::npos) << msg;
  }
}

TEST(RelationTypes, Taxonomy) {
  EXPECT_TRUE(relation_is_a(RelationType::causal, RelationType::sequential));
  EXPECT_TRUE(relation_is_a(RelationType::causal, RelationType::associative));
  EXPECT_TRUE(relation_is_a(RelationType::temporal, RelationType::associative));
  EXPECT_FALSE(relation_is_a(RelationType::temporal, RelationType::sequential));
  EXPECT_FALSE(relation_is_a(RelationType::associative, RelationType::causal));
  EXPECT_EQ(relation_type_from_string("cause_effect"), RelationType::causal);
}

TEST(StructuralEquality, IgnoresOrderAndSpans) {
  Model a = parse_ok("concept A + x\nconcept B + y\n");
  Model b = parse_ok("\n\nconcept B + y\nconcept A + x\n");
  EXPECT_TRUE(structurally_equal(a, b));
  Model c = parse_ok("concept A + x\nconcept B + z\n");
  EXPECT_FALSE(structurally_equal(a, c));
}
