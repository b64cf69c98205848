#include "doctest.h"
#include "srs/degree_set.hpp"

using namespace srs;

TEST_CASE("degree set parsing") {
  auto finite = DegreeSet::parse("{0,3}");
  CHECK(!finite.isCofinite());
  CHECK(finite.members() == std::vector<int>{0, 3});

  auto atLeastOne = DegreeSet::parse(">=1");
  CHECK(atLeastOne.isCofinite());
  CHECK(atLeastOne.members() == std::vector<int>{0});

  auto cof = DegreeSet::parse("co{1,2}");
  CHECK(cof.isCofinite());
  CHECK(cof.members() == std::vector<int>{1, 2});

  CHECK(DegreeSet::parse("all") == DegreeSet::all());
  CHECK(DegreeSet::parse(" { 0 , 3 } ") == finite);
  CHECK(DegreeSet::parse(">= 1") == atLeastOne);

  CHECK_THROWS_AS(DegreeSet::parse("{0,0}"), ParseError);
  CHECK_THROWS_AS(DegreeSet::parse("{a}"), ParseError);
  CHECK_THROWS_AS(DegreeSet::parse("co0"), ParseError);
  CHECK_THROWS_AS(DegreeSet::parse(""), ParseError);
}

TEST_CASE("membership") {
  auto s = DegreeSet::parse("{0,3}");
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.contains(3));
  CHECK(!s.contains(4));

  auto c = DegreeSet::parse("co{0,2}");
  CHECK(!c.contains(0));
  CHECK(c.contains(1));
  CHECK(!c.contains(2));
  CHECK(c.contains(3));
  CHECK(c.contains(1000));
}

TEST_CASE("top value") {
  CHECK(DegreeSet::parse("{0,3}").topValue() == 3);
  CHECK(DegreeSet::parse("co{0,2}").topValue() == 3);
  CHECK(DegreeSet::parse("all").topValue() == 0);
  CHECK_THROWS_AS(DegreeSet::parse("{}").topValue(), InvariantError);
}

TEST_CASE("cost value") {
  CHECK(DegreeSet::parse("co{7}").costValue() == 1);
  CHECK(DegreeSet::parse("co{0}").costValue() == 1);
  CHECK(DegreeSet::parse("{0,3}").costValue() == 3);
  CHECK(DegreeSet::parse("all").costValue() == 0);
}

TEST_CASE("cost never exceeds top") {
  for (const char* text : {"{0}", "{2,4}", "{1,3,5}", "co{0}", "co{2}", "co{0,4}", "all",
                           ">=3", "{7}", "co{1,2,3}"}) {
    auto s = DegreeSet::parse(text);
    CHECK(s.costValue() <= s.topValue() + (s.isCofinite() ? s.topValue() == 0 : 0));
    if (!(s.isCofinite() && s.topValue() == 0)) CHECK(s.costValue() <= s.topValue());
  }
}

TEST_CASE("min value") {
  CHECK(DegreeSet::parse("{2,4}").minValue() == 2);
  CHECK(DegreeSet::parse("co{0,1,3}").minValue() == 2);
  CHECK(DegreeSet::parse("all").minValue() == 0);
}

TEST_CASE("max structure") {
  auto ms = [](const char* s, const char* r) {
    return maxStructure(DegreeSet::parse(s), DegreeSet::parse(r));
  };
  CHECK(ms("{0}", "{1}") == MaxStructure::inf());
  CHECK(ms("{0,3}", "{3}") == MaxStructure::of(3));
  CHECK(ms("{0,3}", "{3,4}") == MaxStructure::of(1));
  CHECK(ms("{0,3}", "{1,4}") == MaxStructure::of(3));
  CHECK(ms("co{2}", "co{1}") == MaxStructure::of(1));
  CHECK(ms("all", "{1}") == MaxStructure::of(1));
}

TEST_CASE("max structure matches the residue scan for finite sets") {
  auto sets = {DegreeSet::parse("{0,3}"), DegreeSet::parse("{3}"), DegreeSet::parse("{1,4}"),
               DegreeSet::parse("{2,4}"), DegreeSet::parse("{1,3,5}"),
               DegreeSet::parse("{0,6}"), DegreeSet::parse("{2}")};
  for (const auto& sigma : sets) {
    for (const auto& rho : sets) {
      auto result = maxStructure(sigma, rho);
      if (sigma.isSingleton() && rho.isSingleton()) {
        CHECK(result.infinite);
        continue;
      }
      int tTop = std::max(sigma.topValue(), rho.topValue());
      int best = 1;
      for (int m = 1; m <= tTop + 1; ++m) {
        bool ok = true;
        for (const auto& set : {sigma, rho}) {
          for (int e : set.members()) {
            if ((e - set.members().front()) % m != 0) ok = false;
          }
        }
        if (ok) best = m;
      }
      CHECK(result == MaxStructure::of(best));
    }
  }
}

TEST_CASE("base constant fixtures") {
  auto base = [](const char* s, const char* r) {
    return ProblemPair(DegreeSet::parse(s), DegreeSet::parse(r)).baseConstant();
  };
  CHECK(base("{0}", "{1}") == 2);
  CHECK(base("{0,3}", "{3}") == 4);
  CHECK(base("{0,3}", "{1,4}") == 5);
  CHECK(base("{1,3}", "{4}") == 5);
  CHECK(base("{2,4}", "{4}") == 6);
  CHECK(base("{0,3}", "{3,4}") == 3 + 4 + 2);
}

TEST_CASE("base constant is representation independent") {
  ProblemPair viaSugar(DegreeSet::parse("all"), DegreeSet::parse(">=1"));
  ProblemPair viaComplement(DegreeSet::parse("co{}"), DegreeSet::parse("co{0}"));
  CHECK(viaSugar.baseConstant() == viaComplement.baseConstant());
  CHECK(viaSugar.mMax() == viaComplement.mMax());
}

TEST_CASE("trivial pairs are rejected by baseConstant") {
  ProblemPair allAll(DegreeSet::all(), DegreeSet::all());
  CHECK(allAll.isTrivial());
  CHECK_THROWS_AS(allAll.baseConstant(), InvariantError);
  ProblemPair rhoZero(DegreeSet::parse("{2}"), DegreeSet::parse("{0}"));
  CHECK(rhoZero.isTrivial());
  CHECK(!ProblemPair(DegreeSet::parse("{0}"), DegreeSet::parse("{0,2}")).isTrivial());
}

TEST_CASE("empty sets rejected by the pair constructor") {
  CHECK_THROWS_AS(ProblemPair(DegreeSet::parse("{}"), DegreeSet::parse("{1}")), InvariantError);
  CHECK_THROWS_AS(ProblemPair(DegreeSet::parse("{1}"), DegreeSet::parse("{}")), InvariantError);
}

TEST_CASE("pair scalars") {
  ProblemPair pc(DegreeSet::parse("{0}"), DegreeSet::parse("{1}"));
  CHECK(pc.sTop() == 0);
  CHECK(pc.rTop() == 1);
  CHECK(pc.tTop() == 1);
  CHECK(pc.sMin() == 0);
  CHECK(pc.rMin() == 1);
  CHECK(pc.residueModulus() == 2);

  ProblemPair cof(DegreeSet::parse("co{2}"), DegreeSet::parse("co{1}"));
  CHECK(cof.sTop() == 3);
  CHECK(cof.rTop() == 2);
  CHECK(cof.tCost() == 1);
  CHECK(cof.residueModulus() == 1);

  ProblemPair structured(DegreeSet::parse("{0,3}"), DegreeSet::parse("{3}"));
  CHECK(structured.residueModulus() == 3);
}
