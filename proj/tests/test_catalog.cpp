#include <algorithm>
#include <variant>

#include "doctest.h"
#include "qhcp/catalog.hpp"
#include "qhcp/lattice.hpp"

using namespace qhcp;

namespace {

std::vector<SingularityType> sample_types() {
  std::vector<SingularityType> out;
  for (int n = 1; n <= 11; ++n) out.push_back(lookup(Species::A, n));
  for (int n = 4; n <= 11; ++n) out.push_back(lookup(Species::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(lookup(Species::E, n));
  for (int n = 1; n <= 11; ++n) out.push_back(lookup(Species::K, n));
  out.push_back(lookup(Species::A1_1, 1));
  out.push_back(lookup(Species::A1_2, 1));
  for (int n = 3; n <= 10; ++n) out.push_back(lookup(Species::An_11, n));
  for (int n = 2; n <= 10; ++n) out.push_back(lookup(Species::An_12, n));
  for (int n = 2; n <= 11; ++n) out.push_back(lookup(Species::An_22, n));
  for (int n = 4; n <= 11; ++n) out.push_back(lookup(Species::Dn_1, n));
  for (int n = 4; n <= 11; ++n) out.push_back(lookup(Species::Dn_2, n));
  return out;
}

}  // namespace

TEST_CASE("lookup examples") {
  const auto k2 = lookup(Species::K, 2);
  CHECK(k2.det_R == 8);
  CHECK(k2.index == 2);
  CHECK(k2.dp_square() == Rational(-1));
  CHECK(std::get<LensLink>(k2.link) == LensLink{8, 3});

  const auto a6 = lookup(Species::An_22, 6);
  CHECK(a6.det_R == 51);
  CHECK(std::get<LensLink>(a6.link) == LensLink{51, 16});
  CHECK(a6.dp_square() == Rational(-8, 3));

  CHECK(lookup(Species::D, 6).h1.str() == "Z2xZ2");
  CHECK(lookup(Species::D, 7).h1.str() == "Z4");
  CHECK(lookup(Species::Dn_1, 6).h1.str() == "Z6xZ2");
  CHECK(lookup(Species::Dn_2, 9).h1.str() == "Z12");
  CHECK(lookup(Species::E, 8).det_R == 1);
  CHECK(lookup(Species::E, 8).group_order == 120);
  CHECK_THROWS_AS((void)lookup(Species::Dn_1, 4).dp_square(), DomainError);
  CHECK_THROWS_AS(lookup(Species::A, 0), DomainError);
  CHECK_THROWS_AS(lookup(Species::E, 9), DomainError);
}

TEST_CASE("det equals |H1| and the lens order") {
  for (const auto& t : sample_types()) {
    CAPTURE(t.token());
    CHECK(t.h1.order == t.det_R);
    if (const auto* l = std::get_if<LensLink>(&t.link)) {
      CHECK(l->p == t.det_R);
      // The resolution graph of a cyclic quotient is the linear plumbing X(p,q).
      CHECK(static_cast<int>(hj_expand(l->p, l->q).length()) == t.curve_count);
      CHECK(lattice::plumbing_for_reversed_link(t).determinant() == t.det_R);
    }
    if (t.gorenstein()) CHECK(t.dp_square() == Rational(0));
  }
}

TEST_CASE("tokens round trip through the parser") {
  for (const auto& t : sample_types()) {
    CAPTURE(t.token());
    const auto back = parse_token(t.token());
    CHECK(back == t);
    CHECK(back.det_R == t.det_R);
  }
  CHECK(parse_token("A_2(1,2)") == lookup(Species::An_12, 2));
  CHECK(parse_token("A_{10}") == lookup(Species::A, 10));
  CHECK_THROWS_AS(parse_token("Q3"), DomainError);
  CHECK_THROWS_AS(parse_token("A3(3,3)"), DomainError);
}

TEST_CASE("multisets") {
  const auto m = parse_multiset("2A3 + 3A1");
  CHECK(m.size() == 5);
  CHECK(same_multiset(parse_multiset("A1 A2"), parse_multiset("A2,A1")));
  CHECK_FALSE(same_multiset(parse_multiset("A1 A2"), parse_multiset("A2 A2")));
  CHECK(parse_multiset("K1A4").size() == 2);
  CHECK(parse_multiset("A2(1,2)E7").size() == 2);
  CHECK(parse_multiset("A2(2,2)E8A1").size() == 3);
}

TEST_CASE("display order puts higher index and larger types first") {
  CHECK(display_before(lookup(Species::K, 1), lookup(Species::A, 4)));
  CHECK(display_before(lookup(Species::E, 8), lookup(Species::D, 5)));
  CHECK(display_before(lookup(Species::A, 6), lookup(Species::A, 4)));
  CHECK_FALSE(display_before(lookup(Species::A, 4), lookup(Species::A, 4)));
}

TEST_CASE("imported classification lists") {
  CHECK(imported("K-nontrivial").entries.size() == 27);
  CHECK(imported("K-trivial").entries.size() == 31);
  CHECK(imported("log-del-pezzo-index2").entries.size() == 18);
  CHECK(imported("realizable-index1").entries.size() == 7);
  CHECK(imported("realizable-index2").entries.size() == 4);
  CHECK(imported("realizable-index3").entries.size() == 16);
  CHECK_THROWS_AS(imported("nope"), DomainError);
  for (const auto& name : {"K-nontrivial", "K-trivial"})
    for (const auto& e : imported(name).entries) {
      int curves = 0;
      for (const auto& t : e) {
        CHECK(t.gorenstein());
        curves += t.curve_count;
      }
      CHECK(curves <= 9);
    }
  const auto parsed = parse_classification_text("# comment\n[x]\nA1 A2\n2A3\n\n[y]\nK1\n");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].entries.size() == 2);
  CHECK(parsed[0].entries[1].size() == 2);
  CHECK_THROWS_AS(parse_classification_text("A1\n"), DomainError);
}

TEST_CASE("tabulated spin d-invariants") {
  for (int n = 4; n <= 11; ++n) {
    const auto d = spin_d_invariants(lookup(Species::D, n));
    REQUIRE(d.has_value());
    std::vector<Rational> expect{Rational(n - 4, 4), Rational(n, 4)};
    std::sort(expect.begin(), expect.end());
    auto got = *d;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
  CHECK(*spin_d_invariants(lookup(Species::E, 8)) == std::vector<Rational>{Rational(2)});
  CHECK(*spin_d_invariants(lookup(Species::E, 6)) == std::vector<Rational>{Rational(3, 2)});
  auto d92 = *spin_d_invariants(lookup(Species::Dn_2, 9));
  std::sort(d92.begin(), d92.end());
  CHECK(d92 == std::vector<Rational>{Rational(5, 4), Rational(9, 4)});
  CHECK_FALSE(spin_d_invariants(lookup(Species::Dn_1, 7)).has_value());
}
