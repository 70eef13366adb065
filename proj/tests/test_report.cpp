#include "doctest.h"

#include "ordgen/algebra_expr.hpp"
#include "ordgen/errors.hpp"
#include "ordgen/report.hpp"

using namespace ordgen;

TEST_CASE("rational and decimal strings") {
  CHECK(rational_string(mpq_class(6, 4)) == "3/2");
  CHECK(rational_string(mpq_class(0)) == "0/1");
  CHECK(decimal_string(mpq_class(3, 8), 6) == "0.375");
  CHECK(decimal_string(mpq_class(1, 1000), 3) == "0.001");
  CHECK(decimal_string(mpq_class(250), 6) == "250");
  CHECK(decimal_string(mpq_class(-5, 2), 6) == "-2.5");
}

TEST_CASE("algebra expressions") {
  CHECK(parse_algebra("M(2,2)").cardinality() == 16);
  CHECK(parse_algebra(" M( 1 , 2 ; r = 2 ) ").dim() == 2);
  CHECK(parse_algebra("TW(q=2,f=1,m=2,s=1,e=1)").cardinality() == 16);
  CHECK(parse_algebra("TW(q=2,e=2)").dim() == 2);
  CHECK(parse_algebra("P(M(1,2),M(2,2))").dim() == 5);
  CHECK(parse_algebra("MO(TW(q=2,e=2),2)").dim() == 8);
  CHECK(parse_algebra("M(1,4)").base().q() == 4);
  for (const char* bad : {"", "M(2)", "M(2,6)", "TW(f=1)", "TW(q=2,x=1)", "P(M(1,2))", "M(2,2) junk", "Q(1,2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_algebra(bad), Error);
  }
  CHECK_THROWS_AS(parse_algebra("P(M(1,2),M(1,3))"), Error);
}

TEST_CASE("machine documents re-render identically") {
  const auto spec = quaternion_spec({2}, 7);
  const std::vector<Json> docs{verdict_json(spec, smallest_h(spec)),
                               density_json(quaternion_spec({2}, 1), density(quaternion_spec({2}, 1), 3, 100)),
                               quaternion_json(quaternion_example({2}, 30))};
  for (const auto& d : docs) {
    const auto text = render_machine(d);
    CHECK(render_machine(Json::parse(text)) == text);
  }
}

TEST_CASE("text renderings mention the key facts") {
  const auto spec = quaternion_spec({2}, 7);
  const auto text = render_verdict_text(verdict_json(spec, smallest_h(spec)));
  CHECK(text.find("EXACT") != std::string::npos);
  CHECK(text.find("critical primes  2") != std::string::npos);
  const auto q = render_quaternion_text(quaternion_json(quaternion_example({2}, 28)));
  CHECK(q.find("thresholds 6 / 28\n") != std::string::npos);
  const auto open = render_quaternion_text(quaternion_json(quaternion_example({2}, 30)));
  CHECK(open.find("29..30+") != std::string::npos);
  CHECK(open.find("thresholds 6 / 28\n") != std::string::npos);
  const auto d = render_density_text(density_json(spec, density(quaternion_spec({2}, 1), 2, 100)));
  CHECK(d.find("0 (certified)") != std::string::npos);
}
