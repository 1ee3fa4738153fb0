#include <catch2/catch_amalgamated.hpp>

#include "qbrick/hom.hpp"
#include "qbrick/io.hpp"
#include "qbrick/module.hpp"
#include "qbrick/sample.hpp"

using namespace qbrick;

namespace {

std::shared_ptr<const Quiver> k2() {
  return std::make_shared<Quiver>(
      Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {}, "k2"));
}

std::shared_ptr<const Quiver> loop_sq() {
  return std::make_shared<Quiver>(Quiver::parse("arrow a: 1 -> 1\nrelation: a a\n", "loop"));
}

// R_lambda on the 2-Kronecker quiver: phi_a = 1, phi_b = lambda.
RepModule r_lambda(std::shared_ptr<const Quiver> q, FieldSpec f, int64_t lambda) {
  RepModule m = zero_filled_module(q, f, DimVector{{1, 1}});
  m.mats[0].at(0, 0) = 1;
  m.mats[1].at(0, 0) = fp::reduce_int(lambda, f.p);
  return m;
}

}  // namespace

TEST_CASE("random_module: shapes, determinism, scope") {
  auto q = k2();
  FieldSpec f;
  RepModule m = random_module(q, f, DimVector{{1, 1}}, 42);
  CHECK(m.mats.size() == 2);
  CHECK(m.mats[0].rows() == 1);
  CHECK(m.mats[0].cols() == 1);
  RepModule m2 = random_module(q, f, DimVector{{1, 1}}, 42);
  CHECK(m == m2);
  CHECK_FALSE(m == random_module(q, f, DimVector{{1, 1}}, 43));
  m.validate();

  CHECK_THROWS_WITH(random_module(loop_sq(), f, DimVector{{2}}, 1),
                    Catch::Matchers::ContainsSubstring("path algebra"));
}

TEST_CASE("check_relations: squared loop arrow") {
  auto q = loop_sq();
  FieldSpec f;
  RepModule nil = zero_filled_module(q, f, DimVector{{2}});
  nil.mats[0] = Mat::from_rows({{0, 1}, {0, 0}}, f.p);
  CHECK(check_relations(nil));

  RepModule one = zero_filled_module(q, f, DimVector{{1}});
  one.mats[0].at(0, 0) = 1;
  CHECK_FALSE(check_relations(one));

  // path algebra modules vacuously satisfy the empty relation set
  CHECK(check_relations(random_module(k2(), f, DimVector{{2, 3}}, 5)));
}

TEST_CASE("check_relations: commutativity relation with coefficients") {
  auto q = std::make_shared<Quiver>(Quiver::parse(
      "vertices: 1 2 3\n"
      "arrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\narrow d: 2 -> 3\n"
      "relation: a b - c d\n"));
  FieldSpec f(101);
  RepModule m = zero_filled_module(q, f, DimVector{{1, 1, 1}});
  // phi_b phi_a = phi_d phi_c: 2*3 = 6 = 1*6
  m.mats[0].at(0, 0) = 2;
  m.mats[1].at(0, 0) = 3;
  m.mats[2].at(0, 0) = 1;
  m.mats[3].at(0, 0) = 6;
  CHECK(check_relations(m));
  m.mats[3].at(0, 0) = 7;
  CHECK_FALSE(check_relations(m));
}

TEST_CASE("direct_sum: dimensions and block structure") {
  auto q = k2();
  FieldSpec f;
  RepModule r1 = r_lambda(q, f, 1), r2 = r_lambda(q, f, 2);
  RepModule s = direct_sum(r1, r2);
  CHECK(s.dim == DimVector{{2, 2}});
  CHECK(s.mats[0].at(0, 0) == 1);
  CHECK(s.mats[0].at(1, 1) == 1);
  CHECK(s.mats[1].at(1, 1) == 2);
  CHECK(s.mats[1].at(0, 1) == 0);

  for (int trial = 0; trial < 10; ++trial) {
    auto rq = random_acyclic_quiver(rng::derive(600, trial));
    DimVector d1 = random_dim_vector(*rq, rng::derive(601, trial));
    DimVector d2 = random_dim_vector(*rq, rng::derive(602, trial));
    RepModule a = random_module(rq, f, d1, rng::derive(603, trial));
    RepModule b = random_module(rq, f, d2, rng::derive(604, trial));
    CHECK(direct_sum(a, b).dim == d1 + d2);
  }

  FieldSpec f5(5);
  CHECK_THROWS_AS(direct_sum(r1, r_lambda(q, f5, 1)), error);
}

TEST_CASE("random_basis_change: orbit invariance of homological data") {
  FieldSpec f;
  for (int trial = 0; trial < 100; ++trial) {
    auto q = random_acyclic_quiver(rng::derive(700, trial), 4);
    DimVector d = random_dim_vector(*q, rng::derive(701, trial), 3);
    DimVector e = random_dim_vector(*q, rng::derive(702, trial), 3);
    RepModule m = random_module(q, f, d, rng::derive(703, trial));
    RepModule n = random_module(q, f, e, rng::derive(704, trial));
    RepModule mg = random_basis_change(m, rng::derive(705, trial));
    RepModule ng = random_basis_change(n, rng::derive(706, trial));
    CHECK(hom_dim(mg, n) == hom_dim(m, n));
    CHECK(hom_dim(m, ng) == hom_dim(m, n));
    CHECK(ext1_dim(mg, ng) == ext1_dim(m, n));
    CHECK(is_brick(mg) == is_brick(m));
  }
  // determinism
  auto q = k2();
  RepModule m = random_module(q, f, DimVector{{2, 2}}, 9);
  CHECK(random_basis_change(m, 4) == random_basis_change(m, 4));
}

TEST_CASE("module json round trip is exact") {
  FieldSpec f;
  for (int trial = 0; trial < 25; ++trial) {
    auto q = random_acyclic_quiver(rng::derive(800, trial));
    DimVector d = random_dim_vector(*q, rng::derive(801, trial));
    RepModule m = random_module(q, f, d, rng::derive(802, trial));
    json j = module_to_json(m);
    RepModule back = module_from_json(j, m.quiver);
    CHECK(back == m);
    // byte-level: dumping twice gives identical text
    CHECK(j.dump() == module_to_json(back).dump());
  }
}

TEST_CASE("module json: inline quiver and validation errors") {
  FieldSpec f(7);
  auto q = std::make_shared<Quiver>(
      Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {}, ""));
  RepModule m = random_module(q, f, DimVector{{2, 1}}, 3);
  json j = module_to_json(m);
  CHECK(j.at("quiver").is_object());  // unnamed quiver inlined
  RepModule back = module_from_json(j);
  CHECK(back == m);

  json bad = j;
  bad["mats"]["a"] = json::array({json::array({1, 2, 3})});
  CHECK_THROWS_AS(module_from_json(bad), error);
  json missing = j;
  missing["mats"].erase("b");
  CHECK_THROWS_WITH(module_from_json(missing),
                    Catch::Matchers::ContainsSubstring("'b'"));

  // a module violating relations is rejected on load
  auto lq = loop_sq();
  RepModule one = zero_filled_module(lq, f, DimVector{{1}});
  one.mats[0].at(0, 0) = 1;
  json oj = module_to_json(one);
  CHECK_THROWS_WITH(module_from_json(oj, lq),
                    Catch::Matchers::ContainsSubstring("relations"));
}

TEST_CASE("semibrick files: single module or members list") {
  auto q = k2();
  FieldSpec f;
  RepModule r1 = r_lambda(q, f, 1), r2 = r_lambda(q, f, 2);
  json single = module_to_json(r1);
  auto ms = members_from_json(single, q);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0] == r1);
  json multi = members_to_json({r1, r2});
  auto ms2 = members_from_json(multi, q);
  REQUIRE(ms2.size() == 2);
  CHECK(ms2[1] == r2);
}
