#include <catch2/catch_amalgamated.hpp>

#include "qbrick/extend.hpp"
#include "qbrick/present.hpp"

using namespace qbrick;

namespace {

std::shared_ptr<const Quiver> k2() {
  return std::make_shared<Quiver>(
      Quiver::build({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {}, "k2"));
}

std::shared_ptr<const Quiver> k3() {
  return std::make_shared<Quiver>(Quiver::build(
      {"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}}, {}, "k3"));
}

std::shared_ptr<const Quiver> a2() {
  return std::make_shared<Quiver>(
      Quiver::build({"1", "2"}, {{"a", "1", "2"}}, {}, "a2"));
}

std::shared_ptr<const Quiver> a1() {
  return std::make_shared<Quiver>(Quiver::build({"1"}, {}, {}, "a1"));
}

RepModule r_lambda(std::shared_ptr<const Quiver> q, FieldSpec f, int64_t lambda) {
  RepModule m = zero_filled_module(q, f, DimVector{{1, 1}});
  m.mats[0].at(0, 0) = 1;
  m.mats[1].at(0, 0) = fp::reduce_int(lambda, f.p);
  return m;
}

Semibrick make_semibrick(const std::vector<RepModule>& members) {
  SemibrickCheck chk = check_semibrick(members);
  REQUIRE(chk.ok);
  return chk.semibrick;
}

}  // namespace

TEST_CASE("extend: Kronecker regular seed succeeds at l = 1") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  ExtendResult res = extend_semibrick(s, 0, 6, 40, 7);
  REQUIRE(res.found);
  CHECK(res.cert.l == 1);
  CHECK(res.cert.found.dim == DimVector{{1, 1}});
  CHECK(res.cert.end_dim == 1);
  CHECK(res.cert.hom_to_members == std::vector<int64_t>{0});
  CHECK(res.cert.hom_from_members == std::vector<int64_t>{0});
  CHECK_FALSE(res.member_exceptional);
  CHECK(res.member_class == SchurVerdict::tame);
  CHECK(verify_certificate(s, res.cert, 0));
}

TEST_CASE("extend: A1 is exhausted (the only brick is S1 itself)") {
  FieldSpec f;
  auto q = a1();
  Semibrick s = make_semibrick({simple_module(q, f, 0)});
  ExtendResult res = extend_semibrick(s, 0, 3, 25, 7);
  CHECK_FALSE(res.found);
  REQUIRE(res.stats.size() == 3);
  // at l = 1 every sample is S1 itself: a brick, never orthogonal
  CHECK(res.stats[0].bricks == 25);
  CHECK(res.stats[0].orthogonality_fail == 25);
  // at l >= 2, K^l is never a brick
  CHECK(res.stats[1].bricks == 0);
}

TEST_CASE("extend: wild 3-Kronecker brick succeeds at l = 1") {
  FieldSpec f;
  auto q = k3();
  RepModule r = zero_filled_module(q, f, DimVector{{1, 1}});
  for (int a = 0; a < 3; ++a) r.mats[a].at(0, 0) = 1;
  REQUIRE(is_brick(r));
  REQUIRE(ext1_dim(r, r) == 2);  // non-exceptional, wild root
  Semibrick s = make_semibrick({r});
  ExtendResult res = extend_semibrick(s, 0, 6, 40, 11);
  REQUIRE(res.found);
  CHECK(res.cert.l == 1);
  CHECK(res.member_class == SchurVerdict::wild);
  CHECK(verify_certificate(s, res.cert, 0));
}

TEST_CASE("extend: exceptional member warns but still searches") {
  FieldSpec f;
  auto q = k2();
  RepModule p1 = projective_module(q, f, 0);  // dim (1,2), exceptional
  Semibrick s = make_semibrick({p1});
  ExtendResult res = extend_semibrick(s, 0, 2, 15, 7);
  CHECK(res.member_exceptional);
  CHECK(res.member_class == SchurVerdict::real);
  // the unique brick of dimension (1,2) is P1 itself; no extension here
  CHECK_FALSE(res.found);
}

TEST_CASE("extend: input validation") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  CHECK_THROWS_WITH(extend_semibrick(s, 5, 6, 40, 7),
                    Catch::Matchers::ContainsSubstring("member index"));
  CHECK_THROWS_AS(extend_semibrick(s, 0, 0, 40, 7), error);
  Semibrick bogus;
  bogus.members = {r_lambda(q, f, 1), r_lambda(q, f, 1)};  // hom = 1, not a semibrick
  CHECK_THROWS_WITH(extend_semibrick(bogus, 0, 6, 40, 7),
                    Catch::Matchers::ContainsSubstring("not a semibrick"));
}

TEST_CASE("extend is deterministic in the seed") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  ExtendResult a = extend_semibrick(s, 0, 6, 40, 99);
  ExtendResult b = extend_semibrick(s, 0, 6, 40, 99);
  REQUIRE(a.found);
  CHECK(a.cert.found == b.cert.found);
  CHECK(a.cert.l == b.cert.l);
  CHECK(a.cert.trial == b.cert.trial);
  ExtendResult c = extend_semibrick(s, 0, 6, 40, 100);
  REQUIRE(c.found);
  CHECK_FALSE(a.cert.found == c.cert.found);  // different seed, different witness
}

TEST_CASE("grow: ten pairwise-orthogonal Kronecker regulars") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  GrowResult res = grow_semibrick(s, 0, 10, 6, 40, 13);
  REQUIRE(res.reached_target);
  REQUIRE(res.semibrick.size() == 10);
  CHECK(res.steps.size() == 9);
  for (const RepModule& m : res.semibrick.members)
    CHECK(m.dim == DimVector{{1, 1}});
  // monotone growth: the input is a prefix and every prefix verifies
  CHECK(res.semibrick.members[0] == s.members[0]);
  for (size_t len = 1; len <= res.semibrick.size(); ++len) {
    std::vector<RepModule> prefix(res.semibrick.members.begin(),
                                  res.semibrick.members.begin() + len);
    CHECK(check_semibrick(prefix).ok);
  }
}

TEST_CASE("grow: A2 projective seed stalls at size one") {
  FieldSpec f;
  auto q = a2();
  RepModule p1 = projective_module(q, f, 0);
  Semibrick s = make_semibrick({p1});
  GrowResult res = grow_semibrick(s, 0, 3, 3, 20, 13);
  CHECK_FALSE(res.reached_target);
  CHECK(res.semibrick.size() == 1);
  CHECK(res.steps.empty());
}

TEST_CASE("grow: target at current size returns input unchanged") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  GrowResult res = grow_semibrick(s, 0, 1, 6, 40, 13);
  CHECK(res.reached_target);
  CHECK(res.semibrick.size() == 1);
  CHECK(res.semibrick.members[0] == s.members[0]);
  CHECK(res.steps.empty());
}

TEST_CASE("probe: A2 simples are maximal and all-open") {
  FieldSpec f;
  auto q = a2();
  Semibrick s = make_semibrick({simple_module(q, f, 0), simple_module(q, f, 1)});
  std::vector<DimVector> pool = {DimVector{{1, 0}}, DimVector{{0, 1}},
                                 DimVector{{1, 1}}};
  ProbeReport rep = maximality_probe(s, pool, 200, 17);
  CHECK_FALSE(rep.extension_found);
  CHECK(rep.member_open == std::vector<bool>{true, true});
  CHECK_FALSE(rep.violation_suspected);
  CHECK(rep.verdict ==
        "maximal within budget, consistent with all-members-open");
}

TEST_CASE("probe: Kronecker regular is extendable, hence not maximal") {
  FieldSpec f;
  auto q = k2();
  Semibrick s = make_semibrick({r_lambda(q, f, 1)});
  ProbeReport rep = maximality_probe(s, {DimVector{{1, 1}}}, 200, 17);
  CHECK(rep.extension_found);
  REQUIRE(rep.pool.size() == 1);
  CHECK(rep.pool[0].found);
  CHECK_FALSE(rep.pool[0].hit_trials.empty());
  CHECK(is_brick(rep.pool[0].witness));
  CHECK(rep.verdict == "not maximal: extension found");
  CHECK_FALSE(rep.violation_suspected);
}

TEST_CASE("probe: A1 singleton is maximal") {
  FieldSpec f;
  auto q = a1();
  Semibrick s = make_semibrick({simple_module(q, f, 0)});
  std::vector<DimVector> pool = {DimVector{{1}}, DimVector{{2}}, DimVector{{3}}};
  ProbeReport rep = maximality_probe(s, pool, 200, 17);
  CHECK_FALSE(rep.extension_found);
  CHECK(rep.member_open == std::vector<bool>{true});
  CHECK_FALSE(rep.violation_suspected);

  CHECK_THROWS_AS(maximality_probe(s, {}, 200, 17), error);
}
