#include <gtest/gtest.h>

#include "support.hpp"

using namespace trivext;
using namespace trivext::testing;

namespace {

InstancePtr ground_instance(std::size_t dx, std::size_t dy) {
  auto k = ground();
  return make_instance(k, k, ground_bimodule(k, dx), ground_bimodule(k, dy));
}

TheoremOptions quick() {
  TheoremOptions o;
  o.dsg.max_stage = 12;
  return o;
}

}  // namespace

TEST(Instance, RejectsWrongSides) {
  auto a = algebra_a_prime();
  auto k = ground();
  Bimodule x = left_as_bimodule(corner(a, 0, 0).Ae, k);
  Bimodule y = right_as_bimodule(corner(a, 1, 1).eA, k);
  EXPECT_NO_THROW(make_instance(a, k, x, y));
  EXPECT_THROW(make_instance(a, k, y, x), std::invalid_argument);
  EXPECT_THROW(make_instance(k, a, x, y), std::invalid_argument);
}

TEST(Instance, TrivialExtensionsOfTheExample) {
  CorollaryInstance ci = example_instance();
  EXPECT_EQ(ci.inst->xy.dim(), 6u);
  EXPECT_EQ(ci.inst->yx.dim(), 1u);
  EXPECT_EQ(ci.inst->a_tilde->total->dim(), 11u);
  EXPECT_EQ(ci.inst->b_tilde->total->dim(), 2u);
}

TEST(Hypotheses, ExampleIsEligible) {
  HypothesisReport h = check_hypotheses(*example_instance().inst);
  EXPECT_TRUE(h.eligible());
  EXPECT_EQ(h.gldim_a.detail, "gldim 2");
}

TEST(Hypotheses, InfiniteGldimFails) {
  auto b1 = bn_algebra(1);
  auto k = ground();
  auto inst = make_instance(b1, k, left_as_bimodule(regular_module(b1), k), right_as_bimodule(right_regular_module(b1), k));
  HypothesisReport h = check_hypotheses(*inst);
  EXPECT_EQ(h.gldim_a.verdict, Verdict::Fail);
  EXPECT_NE(h.gldim_a.detail.find("pd S1 infinite"), std::string::npos);
  EXPECT_EQ(h.gldim_b.verdict, Verdict::Pass);
  TheoremReport t = theorem_verify(inst, quick());
  EXPECT_EQ(t.overall(), Verdict::Fail);
  EXPECT_TRUE(t.unit.empty());
}

TEST(Hypotheses, NonProjectiveBimoduleFails) {
  auto a = algebra_a_prime();
  auto k = ground();
  RightModule s{a, 1, {}};
  Vec c = top_coefficient_functional(*a, 1);
  for (std::size_t i = 0; i < a->dim(); ++i) s.action.push_back(Matrix(a->field(), 1, 1, {c[i]}));
  auto inst = make_instance(a, k, left_as_bimodule(corner(a, 0, 0).Ae, k), right_as_bimodule(s, k));
  HypothesisReport h = check_hypotheses(*inst);
  EXPECT_EQ(h.x_projective.verdict, Verdict::Pass);
  EXPECT_EQ(h.y_projective.verdict, Verdict::Fail);
  EXPECT_EQ(h.y_projective.detail, "cover dim 2, kernel dim 1");
}

TEST(Hypotheses, SmallBoundIsUndetermined) {
  auto a = algebra_a_prime();
  auto k = ground();
  auto inst = make_instance(a, k, left_as_bimodule(corner(a, 0, 0).Ae, k), right_as_bimodule(corner(a, 1, 1).eA, k));
  HypothesisReport h = check_hypotheses(*inst, 1);
  EXPECT_EQ(h.gldim_a.verdict, Verdict::Undetermined);
}

TEST(Functors, OutputsSatisfySigmaAxiom) {
  std::mt19937_64 rng(51);
  CorollaryInstance ci = example_instance();
  const auto& inst = *ci.inst;
  for (int t = 0; t < 8; ++t) {
    PairModule p = module_to_pair(inst.a_tilde, random_module(inst.a_tilde->total, rng));
    PairModule fp = functor_f(inst, p);
    EXPECT_FALSE(check_pair(fp));
    EXPECT_EQ(fp.dim(), weight_vector(p.m)[ci.e]);
    PairModule q = module_to_pair(inst.b_tilde, random_module(inst.b_tilde->total, rng));
    EXPECT_FALSE(check_pair(functor_g(inst, q)));
    EXPECT_FALSE(check_pair(functor_g(inst, fp)));
  }
}

TEST(Functors, ZeroSigmaGoesToZeroSigma) {
  std::mt19937_64 rng(52);
  CorollaryInstance ci = example_instance();
  const auto& inst = *ci.inst;
  for (int t = 0; t < 4; ++t) {
    LeftModule m = random_module(inst.a, rng);
    PairModule fp = functor_f(inst, zero_sigma_pair(inst.a_tilde, m));
    EXPECT_TRUE(fp.sigma.is_zero());
    EXPECT_EQ(fp.dim(), tensor_module(inst.y, m).dim());
  }
}

TEST(Functors, MapsAreFunctorial) {
  std::mt19937_64 rng(53);
  CorollaryInstance ci = example_instance();
  const auto& inst = *ci.inst;
  const auto& t = inst.a_tilde->total;
  for (int k = 0; k < 4; ++k) {
    LeftModule l = random_module(t, rng), m = random_module(t, rng), n = random_module(t, rng);
    PairModule pl = module_to_pair(inst.a_tilde, l), pm = module_to_pair(inst.a_tilde, m), pn = module_to_pair(inst.a_tilde, n);
    Matrix f = random_hom(l, m, rng), g = random_hom(m, n, rng);
    Matrix ff = functor_f_map(inst, pl, pm, f), fg = functor_f_map(inst, pm, pn, g);
    PairModule fl = functor_f(inst, pl), fm = functor_f(inst, pm), fn = functor_f(inst, pn);
    EXPECT_TRUE(is_pair_morphism(fl, fm, ff));
    EXPECT_EQ(functor_f_map(inst, pl, pn, g * f), fg * ff);
    EXPECT_EQ(functor_f_map(inst, pl, pl, Matrix::identity(t->field(), l.dim)), Matrix::identity(t->field(), fl.dim()));
    Matrix gf = functor_g_map(inst, fl, fm, ff);
    EXPECT_TRUE(is_pair_morphism(functor_g(inst, fl), functor_g(inst, fm), gf));
  }
}

TEST(Lemma41, ExampleIsomorphism) {
  Lemma41Result r = lemma41_iso(*example_instance().inst);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.lhs.dim, 4u);
  EXPECT_EQ(r.rhs.dim, 4u);
  EXPECT_TRUE(lemma41_iso(*ground_instance(2, 1)).ok());
}

TEST(Theorem, ExampleInstancePasses) {
  TheoremOptions o;
  o.jobs = 2;
  TheoremReport t = theorem_verify(example_instance().inst, o);
  EXPECT_EQ(t.hypothesis_verdict(), Verdict::Pass);
  EXPECT_TRUE(t.lemma41);
  EXPECT_EQ(t.part_a, Verdict::Pass);
  EXPECT_EQ(t.part_b, Verdict::Pass);
  EXPECT_EQ(t.part_c, Verdict::Pass);
  EXPECT_EQ(t.overall(), Verdict::Pass);
  EXPECT_EQ(t.unit.size(), 6u);
  EXPECT_EQ(t.hom.size(), 36u);
  for (const auto& u : t.unit) EXPECT_TRUE(u.n) << u.label;
}

TEST(Theorem, ParallelMatchesSerial) {
  TheoremOptions serial = quick(), par = quick();
  par.jobs = 4;
  auto inst = example_instance().inst;
  TheoremReport a = theorem_verify(inst, serial), b = theorem_verify(inst, par);
  ASSERT_EQ(a.hom.size(), b.hom.size());
  for (std::size_t i = 0; i < a.hom.size(); ++i) {
    EXPECT_EQ(a.hom[i].over_a.stage_dims, b.hom[i].over_a.stage_dims);
    EXPECT_EQ(a.hom[i].verdict, b.hom[i].verdict);
  }
  for (std::size_t i = 0; i < a.unit.size(); ++i) EXPECT_EQ(a.unit[i].detail, b.unit[i].detail);
}

TEST(Theorem, GroundInstances) {
  for (auto [dx, dy] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) {
    TheoremReport t = theorem_verify(ground_instance(dx, dy), quick());
    EXPECT_EQ(t.overall(), Verdict::Pass) << dx << " " << dy;
  }
}

TEST(Theorem, HomAgreementRule) {
  StableHomTable s1, s0, u;
  s1.stabilized = true;
  s1.stage_dims = {1};
  s0.stabilized = true;
  s0.stage_dims = {0};
  u.stage_dims = {1, 4};
  EXPECT_EQ(detail::hom_agreement(s1, s1), Verdict::Pass);
  EXPECT_EQ(detail::hom_agreement(s1, s0), Verdict::Fail);
  EXPECT_EQ(detail::hom_agreement(s1, u), Verdict::Undetermined);
  EXPECT_EQ(detail::hom_agreement(u, u), Verdict::Pass);
}

TEST(Theorem, ParallelMapKeepsOrderAndRethrows) {
  auto v = parallel_map<std::size_t>(50, 6, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(v[i], i * i);
  EXPECT_THROW(parallel_map<int>(10, 3, [](std::size_t i) -> int {
                 if (i == 7) throw std::runtime_error("boom");
                 return 0;
               }),
               std::runtime_error);
}

TEST(Corollary, CornerValues) {
  auto ap = algebra_a_prime();
  struct Case {
    AlgebraPtr a;
    std::size_t e, f, n;
    const char* cls;
  };
  std::vector<Case> cases{{ap, 1, 0, 1, "Hom-finite"},   {ap, 0, 1, 1, "Hom-finite"}, {ap, 0, 0, 2, "Hom-infinite"},
                          {semisimple2(), 0, 1, 0, "finite gldim"}, {ground(), 0, 0, 1, "Hom-finite"}};
  for (const auto& c : cases) {
    CorollaryInstance ci = corollary43_instance(c.a, c.e, c.f);
    EXPECT_EQ(ci.n, c.n);
    EXPECT_EQ(ci.classification, c.cls);
    EXPECT_FALSE(ci.bn_iso_error) << *ci.bn_iso_error;
  }
}

TEST(Corollary, ZeroCornerGivesEquivalenceWithGround) {
  CorollaryInstance ci = corollary43_instance(semisimple2(), 0, 1);
  EXPECT_EQ(ci.inst->b_tilde->total->dim(), 1u);
  EXPECT_EQ(theorem_verify(ci.inst, quick()).overall(), Verdict::Pass);
}

TEST(Corollary, ArrowSplitting) {
  quiver::PathBasis big(quiver::parse_presentation(quiver::golden::algebra_a()));
  quiver::PathBasis small(quiver::parse_presentation(quiver::golden::algebra_a_prime()));
  CorollaryInstance ci = corollary43_instance(quiver::build_algebra(small), 1, 0);
  ArrowSplitting s = arrow_splitting_iso(big, "c", small, ci);
  EXPECT_FALSE(s.error) << *s.error;
  EXPECT_EQ(s.map.rows(), 11u);
}

TEST(Gorenstein, WitnessOnA) {
  GorensteinReport r = gorenstein_witness(algebra_a(), 20);
  EXPECT_EQ(r.witness, Verdict::Pass);
  EXPECT_EQ(r.left_id.status, PdStatus::ExceedsBound);
  EXPECT_EQ(r.right_id.status, PdStatus::ExceedsBound);
  EXPECT_EQ(gorenstein_witness(algebra_a(), 3).witness, Verdict::Undetermined);
}

TEST(Gorenstein, SelfInjectiveAndFiniteGldimAreNotWitnesses) {
  GorensteinReport b1 = gorenstein_witness(bn_algebra(1), 20);
  EXPECT_EQ(b1.witness, Verdict::Fail);
  EXPECT_EQ(b1.left_id.status, PdStatus::Finite);
  EXPECT_EQ(b1.left_id.value, 0u);
  EXPECT_EQ(gorenstein_witness(algebra_a_prime(), 20).witness, Verdict::Fail);
}

TEST(Chain, GroundChainPasses) {
  auto k = ground();
  auto k1 = ground_bimodule(k, 1), k2 = ground_bimodule(k, 2);
  ChainReport r = chain_verify({{k, k2}, {k, k2}}, {{k2, k1}}, quick());
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_TRUE(r.links[0].theorem);
}

TEST(Chain, BrokenLinkIsReported) {
  auto k = ground();
  auto k1 = ground_bimodule(k, 1), k2 = ground_bimodule(k, 2);
  ChainReport r = chain_verify({{k, k1}, {k, k2}}, {{k2, k1}}, quick());
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_NE(r.links[0].detail.find("broken link"), std::string::npos);
  EXPECT_FALSE(r.links[0].theorem);
  EXPECT_THROW(chain_verify({{algebra_a_prime(), regular_bimodule(algebra_a_prime())}}, {}), std::invalid_argument);
  EXPECT_THROW(chain_verify({{k, k1}}, {{k1, k1}}), std::invalid_argument);
}
