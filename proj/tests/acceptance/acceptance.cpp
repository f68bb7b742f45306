#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "../support.hpp"
#include "trivext/cli/suites.hpp"

using namespace trivext;
using namespace trivext::testing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct IsoTally {
  std::size_t total = 0;
  std::size_t undetermined = 0;
  bool record(const IsoResult& r) {
    ++total;
    if (r.kind == IsoKind::Undetermined) ++undetermined;
    return r.kind != IsoKind::NotIsomorphic;
  }
};

Outcome dim_a() {
  auto a = algebra_a();
  return {a->dim() == 11, "dim A = " + std::to_string(a->dim())};
}

Outcome corners() {
  auto ap = algebra_a_prime();
  quiver::PathBasis pb(quiver::parse_presentation(quiver::golden::algebra_a_prime()));
  std::size_t d = ap->dim(), ae1 = corner(ap, 0, 0).Ae.dim, e2a = corner(ap, 1, 1).eA.dim,
              e2ae1 = corner(ap, 1, 0).eAf.dim();
  bool ok = d == 5 && pb.dim() == 5 && ae1 == 3 && e2a == 2 && e2ae1 == 1;
  return {ok, "dims " + std::to_string(d) + ", " + std::to_string(ae1) + ", " + std::to_string(e2a) + ", " +
                  std::to_string(e2ae1)};
}

Outcome splitting() {
  quiver::PathBasis big(quiver::parse_presentation(quiver::golden::algebra_a()));
  quiver::PathBasis small(quiver::parse_presentation(quiver::golden::algebra_a_prime()));
  CorollaryInstance ci = example_instance();
  ArrowSplitting s = arrow_splitting_iso(big, "c", small, ci);
  bool ok = !s.error && is_invertible(s.map);
  return {ok, s.error.value_or("bijective and multiplicative on all " + std::to_string(big.dim() * big.dim()) +
                               " basis pairs")};
}

Outcome gldim_a_prime() {
  GlobalDimResult g = gldim(algebra_a_prime(), ProjDimOptions{});
  bool ok = g.status == PdStatus::Finite && g.value == 2 && g.simples.size() == 2;
  std::string pds;
  for (const auto& s : g.simples) pds += (pds.empty() ? "" : ", ") + std::to_string(s.value);
  return {ok, "gldim " + std::to_string(g.value) + ", pd of simples " + pds};
}

Outcome sequences() {
  std::mt19937_64 rng(0);
  std::size_t pairs = 0, ladders = 0, bad = 0;
  auto exts = sample_extensions();
  for (const auto& ext : exts)
    for (int k = 0; k < 15; ++k) {
      LeftModule m = random_module(ext->total, rng), n = random_module(ext->total, rng);
      PairModule p = module_to_pair(ext, m), q = module_to_pair(ext, n);
      Lemma31Sequence sp = lemma31_sequence(p), sq = lemma31_sequence(q);
      pairs += 2;
      if (!check_sequence(sp).ok() || !check_sequence(sq).ok()) ++bad;
      for (int t = 0; t < 2; ++t, ++ladders)
        if (!check_ladder(sp, sq, random_hom(m, n, rng))) ++bad;
    }
  return {bad == 0 && pairs >= 50 && exts.size() >= 3,
          std::to_string(pairs) + " pairs over " + std::to_string(exts.size()) + " extensions, " +
              std::to_string(ladders) + " ladders, " + std::to_string(bad) + " failures"};
}

Outcome syzygy_relations() {
  auto k = ground();
  std::vector<std::pair<std::string, InstancePtr>> cases{
      {"degenerate", make_instance(k, k, ground_bimodule(k, 1), ground_bimodule(k, 1))},
      {"B_mn/B_nm (m=1, n=2)", make_instance(k, k, ground_bimodule(k, 1), ground_bimodule(k, 2))},
      {"corner instance", example_instance().inst}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, inst] : cases) {
    TheoremReport t = theorem_verify(inst);
    bool good = t.hypothesis_verdict() == Verdict::Pass && t.part_a == Verdict::Pass && t.part_b == Verdict::Pass &&
                !t.unit.empty() && !t.counit.empty();
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + name + " " + std::to_string(t.unit.size()) + "+" +
              std::to_string(t.counit.size()) + (good ? " ok" : " failed");
  }
  return {ok, detail};
}

Outcome trichotomy() {
  cli::SuiteOptions opt;
  bool ok = true;
  std::string detail;
  for (std::size_t n = 0; n <= 3; ++n) {
    cli::BnRow r = cli::bn_row(n, opt);
    ok = ok && r.verdict == Verdict::Pass;
    if (n >= 2) ok = ok && r.table.stage_dims.size() >= 3;
    detail += (detail.empty() ? "" : "; ") + std::string("B_") + std::to_string(n) + " " + r.observed;
    if (n == 1 && r.table.value()) detail += " dim " + std::to_string(*r.table.value());
    if (n >= 2) detail += " trace " + r.table.trace();
  }
  return {ok, detail};
}

Outcome hom_preservation() {
  CorollaryInstance ci = example_instance();
  TheoremReport t = theorem_verify(ci.inst);
  std::size_t compared = 0, bad = 0;
  for (const auto& h : t.hom) {
    if (h.over_a.stabilized && h.over_b.stabilized) {
      ++compared;
      if (h.over_a.value() != h.over_b.value()) ++bad;
    }
  }
  bool ok = ci.inst->a_tilde->total->dim() == 11 && !ci.bn_iso_error && ci.n == 1 && t.part_c == Verdict::Pass &&
            compared > 0 && bad == 0;
  return {ok, std::to_string(compared) + " stabilized pairs compared over A~ and B_1, " + std::to_string(bad) +
                  " mismatches"};
}

Outcome gorenstein() {
  GorensteinReport g = gorenstein_witness(algebra_a(), 20);
  bool ok = g.witness == Verdict::Pass && g.injective_pd.status == PdStatus::ExceedsBound && g.injective_pd.certificate;
  return {ok, g.note};
}

Outcome properties() {
  std::mt19937_64 rng(0);
  IsoTally tally;
  std::size_t failures = 0;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) detail = "first failure: " + what;
  };
  auto exts = sample_extensions();

  for (std::size_t i = 0; i < 100; ++i) {
    const auto& ext = exts[i % exts.size()];
    PairModule p = module_to_pair(ext, random_module(ext->total, rng));
    PairModule s = sign_twist(p);
    if (check_pair(s) || sign_twist(s).sigma != p.sigma || sign_twist(s).m.action != p.m.action) fail("S^2 = Id");
  }

  auto k = ground();
  std::vector<InstancePtr> insts{example_instance().inst,
                                 make_instance(k, k, ground_bimodule(k, 1), ground_bimodule(k, 2)),
                                 make_instance(k, k, ground_bimodule(k, 2), ground_bimodule(k, 1))};
  std::size_t functor_outputs = 0;
  for (const auto& inst : insts)
    for (int t = 0; t < 6; ++t) {
      PairModule p = module_to_pair(inst->a_tilde, random_module(inst->a_tilde->total, rng));
      PairModule q = module_to_pair(inst->b_tilde, random_module(inst->b_tilde->total, rng));
      for (const auto& out : {functor_f(*inst, p), functor_g(*inst, q), functor_g(*inst, functor_f(*inst, p)),
                              functor_f(*inst, functor_g(*inst, q))}) {
        ++functor_outputs;
        if (check_pair(out)) fail("sigma axiom on a functor output");
      }
    }

  std::vector<AlgebraPtr> algs{algebra_a(), algebra_a_prime(), bn_algebra(1), bn_algebra(2)};
  for (const auto& ext : exts) algs.push_back(ext->total);
  for (const auto& a : algs)
    for (int t = 0; t < 4; ++t) {
      LeftModule m = random_module(a, rng), n = random_module(a, rng);
      LeftModule om = syzygy(m), on = syzygy(n);
      if (!tally.record(module_iso_test(syzygy(direct_sum(m, n)), direct_sum(om, on)))) fail("Omega additivity");
      if (!tally.record(module_iso_test(syzygy(random_base_change(m, rng)), om))) fail("Omega base change");
      if (!tally.record(module_iso_test(random_base_change(m, rng), m))) fail("base change invariance");

      BoundedComplex c = resolution_complex(m, 3);
      if (c.check()) fail("d^2 = 0");
      ChainMap id = ChainMap::from_function(c, c, [&](int d) { return Matrix::identity(a->field(), c.dim(d)); });
      Cone cone = mapping_cone(id);
      if (cone.cone.check() || !is_acyclic(cone.cone)) fail("cone of the identity is acyclic");
      if (shift(c, 1).check()) fail("d^2 = 0 after shift");

      std::vector<std::size_t> verts;
      for (std::size_t v = 0, cnt = 1 + rng() % 2; v < cnt; ++v) verts.push_back(rng() % a->num_idempotents());
      LeftModule p = projective_module(a, verts);
      DsgOptions opt;
      opt.max_stage = 6;
      for (const auto& tab : {dsg_hom(p, n, opt), dsg_hom(n, p, opt), dsg_hom(p, p, opt)})
        if (!tab.stabilized || tab.value() != std::optional<std::size_t>(0)) fail("dsg_hom of a projective is 0");
    }

  double rate = tally.total ? static_cast<double>(tally.undetermined) / static_cast<double>(tally.total) : 0.0;
  if (rate >= 0.01) fail("undetermined rate");
  if (detail.empty())
    detail = "100 twists, " + std::to_string(functor_outputs) + " functor outputs, " + std::to_string(tally.total) +
             " iso tests, undetermined rate " + std::to_string(rate);
  return {failures == 0, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dimension of the 11-dimensional example", dim_a},
      {"dimensions of A' and its corners", corners},
      {"arrow splitting isomorphism", splitting},
      {"global dimension of A' is 2", gldim_a_prime},
      {"pair sequence exactness and ladders", sequences},
      {"unit and counit syzygy relations", syzygy_relations},
      {"B_n trichotomy for n = 0..3", trichotomy},
      {"stable Hom preservation for the corner instance", hom_preservation},
      {"non-Gorenstein witness pd I1 > 20", gorenstein},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
