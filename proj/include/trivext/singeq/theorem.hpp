#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "trivext/homengine/stable.hpp"
#include "trivext/singeq/instance.hpp"

namespace trivext {

/// Runs fn(0..n-1) on up to `jobs` threads; results keep their index.
template <class R>
std::vector<R> parallel_map(std::size_t n, std::size_t jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> out(n);
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i; (i = next++) < n;) out[i] = fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<R> res;
  res.reserve(n);
  for (auto& o : out) res.push_back(std::move(*o));
  return res;
}

struct TestModule {
  std::string label;
  LeftModule module;
};

/// Simples, their first two syzygies and the radical of the regular module; zero modules dropped.
inline std::vector<TestModule> default_test_modules(const AlgebraPtr& t) {
  std::vector<TestModule> out;
  for (std::size_t i = 0; i < t->num_idempotents(); ++i) {
    std::string s = "S" + std::to_string(i + 1);
    LeftModule m = simple_module(t, i);
    out.push_back({s, m});
    for (std::size_t k = 1; k <= 2; ++k) {
      m = projective_cover(m).syzygy;
      if (m.dim == 0) break;
      out.push_back({"Omega" + std::to_string(k) + " " + s, m});
    }
  }
  LeftModule reg = regular_module(t);
  LeftModule rad = submodule(reg, t->radical());
  if (rad.dim > 0) out.push_back({"rad T", rad});
  return out;
}

struct TheoremOptions {
  std::size_t pd_bound = 20;
  DsgOptions dsg;
  IsoOptions iso;
  std::size_t jobs = 1;
  bool check_hom = true;
  std::vector<TestModule> a_modules;  // defaults when empty
  std::vector<TestModule> b_modules;
};

/// strip(Omega^n p) ~ strip(Omega^{n-1} S(G F p)) for some 1 <= n <= pd_A(res p) + 2.
struct UnitCheck {
  std::string label;
  std::size_t dim = 0;
  std::optional<std::size_t> pd_base;
  std::optional<std::size_t> n;
  Verdict verdict = Verdict::Undetermined;
  std::string detail;
};

struct HomCheck {
  std::string source;
  std::string target;
  StableHomTable over_a;
  StableHomTable over_b;
  Verdict verdict = Verdict::Undetermined;
};

struct TheoremReport {
  HypothesisReport hypotheses;
  bool lemma41 = false;
  std::vector<UnitCheck> unit;
  std::vector<UnitCheck> counit;
  std::vector<HomCheck> hom;
  Verdict part_a = Verdict::Undetermined;
  Verdict part_b = Verdict::Undetermined;
  Verdict part_c = Verdict::Undetermined;
  std::string note;

  Verdict hypothesis_verdict() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : hypotheses.all()) v = combine(v, c.verdict);
    return v;
  }
  Verdict overall() const {
    Verdict h = hypothesis_verdict();
    if (h != Verdict::Pass) return h;
    Verdict v = lemma41 ? Verdict::Pass : Verdict::Fail;
    return combine(combine(v, part_a), combine(part_b, part_c));
  }
};

namespace detail {

/// round_trip maps a pair over `ext` to S(G F p) (or S(F G q)).
inline UnitCheck unit_relation(const TrivialExtensionPtr& ext, const TestModule& tm,
                               const std::function<PairModule(const PairModule&)>& round_trip,
                               const TheoremOptions& opt) {
  UnitCheck c{tm.label, tm.module.dim, std::nullopt, std::nullopt, Verdict::Undetermined, ""};
  PairModule p = module_to_pair(ext, tm.module);
  ProjDimOptions po;
  po.bound = opt.pd_bound;
  po.search_certificate = false;
  po.iso = opt.iso;
  ProjDimResult pd = projdim_bounded(p.m, po);
  if (pd.status != PdStatus::Finite) {
    c.detail = "pd over the base not determined within bound";
    return c;
  }
  c.pd_base = pd.value;
  LeftModule q = pair_to_module(sign_twist(round_trip(p)));
  LeftModule lhs = tm.module, rhs = q;
  bool undecided = false;
  for (std::size_t n = 1; n <= pd.value + 2; ++n) {
    lhs = projective_cover(lhs).syzygy;
    if (n >= 2) rhs = projective_cover(rhs).syzygy;
    LeftModule a = strip_projectives(lhs).core, b = strip_projectives(rhs).core;
    IsoResult r = module_iso_test(a, b, opt.iso);
    if (r.kind == IsoKind::Isomorphic) {
      c.n = n;
      c.verdict = Verdict::Pass;
      c.detail = "n = " + std::to_string(n) + ", core dim " + std::to_string(a.dim);
      return c;
    }
    if (r.kind == IsoKind::Undetermined) undecided = true;
  }
  c.verdict = undecided ? Verdict::Undetermined : Verdict::Fail;
  c.detail = undecided ? "isomorphism test undecided" : "no n up to pd + 2 gives isomorphic cores";
  return c;
}

inline Verdict fold(const std::vector<UnitCheck>& v) {
  Verdict r = Verdict::Pass;
  for (const auto& c : v) r = combine(r, c.verdict);
  return r;
}

inline Verdict hom_agreement(const StableHomTable& a, const StableHomTable& b) {
  if (a.stabilized && b.stabilized) return a.value() == b.value() ? Verdict::Pass : Verdict::Fail;
  if (!a.stabilized && !b.stabilized) return Verdict::Pass;
  return Verdict::Undetermined;
}

}  // namespace detail

inline TheoremReport theorem_verify(const InstancePtr& inst, const TheoremOptions& opt = {}) {
  TheoremReport rep;
  rep.hypotheses = check_hypotheses(*inst, opt.pd_bound);
  if (rep.hypothesis_verdict() != Verdict::Pass) {
    rep.note = "hypotheses not established; theorem not checked";
    return rep;
  }
  rep.lemma41 = lemma41_iso(*inst).ok();
  auto amods = opt.a_modules.empty() ? default_test_modules(inst->a_tilde->total) : opt.a_modules;
  auto bmods = opt.b_modules.empty() ? default_test_modules(inst->b_tilde->total) : opt.b_modules;
  auto gf = [&](const PairModule& p) { return functor_g(*inst, functor_f(*inst, p)); };
  auto fg = [&](const PairModule& q) { return functor_f(*inst, functor_g(*inst, q)); };
  rep.unit = parallel_map<UnitCheck>(amods.size(), opt.jobs, [&](std::size_t i) {
    return detail::unit_relation(inst->a_tilde, amods[i], gf, opt);
  });
  rep.counit = parallel_map<UnitCheck>(bmods.size(), opt.jobs, [&](std::size_t i) {
    return detail::unit_relation(inst->b_tilde, bmods[i], fg, opt);
  });
  rep.part_a = detail::fold(rep.unit);
  rep.part_b = detail::fold(rep.counit);
  if (opt.check_hom) {
    std::vector<LeftModule> images(amods.size());
    for (std::size_t i = 0; i < amods.size(); ++i)
      images[i] = pair_to_module(functor_f(*inst, module_to_pair(inst->a_tilde, amods[i].module)));
    const std::size_t n = amods.size();
    rep.hom = parallel_map<HomCheck>(n * n, opt.jobs, [&](std::size_t k) {
      std::size_t i = k / n, j = k % n;
      HomCheck h{amods[i].label, amods[j].label, dsg_hom(amods[i].module, amods[j].module, opt.dsg),
                 dsg_hom(images[i], images[j], opt.dsg), Verdict::Undetermined};
      h.verdict = detail::hom_agreement(h.over_a, h.over_b);
      return h;
    });
    rep.part_c = Verdict::Pass;
    for (const auto& h : rep.hom) rep.part_c = combine(rep.part_c, h.verdict);
  } else {
    rep.part_c = Verdict::Pass;
  }
  return rep;
}

}  // namespace trivext
