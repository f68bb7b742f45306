#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trivext/homengine/iso.hpp"

namespace trivext {

enum class PdStatus { Finite, ExceedsBound, Undetermined };

inline const char* to_string(PdStatus s) {
  switch (s) {
    case PdStatus::Finite: return "Finite";
    case PdStatus::ExceedsBound: return "ExceedsBound";
    default: return "Undetermined";
  }
}

/// Omega^first is isomorphic to (or a direct summand of) Omega^second, which forces
/// infinite projective dimension whenever Omega^first is nonzero.
struct PeriodicityCertificate {
  std::size_t first;
  std::size_t second;
  bool isomorphic;  // false: summand only
};

struct ProjDimResult {
  PdStatus status = PdStatus::Undetermined;
  std::size_t value = 0;              // when Finite
  std::vector<std::size_t> trace;     // dim Omega^k M for the computed k
  std::optional<PeriodicityCertificate> certificate;
  std::string note;
};

struct ProjDimOptions {
  std::size_t bound = 20;
  std::size_t max_dim = 4096;     // larger syzygies are not computed
  bool full_trace = false;        // keep computing after a certificate is found
  bool search_certificate = true;
  IsoOptions iso;
};

inline ProjDimResult projdim_bounded(const LeftModule& m, const ProjDimOptions& opt = {}) {
  ProjDimResult r;
  r.trace.push_back(m.dim);
  if (m.dim == 0) {
    r.status = PdStatus::Finite;
    r.note = "zero module";
    return r;
  }
  std::vector<LeftModule> seen{m};
  LeftModule cur = m;
  for (std::size_t k = 0;; ++k) {
    if (cur.dim > opt.max_dim) {
      r.status = r.certificate ? PdStatus::ExceedsBound : PdStatus::Undetermined;
      r.note = "syzygy dimension " + std::to_string(cur.dim) + " above cap at stage " + std::to_string(k);
      return r;
    }
    ProjectiveCover c = projective_cover(cur);
    if (c.kernel.dim() == 0) {
      r.status = PdStatus::Finite;
      r.value = k;
      return r;
    }
    cur = std::move(c.syzygy);
    r.trace.push_back(cur.dim);
    // only syzygies up to the bound take part in the certificate
    if (opt.search_certificate && !r.certificate && k + 1 <= opt.bound) {
      for (std::size_t i = 0; i < seen.size() && !r.certificate; ++i) {
        const LeftModule& prev = seen[i];
        if (prev.dim == cur.dim) {
          if (module_iso_test(prev, cur, opt.iso).kind == IsoKind::Isomorphic)
            r.certificate = PeriodicityCertificate{i, k + 1, true};
        } else if (prev.dim < cur.dim) {
          if (find_summand(prev, cur, opt.iso)) r.certificate = PeriodicityCertificate{i, k + 1, false};
        }
      }
      seen.push_back(cur);
    }
    if (k + 1 > opt.bound) {
      r.status = PdStatus::ExceedsBound;
      return r;
    }
    if (r.certificate && !opt.full_trace) {
      r.status = PdStatus::ExceedsBound;
      r.note = "infinite by periodicity";
      return r;
    }
  }
}

struct GlobalDimResult {
  PdStatus status = PdStatus::Undetermined;
  std::size_t value = 0;
  std::vector<ProjDimResult> simples;
};

/// gldim of a basic algebra as the maximum projective dimension of its simples.
inline GlobalDimResult gldim(const AlgebraPtr& alg, const ProjDimOptions& opt = {}) {
  GlobalDimResult g;
  g.status = PdStatus::Finite;
  for (std::size_t i = 0; i < alg->num_idempotents(); ++i) {
    auto r = projdim_bounded(simple_module(alg, i), opt);
    if (r.status == PdStatus::ExceedsBound) g.status = PdStatus::ExceedsBound;
    else if (r.status == PdStatus::Undetermined && g.status == PdStatus::Finite) g.status = PdStatus::Undetermined;
    else if (r.status == PdStatus::Finite) g.value = std::max(g.value, r.value);
    g.simples.push_back(std::move(r));
  }
  return g;
}

}  // namespace trivext
