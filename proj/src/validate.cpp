#include "mirrorqed/validate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "mirrorqed/rates.hpp"

namespace mirrorqed {

std::vector<double> default_validation_grid() { return {0.5, 1.0, 2.0, 5.0, 10.0}; }

namespace {

struct Job {
  PolarizationAxis axis = PolarizationAxis::X;
  bool is_pv = false;
  PairKind pair = PairKind::Same;
  GeometryConfig geom;
};

ValidationRecord run_rate_job(const Job& job, const QuadratureParams& qp,
                              double normalizer) {
  ValidationRecord rec;
  rec.axis = job.axis;
  rec.pair = pair_label(job.pair);
  rec.R = job.geom.R;
  rec.Z = job.geom.Z;
  rec.closed_form = (job.pair == PairKind::Same) ? gamma11(job.axis, job.geom)
                                                 : gamma12(job.axis, job.geom);
  const OracleResult ft = ft_rate(job.axis, job.pair, job.geom, qp, normalizer);
  const OracleResult ms = modesum_rate(job.axis, job.pair, job.geom, qp);
  rec.ft_oracle = ft.value;
  rec.modesum_oracle = ms.value;
  rec.ft_order = ft.order;
  rec.abs_diff = std::max({std::fabs(rec.closed_form - ft.value),
                           std::fabs(rec.closed_form - ms.value),
                           std::fabs(ft.value - ms.value)});
  rec.converged = ft.converged && ms.converged;
  return rec;
}

ValidationRecord run_pv_job(const Job& job, const QuadratureParams& qp) {
  ValidationRecord rec;
  rec.axis = job.axis;
  rec.pair = "pv";
  rec.R = job.geom.R;
  rec.Z = job.geom.Z;
  rec.closed_form = dipole_shift(job.axis, job.geom);
  const OracleResult pv = pv_shift(job.axis, job.geom, qp);
  rec.pv_oracle = pv.value;
  rec.abs_diff = std::fabs(rec.closed_form - pv.value);
  rec.converged = pv.converged;
  return rec;
}

}  // namespace

ValidationSummary run_validation(const std::vector<double>& Rs,
                                 const std::vector<double>& Zs,
                                 const QuadratureParams& qp, bool use_parallel) {
  std::vector<Job> jobs;
  for (const PairKind pair : {PairKind::Same, PairKind::Cross})
    for (const PolarizationAxis axis :
         {PolarizationAxis::X, PolarizationAxis::Y, PolarizationAxis::Z})
      for (const double r : Rs)
        for (const double z : Zs) {
          Job j;
          j.axis = axis;
          j.pair = pair;
          j.geom.R = r;
          j.geom.Z = z;
          jobs.push_back(j);
        }
  for (const double r : {2.0, 5.0, 10.0}) {
    Job j;
    j.axis = PolarizationAxis::X;
    j.is_pv = true;
    j.geom.R = r;
    j.geom.Z.reset();
    jobs.push_back(j);
  }

  // the transform normalizer depends only on the quadrature parameters;
  // compute it once and share it across the fan-out
  const double normalizer = ft_normalizer(qp);

  ValidationSummary summary;
  summary.records.resize(jobs.size());
  const int n = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (use_parallel)
  for (int i = 0; i < n; ++i) {
    const Job& job = jobs[static_cast<std::size_t>(i)];
    summary.records[static_cast<std::size_t>(i)] =
        job.is_pv ? run_pv_job(job, qp) : run_rate_job(job, qp, normalizer);
  }

  for (const ValidationRecord& rec : summary.records) {
    if (rec.pair == "pv") {
      const double denom = std::max(std::fabs(rec.closed_form), 1e-300);
      summary.max_pv_rel_diff = std::max(summary.max_pv_rel_diff, rec.abs_diff / denom);
    } else {
      summary.max_rate_abs_diff = std::max(summary.max_rate_abs_diff, rec.abs_diff);
    }
    summary.all_converged = summary.all_converged && rec.converged;
  }
  return summary;
}

void write_validation_json(std::ostream& os, const ValidationSummary& summary) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ValidationRecord& rec : summary.records) {
    nlohmann::ordered_json o;
    o["pol"] = to_string(rec.axis);
    o["pair"] = rec.pair;
    o["R"] = rec.R;
    if (rec.Z)
      o["Z"] = *rec.Z;
    else
      o["Z"] = nullptr;
    o["closed_form"] = rec.closed_form;
    if (rec.pair == "pv") {
      o["pv_oracle"] = rec.pv_oracle.value();
    } else {
      o["ft_oracle"] = rec.ft_oracle.value();
      o["modesum_oracle"] = rec.modesum_oracle.value();
      o["ft_order"] = rec.ft_order;
    }
    o["abs_diff"] = rec.abs_diff;
    o["converged"] = rec.converged;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << "\n";
}

}  // namespace mirrorqed
