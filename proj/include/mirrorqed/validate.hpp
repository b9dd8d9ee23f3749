#pragma once

#include "mirrorqed/core.hpp"
#include "mirrorqed/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mirrorqed {

// One closed-form-vs-oracles comparison.  Rate records carry both oracle
// routes; shift records (pair == "pv") carry the principal-value oracle.
struct ValidationRecord {
  PolarizationAxis axis = PolarizationAxis::X;
  std::string pair;  // "gamma11" | "gamma12" | "pv"
  double R = 0.0;
  std::optional<double> Z;  // nullopt = unbounded
  double closed_form = 0.0;
  std::optional<double> ft_oracle;
  std::optional<double> modesum_oracle;
  std::optional<double> pv_oracle;
  double abs_diff = 0.0;  // max pairwise difference among the available routes
  double ft_order = 0.0;  // empirical regulator-ladder order (rate records)
  bool converged = false;
};

struct ValidationSummary {
  std::vector<ValidationRecord> records;
  double max_rate_abs_diff = 0.0;  // over gamma11/gamma12 records
  double max_pv_rel_diff = 0.0;    // over pv records, relative to the closed form
  bool all_converged = true;
};

// Cross-checks the closed-form rates against both numeric oracles for every
// (R, Z) on the given grids, all three polarizations and both pair
// functions, then appends principal-value shift checks at x polarization,
// unbounded R in {2, 5, 10}.  The default entry point fans records out
// across threads (each record writes its own slot); output is identical to
// a serial run.
ValidationSummary run_validation(const std::vector<double>& Rs,
                                 const std::vector<double>& Zs,
                                 const QuadratureParams& qp = {},
                                 bool use_parallel = true);

std::vector<double> default_validation_grid();  // {0.5, 1, 2, 5, 10}

// Top-level JSON array, one object per record, stable key order, shortest
// round-trip number formatting; deterministic byte-for-byte.
void write_validation_json(std::ostream& os, const ValidationSummary& summary);

}  // namespace mirrorqed
