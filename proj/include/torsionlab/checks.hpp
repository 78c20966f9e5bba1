#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torsionlab/fox.hpp"
#include "torsionlab/riley.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab {

struct CheckResult {
  std::string name;
  int trials = 0;
  double max_err = 0.0;
  bool pass = true;
  std::string detail;  // set on failure
};

struct CheckOptions {
  std::uint64_t seed = 0;
  int trials = 200;  // randomized trials per identity
  int n_max = 3;     // twist parameter range for root-based checks
};

using Rng = std::mt19937_64;

// deterministic draw helpers shared by the verify command and the tests
Complex rand_annulus(Rng& rng, double r_min, double r_max);
Mat2 rand_sl2(Rng& rng);           // generic entries, det exactly balanced
Mat2 rand_sl2_bounded(Rng& rng);   // eigenvalues near the unit circle
Word rand_word(Rng& rng, int max_len);

struct RootSample {
  int n;
  RileyPoint pt;
};

// Riley roots from random s draws, filtered to the generic locus: x away
// from {0, +-2}, u away from 0, longitude trace defined and away from 2.
std::vector<RootSample> sample_roots(int n, int count, Rng& rng);

// The full invariant suite, one CheckResult per identity.
std::vector<CheckResult> run_all_checks(const CheckOptions& opts = {});

// Individual checks (names match CheckResult::name).
CheckResult check_cheb_pell_identity(const CheckOptions&);
CheckResult check_cheb_partial_sum_ratio(const CheckOptions&);
CheckResult check_cheb_p_quadratic(const CheckOptions&);
CheckResult check_cheb_negative_reflection(const CheckOptions&);
CheckResult check_sl2_power_closed_form(const CheckOptions&);
CheckResult check_sl2_geom_sum_closed_form(const CheckOptions&);
CheckResult check_sl2_geom_sum_det(const CheckOptions&);
CheckResult check_sl2_pow_inverse(const CheckOptions&);
CheckResult check_sl2_cayley_hamilton(const CheckOptions&);
CheckResult check_riley_word_matrix(const CheckOptions&);
CheckResult check_riley_power_closed_form(const CheckOptions&);
CheckResult check_riley_relation_residual(const CheckOptions&);
CheckResult check_riley_antidiagonal(const CheckOptions&);
CheckResult check_riley_poly_matches_eval(const CheckOptions&);
CheckResult check_riley_inverse_square_identity(const CheckOptions&);
CheckResult check_fox_fundamental_identity(const CheckOptions&);
CheckResult check_fox_product_rule(const CheckOptions&);
CheckResult check_fox_parser_roundtrip(const CheckOptions&);
CheckResult check_fox_relator_derivative_closed(const CheckOptions&);
CheckResult check_fox_gauge_invariance(const CheckOptions&);
CheckResult check_torsion_omega_det(const CheckOptions&);
CheckResult check_torsion_omega_trace(const CheckOptions&);
CheckResult check_torsion_det_plus_omega(const CheckOptions&);
CheckResult check_torsion_johnson_factor(const CheckOptions&);
CheckResult check_torsion_closed_vs_fox(const CheckOptions&);
CheckResult check_torsion_shifted_index_at_roots(const CheckOptions&);
CheckResult check_surgery_longitude_basics(const CheckOptions&);
CheckResult check_surgery_longitude_word_oracle(const CheckOptions&);
CheckResult check_surgery_trace_closed_form(const CheckOptions&);
CheckResult check_surgery_trace_square_identity(const CheckOptions&);
CheckResult check_surgery_formula_vs_quotient(const CheckOptions&);
CheckResult check_surgery_trace_factor(const CheckOptions&);

}  // namespace torsionlab
