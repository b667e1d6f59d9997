#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sva::eval {

// Rotating 10-fold plan: round i validates on fold i+1 and tests on fold
// i+2, wrapping above 10 back to 1. Folds 1..9 share the base size; the
// remainder goes to fold 10.
struct SplitPlan {
  static constexpr int n_folds = 10;

  std::size_t n_samples = 0;
  std::vector<int> assignments;  // sample index -> fold 1..10

  struct Round {
    int index = 0;  // 1..10
    std::vector<int> train_folds;
    int val_fold = 0;
    int test_fold = 0;
  };
  std::vector<Round> rounds;

  std::vector<std::size_t> fold_members(int fold) const;
  std::vector<std::size_t> train_indices(int round) const;
  std::vector<std::size_t> val_indices(int round) const;
  std::vector<std::size_t> test_indices(int round) const;
};

// Seeded shuffle then contiguous partition. Throws ValidationError for
// n_samples < 10.
SplitPlan make_split_plan(std::size_t n_samples, std::uint64_t seed);

// Generalized multiclass Matthews correlation:
// (c*s - sum t_k p_k) / sqrt((s^2 - sum p_k^2)(s^2 - sum t_k^2)),
// zero denominator -> 0.
double mcc(const std::vector<std::string>& y_true, const std::vector<std::string>& y_pred);

// Unweighted mean of per-class F1 over the union of true and predicted
// labels; a class with zero precision+recall contributes 0.
double macro_f1(const std::vector<std::string>& y_true, const std::vector<std::string>& y_pred);

struct WilcoxonResult {
  double p_value = 1.0;
  double z = 0.0;
  double r = 0.0;        // |Z| / sqrt(n_used)
  std::size_t n_used = 0;  // nonzero-difference pairs
  bool degenerate = false;  // all differences zero
};

// One-sided signed-rank test for "first > second". Zero differences are
// dropped; ties get midranks. The p-value is exact (rank-sum enumeration)
// for n_used <= 25 and a tie-corrected normal approximation above; Z always
// comes from the normal approximation since the effect size needs it.
WilcoxonResult wilcoxon_one_sided(const std::vector<double>& first,
                                  const std::vector<double>& second);

enum class EffectSize { negligible, small, medium, large };

// Thresholds 0.1 / 0.3 / 0.5.
EffectSize effect_size_label(double r);
std::string to_string(EffectSize label);

}  // namespace sva::eval
