#pragma once

// Finite two-stage probability systems: a prior over a partition A and a
// conditional table of an outcome partition B given each A_i. Everything here
// is a pure function of its arguments.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bayesmosaic/errors.hpp"

namespace bayesmosaic {

// Absolute slack allowed when checking that hand-entered probabilities sum to 1.
inline constexpr double kNormalizationTol = 1e-9;
// Tolerance for identities between internally computed quantities.
inline constexpr double kIdentityTol = 1e-12;

struct EventLabel {
  std::string text;
  std::size_t index = 0;

  friend bool operator==(const EventLabel&, const EventLabel&) = default;
};

// Position of an event within the prior partition A.
struct PriorIndex {
  std::size_t value = 0;
  friend auto operator<=>(const PriorIndex&, const PriorIndex&) = default;
};

// Position of an event within the outcome partition B.
struct OutcomeIndex {
  std::size_t value = 0;
  friend auto operator<=>(const OutcomeIndex&, const OutcomeIndex&) = default;
};

struct PriorDistribution {
  std::vector<EventLabel> labels;
  std::vector<double> probs;

  std::size_t size() const noexcept { return probs.size(); }
};

// rows[i][j] = P(B_j | A_i)
struct ConditionalTable {
  std::vector<EventLabel> given_labels;
  std::vector<EventLabel> outcome_labels;
  std::vector<std::vector<double>> rows;
};

struct BayesModel {
  PriorDistribution prior;
  ConditionalTable conditional;
  std::string title;

  std::size_t prior_count() const noexcept { return prior.probs.size(); }
  std::size_t outcome_count() const noexcept { return conditional.outcome_labels.size(); }
};

// cells are row-major: cell(i, j) = P(A_i ∩ B_j).
class JointDistribution {
 public:
  JointDistribution(std::vector<EventLabel> prior_labels, std::vector<EventLabel> outcome_labels,
                    std::vector<double> cells);

  std::size_t rows() const noexcept { return prior_labels_.size(); }
  std::size_t cols() const noexcept { return outcome_labels_.size(); }
  double cell(PriorIndex a, OutcomeIndex b) const;
  std::span<const double> row(PriorIndex a) const;
  std::span<const double> cells() const noexcept { return cells_; }
  const std::vector<EventLabel>& prior_labels() const noexcept { return prior_labels_; }
  const std::vector<EventLabel>& outcome_labels() const noexcept { return outcome_labels_; }

 private:
  std::vector<EventLabel> prior_labels_;
  std::vector<EventLabel> outcome_labels_;
  std::vector<double> cells_;
};

struct PosteriorResult {
  EventLabel conditioned_on;
  std::vector<EventLabel> prior_labels;
  std::vector<double> numerator_terms;  // P(A_i ∩ B)
  double denominator = 0.0;             // P(B)
  std::vector<double> posterior;        // P(A_i | B)
};

/// Builds a model from label/probability lists, assigning label indices.
/// No validation is performed; pass the result through validate_model or
/// any operation that requires a valid model.
BayesModel make_model(const std::vector<std::pair<std::string, double>>& prior,
                      const std::vector<std::string>& outcome_labels,
                      std::vector<std::vector<double>> rows, std::string title = {});

/// Every violated invariant of a candidate model. Empty iff the model is valid.
ValidationReport validate_model(const BayesModel& model);

/// Throws ValidationError when validate_model reports anything.
void require_valid(const BayesModel& model);

JointDistribution joint(const BayesModel& model);

/// P(B_b) by the law of total probability.
double marginal_outcome(const BayesModel& model, OutcomeIndex b);

/// P(A_i | B_b) for every i, with the numerator terms and denominator exposed.
/// Throws NullConditioningError when P(B_b) is zero.
PosteriorResult posterior(const BayesModel& model, OutcomeIndex b);

/// Sum that does not depend on the order of `terms`: values are added in
/// ascending order, so any permutation of the same multiset gives the same bits.
double canonical_sum(std::span<const double> terms);

OutcomeIndex find_outcome(const BayesModel& model, std::string_view label);
PriorIndex find_prior(const BayesModel& model, std::string_view label);

}  // namespace bayesmosaic
