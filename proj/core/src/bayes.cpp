#include "bayesmosaic/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string_view>

#include "bayesmosaic/format.hpp"

namespace bayesmosaic {

ValidationError::ValidationError(ValidationReport report)
    : Error([&] {
        std::string msg = "invalid model";
        if (!report.empty()) msg += ": " + to_string(report.front());
        if (report.size() > 1) msg += " (+" + std::to_string(report.size() - 1) + " more)";
        return msg;
      }()),
      report_(std::move(report)) {}

NullConditioningError::NullConditioningError(std::size_t outcome, std::string label)
    : Error("conditioning on probability-zero event '" + label + "' (outcome " +
            std::to_string(outcome) + ")"),
      outcome_(outcome),
      label_(std::move(label)) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line == 0 ? message
                      : message + " (line " + std::to_string(line) +
                            (column ? ", column " + std::to_string(column) : std::string{}) + ")"),
      detail_(message),
      line_(line),
      column_(column) {}

std::string to_string(const Violation& v) {
  std::string s = v.where;
  if (v.index) s += "[" + std::to_string(*v.index) + "]";
  s += ": " + v.message;
  return s;
}

JointDistribution::JointDistribution(std::vector<EventLabel> prior_labels,
                                     std::vector<EventLabel> outcome_labels,
                                     std::vector<double> cells)
    : prior_labels_(std::move(prior_labels)),
      outcome_labels_(std::move(outcome_labels)),
      cells_(std::move(cells)) {
  if (cells_.size() != prior_labels_.size() * outcome_labels_.size())
    throw std::invalid_argument("joint cell count does not match label counts");
}

double JointDistribution::cell(PriorIndex a, OutcomeIndex b) const {
  if (a.value >= rows() || b.value >= cols()) throw IndexError("joint cell index out of range");
  return cells_[a.value * cols() + b.value];
}

std::span<const double> JointDistribution::row(PriorIndex a) const {
  if (a.value >= rows()) throw IndexError("joint row index out of range");
  return std::span<const double>(cells_).subspan(a.value * cols(), cols());
}

namespace {

std::vector<EventLabel> make_labels(const std::vector<std::string>& texts) {
  std::vector<EventLabel> labels;
  labels.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) labels.push_back({texts[i], i});
  return labels;
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

void check_labels(const std::vector<EventLabel>& labels, const std::string& where,
                  ValidationReport& report) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& label = labels[i];
    if (label.text.empty())
      report.push_back({where, i, std::nullopt, "label text is empty"});
    else if (!seen.insert(label.text).second)
      report.push_back({where, i, std::nullopt, "duplicate label '" + label.text + "'"});
    if (label.index != i)
      report.push_back({where, i, static_cast<double>(label.index),
                        "label '" + label.text + "' carries index " + std::to_string(label.index)});
  }
}

// Numerator terms P(A_i ∩ B_b), in prior order.
std::vector<double> column_terms(const BayesModel& model, OutcomeIndex b) {
  std::vector<double> terms(model.prior_count());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = model.prior.probs[i] * model.conditional.rows[i][b.value];
  return terms;
}

void require_outcome(const BayesModel& model, OutcomeIndex b) {
  if (b.value >= model.outcome_count())
    throw IndexError("outcome index " + std::to_string(b.value) + " out of range (model has " +
                     std::to_string(model.outcome_count()) + " outcomes)");
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t find_label(const std::vector<EventLabel>& labels, std::string_view text,
                       std::string_view kind) {
  for (const auto& l : labels)
    if (l.text == text) return l.index;

  std::ostringstream msg;
  msg << "unknown " << kind << " label '" << text << "'";
  if (!labels.empty()) {
    const auto best = std::min_element(labels.begin(), labels.end(), [&](const auto& x, const auto& y) {
      return edit_distance(x.text, text) < edit_distance(y.text, text);
    });
    if (edit_distance(best->text, text) <= std::max<std::size_t>(2, text.size() / 2))
      msg << "; did you mean '" << best->text << "'?";
    msg << " (known: ";
    for (std::size_t i = 0; i < labels.size(); ++i) msg << (i ? ", " : "") << labels[i].text;
    msg << ")";
  }
  throw IndexError(msg.str());
}

}  // namespace

BayesModel make_model(const std::vector<std::pair<std::string, double>>& prior,
                      const std::vector<std::string>& outcome_labels,
                      std::vector<std::vector<double>> rows, std::string title) {
  BayesModel model;
  std::vector<std::string> prior_texts;
  for (const auto& [text, p] : prior) {
    prior_texts.push_back(text);
    model.prior.probs.push_back(p);
  }
  model.prior.labels = make_labels(prior_texts);
  model.conditional.given_labels = model.prior.labels;
  model.conditional.outcome_labels = make_labels(outcome_labels);
  model.conditional.rows = std::move(rows);
  model.title = std::move(title);
  return model;
}

ValidationReport validate_model(const BayesModel& model) {
  ValidationReport report;
  const auto& prior = model.prior;
  const auto& cond = model.conditional;

  if (prior.labels.empty()) report.push_back({"prior", std::nullopt, std::nullopt, "prior has no events"});
  if (prior.labels.size() != prior.probs.size())
    report.push_back({"prior", std::nullopt, static_cast<double>(prior.probs.size()),
                      "prior has " + std::to_string(prior.labels.size()) + " labels but " +
                          std::to_string(prior.probs.size()) + " probabilities"});
  check_labels(prior.labels, "prior", report);

  bool prior_entries_ok = true;
  for (std::size_t i = 0; i < prior.probs.size(); ++i) {
    if (!is_probability(prior.probs[i])) {
      prior_entries_ok = false;
      report.push_back({"prior", i, prior.probs[i],
                        "probability " + format_readable(prior.probs[i]) + " outside [0, 1]"});
    }
  }
  if (!prior.probs.empty() && prior_entries_ok) {
    const double sum = canonical_sum(prior.probs);
    if (std::fabs(sum - 1.0) > kNormalizationTol)
      report.push_back({"prior", std::nullopt, sum, "prior sums to " + format_readable(sum)});
  }

  if (cond.outcome_labels.empty())
    report.push_back({"conditional", std::nullopt, std::nullopt, "conditional table has no outcomes"});
  check_labels(cond.outcome_labels, "outcomes", report);
  check_labels(cond.given_labels, "given", report);

  if (cond.given_labels.size() != prior.labels.size()) {
    report.push_back({"labels", std::nullopt, static_cast<double>(cond.given_labels.size()),
                      "conditional table has " + std::to_string(cond.given_labels.size()) +
                          " given events but prior has " + std::to_string(prior.labels.size())});
  } else {
    for (std::size_t i = 0; i < prior.labels.size(); ++i) {
      if (prior.labels[i].text != cond.given_labels[i].text)
        report.push_back({"labels", i, std::nullopt,
                          "conditional row given '" + cond.given_labels[i].text +
                              "' does not match prior event '" + prior.labels[i].text + "'"});
    }
  }

  if (cond.rows.size() != cond.given_labels.size())
    report.push_back({"conditional", std::nullopt, static_cast<double>(cond.rows.size()),
                      "conditional table has " + std::to_string(cond.rows.size()) + " rows but " +
                          std::to_string(cond.given_labels.size()) + " given events"});

  for (std::size_t i = 0; i < cond.rows.size(); ++i) {
    const auto& row = cond.rows[i];
    if (row.size() != cond.outcome_labels.size()) {
      report.push_back({"conditional", i, static_cast<double>(row.size()),
                        "row has " + std::to_string(row.size()) + " entries but there are " +
                            std::to_string(cond.outcome_labels.size()) + " outcomes"});
      continue;
    }
    bool entries_ok = true;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!is_probability(row[j])) {
        entries_ok = false;
        report.push_back({"conditional", i, row[j],
                          "P(" + (j < cond.outcome_labels.size() ? cond.outcome_labels[j].text : "?") +
                              " | row) = " + format_readable(row[j]) + " outside [0, 1]"});
      }
    }
    if (entries_ok && !row.empty()) {
      const double sum = canonical_sum(row);
      if (std::fabs(sum - 1.0) > kNormalizationTol) {
        const std::string given = i < cond.given_labels.size() ? cond.given_labels[i].text : "?";
        report.push_back({"conditional", i, sum,
                          "row given '" + given + "' sums to " + format_readable(sum)});
      }
    }
  }
  return report;
}

void require_valid(const BayesModel& model) {
  auto report = validate_model(model);
  if (!report.empty()) throw ValidationError(std::move(report));
}

double canonical_sum(std::span<const double> terms) {
  std::vector<double> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double t : sorted) sum += t;
  return sum;
}

JointDistribution joint(const BayesModel& model) {
  require_valid(model);
  const std::size_t k = model.prior_count();
  const std::size_t m = model.outcome_count();
  std::vector<double> cells(k * m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      cells[i * m + j] = model.prior.probs[i] * model.conditional.rows[i][j];
  return JointDistribution(model.prior.labels, model.conditional.outcome_labels, std::move(cells));
}

double marginal_outcome(const BayesModel& model, OutcomeIndex b) {
  require_valid(model);
  require_outcome(model, b);
  return canonical_sum(column_terms(model, b));
}

PosteriorResult posterior(const BayesModel& model, OutcomeIndex b) {
  require_valid(model);
  require_outcome(model, b);

  PosteriorResult result;
  result.conditioned_on = model.conditional.outcome_labels[b.value];
  result.prior_labels = model.prior.labels;
  result.numerator_terms = column_terms(model, b);
  result.denominator = canonical_sum(result.numerator_terms);
  if (!(result.denominator > 0.0)) throw NullConditioningError(b.value, result.conditioned_on.text);

  result.posterior.reserve(result.numerator_terms.size());
  for (double term : result.numerator_terms) result.posterior.push_back(term / result.denominator);
  return result;
}

OutcomeIndex find_outcome(const BayesModel& model, std::string_view label) {
  return OutcomeIndex{find_label(model.conditional.outcome_labels, label, "outcome")};
}

PriorIndex find_prior(const BayesModel& model, std::string_view label) {
  return PriorIndex{find_label(model.prior.labels, label, "prior")};
}

}  // namespace bayesmosaic
