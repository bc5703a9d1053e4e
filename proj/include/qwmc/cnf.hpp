#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwmc {

/// A variable or its negation. Variables are 1-based.
struct Literal {
  int variable = 1;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Weights of the two literals of one variable: w(x) and w(not x).
struct LiteralWeights {
  double positive = 1.0;
  double negative = 1.0;

  double sum() const { return positive + negative; }

  friend bool operator==(const LiteralWeights&, const LiteralWeights&) = default;
};

/// Truth assignment; bit i is the value of variable i + 1.
class Assignment {
 public:
  Assignment() = default;
  Assignment(int variable_count, std::uint64_t bits);
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  int size() const { return static_cast<int>(bits_.size()); }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  /// Value of a 1-based variable.
  bool value(int variable) const { return bits_[static_cast<std::size_t>(variable - 1)]; }

 private:
  std::vector<bool> bits_;
};

/// A CNF formula over n variables with a weight pair per variable.
///
/// Clauses are stored deduplicated (repeated literals removed, order of first
/// occurrence kept). Tautological clauses are kept as given. An empty clause
/// is permitted and makes the formula unsatisfiable.
class WeightedCnf {
 public:
  /// All weights default to (1, 1).
  WeightedCnf(int variable_count, std::vector<Clause> clauses);
  WeightedCnf(int variable_count, std::vector<Clause> clauses, std::vector<LiteralWeights> weights);

  int variable_count() const { return n_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<LiteralWeights>& weights() const { return weights_; }
  const LiteralWeights& weight(int variable) const { return weights_[static_cast<std::size_t>(variable - 1)]; }

  bool has_empty_clause() const;

  /// Same clauses, new weights.
  WeightedCnf with_weights(std::vector<LiteralWeights> weights) const;
  /// Same clauses, every variable weighted (w, w).
  WeightedCnf with_uniform_weights(double w = 0.5) const;

 private:
  int n_;
  std::vector<Clause> clauses_;
  std::vector<LiteralWeights> weights_;
};

/// Raised by parse_weighted_dimacs; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when an enumeration or memory guard refuses the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest variable count exact_wmc will enumerate.
inline constexpr int kExactEnumerationLimit = 30;

/// Parse the weighted DIMACS text format:
///
///     c comment
///     p cnf <n> <m>
///     -1 3 0
///     w <var> <w_pos> <w_neg>
///
/// Variables without a weight line get (1, 1).
WeightedCnf parse_weighted_dimacs(std::string_view text);
WeightedCnf load_weighted_dimacs(const std::string& path);

/// Inverse of parse_weighted_dimacs. Weights are printed round-trip exact.
std::string to_weighted_dimacs(const WeightedCnf& cnf);

bool evaluate(const WeightedCnf& cnf, const Assignment& assignment);

/// Product over variables of w(x) if set, w(not x) otherwise.
double assignment_weight(const WeightedCnf& cnf, const Assignment& assignment);

/// Brute-force weighted model count. Refuses n > kExactEnumerationLimit.
double exact_wmc(const WeightedCnf& cnf);

/// Number of models; equal to exact_wmc under unit weights.
std::uint64_t exact_model_count(const WeightedCnf& cnf);

struct NormalizedCnf {
  WeightedCnf cnf;
  double scale;  // product of V_i = w(x_i) + w(not x_i)
};

/// Rescale each weight pair to sum to one. Throws std::domain_error naming
/// the variable when a pair sums to zero.
NormalizedCnf normalize_weights(const WeightedCnf& cnf);

/// The three-variable sprinkler formula with its literal weights:
/// (not s or w)(not r or w)(not s or not r), s=0.3, r=0.2, w=0.5.
WeightedCnf sprinkler_cnf();

}  // namespace qwmc
