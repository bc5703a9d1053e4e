#include "qwmc/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

namespace qwmc {

namespace {

Clause dedupe(const Clause& clause) {
  Clause out;
  out.reserve(clause.size());
  for (const Literal& lit : clause) {
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  return out;
}

void check_weight(int variable, const LiteralWeights& w) {
  if (!(w.positive >= 0.0) || !(w.negative >= 0.0) || !std::isfinite(w.positive) ||
      !std::isfinite(w.negative)) {
    throw std::invalid_argument("weights of variable " + std::to_string(variable) +
                                " must be finite and non-negative");
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> to_real(std::string_view s) {
  // from_chars<double> is unavailable on older libstdc++; strtod needs a terminator.
  std::string tmp(s);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size() || errno == ERANGE) return std::nullopt;
  return v;
}

}  // namespace

Assignment::Assignment(int variable_count, std::uint64_t bits) : bits_(static_cast<std::size_t>(variable_count)) {
  for (int i = 0; i < variable_count; ++i) bits_[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
}

WeightedCnf::WeightedCnf(int variable_count, std::vector<Clause> clauses)
    : WeightedCnf(variable_count, std::move(clauses),
                  std::vector<LiteralWeights>(static_cast<std::size_t>(std::max(variable_count, 0)))) {}

WeightedCnf::WeightedCnf(int variable_count, std::vector<Clause> clauses, std::vector<LiteralWeights> weights)
    : n_(variable_count), weights_(std::move(weights)) {
  if (n_ < 1) throw std::invalid_argument("a formula needs at least one variable");
  if (weights_.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("expected " + std::to_string(n_) + " weight pairs, got " +
                                std::to_string(weights_.size()));
  }
  for (int v = 1; v <= n_; ++v) check_weight(v, weights_[static_cast<std::size_t>(v - 1)]);
  clauses_.reserve(clauses.size());
  for (const Clause& clause : clauses) {
    for (const Literal& lit : clause) {
      if (lit.variable < 1 || lit.variable > n_) {
        throw std::invalid_argument("literal references variable " + std::to_string(lit.variable) +
                                    " outside [1, " + std::to_string(n_) + "]");
      }
    }
    clauses_.push_back(dedupe(clause));
  }
}

bool WeightedCnf::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

WeightedCnf WeightedCnf::with_weights(std::vector<LiteralWeights> weights) const {
  return WeightedCnf(n_, clauses_, std::move(weights));
}

WeightedCnf WeightedCnf::with_uniform_weights(double w) const {
  return with_weights(std::vector<LiteralWeights>(static_cast<std::size_t>(n_), LiteralWeights{w, w}));
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

WeightedCnf parse_weighted_dimacs(std::string_view text) {
  std::optional<int> n;
  long long declared_clauses = 0;
  int header_line = 0;
  std::vector<Clause> clauses;
  Clause pending;
  bool pending_open = false;
  int pending_line = 0;
  std::vector<std::optional<LiteralWeights>> weights;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == 'c' || tokens[0].front() == '%') {
      if (eol == text.size()) break;
      continue;
    }
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError(line_no, "malformed header, expected 'p cnf <n> <m>'");
      auto nv = to_int(tokens[2]);
      auto mv = to_int(tokens[3]);
      if (!nv || !mv || *nv < 1 || *mv < 0 || *nv > std::numeric_limits<int>::max()) {
        throw ParseError(line_no, "malformed header counts");
      }
      n = static_cast<int>(*nv);
      declared_clauses = *mv;
      header_line = line_no;
      weights.assign(static_cast<std::size_t>(*n), std::nullopt);
    } else if (!n) {
      throw ParseError(line_no, "content before 'p cnf' header");
    } else if (tokens[0] == "w") {
      if (tokens.size() != 4) throw ParseError(line_no, "malformed weight line, expected 'w <var> <w_pos> <w_neg>'");
      auto var = to_int(tokens[1]);
      auto wp = to_real(tokens[2]);
      auto wn = to_real(tokens[3]);
      if (!var || !wp || !wn) throw ParseError(line_no, "malformed weight line");
      if (*var < 1 || *var > *n) {
        throw ParseError(line_no, "weight for variable " + std::to_string(*var) + " outside [1, " + std::to_string(*n) + "]");
      }
      if (!(*wp >= 0.0) || !(*wn >= 0.0) || !std::isfinite(*wp) || !std::isfinite(*wn)) {
        throw ParseError(line_no, "negative or non-finite weight for variable " + std::to_string(*var));
      }
      auto& slot = weights[static_cast<std::size_t>(*var - 1)];
      if (slot) throw ParseError(line_no, "duplicate weight line for variable " + std::to_string(*var));
      slot = LiteralWeights{*wp, *wn};
    } else {
      for (std::string_view tok : tokens) {
        auto v = to_int(tok);
        if (!v) throw ParseError(line_no, "malformed literal '" + std::string(tok) + "'");
        if (!pending_open) {
          pending_open = true;
          pending_line = line_no;
        }
        if (*v == 0) {
          clauses.push_back(std::move(pending));
          pending.clear();
          pending_open = false;
          continue;
        }
        long long var = *v < 0 ? -*v : *v;
        if (var > *n) {
          throw ParseError(line_no, "clause references variable " + std::to_string(var) + " > " + std::to_string(*n));
        }
        pending.push_back(Literal{static_cast<int>(var), *v < 0});
      }
    }
    if (eol == text.size()) break;
  }

  if (!n) throw ParseError(line_no, "missing 'p cnf' header");
  if (pending_open) throw ParseError(pending_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != declared_clauses) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(clauses.size()));
  }

  std::vector<LiteralWeights> resolved;
  resolved.reserve(weights.size());
  for (const auto& w : weights) resolved.push_back(w.value_or(LiteralWeights{}));
  return WeightedCnf(*n, std::move(clauses), std::move(resolved));
}

WeightedCnf load_weighted_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_weighted_dimacs(buffer.str());
}

std::string to_weighted_dimacs(const WeightedCnf& cnf) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "p cnf " << cnf.variable_count() << ' ' << cnf.clause_count() << '\n';
  for (const Clause& clause : cnf.clauses()) {
    for (const Literal& lit : clause) out << (lit.negated ? -lit.variable : lit.variable) << ' ';
    out << "0\n";
  }
  for (int v = 1; v <= cnf.variable_count(); ++v) {
    const auto& w = cnf.weight(v);
    out << "w " << v << ' ' << w.positive << ' ' << w.negative << '\n';
  }
  return out.str();
}

bool evaluate(const WeightedCnf& cnf, const Assignment& assignment) {
  if (assignment.size() != cnf.variable_count()) {
    throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) + " bits, formula has " +
                                std::to_string(cnf.variable_count()) + " variables");
  }
  return std::all_of(cnf.clauses().begin(), cnf.clauses().end(), [&](const Clause& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& lit) { return assignment.value(lit.variable) != lit.negated; });
  });
}

double assignment_weight(const WeightedCnf& cnf, const Assignment& assignment) {
  if (assignment.size() != cnf.variable_count()) {
    throw std::invalid_argument("assignment length does not match variable count");
  }
  double w = 1.0;
  for (int v = 1; v <= cnf.variable_count(); ++v) {
    const auto& pair = cnf.weight(v);
    w *= assignment.value(v) ? pair.positive : pair.negative;
  }
  return w;
}

namespace {

void check_enumerable(const WeightedCnf& cnf) {
  if (cnf.variable_count() > kExactEnumerationLimit) {
    throw GuardError("exact enumeration refused: " + std::to_string(cnf.variable_count()) +
                     " variables exceeds the limit of " + std::to_string(kExactEnumerationLimit));
  }
}

}  // namespace

double exact_wmc(const WeightedCnf& cnf) {
  check_enumerable(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.variable_count();
  double sum = 0.0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Assignment a(cnf.variable_count(), bits);
    if (evaluate(cnf, a)) sum += assignment_weight(cnf, a);
  }
  return sum;
}

std::uint64_t exact_model_count(const WeightedCnf& cnf) {
  check_enumerable(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.variable_count();
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (evaluate(cnf, Assignment(cnf.variable_count(), bits))) ++count;
  }
  return count;
}

NormalizedCnf normalize_weights(const WeightedCnf& cnf) {
  std::vector<LiteralWeights> normalized;
  normalized.reserve(static_cast<std::size_t>(cnf.variable_count()));
  double scale = 1.0;
  for (int v = 1; v <= cnf.variable_count(); ++v) {
    const auto& w = cnf.weight(v);
    const double total = w.sum();
    if (!(total > 0.0)) {
      throw std::domain_error("variable " + std::to_string(v) + " has w(x) + w(not x) = 0; cannot normalize");
    }
    normalized.push_back({w.positive / total, w.negative / total});
    scale *= total;
  }
  return {cnf.with_weights(std::move(normalized)), scale};
}

WeightedCnf sprinkler_cnf() {
  // s = 1, r = 2, w = 3
  std::vector<Clause> clauses = {
      {{1, true}, {3, false}},
      {{2, true}, {3, false}},
      {{1, true}, {2, true}},
  };
  return WeightedCnf(3, std::move(clauses), {{0.3, 0.7}, {0.2, 0.8}, {0.5, 0.5}});
}

}  // namespace qwmc
