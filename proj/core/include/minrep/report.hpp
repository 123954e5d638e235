#pragma once

#include <string>
#include <vector>

#include "minrep/branching.hpp"
#include "minrep/gamma_value.hpp"

namespace minrep::report {

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

// Branching tables.  JSON rows carry {left, right, lambda, multiplicity,
// status}; CSV carries the same columns; text renders pi+{p,q}(lambda)
// labels.
std::string render_summands(const std::vector<branching::Summand>& rows,
                            const std::string& title, Format format);

std::string render_classification(const SignatureSplit& split,
                                  const branching::Classification& c, Format format);

// Tabulated exact constants; the rational part round-trips losslessly
// through the CSV as "num/den" plus the sqrt-pi power column.
struct ConstantRow {
  HalfInt lambda_p;
  HalfInt lambda_pp;
  HalfInt lambda;
  exact::GammaValue value;
};

std::string render_constants(const std::vector<ConstantRow>& rows, const std::string& constant,
                             Format format);

// Verification suites: one row per case plus a pass/fail summary.
struct VerifyCase {
  std::string name;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifySuite {
  std::string identity;
  std::vector<VerifyCase> cases;

  bool all_pass() const;
  double worst_residual() const;
};

std::string render_verify(const VerifySuite& suite, Format format);

}  // namespace minrep::report
