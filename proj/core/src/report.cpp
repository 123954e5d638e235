#include "minrep/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "minrep/param_sets.hpp"

namespace minrep::report {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  raise(errc::invalid_parameter, "unknown output format '" + name + "'");
}

namespace {

const char* status_name(branching::Status s) {
  return s == branching::Status::theorem ? "theorem" : "conjecture";
}

json summand_to_json(const branching::Summand& s) {
  json row;
  row["left"] = s.left.str();
  row["right"] = s.right.str();
  if (s.lambda) row["lambda"] = s.lambda->str();
  if (s.lambda && s.left.kind == branching::RepKind::pi_plus) {
    // K-type lattice data of the left factor
    auto bed = exact::b_epsilon_delta(*s.lambda, s.left.sig);
    row["b"] = bed.b.str();
    row["epsilon"] = bed.epsilon;
  }
  row["multiplicity"] = s.multiplicity;
  row["status"] = status_name(s.status);
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_summands(const std::vector<branching::Summand>& rows,
                            const std::string& title, Format format) {
  switch (format) {
    case Format::json: {
      json doc;
      doc["table"] = title;
      doc["rows"] = json::array();
      for (const auto& s : rows) doc["rows"].push_back(summand_to_json(s));
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "left,right,lambda,multiplicity,status\n";
      for (const auto& s : rows)
        os << csv_escape(s.left.str()) << "," << csv_escape(s.right.str()) << ","
           << (s.lambda ? s.lambda->str() : "") << "," << s.multiplicity << ","
           << status_name(s.status) << "\n";
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << title << "\n";
      for (const auto& s : rows)
        os << "  " << s.left.str() << " (x) " << s.right.str() << "   [lambda="
           << (s.lambda ? s.lambda->str() : "-") << ", " << status_name(s.status) << "]\n";
      if (rows.empty()) os << "  (empty)\n";
      return os.str();
    }
  }
  return {};
}

std::string render_classification(const SignatureSplit& split,
                                  const branching::Classification& c, Format format) {
  if (format == Format::json) {
    json doc;
    doc["split"] = {split.p1, split.q1, split.p2, split.q2};
    doc["class"] = branching::spectrum_class_name(c.cls);
    doc["status"] = c.conjectural ? "conjecture" : "theorem";
    doc["reason"] = c.reason;
    const Signature parent = split.parent();
    if ((parent.p + parent.q) % 2 == 0) doc["delta"] = exact::delta_character(parent);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "split (" << split.p1 << "," << split.q1 << "|" << split.p2 << "," << split.q2
     << "): " << branching::spectrum_class_name(c.cls) << " ["
     << (c.conjectural ? "conjecture" : "theorem") << "] -- " << c.reason << "\n";
  return os.str();
}

std::string render_constants(const std::vector<ConstantRow>& rows, const std::string& constant,
                             Format format) {
  switch (format) {
    case Format::json: {
      json doc;
      doc["constant"] = constant;
      doc["rows"] = json::array();
      for (const auto& r : rows) {
        json row;
        row["lambda_p"] = r.lambda_p.str();
        row["lambda_pp"] = r.lambda_pp.str();
        row["lambda"] = r.lambda.str();
        row["pole"] = r.value.is_pole();
        if (!r.value.is_pole()) {
          row["rational"] = r.value.rational_part().str();
          row["sqrt_pi_power"] = r.value.sqrt_pi_power();
          row["decimal"] = r.value.to_double();
        }
        doc["rows"].push_back(row);
      }
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "lambda_p,lambda_pp,lambda,rational,sqrt_pi_power,decimal\n";
      for (const auto& r : rows) {
        os << r.lambda_p.str() << "," << r.lambda_pp.str() << "," << r.lambda.str() << ",";
        if (r.value.is_pole()) {
          os << "pole,,";
        } else {
          char buf[40];
          std::snprintf(buf, sizeof buf, "%.17g", r.value.to_double());
          os << r.value.rational_part().str() << "," << r.value.sqrt_pi_power() << "," << buf;
        }
        os << "\n";
      }
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << constant << " table\n";
      for (const auto& r : rows) {
        os << "  (" << r.lambda_p.str() << ", " << r.lambda_pp.str() << "; " << r.lambda.str()
           << ") = " << r.value.str();
        if (!r.value.is_pole()) os << " = " << r.value.to_double();
        os << "\n";
      }
      return os.str();
    }
  }
  return {};
}

bool VerifySuite::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; });
}

double VerifySuite::worst_residual() const {
  double w = 0;
  for (const auto& c : cases) w = std::max(w, c.residual);
  return w;
}

std::string render_verify(const VerifySuite& suite, Format format) {
  if (format == Format::json) {
    json doc;
    doc["identity"] = suite.identity;
    doc["cases"] = json::array();
    for (const auto& c : suite.cases) {
      json row;
      row["name"] = c.name;
      row["residual"] = c.residual;
      row["tolerance"] = c.tolerance;
      row["pass"] = c.pass;
      doc["cases"].push_back(row);
    }
    doc["all_pass"] = suite.all_pass();
    doc["worst_residual"] = suite.worst_residual();
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "verify " << suite.identity << "\n";
  for (const auto& c : suite.cases)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << "  residual=" << c.residual
       << " tol=" << c.tolerance << "\n";
  os << (suite.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (worst residual "
     << suite.worst_residual() << ")\n";
  return os.str();
}

}  // namespace minrep::report
