/// Command-line front end: exact computations in the positive half of
/// quantum sl3 (quantum binomials, Littlewood-Richardson coefficients,
/// canonical-basis expansion, object decomposition, higher Serre sums) and
/// the batch verification suites for the diagrammatic operator engine.

#include <array>
#include <exception>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsl3/partitions.hpp"
#include "qsl3/qlaurent.hpp"
#include "qsl3/textio.hpp"
#include "qsl3/thick.hpp"
#include "qsl3/u3algebra.hpp"
#include "qsl3/u3category.hpp"
#include "qsl3/verify.hpp"

namespace {

using nlohmann::json;

struct Output {
  std::string text;
  json body;
  bool pass = true;
};

json reportToJson(const qsl3::Report& report) {
  json checks = json::array();
  for (const auto& r : report.results) {
    json entry{{"check", r.check}, {"params", r.params}, {"pass", r.pass}};
    if (r.counterexample) entry["counterexample"] = *r.counterexample;
    checks.push_back(std::move(entry));
  }
  return checks;
}

std::string reportToText(const qsl3::Report& report) {
  std::string out;
  std::size_t failures = 0;
  for (const auto& r : report.results) {
    out += r.pass ? "[PASS] " : "[FAIL] ";
    out += r.check + " " + r.params;
    if (!r.pass && r.counterexample) out += "\n       " + *r.counterexample;
    out += "\n";
    if (!r.pass) ++failures;
  }
  out += std::to_string(report.results.size()) + " checks, " + std::to_string(failures) +
         " failures\n";
  return out;
}

Output reportOutput(const std::string& command, const qsl3::Report& report) {
  Output o;
  o.pass = report.allPass();
  o.text = reportToText(report);
  o.body = json{{"schema", 1},
                {"command", command},
                {"pass", o.pass},
                {"checks", reportToJson(report)}};
  return o;
}

int emit(const Output& o, const std::string& format, const std::string& outFile) {
  const std::string rendered = format == "json" ? o.body.dump(2) + "\n" : o.text;
  if (!outFile.empty()) {
    std::ofstream f(outFile);
    if (!f) {
      std::cerr << "error: cannot open " << outFile << " for writing\n";
      return 2;
    }
    f << rendered;
    std::cout << (o.pass ? "pass" : "fail") << " (report written to " << outFile << ")\n";
  } else {
    std::cout << rendered;
  }
  return o.pass ? 0 : 1;
}

qsl3::Sign signFromName(const std::string& name) {
  return name == "minus" ? qsl3::Sign::minus : qsl3::Sign::plus;
}

/// Named verification jobs for `verify --all`, dispatched to a worker pool;
/// the output order is fixed by this list regardless of completion order.
std::vector<std::pair<std::string, std::function<qsl3::Report()>>> allJobs() {
  std::vector<std::pair<std::string, std::function<qsl3::Report()>>> jobs;
  jobs.emplace_back("relations max-len=3", [] { return qsl3::verifyLocalRelations(3); });
  jobs.emplace_back("thick max=2", [] { return qsl3::verifyThickRelations(2); });
  const std::vector<std::array<int, 3>> triples{
      {1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 2, 2}};
  for (const auto& [a, b, c] : triples) {
    jobs.emplace_back(
        "lemma-gl a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
            std::to_string(c),
        [a = a, b = b, c = c] { return qsl3::verifySigmaLambda(a, b, c); });
  }
  for (const auto& [a, b, c] : triples) {
    jobs.emplace_back(
        "idempotents a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
            std::to_string(c),
        [a = a, b = b, c = c] { return qsl3::verifyIdempotents(a, b, c); });
  }
  const std::vector<std::pair<int, int>> pairs{{2, 1}, {3, 1}, {3, 2}};
  for (const auto& [a, b] : pairs) {
    for (bool reversed : {false, true}) {
      jobs.emplace_back(
          "complex a=" + std::to_string(a) + " b=" + std::to_string(b) +
              (reversed ? " reversed" : ""),
          [a = a, b = b, reversed] { return qsl3::verifyComplexNullHomotopy(a, b, reversed); });
    }
  }
  return jobs;
}

qsl3::Report runAllJobs() {
  auto jobs = allJobs();
  std::vector<std::future<qsl3::Report>> futures;
  futures.reserve(jobs.size());
  for (auto& [name, job] : jobs) {
    futures.push_back(std::async(std::launch::async, job));
  }
  qsl3::Report merged;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      merged.merge(futures[i].get());
    } catch (const std::exception& e) {
      merged.add("verify.job", jobs[i].first, false, std::string("exception: ") + e.what());
    }
  }
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the positive half of quantum sl3, with a "
               "diagrammatic operator engine and verification suites"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string outFile;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", outFile, "Write the report to FILE");

  // qb
  auto* qb = app.add_subcommand("qb", "Quantum binomial coefficient [n choose k]");
  qb->fallthrough();
  int qbN = 0, qbK = 0;
  qb->add_option("n", qbN, "Upper index")->required();
  qb->add_option("k", qbK, "Lower index")->required();

  // lr
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^gamma_{alpha,beta}");
  lr->fallthrough();
  std::string lrGamma, lrAlpha, lrBeta;
  lr->add_option("gamma", lrGamma, "Outer partition, e.g. \"(3,1)\"")->required();
  lr->add_option("alpha", lrAlpha, "First inner partition")->required();
  lr->add_option("beta", lrBeta, "Second inner partition")->required();

  // canon
  auto* canon = app.add_subcommand("canon", "Canonical-basis expansion and positivity verdict");
  canon->fallthrough();
  std::string canonExpr;
  canon->add_option("expr", canonExpr, "Algebra expression, e.g. \"1^1 2^1 1^1\"")->required();

  // decompose
  auto* decompose =
      app.add_subcommand("decompose", "Decompose a graded object into indecomposables");
  decompose->fallthrough();
  std::string decomposeExpr;
  decompose->add_option("expr", decomposeExpr, "Object expression, e.g. \"1^1 2^1 1^1 {2}\"")
      ->required();

  // serre
  auto* serre = app.add_subcommand("serre", "Higher Serre alternating sum (zero for m > n > 0)");
  serre->fallthrough();
  int serreM = 0, serreN = 0, serreLead = 1;
  std::string serreSign = "plus";
  serre->add_option("m", serreM, "Outer divided-power exponent")->required();
  serre->add_option("n", serreN, "Inner divided-power exponent")->required();
  serre->add_option("--sign", serreSign, "Exponent sign in the q-power weight")
      ->check(CLI::IsMember({"plus", "minus"}));
  serre->add_option("--lead", serreLead, "Color of the outer letters")
      ->check(CLI::IsMember({1, 2}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->fallthrough();
  bool verifyAll = false;
  verify->add_flag("--all", verifyAll, "Run every suite at acceptance parameters");

  auto* vRelations = verify->add_subcommand("relations", "Local relations on thin strands");
  vRelations->fallthrough();
  int relMaxLen = 3;
  vRelations->add_option("--max-len", relMaxLen, "Maximum color-sequence length");

  auto* vThick = verify->add_subcommand("thick", "Thick-calculus relation suite");
  vThick->fallthrough();
  int thickMax = 2;
  vThick->add_option("--max", thickMax, "Maximum edge thickness");

  int vA = 1, vB = 1, vC = 1;
  auto* vLemma = verify->add_subcommand("lemma-gl", "Triple-word basis morphism orthogonality");
  vLemma->fallthrough();
  vLemma->add_option("--a", vA, "Left thickness")->required();
  vLemma->add_option("--b", vB, "Middle thickness")->required();
  vLemma->add_option("--c", vC, "Right thickness")->required();

  int iA = 1, iB = 1, iC = 1;
  auto* vIdem = verify->add_subcommand("idempotents", "Projector orthogonality and completeness");
  vIdem->fallthrough();
  vIdem->add_option("--a", iA, "Left thickness")->required();
  vIdem->add_option("--b", iB, "Middle thickness")->required();
  vIdem->add_option("--c", iC, "Right thickness")->required();

  int cA = 2, cB = 1;
  auto* vComplex =
      verify->add_subcommand("complex", "Null-homotopy of the alternating complex (both directions)");
  vComplex->fallthrough();
  vComplex->add_option("--a", cA, "Outer exponent (a > b)")->required();
  vComplex->add_option("--b", cB, "Inner exponent")->required();

  auto* vDiagram = verify->add_subcommand("diagram", "Compile a diagram literal and audit its degree");
  vDiagram->fallthrough();
  std::string diagramExpr;
  vDiagram->add_option("expr", diagramExpr, "S-expression, e.g. \"(v (split 1 1 1) (merge 1 1 1))\"")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Output output;

    if (qb->parsed()) {
      const qsl3::LaurentPoly value = qsl3::qbinom(qbN, qbK);
      output.text = value.str() + "\n";
      output.body = json{{"schema", 1},
                         {"command", "qb"},
                         {"params", {{"n", qbN}, {"k", qbK}}},
                         {"output", value.str()},
                         {"pass", true}};
    } else if (lr->parsed()) {
      const auto gamma = qsl3::Partition::parse(lrGamma);
      const auto alpha = qsl3::Partition::parse(lrAlpha);
      const auto beta = qsl3::Partition::parse(lrBeta);
      if (!gamma || !alpha || !beta)
        throw std::invalid_argument("partitions must look like \"(3,1)\" or \"()\"");
      const long long value = qsl3::lrCoefficient(*gamma, *alpha, *beta);
      output.text = std::to_string(value) + "\n";
      output.body = json{{"schema", 1},
                         {"command", "lr"},
                         {"params", {{"gamma", gamma->str()}, {"alpha", alpha->str()}, {"beta", beta->str()}}},
                         {"output", value},
                         {"pass", true}};
    } else if (canon->parsed()) {
      const qsl3::AlgElem input = qsl3::parseAlgebraExpression(canonExpr);
      const qsl3::CanonExpansion expansion = qsl3::canonicalize(input);
      bool positive = true;
      for (const auto& [elem, coeff] : expansion.terms()) {
        if (!coeff.isNonnegative()) positive = false;
      }
      const std::string printed = qsl3::printCanonical(expansion);
      output.pass = positive;
      output.text = printed + "\npositivity: " + (positive ? "true" : "false") + "\n";
      output.body = json{{"schema", 1},
                         {"command", "canon"},
                         {"params", {{"expr", canonExpr}}},
                         {"expansion", printed},
                         {"positive", positive},
                         {"pass", positive}};
    } else if (decompose->parsed()) {
      const qsl3::GradedObject input = qsl3::parseObjectExpression(decomposeExpr);
      const qsl3::IndecompSum summands = qsl3::normalizeObject(input);
      const std::string printed = qsl3::printIndecomposables(summands);
      output.text = printed + "\n";
      output.body = json{{"schema", 1},
                         {"command", "decompose"},
                         {"params", {{"expr", decomposeExpr}}},
                         {"output", printed},
                         {"pass", true}};
    } else if (serre->parsed()) {
      const qsl3::CanonExpansion sum =
          qsl3::higherSerreSum(serreM, serreN, signFromName(serreSign), serreLead);
      const bool pass = sum.isZero();
      const std::string printed = qsl3::printCanonical(sum);
      output.pass = pass;
      output.text = printed + "\n" + (pass ? "pass" : "fail") + "\n";
      output.body = json{{"schema", 1},
                         {"command", "serre"},
                         {"params",
                          {{"m", serreM}, {"n", serreN}, {"sign", serreSign}, {"lead", serreLead}}},
                         {"output", printed},
                         {"pass", pass}};
    } else if (verify->parsed()) {
      qsl3::Report report;
      std::string command = "verify";
      if (verifyAll) {
        command = "verify --all";
        report = runAllJobs();
      } else if (vRelations->parsed()) {
        command = "verify relations";
        report = qsl3::verifyLocalRelations(relMaxLen);
      } else if (vThick->parsed()) {
        command = "verify thick";
        report = qsl3::verifyThickRelations(thickMax);
      } else if (vLemma->parsed()) {
        command = "verify lemma-gl";
        report = qsl3::verifySigmaLambda(vA, vB, vC);
      } else if (vIdem->parsed()) {
        command = "verify idempotents";
        report = qsl3::verifyIdempotents(iA, iB, iC);
      } else if (vComplex->parsed()) {
        command = "verify complex";
        report = qsl3::verifyComplexNullHomotopy(cA, cB, false);
        report.merge(qsl3::verifyComplexNullHomotopy(cA, cB, true));
      } else if (vDiagram->parsed()) {
        command = "verify diagram";
        const qsl3::ThickDiagram diagram = qsl3::parseThickDiagram(diagramExpr);
        const qsl3::DiagramOperator op = qsl3::compileThick(diagram);
        const auto eff = qsl3::effectiveDegree(op, diagram.source(), diagram.target());
        // The zero operator is homogeneous of every degree, so the audit is
        // vacuous for diagrams that compile to zero.
        const bool ok =
            op.isZero() || (eff.has_value() && *eff == diagram.combinatorialDegree());
        std::string info = "terms=" + std::to_string(op.terms().size()) + " degree=" +
                           (eff ? std::to_string(*eff) : std::string("inhomogeneous")) +
                           " expected=" + std::to_string(diagram.combinatorialDegree());
        report.add("diagram.degree-audit", diagram.str(), ok,
                   ok ? std::nullopt : std::optional(info));
      } else {
        std::cerr << "error: verify needs a suite name or --all\n";
        return 2;
      }
      output = reportOutput(command, report);
    }

    return emit(output, format, outFile);
  } catch (const std::exception& e) {
    if (format == "json") {
      const json failure{{"schema", 1}, {"pass", false}, {"error", e.what()}};
      std::cout << failure.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}
