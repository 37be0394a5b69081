#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcoh/derham.hpp"
#include "weylcoh/resolution.hpp"

namespace weylcoh {

enum class Provenance { Paper, Derived, Trivial };

std::string to_string(Provenance p);

/// One expected datum of a case, always tagged.
struct Expectation {
  enum class Kind {
    Table,        ///< full de Rham table over the window
    Total,        ///< total dimension of H^index
    Dimension,    ///< d(M), or none for the zero module
    Holonomic,    ///< holonomicity verdict
    Verdict,      ///< completion verdict status for H^index
    Growth,       ///< growth slope at p_max within 0.5 of d
    Resolution    ///< hand-coded Koszul resolution gives the same table
  };
  Kind kind = Kind::Total;
  Provenance provenance = Provenance::Derived;
  std::size_t index = 0;
  long value = 0;
  std::optional<int> dimension;
  bool flag = false;
  VerdictStatus status = VerdictStatus::UndeterminedWindow;
  std::vector<std::vector<std::size_t>> table;  // [i][d - lo]
  std::size_t line = 0;
};

struct ModelRef {
  std::string name;
  int shift = 0;
};

struct ExampleCase {
  std::string name;
  PresentedModule module;
  std::vector<std::string> relation_text;
  Window window;
  std::size_t margin = 3;
  std::optional<ModelRef> model;
  std::vector<Expectation> expectations;
};

/// Parses the case text format:
///
///   name = D/Dx n=1
///   n = 1
///   shift0 = 0
///   rel = "x1"
///   window = -10 10
///   margin = 3
///   model = laurent-quotient -1
///   expect total 1 = 1 [DERIVED]
///   expect table [PAPER]
///   0: 0 0 ...
///   1: 0 0 ...
///   end
///
/// Every expectation must end in [PAPER], [DERIVED] or [TRIVIAL]; untagged
/// expectations are refused with InputError.
ExampleCase parse_case(std::string_view text);

/// The bundled library.
std::vector<ExampleCase> builtin_cases();

/// Koszul resolution of R = D/D(d_1..d_n): F_j has basis e_J for |J| = j with
/// shift j, and e_J maps to sum_k (-1)^k d_{j_k} e_{J - j_k}.
GradedResolution koszul_resolution(std::size_t n);

struct CellMismatch {
  std::size_t index;
  int degree;
  std::size_t expected;
  std::size_t actual;
};

struct CaseResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<CellMismatch> cells;
  std::string report;
  std::size_t strands_checked = 0;
};

/// Runs the full pipeline on the case: resolution, exactness audits, de Rham
/// table, completion identity on every strand, dimension verdict, growth
/// oracle, explicit model oracle, and the case's expectations.
CaseResult run_case(const ExampleCase& c, std::size_t threads = 1);

/// Same, on a supplied resolution instead of a computed one.
CaseResult run_case_with(const ExampleCase& c, const GradedResolution& res, std::size_t threads = 1);

/// Runs every builtin case and renders one deterministic report.
struct SuiteResult {
  std::vector<CaseResult> cases;
  bool passed() const;
  std::string report() const;
};
SuiteResult run_examples(std::size_t threads = 1);

}  // namespace weylcoh
