#include "weylcoh/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "weylcoh/cases.hpp"
#include "weylcoh/charvariety.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/expression.hpp"
#include "weylcoh/resolution.hpp"

namespace weylcoh {
namespace {

const char* const kCommands[] = {"resolve", "derham", "dimension", "completion-check", "run-examples"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long to_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(what + ": expected an integer, got '" + s + "'");
}

std::vector<long> integers(const std::string& value, const std::string& what) {
  std::istringstream in(value);
  std::vector<long> out;
  for (std::string w; in >> w;) out.push_back(to_long(w, what));
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "tabular") return OutputFormat::Tabular;
  throw InputError("unknown format '" + s + "' (use text or tabular)");
}

void check_command(const std::string& c) {
  for (const char* k : kCommands)
    if (c == k) return;
  throw InputError("unknown command '" + c + "'");
}

UserBound make_bound(const std::vector<long>& v, const std::string& what) {
  if (v.size() != 3 || v[0] < 0) throw InputError(what + ": expected I LO HI with I >= 0");
  return UserBound{static_cast<std::size_t>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]), "user-declared"};
}

std::string shifts_text(const std::vector<int>& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + std::to_string(s[k]);
  return out + "]";
}

std::string support_text(const std::vector<int>& s) {
  if (s.empty()) return "none";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out;
}

class Stopwatch {
 public:
  void lap(const std::string& what) {
    auto now = std::chrono::steady_clock::now();
    laps_.emplace_back(what, std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }
  void print(std::ostream& out) const {
    for (const auto& [what, ms] : laps_)
      out << "# timing " << what << " " << std::fixed << std::setprecision(1) << ms << " ms\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> laps_;
};

void print_module_header(const JobSpec& job, const PresentedModule& m, std::ostream& out) {
  const bool tab = job.format == OutputFormat::Tabular;
  const char* p = tab ? "# " : "";
  out << p << "command " << job.command << "\n";
  out << p << "n " << m.n << "\n";
  out << p << "shifts " << shifts_text(m.shifts) << "\n";
  for (const auto& r : m.relations) out << p << "relation " << render_row(r.components()) << "\n";
}

void print_resolution(const JobSpec& job, const GradedResolution& res, std::ostream& out) {
  if (job.format == OutputFormat::Tabular) {
    out << "# order " << res.order << "\n";
    out << "# terminated " << (res.terminated ? "yes" : "no") << "\n";
    out << "j\trank\tshifts\n";
    for (std::size_t j = 0; j < res.shifts.size(); ++j) {
      out << j << "\t" << res.rank(j) << "\t";
      for (std::size_t k = 0; k < res.shifts[j].size(); ++k) out << (k ? " " : "") << res.shifts[j][k];
      out << "\n";
    }
    for (std::size_t j = 1; j <= res.maps.size(); ++j)
      for (std::size_t r = 0; r < res.maps[j - 1].size(); ++r)
        out << "# B_" << j << " row " << r + 1 << " " << render_row(res.maps[j - 1][r].components()) << "\n";
    return;
  }
  out << "order " << res.order << "\n";
  for (std::size_t j = 0; j < res.shifts.size(); ++j)
    out << "F_" << j << ": rank " << res.rank(j) << ", shifts " << shifts_text(res.shifts[j]) << "\n";
  for (std::size_t j = 1; j <= res.maps.size(); ++j) {
    out << "B_" << j << ":\n";
    for (const auto& row : res.maps[j - 1]) out << "  " << render_row(row.components()) << "\n";
  }
  if (res.terminated) out << "terminated: F_" << res.shifts.size() << " = 0\n";
  else out << "not terminated after " << res.length() << " maps\n";
}

void print_dimension(const JobSpec& job, const DimensionVerdict& v, std::ostream& out) {
  const bool tab = job.format == OutputFormat::Tabular;
  if (tab) {
    out << "key\tvalue\n";
    out << "dimension\t" << (v.dimension ? std::to_string(*v.dimension) : std::string("none")) << "\n";
    out << "holonomic\t" << (v.holonomic ? "yes" : "no") << "\n";
    out << "# certificate " << v.certificate() << "\n";
    out << "# valid for the completion by dimension equality\n";
    return;
  }
  if (v.dimension) out << "d = " << *v.dimension << "\n";
  else out << "zero module\n";
  out << (v.holonomic ? "holonomic" : "not holonomic") << "\n";
  out << "certificate: " << v.certificate() << "\n";
  out << "valid for the completion by dimension equality\n";
}

void print_table(const JobSpec& job, const DeRhamReport& r, std::ostream& out) {
  const Window& w = r.window;
  if (job.format == OutputFormat::Tabular) {
    out << "# window " << w.lo << " " << w.hi << "\n";
    out << "# columns are Tor strands d; the de Rham degree is d + " << r.n << "\n";
    out << "i \\ d";
    for (int d = w.lo; d <= w.hi; ++d) out << "\t" << d;
    out << "\n";
    for (std::size_t i = 0; i <= r.n; ++i) {
      out << i;
      for (int d = w.lo; d <= w.hi; ++d) out << "\t" << r.at(i, d);
      out << "\n";
    }
    for (std::size_t i = 0; i <= r.n; ++i) out << "# total " << i << " " << r.totals[i] << "\n";
    out << "# strands audited " << r.strands_audited << "\n";
    return;
  }
  out << "window [" << w.lo << ", " << w.hi << "] (Tor strands d; de Rham degree d + " << r.n << ")\n";
  std::vector<std::string> head{"i \\ d"};
  for (int d = w.lo; d <= w.hi; ++d) head.push_back(std::to_string(d));
  std::vector<std::vector<std::string>> rows{head};
  for (std::size_t i = 0; i <= r.n; ++i) {
    std::vector<std::string> row{"H^" + std::to_string(i)};
    for (int d = w.lo; d <= w.hi; ++d) row.push_back(std::to_string(r.at(i, d)));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k == 0) out << std::left << std::setw(static_cast<int>(width[k])) << row[k];
      else out << " " << std::right << std::setw(static_cast<int>(width[k])) << row[k];
    }
    out << std::left << "\n";
  }
  for (std::size_t i = 0; i <= r.n; ++i) out << "total H^" << i << " = " << r.totals[i] << "\n";
  out << "strands audited: " << r.strands_audited << " (composites zero, Euler identity)\n";
}

void print_verdicts(const JobSpec& job, const std::vector<CompletionVerdict>& verdicts, std::size_t margin,
                    std::ostream& out) {
  if (job.format == OutputFormat::Tabular) {
    out << "# margin " << margin << "\n";
    for (const auto& v : verdicts)
      out << "# verdict " << v.index << " injective " << to_string(v.status)
          << " certificate=" << to_string(v.certificate) << " heuristic=" << (v.heuristic ? "yes" : "no")
          << " support=" << support_text(v.support) << " detail=" << v.detail << "\n";
    return;
  }
  out << "completion maps (margin " << margin << "):\n";
  for (const auto& v : verdicts) {
    out << "  kappa^" << v.index << ": injective; ";
    if (v.status == VerdictStatus::IsomorphismCertified) out << "isomorphism-certified via " << to_string(v.certificate);
    else out << to_string(v.status);
    out << "\n    support: " << support_text(v.support) << "\n    " << v.detail << "\n";
    if (v.heuristic) out << "    note: window placement is heuristic\n";
  }
}

int run_job_checked(const JobSpec& job, std::ostream& out) {
  Stopwatch clock;
  if (job.command == "run-examples") {
    SuiteResult suite = run_examples(job.threads);
    out << suite.report();
    clock.lap("run-examples");
    if (job.timings) clock.print(out);
    return suite.passed() ? 0 : 2;
  }

  PresentedModule m = job.presentation();
  validate_presentation(m);
  print_module_header(job, m, out);

  if (job.command == "dimension") {
    DimensionVerdict v = dimension(characteristic_data(m));
    clock.lap("dimension");
    print_dimension(job, v, out);
    if (job.timings) clock.print(out);
    return 0;
  }

  GradedResolution res = graded_free_resolution(m, job.resolution_length());
  verify_resolution(res);
  clock.lap("resolution");
  if (job.command == "resolve") {
    print_resolution(job, res, out);
    if (job.timings) clock.print(out);
    return 0;
  }

  DeRhamReport report = derham_dims(res, job.window, job.threads);
  clock.lap("strands");
  DimensionVerdict dim = dimension(characteristic_data(m));
  clock.lap("dimension");
  VanishingCertificates certs;
  certs.holonomic = dim.holonomic;
  certs.holonomic_detail = std::string(dim.holonomic ? "holonomic" : "not holonomic") + " (" + dim.certificate() + ")";
  certs.user_bounds = job.bounds;
  std::vector<CompletionVerdict> verdicts = completion_verdict(report, job.margin, certs);

  const char* p = job.format == OutputFormat::Tabular ? "# " : "";
  out << p << "resolution ranks";
  for (std::size_t j = 0; j < res.shifts.size(); ++j) out << " " << res.rank(j);
  out << (res.terminated ? " (terminated)" : "") << "\n";
  out << p << "dimension " << (dim.dimension ? std::to_string(*dim.dimension) : std::string("none"))
      << (dim.holonomic ? " holonomic" : " not holonomic") << "\n";
  if (job.command == "derham") print_table(job, report, out);
  else if (job.format == OutputFormat::Tabular) {
    out << "i\tstatus\tcertificate\tsupport\n";
    for (const auto& v : verdicts)
      out << v.index << "\t" << to_string(v.status) << "\t" << to_string(v.certificate) << "\t"
          << support_text(v.support) << "\n";
  }
  print_verdicts(job, verdicts, job.margin, out);
  if (job.timings) clock.print(out);
  return 0;
}

}  // namespace

PresentedModule JobSpec::presentation() const {
  if (n < 1) throw InputError("--n must be at least 1");
  PresentedModule m;
  m.n = n;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    try {
      m.relations.emplace_back(parse_row(relations[k], n));
    } catch (const ParseError& e) {
      throw InputError("relation " + std::to_string(k + 1) + " \"" + relations[k] + "\": " + e.what());
    }
  }
  if (shifts.empty()) m.shifts.assign(m.relations.empty() ? 1 : m.relations.front().rank(), 0);
  else m.shifts = shifts;
  return m;
}

JobSpec parse_job(std::string_view text) {
  JobSpec job;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  std::string bound_source;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    const auto eq = l.find('=');
    const std::string where = "job line " + std::to_string(line_no);
    if (eq == std::string::npos) throw InputError(where + ": expected 'key = value'");
    const std::string key = trim(l.substr(0, eq));
    std::string value = trim(l.substr(eq + 1));
    if (key == "n") {
      long v = to_long(value, where);
      if (v < 1) throw InputError(where + ": n must be at least 1");
      job.n = static_cast<std::size_t>(v);
    } else if (key == "shift0") {
      for (long v : integers(value, where)) job.shifts.push_back(static_cast<int>(v));
    } else if (key == "rel") {
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
      job.relations.push_back(value);
    } else if (key == "window") {
      auto v = integers(value, where);
      if (v.size() != 2) throw InputError(where + ": window needs LO HI");
      job.window = {static_cast<int>(v[0]), static_cast<int>(v[1])};
    } else if (key == "margin") {
      long v = to_long(value, where);
      if (v < 1) throw InputError(where + ": margin must be at least 1");
      job.margin = static_cast<std::size_t>(v);
    } else if (key == "length") {
      long v = to_long(value, where);
      if (v < 1) throw InputError(where + ": length must be at least 1");
      job.length = static_cast<std::size_t>(v);
    } else if (key == "format") {
      job.format = parse_format(value);
    } else if (key == "bound") {
      job.bounds.push_back(make_bound(integers(value, where), where));
    } else if (key == "bound-source") {
      bound_source = value;
    } else if (key == "command") {
      check_command(value);
      job.command = value;
    } else {
      throw InputError(where + ": unknown key '" + key + "'");
    }
  }
  if (!bound_source.empty())
    for (auto& b : job.bounds) b.provenance = bound_source;
  return job;
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    check_command(job.command);
    if (job.window.size() == 0 && job.command != "run-examples" && job.command != "dimension" &&
        job.command != "resolve")
      throw InputError("window [" + std::to_string(job.window.lo) + ", " + std::to_string(job.window.hi) +
                       "] is empty");
    return run_job_checked(job, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded D-module de Rham cohomology and completion checks"};
  app.require_subcommand(1, 1);

  struct Flags {
    long n = 1;
    std::vector<std::string> rels;
    std::vector<int> shifts;
    std::vector<int> window;
    long margin = 3;
    long length = 0;
    std::string format = "text";
    std::string job;
    std::vector<int> bound;
    std::string bound_source;
    long threads = 1;
    bool timings = false;
  } f;

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, std::map<std::string, CLI::Option*>> opts;
  for (const char* name : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    auto& o = opts[name];
    o["format"] = sub->add_option("--format", f.format, "text or tabular")->check(CLI::IsMember({"text", "tabular"}));
    o["threads"] = sub->add_option("--threads", f.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--timings", f.timings, "append timing lines");
    if (std::string(name) != "run-examples") {
      o["job"] = sub->add_option("--job", f.job, "job file with key = value lines")->check(CLI::ExistingFile);
      o["n"] = sub->add_option("--n", f.n, "number of variables");
      o["rel"] = sub->add_option("--rel", f.rels, "relation row, components separated by commas")->allow_extra_args(false);
      o["shift0"] = sub->add_option("--shift0", f.shifts, "shift of each F_0 generator");
      o["window"] = sub->add_option("--window", f.window, "strand window LO HI")->expected(2);
      o["margin"] = sub->add_option("--margin", f.margin, "stability margin w");
      o["length"] = sub->add_option("--length", f.length, "resolution length");
      o["bound"] = sub->add_option("--bound", f.bound, "declared vanishing of H^I outside [LO, HI]")->expected(3);
      o["bound-source"] = sub->add_option("--bound-source", f.bound_source, "provenance of --bound");
    }
    subs[name] = sub;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;
  auto given = [&](const char* key) {
    auto& o = opts[command];
    auto it = o.find(key);
    return it != o.end() && it->second->count() > 0;
  };

  JobSpec job;
  try {
    if (given("job")) {
      std::ifstream in(f.job);
      if (!in) throw InputError("cannot read job file " + f.job);
      std::stringstream buf;
      buf << in.rdbuf();
      job = parse_job(buf.str());
    }
    job.command = command;
    if (given("n")) {
      if (f.n < 1) throw InputError("--n must be at least 1");
      job.n = static_cast<std::size_t>(f.n);
    }
    if (given("rel")) job.relations = f.rels;
    if (given("shift0")) job.shifts = f.shifts;
    if (given("window")) job.window = {f.window[0], f.window[1]};
    if (given("margin")) {
      if (f.margin < 1) throw InputError("--margin must be at least 1");
      job.margin = static_cast<std::size_t>(f.margin);
    }
    if (given("length")) {
      if (f.length < 1) throw InputError("--length must be at least 1");
      job.length = static_cast<std::size_t>(f.length);
    }
    if (given("format")) job.format = parse_format(f.format);
    if (given("bound")) {
      UserBound b = make_bound({f.bound[0], f.bound[1], f.bound[2]}, "--bound");
      if (!f.bound_source.empty()) b.provenance = f.bound_source;
      job.bounds = {b};
    }
    job.threads = static_cast<std::size_t>(f.threads);
    job.timings = f.timings;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return run_job(job, out, err);
}

}  // namespace weylcoh
