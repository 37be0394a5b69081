#include "weylcoh/cases.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "weylcoh/charvariety.hpp"
#include "weylcoh/errors.hpp"
#include "weylcoh/explicit_model.hpp"
#include "weylcoh/expression.hpp"
#include "weylcoh/parallel.hpp"

namespace weylcoh {
namespace {

const char* const kBuiltinCases[] = {
    R"case(
name = D n=1
n = 1
shift0 = 0
window = -10 10
margin = 3
expect table [PAPER]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1
end
expect verdict 0 isomorphism-certified [TRIVIAL]
expect verdict 1 injective-only [PAPER]
expect dimension 2 [TRIVIAL]
expect holonomic no [TRIVIAL]
expect growth [DERIVED]
)case",
    R"case(
name = D n=2
n = 2
shift0 = 0
window = -10 10
margin = 3
expect table [PAPER]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
2: 0 0 0 0 0 0 0 0 0 0 1 2 3 4 5 6 7 8 9 10 11
end
expect verdict 0 isomorphism-certified [TRIVIAL]
expect verdict 1 isomorphism-certified [TRIVIAL]
expect verdict 2 injective-only [PAPER]
expect dimension 4 [TRIVIAL]
expect holonomic no [TRIVIAL]
expect growth [DERIVED]
)case",
    R"case(
name = R n=1
n = 1
shift0 = 0
rel = "d1"
window = -10 10
margin = 3
model = polynomial 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect total 0 = 1 [DERIVED]
expect koszul [DERIVED]
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect dimension 1 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = R n=2
n = 2
shift0 = 0
rel = "d1"
rel = "d2"
window = -10 10
margin = 3
model = polynomial 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
2: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect total 0 = 1 [DERIVED]
expect koszul [DERIVED]
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect verdict 2 isomorphism-certified [DERIVED]
expect dimension 2 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = R n=3
n = 3
shift0 = 0
rel = "d1"
rel = "d2"
rel = "d3"
window = -10 10
margin = 3
model = polynomial 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
2: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
3: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect total 0 = 1 [DERIVED]
expect koszul [DERIVED]
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect verdict 2 isomorphism-certified [DERIVED]
expect verdict 3 isomorphism-certified [DERIVED]
expect dimension 3 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = D/Dx n=1
n = 1
shift0 = 0
rel = "x1"
window = -10 10
margin = 3
model = laurent-quotient -1
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
end
expect total 0 = 0 [PAPER]
expect total 1 = 1 [PAPER]
expect verdict 0 isomorphism-certified [PAPER]
expect verdict 1 isomorphism-certified [PAPER]
expect dimension 1 [DERIVED]
expect holonomic yes [PAPER]
expect growth [DERIVED]
)case",
    R"case(
name = D/D(x*d - 0) n=1
n = 1
shift0 = 0
rel = "x1*d1"
window = -10 10
margin = 3
model = euler-0 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect dimension 1 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = D/D(x*d - 1) n=1
n = 1
shift0 = 0
rel = "x1*d1 - 1"
window = -10 10
margin = 3
model = euler-1 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect dimension 1 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = rank-2 D(0)+D(1) n=1
n = 1
shift0 = 0 1
rel = "[d1, -1]"
rel = "[0, d1]"
window = -10 10
margin = 3
model = second-derivative 0
expect table [DERIVED]
0: 0 0 0 0 0 0 0 0 1 1 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect total 0 = 2 [DERIVED]
expect total 1 = 0 [DERIVED]
expect verdict 0 isomorphism-certified [DERIVED]
expect verdict 1 isomorphism-certified [DERIVED]
expect dimension 1 [DERIVED]
expect holonomic yes [DERIVED]
expect growth [DERIVED]
)case",
    R"case(
name = zero n=1
n = 1
shift0 = 0
rel = "1"
window = -10 10
margin = 3
expect table [TRIVIAL]
0: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
1: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
end
expect verdict 0 isomorphism-certified [TRIVIAL]
expect verdict 1 isomorphism-certified [TRIVIAL]
expect dimension none [TRIVIAL]
expect holonomic yes [TRIVIAL]
)case",
};

constexpr int kGrowthDegree = 12;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

long parse_long(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("case line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  }
}

std::size_t parse_index(const std::string& s, std::size_t line) {
  long v = parse_long(s, line);
  if (v < 0) throw InputError("case line " + std::to_string(line) + ": negative index " + s);
  return static_cast<std::size_t>(v);
}

/// Splits "... [TAG]" into the body and the provenance tag.
Provenance take_tag(std::string& body, std::size_t line) {
  const std::string where = "case line " + std::to_string(line);
  const auto open = body.rfind('[');
  if (body.empty() || open == std::string::npos || body.back() != ']')
    throw InputError(where + ": expectation has no provenance tag ([PAPER], [DERIVED] or [TRIVIAL])");
  const std::string tag = body.substr(open + 1, body.size() - open - 2);
  body = trim(body.substr(0, open));
  if (tag == "PAPER") return Provenance::Paper;
  if (tag == "DERIVED") return Provenance::Derived;
  if (tag == "TRIVIAL") return Provenance::Trivial;
  throw InputError(where + ": unknown provenance tag [" + tag + "]");
}

VerdictStatus parse_status(const std::string& s, std::size_t line) {
  if (s == "isomorphism-certified") return VerdictStatus::IsomorphismCertified;
  if (s == "injective-only") return VerdictStatus::InjectiveOnly;
  if (s == "undetermined-window") return VerdictStatus::UndeterminedWindow;
  throw InputError("case line " + std::to_string(line) + ": unknown verdict '" + s + "'");
}

std::string unquote(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

std::string join_sizes(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string fixed3(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << x;
  return out.str();
}

std::string cell_text(const CellMismatch& m) {
  return "(i=" + std::to_string(m.index) + ", d=" + std::to_string(m.degree) + "): expected " +
         std::to_string(m.expected) + ", got " + std::to_string(m.actual);
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Derived: return "DERIVED";
    case Provenance::Trivial: return "TRIVIAL";
  }
  return "?";
}

ExampleCase parse_case(std::string_view text) {
  ExampleCase c;
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  std::optional<std::size_t> n;
  std::vector<int> shifts;
  bool have_shifts = false;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    std::string l = trim(lines[k]);
    if (l.empty() || l[0] == '#') continue;
    if (l.rfind("expect", 0) == 0) {
      std::string body = trim(l.substr(6));
      Expectation e;
      e.line = line;
      e.provenance = take_tag(body, line);
      auto w = split_words(body);
      if (w.empty()) throw InputError("case line " + std::to_string(line) + ": empty expectation");
      if (w[0] == "table" && w.size() == 1) {
        e.kind = Expectation::Kind::Table;
        for (++k; k < lines.size() && trim(lines[k]) != "end"; ++k) {
          std::string row = trim(lines[k]);
          const auto colon = row.find(':');
          if (colon == std::string::npos)
            throw InputError("case line " + std::to_string(k + 1) + ": table row needs 'i: values'");
          std::size_t i = parse_index(trim(row.substr(0, colon)), k + 1);
          if (i != e.table.size())
            throw InputError("case line " + std::to_string(k + 1) + ": table rows must be 0, 1, ... in order");
          std::vector<std::size_t> values;
          for (const auto& v : split_words(row.substr(colon + 1))) values.push_back(parse_index(v, k + 1));
          e.table.push_back(std::move(values));
        }
        if (k == lines.size()) throw InputError("case line " + std::to_string(line) + ": table without 'end'");
      } else if (w[0] == "total" && w.size() == 4 && w[2] == "=") {
        e.kind = Expectation::Kind::Total;
        e.index = parse_index(w[1], line);
        e.value = parse_long(w[3], line);
      } else if (w[0] == "dimension" && w.size() == 2) {
        e.kind = Expectation::Kind::Dimension;
        if (w[1] != "none") e.dimension = static_cast<int>(parse_long(w[1], line));
      } else if (w[0] == "holonomic" && w.size() == 2 && (w[1] == "yes" || w[1] == "no")) {
        e.kind = Expectation::Kind::Holonomic;
        e.flag = w[1] == "yes";
      } else if (w[0] == "verdict" && w.size() == 3) {
        e.kind = Expectation::Kind::Verdict;
        e.index = parse_index(w[1], line);
        e.status = parse_status(w[2], line);
      } else if (w[0] == "growth" && w.size() == 1) {
        e.kind = Expectation::Kind::Growth;
      } else if (w[0] == "koszul" && w.size() == 1) {
        e.kind = Expectation::Kind::Resolution;
      } else {
        throw InputError("case line " + std::to_string(line) + ": unrecognized expectation '" + body + "'");
      }
      c.expectations.push_back(std::move(e));
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw InputError("case line " + std::to_string(line) + ": expected 'key = value'");
    const std::string key = trim(l.substr(0, eq));
    const std::string value = trim(l.substr(eq + 1));
    if (key == "name") {
      c.name = value;
    } else if (key == "n") {
      long v = parse_long(value, line);
      if (v < 1) throw InputError("case line " + std::to_string(line) + ": n must be at least 1");
      n = static_cast<std::size_t>(v);
    } else if (key == "shift0") {
      have_shifts = true;
      for (const auto& w : split_words(value)) shifts.push_back(static_cast<int>(parse_long(w, line)));
    } else if (key == "rel") {
      c.relation_text.push_back(unquote(value));
    } else if (key == "window") {
      auto w = split_words(value);
      if (w.size() != 2) throw InputError("case line " + std::to_string(line) + ": window needs LO HI");
      c.window = {static_cast<int>(parse_long(w[0], line)), static_cast<int>(parse_long(w[1], line))};
    } else if (key == "margin") {
      c.margin = parse_index(value, line);
    } else if (key == "model") {
      auto w = split_words(value);
      if (w.empty() || w.size() > 2) throw InputError("case line " + std::to_string(line) + ": model needs NAME [SHIFT]");
      c.model = ModelRef{w[0], w.size() == 2 ? static_cast<int>(parse_long(w[1], line)) : 0};
    } else {
      throw InputError("case line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!n) throw InputError("case '" + c.name + "' does not set n");
  if (c.name.empty()) throw InputError("case without a name");
  c.module.n = *n;
  for (const auto& r : c.relation_text) c.module.relations.emplace_back(parse_row(r, *n));
  if (!have_shifts) shifts.assign(c.module.relations.empty() ? 1 : c.module.relations.front().rank(), 0);
  c.module.shifts = shifts;
  validate_presentation(c.module);
  for (const auto& e : c.expectations)
    if (e.kind == Expectation::Kind::Table) {
      if (e.table.size() != *n + 1)
        throw InputError("case '" + c.name + "': table needs rows 0.." + std::to_string(*n));
      for (const auto& row : e.table)
        if (row.size() != c.window.size())
          throw InputError("case '" + c.name + "': table row width differs from the window");
    }
  return c;
}

std::vector<ExampleCase> builtin_cases() {
  std::vector<ExampleCase> out;
  for (const char* text : kBuiltinCases) out.push_back(parse_case(text));
  return out;
}

GradedResolution koszul_resolution(std::size_t n) {
  if (n < 1 || n > 16) throw InputError("Koszul resolution needs 1 <= n <= 16");
  GradedResolution res;
  res.n = n;
  res.order = "hand-coded Koszul";
  std::vector<std::vector<std::size_t>> subsets_by_size(n + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
    subsets_by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  for (std::size_t j = 0; j <= n; ++j) res.shifts.emplace_back(subsets_by_size[j].size(), static_cast<int>(j));
  for (std::size_t j = 1; j <= n; ++j) {
    std::map<std::size_t, std::size_t> target;
    for (std::size_t k = 0; k < subsets_by_size[j - 1].size(); ++k) target[subsets_by_size[j - 1][k]] = k;
    WeylMatrix B;
    for (std::size_t mask : subsets_by_size[j]) {
      FreeElement row(n, subsets_by_size[j - 1].size());
      int position = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask & (std::size_t{1} << v))) continue;
        WeylElement dv = WeylElement::d(n, v);
        if (position % 2 == 1) dv = -dv;
        row[target.at(mask & ~(std::size_t{1} << v))] += dv;
        ++position;
      }
      B.push_back(std::move(row));
    }
    res.maps.push_back(std::move(B));
  }
  res.terminated = true;
  return res;
}

CaseResult run_case_with(const ExampleCase& c, const GradedResolution& res, std::size_t threads) {
  CaseResult out;
  out.name = c.name;
  std::ostringstream rep;
  const std::size_t n = c.module.n;
  auto fail = [&](const std::string& what) {
    out.passed = false;
    out.failures.push_back(what);
  };

  rep << "case " << c.name << "\n";
  rep << "  presentation: n = " << n << ", shifts [";
  for (std::size_t k = 0; k < c.module.shifts.size(); ++k) rep << (k ? ", " : "") << c.module.shifts[k];
  rep << "], relations:";
  if (c.module.relations.empty()) rep << " none";
  for (const auto& r : c.module.relations) rep << " " << render_row(r.components());
  rep << "\n";
  std::vector<std::size_t> ranks;
  for (std::size_t j = 0; j < res.shifts.size(); ++j) ranks.push_back(res.rank(j));
  rep << "  resolution: ranks " << join_sizes(ranks) << (res.terminated ? ", terminated" : "") << "\n";

  std::optional<DeRhamReport> table;
  try {
    verify_resolution(res);
    rep << "  exactness: B_j B_{j+1} = 0 on " << (res.maps.empty() ? 0 : res.maps.size() - 1) << " composites\n";
    table = derham_dims(res, c.window, threads);
    rep << "  strands: " << table->strands_audited << " audited (composites zero, Euler identity)\n";
    TorComplex tor = build_tor_complex(res);
    std::size_t identical = 0;
    for (int d = c.window.lo; d <= c.window.hi; ++d) {
      if (completion_strand_is_identity(tor, d)) ++identical;
      else fail("completion strand " + std::to_string(d) + " is not the identity");
    }
    out.strands_checked = identical;
    rep << "  completion: identical matrices, identity on homology in " << identical << " strands\n";
  } catch (const std::exception& e) {
    fail(std::string("pipeline: ") + e.what());
  }

  rep << "  window [" << c.window.lo << ", " << c.window.hi << "], margin " << c.margin << "\n";
  if (table) {
    rep << "  i \\ d:";
    for (int d = c.window.lo; d <= c.window.hi; ++d) rep << " " << d;
    rep << "\n";
    for (std::size_t i = 0; i <= n; ++i) rep << "  H^" << i << ":" << " " << join_sizes(table->dims[i]) << "\n";
    rep << "  totals:";
    for (std::size_t i = 0; i <= n; ++i) rep << " H^" << i << " = " << table->totals[i] << (i < n ? "," : "");
    rep << "\n";
  }

  std::optional<DimensionVerdict> dim;
  try {
    dim = dimension(characteristic_data(c.module));
    rep << "  dimension: " << (dim->dimension ? "d = " + std::to_string(*dim->dimension) : std::string("zero module"))
        << (dim->holonomic ? ", holonomic" : ", not holonomic") << " (" << dim->certificate()
        << "); valid for the completion by dimension equality\n";
  } catch (const std::exception& e) {
    fail(std::string("dimension: ") + e.what());
  }

  std::optional<double> slope;
  try {
    HilbertSamples h = dimension_oracle(c.module, kGrowthDegree);
    slope = growth_slope(h);
    rep << "  growth: slices " << join_sizes(h.dims) << (h.partial ? " (partial)" : "");
    if (slope) rep << ", slope " << fixed3(*slope) << " at p = " << h.dims.size() - 1;
    rep << "\n";
  } catch (const std::exception& e) {
    fail(std::string("growth oracle: ") + e.what());
  }

  std::vector<CompletionVerdict> verdicts;
  if (table && dim) {
    VanishingCertificates certs;
    certs.holonomic = dim->holonomic;
    certs.holonomic_detail = "holonomic (" + dim->certificate() + ")";
    try {
      verdicts = completion_verdict(*table, c.margin, certs);
      for (const auto& v : verdicts) {
        rep << "  kappa^" << v.index << ": injective; " << to_string(v.status);
        if (v.certificate != CertificateKind::None) rep << " via " << to_string(v.certificate);
        rep << "; " << v.detail << "\n";
      }
    } catch (const std::exception& e) {
      fail(std::string("verdicts: ") + e.what());
    }
  }

  if (c.model && table) {
    try {
      const int span = static_cast<int>(n) + 2;
      ExplicitGradedModule model = named_model(c.model->name, n, c.model->shift, c.window.lo - span, c.window.hi + span);
      model.validate();
      std::size_t agree = 0;
      for (std::size_t i = 0; i <= n; ++i)
        for (int d = c.window.lo; d <= c.window.hi; ++d) {
          if (!oracle_covers(model, i, d)) continue;
          std::size_t expected = explicit_strand_oracle(model, i, d);
          std::size_t actual = table->at(i, d);
          if (expected == actual) {
            ++agree;
          } else {
            out.cells.push_back({i, d, expected, actual});
            fail("oracle " + model.name + " " + cell_text(out.cells.back()));
          }
        }
      rep << "  oracle " << model.name << ": validated; " << agree << " cells agree\n";
    } catch (const std::exception& e) {
      fail(std::string("oracle: ") + e.what());
    }
  }

  for (const auto& e : c.expectations) {
    const std::string tag = " [" + to_string(e.provenance) + "]";
    bool ok = true;
    std::string what;
    switch (e.kind) {
      case Expectation::Kind::Table:
        what = "table";
        if (!table) { ok = false; break; }
        for (std::size_t i = 0; i <= n; ++i)
          for (int d = c.window.lo; d <= c.window.hi; ++d) {
            std::size_t expected = e.table[i][static_cast<std::size_t>(d - c.window.lo)];
            if (expected != table->at(i, d)) {
              ok = false;
              out.cells.push_back({i, d, expected, table->at(i, d)});
              fail("table " + cell_text(out.cells.back()));
            }
          }
        break;
      case Expectation::Kind::Total:
        what = "total H^" + std::to_string(e.index) + " = " + std::to_string(e.value);
        ok = table && e.index <= n && static_cast<long>(table->totals[e.index]) == e.value;
        break;
      case Expectation::Kind::Dimension:
        what = "dimension " + (e.dimension ? std::to_string(*e.dimension) : std::string("none"));
        ok = dim && dim->dimension == e.dimension;
        break;
      case Expectation::Kind::Holonomic:
        what = std::string("holonomic ") + (e.flag ? "yes" : "no");
        ok = dim && dim->holonomic == e.flag;
        break;
      case Expectation::Kind::Verdict:
        what = "verdict " + std::to_string(e.index) + " " + to_string(e.status);
        ok = e.index < verdicts.size() && verdicts[e.index].status == e.status;
        break;
      case Expectation::Kind::Growth:
        what = "growth slope within 0.5 of d";
        ok = dim && dim->dimension && slope && std::abs(*slope - *dim->dimension) <= 0.5;
        break;
      case Expectation::Kind::Resolution: {
        what = "Koszul resolution gives the same table";
        if (!table) { ok = false; break; }
        try {
          GradedResolution k = koszul_resolution(n);
          verify_resolution(k);
          DeRhamReport other = derham_dims(k, c.window, threads);
          ok = other.dims == table->dims;
        } catch (const std::exception& ex) {
          ok = false;
          what += std::string(" (") + ex.what() + ")";
        }
        break;
      }
    }
    rep << "  expect " << what << tag << ": " << (ok ? "ok" : "FAIL") << "\n";
    if (!ok && e.kind != Expectation::Kind::Table) fail("expectation line " + std::to_string(e.line) + ": " + what);
  }

  for (const auto& f : out.failures) rep << "  failure: " << f << "\n";
  rep << "  result: " << (out.passed ? "PASS" : "FAIL") << "\n";
  out.report = rep.str();
  return out;
}

CaseResult run_case(const ExampleCase& c, std::size_t threads) {
  GradedResolution res;
  try {
    res = graded_free_resolution(c.module, c.module.n + 1);
  } catch (const std::exception& e) {
    CaseResult out;
    out.name = c.name;
    out.passed = false;
    out.failures.push_back(std::string("resolution: ") + e.what());
    out.report = "case " + c.name + "\n  failure: " + out.failures.back() + "\n  result: FAIL\n";
    return out;
  }
  return run_case_with(c, res, threads);
}

bool SuiteResult::passed() const {
  for (const auto& c : cases)
    if (!c.passed) return false;
  return true;
}

std::string SuiteResult::report() const {
  std::string s;
  std::size_t ok = 0;
  for (const auto& c : cases) {
    s += c.report;
    if (c.passed) ++ok;
  }
  s += "summary: " + std::to_string(ok) + "/" + std::to_string(cases.size()) + " cases passed\n";
  return s;
}

SuiteResult run_examples(std::size_t threads) {
  SuiteResult suite;
  const std::vector<ExampleCase> cases = builtin_cases();
  suite.cases.resize(cases.size());
  // Cases in parallel, strands within a case sequential; slots keep the order.
  parallel_for(cases.size(), threads, [&](std::size_t k) { suite.cases[k] = run_case(cases[k], 1); });
  return suite;
}

}  // namespace weylcoh
