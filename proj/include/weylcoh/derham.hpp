#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weylcoh/linalg.hpp"
#include "weylcoh/resolution.hpp"

namespace weylcoh {

/// The complex R^tau (x)_D F_. : position j is the sum of R(g_{l,j}) and the
/// differential T_j = tau(B_j) acts on polynomial vectors by
/// (p_r)_r -> (sum_r tau(B_j[r][l]) (p_r))_l.
///
/// The completed complex uses the same matrices; completed_view() shares them.
struct TorComplex {
  using Differential = std::vector<std::vector<WeylElement>>;  // [r][l]

  std::size_t n = 1;
  std::vector<std::vector<int>> shifts;
  std::shared_ptr<const std::vector<Differential>> differentials;  // T_1..T_L
  bool terminated = false;
  bool completed = false;

  std::size_t length() const { return differentials ? differentials->size() : 0; }
  const Differential& T(std::size_t j) const { return (*differentials)[j - 1]; }
};

/// Entrywise transposition of every B_j. Checks T_j T_{j+1} = 0 on a sample
/// of low-degree monomial vectors and throws InvariantViolation otherwise.
TorComplex build_tor_complex(const GradedResolution& res);

/// The completed complex: same shifts, same (shared) matrices.
TorComplex completed_view(const TorComplex& tor);

struct StrandBasisElement {
  std::size_t component;
  std::vector<int> exponents;
  bool operator==(const StrandBasisElement&) const = default;
};

/// Degree-d piece of a TorComplex: monomial bases of sum_l R_{g_l + d} per
/// position and the exact matrices of the differentials between them.
struct StrandComplex {
  int degree = 0;
  std::vector<std::vector<StrandBasisElement>> bases;  // positions 0..L
  std::vector<RationalMatrix> maps;                    // maps[j-1]: C_j -> C_{j-1}

  std::size_t positions() const { return bases.size(); }
  std::size_t dimension(std::size_t j) const { return j < bases.size() ? bases[j].size() : 0; }
};

StrandComplex strand(const TorComplex& tor, int d);

/// h_j = dim ker T_j - rank T_{j+1} for every position of the strand. The top
/// position is the homology of the truncated complex. Throws
/// InvariantViolation on a negative value.
std::vector<std::size_t> strand_homology(const StrandComplex& s);

struct StrandAudit {
  bool composites_zero = true;
  bool euler_identity = true;
};

/// Exactness certificates for one strand: consecutive matrices compose to
/// zero and the alternating sums of dimensions and homology agree.
StrandAudit audit_strand(const StrandComplex& s, const std::vector<std::size_t>& homology);

/// Structural realization of strandwise injectivity: the completed strand has
/// the same basis and the same matrices, so the induced map on strand
/// homology is the identity.
bool completion_strand_is_identity(const TorComplex& tor, int d);

struct Window {
  int lo = -10;
  int hi = 10;
  std::size_t size() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
};

enum class VerdictStatus { IsomorphismCertified, InjectiveOnly, UndeterminedWindow };
enum class CertificateKind { None, UserBound, Holonomic, ZeroPosition };

std::string to_string(VerdictStatus s);
std::string to_string(CertificateKind k);

struct CompletionVerdict {
  std::size_t index = 0;  ///< cohomological index i
  bool injective = true;
  VerdictStatus status = VerdictStatus::UndeterminedWindow;
  CertificateKind certificate = CertificateKind::None;
  std::string detail;
  bool heuristic = false;  ///< window placement is an empirical stability check
  std::vector<int> support;
};

/// User-declared vanishing of H^index outside [lo, hi].
struct UserBound {
  std::size_t index = 0;
  int lo = 0;
  int hi = 0;
  std::string provenance;
};

struct VanishingCertificates {
  /// Holonomicity verdict and its certificate trail, when computed.
  std::optional<bool> holonomic;
  std::string holonomic_detail;
  std::vector<UserBound> user_bounds;
};

/// dims[i][d - lo] = dim H^i_dR(M) in strand d, read off as h_{n-i}(strand d).
struct DeRhamReport {
  std::size_t n = 1;
  Window window;
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::size_t> totals;
  /// F_{n-i} = 0, so H^i vanishes in every degree.
  std::vector<bool> zero_position;
  std::size_t strands_audited = 0;
  std::size_t margin = 0;
  std::vector<CompletionVerdict> verdicts;

  std::size_t at(std::size_t i, int d) const { return dims[i][static_cast<std::size_t>(d - window.lo)]; }
};

/// De Rham dimensions over the window. The resolution must reach position n+1
/// or be terminated. Strands are computed on `threads` workers (0 = hardware
/// concurrency) and merged by degree. Every strand is audited; a failure
/// throws InvariantViolation.
DeRhamReport derham_dims(const GradedResolution& res, const Window& window, std::size_t threads = 0);

/// Per-index completion verdicts. kappa^i is always injective. It is
/// isomorphism-certified when the support of H^i avoids the `margin` strands
/// at each window edge and a vanishing certificate applies: a user bound, the
/// holonomicity verdict, or F_{n-i} = 0. Throws InputError when margin is 0 or
/// exceeds the window.
std::vector<CompletionVerdict> completion_verdict(const DeRhamReport& report, std::size_t margin,
                                                  const VanishingCertificates& certs);

}  // namespace weylcoh
