#pragma once

#include "entangle/minors.hpp"
#include "entangle/structured.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entangle {

enum class Claim {
  E_all_minors_nonzero,
  Etilde_all_minors_nonzero,
  G_all_double_deleted_invertible,
  B_all_triple_deleted_invertible,
  Btilde_all_triple_deleted_invertible,
};

inline std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::E_all_minors_nonzero: return "E_all_minors_nonzero";
    case Claim::Etilde_all_minors_nonzero: return "Etilde_all_minors_nonzero";
    case Claim::G_all_double_deleted_invertible: return "G_all_double_deleted_invertible";
    case Claim::B_all_triple_deleted_invertible: return "B_all_triple_deleted_invertible";
    case Claim::Btilde_all_triple_deleted_invertible: return "Btilde_all_triple_deleted_invertible";
  }
  return "?";
}

/// Outcome of checking one finite instance of a nonvanishing-minor claim.
struct Certificate {
  Claim claim{};
  BandedFamily spec;
  std::string hypothesis;
  bool theory_applies = false;
  bool verified_exhaustively = false;
  std::size_t minors_checked = 0;
  std::optional<IndexSet> counterexample;  // first zero minor, lexicographic

  // G only: |G_n(a,1)^{1,n+2}| and, when |a| = 2, whether it equals the
  // closed value (n+1) resp. (-1)^n (n+1).
  std::optional<Rational> endpoint_minor;
  std::optional<bool> endpoint_matches;

  /// True when the hypothesis holds but the instance fails.
  bool contradicts_theory() const {
    return theory_applies && (!verified_exhaustively || endpoint_matches == false);
  }
};

class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string describe(const Certificate& c) {
  std::string s = std::string(claim_name(c.claim)) + " a=" + to_string(c.spec.a) + " n=" + std::to_string(c.spec.n);
  if (c.counterexample) {
    s += " zero minor at deleted rows {";
    for (std::size_t i = 0; i < c.counterexample->size(); ++i) s += (i ? "," : "") + std::to_string((*c.counterexample)[i]);
    s += "}";
  }
  return s;
}

/// Throws TheoryViolation if the certificate contradicts its own hypothesis.
inline const Certificate& enforce(const Certificate& c) {
  if (c.contradicts_theory()) throw TheoryViolation("hypothesis holds but check failed: " + describe(c));
  return c;
}

namespace detail {

inline Certificate run_exhaustive(Claim claim, BandedFamily spec, std::string hypothesis, bool applies,
                                  std::size_t threads) {
  if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
  Certificate c;
  c.claim = claim;
  c.spec = spec;
  c.hypothesis = std::move(hypothesis);
  c.theory_applies = applies;
  const auto report = all_order_n_minors(build(spec), spec, threads);
  c.minors_checked = report.entries.size();
  c.verified_exhaustively = report.all_nonzero;
  if (!report.all_nonzero) c.counterexample = report.zero_witnesses.front();
  return c;
}

}  // namespace detail

/// All order-n minors of E_n(a,1). Hypothesis: a = 3 or a > 5.
inline Certificate certify_E(const Rational& a, std::size_t n, std::size_t threads = default_thread_count()) {
  return detail::run_exhaustive(Claim::E_all_minors_nonzero, {Family::E, a, 1, n}, "a = 3 or a > 5",
                                a == 3 || a > 5, threads);
}

/// All order-n minors of the all-positive variant. Hypothesis: |a| > 5.
inline Certificate certify_E_tilde(const Rational& a, std::size_t n, std::size_t threads = default_thread_count()) {
  return detail::run_exhaustive(Claim::Etilde_all_minors_nonzero, {Family::Etilde, a, 1, n}, "|a| > 5", abs(a) > 5,
                                threads);
}

/// All double deletions of G_n(a,1). Hypothesis: |a| >= 2.
inline Certificate certify_G(const Rational& a, std::size_t n, std::size_t threads = default_thread_count()) {
  const BandedFamily spec{Family::G, a, 1, n};
  Certificate c = detail::run_exhaustive(Claim::G_all_double_deleted_invertible, spec, "|a| >= 2", abs(a) >= 2,
                                         threads);
  c.endpoint_minor = det(deleted_variant(spec, {1, n + 2}));
  if (a == 2 || a == -2) {
    Rational expected{static_cast<long long>(n + 1)};
    if (a == -2 && n % 2 == 1) expected = -expected;
    c.endpoint_matches = *c.endpoint_minor == expected;
  }
  return c;
}

/// All triple deletions of B_n(a,1) (hypothesis a = 3 or a > 5) or of the
/// tilde variant (hypothesis |a| > 5).
inline Certificate certify_B(const Rational& a, std::size_t n, bool tilde,
                             std::size_t threads = default_thread_count()) {
  if (tilde)
    return detail::run_exhaustive(Claim::Btilde_all_triple_deleted_invertible, {Family::Btilde, a, 1, n}, "|a| > 5",
                                  abs(a) > 5, threads);
  return detail::run_exhaustive(Claim::B_all_triple_deleted_invertible, {Family::B, a, 1, n}, "a = 3 or a > 5",
                                a == 3 || a > 5, threads);
}

/// Dispatch on family name: E, Etilde, G, B, Btilde.
inline Certificate certify(Family family, const Rational& a, std::size_t n,
                           std::size_t threads = default_thread_count()) {
  switch (family) {
    case Family::E: return certify_E(a, n, threads);
    case Family::Etilde: return certify_E_tilde(a, n, threads);
    case Family::G: return certify_G(a, n, threads);
    case Family::B: return certify_B(a, n, false, threads);
    case Family::Btilde: return certify_B(a, n, true, threads);
    default: break;
  }
  throw std::invalid_argument("no certification claim for family " + std::string(family_name(family)));
}

}  // namespace entangle
