#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symfun/macops.hpp"

namespace symfun {

enum class Status { Pass, Fail };

struct CheckReport {
  std::string name;
  /// Insertion order is the output order.
  std::vector<std::pair<std::string, std::string>> parameters;
  Status status = Status::Pass;
  /// First offending coefficient; always set on Fail.
  std::optional<std::string> witness;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return status == Status::Pass; }
};

/// One JSON object on a single line. Without timing, elapsed is omitted.
std::string report_json(const CheckReport& r, bool with_timing = true);
/// {"summary":{"total":..,"passed":..,"failed":..[,"elapsed_ms":..]}}
std::string summary_json(const std::vector<CheckReport>& reports, bool with_timing = true);

/// Truncation of exp(sum_n (1/n) (1-t^n)/(1-q^n) p_n(x) p_n(y)), p (x) p basis.
template <class K>
BiSymFun<K> kernel_pi(const Context<K>& ctx, int degree_bound);

/// Truncation of exp(sum_n (1-t^n)/n p_n(x) p_n(y)).
template <class K>
BiSymFun<K> hl_kernel(const Context<K>& ctx, int degree_bound);

/// Product in the p (x) p basis, keeping x-degree <= degree_bound.
template <class K>
BiSymFun<K> bisym_multiply(const BiSymFun<K>& a, const BiSymFun<K>& b, int degree_bound);

/// f^*(Pi) / Pi = f(y), with the adjoint acting on the x slot.
template <class K>
CheckReport check_kernel_lemma(const Context<K>& ctx, const SymFun<K>& f, int degree_bound,
                               const std::string& label);

/// Degree d part of the Hall-Littlewood kernel equals sum Q_la (x) P_la.
template <class K>
CheckReport check_hl_cauchy(const Context<K>& ctx, int degree);

/// Orthogonality of the Green table, Q_mu from the table, integrality,
/// monic degree n(mu), and characters at t = 0.
CheckReport check_green(int degree);

/// Columns of the Macdonald basis in one degree: unit leading coefficient,
/// dominance support and orthogonality.
template <class K>
CheckReport check_macdonald_basis(const Context<K>& ctx, int degree);

template <class K>
CheckReport check_deigen(const Context<K>& ctx, int n, const Partition& la);

template <class K>
CheckReport check_theorem_basic(const Context<K>& ctx, int k, const Partition& la);

/// e_1(la) from the sampled partial fractions against sum (q^{-la_i} - 1) t^{i-1}.
CheckReport check_first_eigenvalue(const Partition& la);

/// q-commutator definitions of B(u), C(u) against the closed series.
/// Kind B acts on M_la, kind C on M_la as well; the series is summed up to
/// B^(k+1) or C^(k+1). Throws Error when k is too small for la.
template <class K>
CheckReport check_corollary(const Context<K>& ctx, StepKind kind, int k, const Partition& la,
                            const std::vector<long>& u_samples);

/// <B^(k+1) f, g> = <f, C^(k+1) g> for random f of degree d, g of degree d+1.
template <class K>
CheckReport check_step_adjoint(const Context<K>& ctx, int k, int degree, unsigned seed);

/// The step family at u = q^{-la_i} t^{i-1} is a single Macdonald term with
/// the matrix coefficient; the ratio to the closed product is reported.
CheckReport check_step_evaluation(StepKind kind, const Partition& la, std::size_t i);

/// Alternation of x_1^{mu_1}..x_{N-1}^{mu_{N-1}} x_N^{N-1+n} prod_{i<j<N} (x_i - t x_j).
/// Throws LengthExceedsN unless l(mu) < N.
XPoly<RatFun> alternant_F(const Partition& mu, int n, int N);

/// (-1)^{N+1} F_{mu,n} b_mu / v_mu = sum_i (-1)^{i+1} x_i^{N-1+n} Delta^(i) Q_mu^(i),
/// v_mu taken in N-1 variables.
CheckReport check_alternant_sum(const Partition& mu, int n, int N);

/// Both the sum over i and the divided alternant form vanish.
CheckReport check_proposition(int N, const Partition& la);

/// Every F_{mu,n} entering the identity for la expands in s_nu with nu < la.
CheckReport check_schur_support(int N, const Partition& la);

template <class K>
CheckReport check_finite_symbol(const Context<K>& ctx, int N, int degree_bound,
                                const std::vector<long>& u_samples);

CheckReport check_decomposition(const Partition& la, int N, std::size_t i);

/// M_la at q = 0 is P_la; P_la at t = 0 is s_la and at t = 1 is m_la.
CheckReport check_specialization(const Partition& la);

/// morris_phi(la, mu) against Q_n P_mu for every mu below la.
CheckReport check_morris(const Partition& la);

/// psi_coeff(la, mu) against dP_la/dp_1.
CheckReport check_psi(const Partition& la);

struct SuiteConfig {
  std::string suite = "all";
  int max_degree = 4;
  int max_k = 3;
  int max_weight = 4;
  int degree = 4;
  int degree_bound = 4;
  std::optional<int> n;
  std::optional<Partition> partition;
  std::vector<long> u_samples{2, 3, 5};
  unsigned seed = 1;
};

/// kernel, hl-cauchy, green, deigen, theorem, corollary, step, proposition,
/// finite-symbol, decomposition, macdonald, specialization, cross-oracle, all.
const std::vector<std::string>& suite_names();

/// Runs a suite, handing each report to sink as soon as it is ready.
/// Throws Error on an unknown suite name.
template <class K>
void run_suite(const Context<K>& ctx, const SuiteConfig& cfg, const std::function<void(const CheckReport&)>& sink);

}  // namespace symfun
