#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>

#include "symfun/ratfun.hpp"
#include "symfun/rational.hpp"

namespace symfun {

/// Fill-once memo table. Values are computed outside the lock; when two
/// threads race on one key the first insertion wins and both observe it.
class MemoTable {
 public:
  template <class V, class F>
  const V& get(const std::string& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = slots_.find(key);
      if (it != slots_.end()) return *static_cast<const V*>(it->second.get());
    }
    auto fresh = std::make_shared<const V>(compute());
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = slots_.emplace(key, std::move(fresh));
    return *static_cast<const V*>(it->second.get());
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return slots_.size();
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const void>> slots_;
};

/// Scalar field plus caches. For K = RatFun the parameters stay symbolic;
/// for K = Rat they are fixed at the rational point (q0, t0).
template <class K>
class Context {
 public:
  Context() requires std::is_same_v<K, RatFun> = default;
  Context(mpq_class q0, mpq_class t0) requires std::is_same_v<K, Rat>
      : q0_(std::move(q0)), t0_(std::move(t0)) {}

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  K lift(const RatFun& r) const {
    if constexpr (std::is_same_v<K, RatFun>) {
      return r;
    } else {
      return K(r.evaluate(q0_, t0_));
    }
  }
  K q() const { return lift(RatFun::q()); }
  K t() const { return lift(RatFun::t()); }
  K qt(int a, int b) const { return lift(RatFun::qt(a, b)); }

  const mpq_class& q0() const { return q0_; }
  const mpq_class& t0() const { return t0_; }
  /// Short tag distinguishing contexts in reports.
  std::string describe() const {
    if constexpr (std::is_same_v<K, RatFun>) {
      return "symbolic";
    } else {
      return "numeric q=" + q0_.get_str() + " t=" + t0_.get_str();
    }
  }

  MemoTable& memo() const { return memo_; }

 private:
  mpq_class q0_;
  mpq_class t0_;
  mutable MemoTable memo_;
};

/// Process-wide symbolic context.
const Context<RatFun>& symbolic();

/// Shared memo for computations that are always carried out over Q(q,t)
/// and only afterwards lifted into a numeric field.
MemoTable& symbolic_memo();

}  // namespace symfun
