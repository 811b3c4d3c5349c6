#include "symfun/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "symfun/errors.hpp"

namespace symfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidPartition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
  };
  skip();
  if (i == text.size()) return {};
  for (;;) {
    skip();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
    if (start == i || i - start > 6) {
      throw InvalidPartition("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw InvalidPartition("malformed partition '" + std::string(text) + "'");
    ++i;
  }
  for (int p : parts) {
    if (p == 0) throw InvalidPartition("parts must be positive");
  }
  return Partition(std::move(parts));
}

bool operator<(const Partition& a, const Partition& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  return b.parts_ < a.parts_;
}

std::size_t Partition::hash() const {
  std::size_t h = parts_.size();
  for (int p : parts_) h = h * 131U + static_cast<std::size_t>(p);
  return h;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& cur, const PartitionConstraints& c,
                   std::vector<Partition>& out) {
  const int len = static_cast<int>(cur.size());
  if (remaining == 0) {
    if (c.exact_length && len != *c.exact_length) return;
    out.emplace_back(cur);
    return;
  }
  const int cap = c.exact_length ? *c.exact_length : (c.max_length ? *c.max_length : len + remaining);
  if (len >= cap) return;
  // remaining must fit into the parts still available
  if (static_cast<long>(cap - len) * max_part < remaining) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(remaining - p, p, cur, c, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, const PartitionConstraints& c) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  const int max_part = c.max_part ? *c.max_part : weight;
  if (weight == 0) {
    if (!c.exact_length || *c.exact_length == 0) out.emplace_back();
    return out;
  }
  enumerate_rec(weight, max_part, cur, c, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, const PartitionConstraints& c) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d) {
    auto part = enumerate_partitions(d, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Partition conjugate(const Partition& la) {
  std::vector<int> out;
  if (la.empty()) return {};
  out.resize(la.part(1));
  for (int p : la.parts()) {
    for (int j = 0; j < p; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

Dominance natural_compare(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight()) return Dominance::DifferentWeight;
  if (la == mu) return Dominance::Equal;
  bool ge = true;
  bool le = true;
  int sa = 0;
  int sb = 0;
  const std::size_t n = std::max(la.length(), mu.length());
  for (std::size_t i = 1; i <= n; ++i) {
    sa += la.part(i);
    sb += mu.part(i);
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

bool dominated_by(const Partition& la, const Partition& mu) {
  const Dominance d = natural_compare(la, mu);
  return d == Dominance::Less || d == Dominance::Equal;
}

PartitionStats stats(const Partition& la) {
  PartitionStats s;
  s.c = 1;
  s.z = 1;
  std::size_t i = 0;
  const auto& p = la.parts();
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    const unsigned long k = j - i;
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), k);
    s.c *= f;
    s.z *= f * pw;
    i = j;
  }
  for (std::size_t k = 0; k < p.size(); ++k) s.n_stat += static_cast<long>(k) * p[k];
  return s;
}

namespace {

// (t;t)_k = (1-t)(1-t^2)...(1-t^k)
IntPoly2 t_pochhammer(int k) {
  IntPoly2 r(1L);
  for (int j = 1; j <= k; ++j) r *= IntPoly2(1L) - IntPoly2::monomial(1, 0, j);
  return r;
}

// (t;t)_k / (1-t)^k = prod_j (1 + t + ... + t^{j-1})
IntPoly2 t_factorial(int k) {
  IntPoly2 r(1L);
  for (int j = 1; j <= k; ++j) {
    std::vector<IntPoly2::Term> terms;
    for (int e = 0; e < j; ++e) terms.push_back({0, e, Int(1)});
    r *= IntPoly2::from_terms(std::move(terms));
  }
  return r;
}

}  // namespace

IntPoly2 b_poly(const Partition& la) {
  IntPoly2 r(1L);
  const auto& p = la.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= t_pochhammer(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

IntPoly2 v_poly(const Partition& la, int n) {
  if (static_cast<int>(la.length()) > n) throw LengthExceedsN(la.length(), n);
  IntPoly2 r = t_factorial(n - static_cast<int>(la.length()));
  const auto& p = la.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= t_factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

TFactors t_factors(const Partition& la, std::optional<int> n) {
  TFactors f;
  if (n) f.v = RatFun(v_poly(la, *n));
  f.b = b_poly(la);
  IntPoly2 den(1L);
  for (int p : la.parts()) den *= IntPoly2(1L) - IntPoly2::monomial(1, 0, p);
  f.z_t = RatFun::make(IntPoly2(stats(la).z), den);
  return f;
}

Partition append_one(const Partition& mu) {
  std::vector<int> p = mu.parts();
  p.push_back(1);
  return Partition(std::move(p));
}

bool is_horizontal_strip(const Partition& la, const Partition& mu) {
  if (mu.length() > la.length()) return false;
  for (std::size_t i = 1; i <= la.length(); ++i) {
    if (mu.part(i) > la.part(i)) return false;
    if (mu.part(i) < la.part(i + 1)) return false;
  }
  return true;
}

std::optional<std::size_t> added_box_index(const Partition& la, const Partition& mu) {
  if (la.weight() != mu.weight() + 1) return std::nullopt;
  const std::size_t n = std::max(la.length(), mu.length());
  std::optional<std::size_t> idx;
  for (std::size_t i = 1; i <= n; ++i) {
    const int d = la.part(i) - mu.part(i);
    if (d == 0) continue;
    if (d != 1 || idx) return std::nullopt;
    idx = i;
  }
  return idx;
}

std::vector<Partition> add_box(const Partition& mu) {
  std::vector<Partition> out;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i <= p.size(); ++i) {
    if (i > 0 && i < p.size() && p[i] == p[i - 1]) continue;
    std::vector<int> q = p;
    if (i == q.size()) {
      q.push_back(1);
    } else {
      ++q[i];
    }
    out.emplace_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> remove_box(const Partition& la) {
  std::vector<Partition> out;
  const auto& p = la.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    std::vector<int> q = p;
    --q[i];
    out.emplace_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symfun
