#include "nilfilt/homspace.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/subgroup_cache.hpp"

namespace nilfilt {

std::string variant_name(Variant v) { return v.prime == 0 ? "ordinary" : "p-local(" + std::to_string(v.prime) + ")"; }

std::string q_name(int q) { return q == kQInfinity ? "inf" : std::to_string(q); }

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void validate_bound(int q, Variant v) {
  if (q != kQInfinity && q < 2) throw ValidationError("q must be at least 2 or inf, got " + std::to_string(q));
  if (v.prime != 0 && !is_prime(v.prime)) throw ValidationError("p must be prime, got " + std::to_string(v.prime));
}

bool is_hom_tuple(const FiniteGroup& g, std::span<const Elem> entries, int q, Variant v) {
  validate_bound(q, v);
  return class_below(Subgroup::generated(g, entries), q, v.series());
}

namespace {

using Id = SubgroupCache::Id;

// Memoized counting over the subgroup generated by a prefix. Extending a
// prefix by an element of the current subgroup never changes it, so those
// contribute |H| (or |H| - 1) copies of the same suffix count.
class Counter {
 public:
  Counter(const FiniteGroup& g, int q, Variant v, const std::vector<Elem>& allowed)
      : cache_(g, q, v.series()), allowed_(allowed) {}

  SubgroupCache& cache() { return cache_; }

  Count lambda(Id h, int r) {
    if (r == 0) return 1;
    const auto key = memo_key(h, r);
    if (auto it = lambda_memo_.find(key); it != lambda_memo_.end()) return it->second;
    Count total = cache_.order(h) * lambda(h, r - 1);
    for (auto x : allowed_) {
      if (cache_.contains(h, x)) continue;
      const Id j = cache_.join(h, x);
      if (cache_.admissible(j)) total += lambda(j, r - 1);
    }
    lambda_memo_.emplace(key, total);
    return total;
  }

  Count mu(Id h, int r) {
    if (r == 0) return 1;
    const auto key = memo_key(h, r);
    if (auto it = mu_memo_.find(key); it != mu_memo_.end()) return it->second;
    Count total = (cache_.order(h) - 1) * mu(h, r - 1);
    for (auto x : allowed_) {
      if (cache_.contains(h, x)) continue;
      const Id j = cache_.join(h, x);
      if (cache_.admissible(j)) total += mu(j, r - 1);
    }
    mu_memo_.emplace(key, total);
    return total;
  }

  // Entry t counts the admissible r-tuples with exactly t identity entries.
  std::vector<Count> profile(Id h, int r) {
    if (r == 0) return {1};
    const auto key = memo_key(h, r);
    if (auto it = profile_memo_.find(key); it != profile_memo_.end()) return it->second;
    std::vector<Count> out(static_cast<std::size_t>(r) + 1, 0);
    const auto same = profile(h, r - 1);
    for (std::size_t t = 0; t < same.size(); ++t) {
      out[t + 1] += same[t];
      out[t] += (cache_.order(h) - 1) * same[t];
    }
    for (auto x : allowed_) {
      if (cache_.contains(h, x)) continue;
      const Id j = cache_.join(h, x);
      if (!cache_.admissible(j)) continue;
      const auto sub = profile(j, r - 1);
      for (std::size_t t = 0; t < sub.size(); ++t) out[t] += sub[t];
    }
    profile_memo_.emplace(key, out);
    return out;
  }

 private:
  static std::uint64_t memo_key(Id h, int r) { return (static_cast<std::uint64_t>(h) << 8) | static_cast<unsigned>(r); }

  SubgroupCache cache_;
  const std::vector<Elem>& allowed_;
  std::unordered_map<std::uint64_t, Count> lambda_memo_;
  std::unordered_map<std::uint64_t, Count> mu_memo_;
  std::unordered_map<std::uint64_t, std::vector<Count>> profile_memo_;
};

std::vector<Elem> allowed_elements(const FiniteGroup& g, const CountOptions& opt) {
  if (opt.within) {
    if (&opt.within->parent() != &g) throw ValidationError("restriction subgroup belongs to a different group");
    return opt.within->elements();
  }
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return all;
}

void guard_size(std::size_t base, int n, const std::string& name) {
  if (n < 0) throw ValidationError("tuple length must be nonnegative");
  if (n > 63 && base > 1) throw GuardExceeded(name + ": tuple length " + std::to_string(n) + " too large");
  Count acc = 1;
  for (int i = 0; i < n; ++i)
    if (__builtin_mul_overflow(acc, static_cast<Count>(base), &acc))
      throw GuardExceeded(name + ": " + std::to_string(base) + "^" + std::to_string(n) + " exceeds 64-bit counts");
}

// Sums per-first-entry contributions. With one job the whole count runs on a
// single shared memo; with several, each worker owns a Counter and takes
// first entries round-robin. The merge is in first-entry order either way.
template <class R, class Whole, class PerFirst, class Add>
R run_count(const FiniteGroup& g, int q, Variant v, const std::vector<Elem>& allowed, unsigned jobs, Whole whole,
            PerFirst per_first, Add add, R zero) {
  if (jobs <= 1 || allowed.size() < 2) {
    Counter c(g, q, v, allowed);
    return whole(c);
  }
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(allowed.size()));
  std::vector<R> parts(allowed.size(), zero);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mu;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      try {
        Counter c(g, q, v, allowed);
        for (std::size_t i = next++; i < allowed.size(); i = next++) parts[i] = per_first(c, allowed[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
  R total = zero;
  for (auto& p : parts) add(total, p);
  return total;
}

}  // namespace

Count count_hom(const FiniteGroup& g, int n, int q, Variant v, const CountOptions& opt) {
  validate_bound(q, v);
  const auto allowed = allowed_elements(g, opt);
  guard_size(allowed.size(), n, "count_hom");
  if (n == 0) return 1;
  return run_count<Count>(
      g, q, v, allowed, opt.jobs, [&](Counter& c) { return c.lambda(SubgroupCache::trivial(), n); },
      [&](Counter& c, Elem x) -> Count {
        const Id j = c.cache().join(SubgroupCache::trivial(), x);
        return c.cache().admissible(j) ? c.lambda(j, n - 1) : 0;
      },
      [](Count& a, Count b) { a += b; }, Count{0});
}

Count mu_count(const FiniteGroup& g, int k, int q, Variant v, const CountOptions& opt) {
  validate_bound(q, v);
  const auto allowed = allowed_elements(g, opt);
  guard_size(allowed.size(), k, "mu_count");
  if (k == 0) return 1;
  return run_count<Count>(
      g, q, v, allowed, opt.jobs, [&](Counter& c) { return c.mu(SubgroupCache::trivial(), k); },
      [&](Counter& c, Elem x) -> Count {
        if (x == FiniteGroup::kIdentity) return 0;
        const Id j = c.cache().join(SubgroupCache::trivial(), x);
        return c.cache().admissible(j) ? c.mu(j, k - 1) : 0;
      },
      [](Count& a, Count b) { a += b; }, Count{0});
}

Count filtration_count(const FiniteGroup& g, int n, int j, int q, Variant v, const CountOptions& opt) {
  validate_bound(q, v);
  if (j < 0 || j > n) throw ValidationError("filtration index j must satisfy 0 <= j <= n");
  const auto allowed = allowed_elements(g, opt);
  guard_size(allowed.size(), n, "filtration_count");
  if (n == 0) return 1;
  const std::vector<Count> zero(static_cast<std::size_t>(n) + 1, 0);
  const auto prof = run_count<std::vector<Count>>(
      g, q, v, allowed, opt.jobs, [&](Counter& c) { return c.profile(SubgroupCache::trivial(), n); },
      [&](Counter& c, Elem x) {
        std::vector<Count> out(static_cast<std::size_t>(n) + 1, 0);
        const Id id = c.cache().join(SubgroupCache::trivial(), x);
        if (!c.cache().admissible(id)) return out;
        const auto sub = c.profile(id, n - 1);
        const std::size_t shift = x == FiniteGroup::kIdentity ? 1 : 0;
        for (std::size_t t = 0; t < sub.size(); ++t) out[t + shift] += sub[t];
        return out;
      },
      [](std::vector<Count>& a, const std::vector<Count>& b) {
        for (std::size_t t = 0; t < a.size(); ++t) a[t] += b[t];
      },
      zero);
  Count total = 0;
  for (std::size_t t = static_cast<std::size_t>(j); t < prof.size(); ++t) total += prof[t];
  return total;
}

int stabilization_exponent(const FiniteGroup& g) {
  int best = 1;
  for (auto p : prime_factors(static_cast<std::int64_t>(g.order()))) {
    const auto sylows = sylow_subgroups(g, static_cast<int>(p));
    const auto rec = central_series(sylows.front());
    if (!rec.nilpotency_class) throw InternalError("Sylow subgroup is not nilpotent");
    best = std::max(best, *rec.nilpotency_class);
  }
  return std::max(2, best + 1);
}

Count rep_orbit_count(const FiniteGroup& g, int n, int q, Variant v, const CountOptions& opt) {
  validate_bound(q, v);
  if (opt.within) throw ValidationError("rep_orbit_count does not support a restriction subgroup");
  guard_size(g.order(), n, "rep_orbit_count");
  const auto cc = conjugacy_classes(g);
  unsigned __int128 sum = 0;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    const Elem rep[] = {cc.representatives[c]};
    const Subgroup cent = centralizer(g, rep);
    CountOptions inner = opt;
    inner.within = &cent;
    sum += static_cast<unsigned __int128>(cc.classes[c].size()) * count_hom(g, n, q, v, inner);
  }
  if (sum % g.order() != 0) throw InternalError("rep_orbit_count: Burnside sum not divisible by |G|");
  return static_cast<Count>(sum / g.order());
}

std::vector<Elem> identity_free_tuples(const FiniteGroup& g, int k, int q, Variant v, std::size_t max_tuples) {
  validate_bound(q, v);
  std::vector<Elem> out;
  if (k <= 0) return out;
  SubgroupCache cache(g, q, v.series());
  std::vector<Elem> prefix(static_cast<std::size_t>(k));
  std::size_t produced = 0;
  auto dfs = [&](auto&& self, Id h, int pos) -> void {
    if (pos == k) {
      if (++produced > max_tuples)
        throw GuardExceeded("more than " + std::to_string(max_tuples) + " admissible " + std::to_string(k) + "-tuples");
      out.insert(out.end(), prefix.begin(), prefix.end());
      return;
    }
    for (Elem x = 1; x < g.order(); ++x) {
      const Id j = cache.join(h, x);
      if (!cache.admissible(j)) continue;
      prefix[static_cast<std::size_t>(pos)] = x;
      self(self, j, pos + 1);
    }
  };
  dfs(dfs, SubgroupCache::trivial(), 0);
  return out;
}

CountReport count_report(const FiniteGroup& g, int q, Variant v, int nmax, const CountOptions& opt) {
  CountReport r;
  r.group = g.name();
  r.q = q;
  r.variant = v;
  for (int n = 0; n <= nmax; ++n) r.lambda[n] = count_hom(g, n, q, v, opt);
  for (int k = 1; k <= nmax; ++k) r.mu[k] = mu_count(g, k, q, v, opt);
  for (int n = 1; n <= nmax; ++n)
    for (int j = 0; j <= n; ++j) r.s_counts[{n, j}] = filtration_count(g, n, j, q, v, opt);
  r.stabilization = stabilization_exponent(g);
  return r;
}

std::string count_report_tsv(const CountReport& r) {
  std::ostringstream os;
  os << "group\tq\tvariant\tn_or_k\tquantity\tvalue\n";
  const std::string head = r.group + "\t" + q_name(r.q) + "\t" + variant_name(r.variant) + "\t";
  for (const auto& [n, c] : r.lambda) os << head << n << "\tlambda\t" << c << "\n";
  for (const auto& [k, c] : r.mu) os << head << k << "\tmu\t" << c << "\n";
  for (const auto& [nj, c] : r.s_counts) os << head << nj.first << "\tS_" << nj.second << "\t" << c << "\n";
  return os.str();
}

}  // namespace nilfilt
