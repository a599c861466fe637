#include "qcx/weight.hpp"

#include "enum_kernel.hpp"
#include "qcx/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

namespace qcx {

WeightEnumerator::WeightEnumerator(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

BigInt WeightEnumerator::total() const {
  BigInt t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

nlohmann::json WeightEnumerator::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t w = 0; w < counts_.size(); ++w)
    if (counts_[w] != 0) j[std::to_string(w)] = counts_[w].str();
  return j;
}

WeightEnumerator WeightEnumerator::from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object()) throw SpecError("bad-enumerator", "weight enumerator must be a JSON object");
  std::vector<BigInt> counts(n + 1, 0);
  for (const auto& [key, value] : j.items()) {
    std::size_t w = 0;
    try {
      std::size_t used = 0;
      w = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SpecError("bad-enumerator", "weight key '" + key + "' is not an integer");
    }
    if (w > n) throw SpecError("bad-enumerator", "weight " + key + " exceeds length");
    std::string digits = value.is_string() ? value.get<std::string>() : value.dump();
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SpecError("bad-enumerator", "count for weight " + key + " is not a decimal integer");
    counts[w] = BigInt(digits);
  }
  return WeightEnumerator(std::move(counts));
}

std::string WeightEnumerator::render() const {
  std::string out;
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    if (counts_[w] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(w) + '^' + counts_[w].str();
  }
  return out;
}

WeightEnumerator WeightEnumerator::parse(std::string_view s, std::size_t n) {
  std::vector<BigInt> counts(n + 1, 0);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '&' || s[i] == '\\' || s[i] == '.'))
      ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw SpecError("bad-enumerator", what + " at offset " + std::to_string(i));
  };
  auto digits = [&] {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected digits");
    return std::string(s.substr(start, i - start));
  };
  skip();
  while (i < s.size()) {
    const std::size_t w = std::stoul(digits());
    if (i >= s.size() || s[i] != '^') fail("expected '^'");
    ++i;
    std::string c;
    if (i < s.size() && s[i] == '{') {
      ++i;
      c = digits();
      if (i >= s.size() || s[i] != '}') fail("expected '}'");
      ++i;
    } else {
      // a digit run that runs into '^' is a single-digit count followed by
      // the next weight ("0^15^{2709}"); otherwise the whole run counts
      const std::size_t start = i;
      c = digits();
      if (i < s.size() && s[i] == '^') {
        c = c.substr(0, 1);
        i = start + 1;
      }
    }
    if (w > n) fail("weight exceeds length");
    if (counts[w] != 0) fail("repeated weight");
    counts[w] = BigInt(c);
    skip();
  }
  return WeightEnumerator(std::move(counts));
}

BigInt message_count(unsigned Q, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= Q;
  return r;
}

namespace {

struct Plan {
  const Field* F;
  unsigned Q;
  std::size_t n, k, free, shards;
  std::vector<std::vector<Elem>> rows;
};

std::vector<Elem> shard_start(const Plan& plan, std::size_t shard) {
  const Field& F = *plan.F;
  std::vector<Elem> cw(plan.n, kZero);
  for (std::size_t r = plan.free; r < plan.k; ++r) {
    const Elem d{static_cast<std::uint8_t>(shard % plan.Q)};
    shard /= plan.Q;
    if (d.is_zero()) continue;
    for (std::size_t i = 0; i < plan.n; ++i) cw[i] = F.add(cw[i], F.mul(d, plan.rows[r][i]));
  }
  return cw;
}

// Change of the codeword when message digit of row j steps d -> d+1.
std::vector<Elem> step_delta(const Plan& plan, std::size_t j, unsigned d) {
  const Field& F = *plan.F;
  const Elem from{static_cast<std::uint8_t>(d)};
  const Elem to{static_cast<std::uint8_t>((d + 1) % plan.Q)};
  const Elem c = F.sub(to, from);
  std::vector<Elem> v(plan.n);
  for (std::size_t i = 0; i < plan.n; ++i) v[i] = F.mul(c, plan.rows[j][i]);
  return v;
}

template <typename Scan>
std::vector<std::uint64_t> run_shards(const Plan& plan, unsigned threads, Scan scan) {
  const std::size_t bins = plan.n + 1;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, plan.shards));
  std::vector<std::vector<std::uint64_t>> hists(threads, std::vector<std::uint64_t>(bins, 0));
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned t) {
    for (std::size_t s; (s = next.fetch_add(1)) < plan.shards;) scan(s, hists[t].data());
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  std::vector<std::uint64_t> out(bins, 0);
  for (const auto& h : hists)
    for (std::size_t w = 0; w < bins; ++w) out[w] += h[w];
  return out;
}

template <unsigned P, unsigned E, unsigned W>
std::vector<std::uint64_t> sliced(const Plan& plan, unsigned threads) {
  using S = detail::Sliced<P, E, W>;
  const Field& F = *plan.F;
  auto encode = [&](const std::vector<Elem>& v) {
    std::vector<std::uint8_t> comps;
    comps.reserve(v.size() * E);
    for (Elem e : v) {
      const auto c = F.components(e);
      comps.insert(comps.end(), c.begin(), c.end());
    }
    return S::encode(comps, v.size());
  };
  std::vector<S> deltas;
  deltas.reserve(plan.free * plan.Q);
  for (std::size_t j = 0; j < plan.free; ++j)
    for (unsigned d = 0; d < plan.Q; ++d) deltas.push_back(encode(step_delta(plan, j, d)));
  return run_shards(plan, threads, [&](std::size_t shard, std::uint64_t* hist) {
    detail::gray_scan<P, E, W>(deltas, plan.Q, plan.free, encode(shard_start(plan, shard)), hist);
  });
}

// Symbol-table path for shapes without a bitsliced kernel.
std::vector<std::uint64_t> generic(const Plan& plan, unsigned threads) {
  const Field& F = *plan.F;
  std::vector<std::vector<Elem>> deltas;
  for (std::size_t j = 0; j < plan.free; ++j)
    for (unsigned d = 0; d < plan.Q; ++d) deltas.push_back(step_delta(plan, j, d));
  return run_shards(plan, threads, [&](std::size_t shard, std::uint64_t* hist) {
    std::vector<Elem> cw = shard_start(plan, shard);
    auto weight = [&] {
      return static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](Elem e) { return !e.is_zero(); }));
    };
    ++hist[weight()];
    if (plan.free == 0) return;
    std::vector<unsigned> counter(plan.free + 1, 0), gray(plan.free, 0);
    for (;;) {
      std::size_t j = 0;
      while (counter[j] == plan.Q - 1) counter[j++] = 0;
      if (j == plan.free) break;
      ++counter[j];
      const unsigned d = gray[j];
      gray[j] = (d + 1) % plan.Q;
      const auto& delta = deltas[j * plan.Q + d];
      for (std::size_t i = 0; i < plan.n; ++i) cw[i] = F.add(cw[i], delta[i]);
      ++hist[weight()];
    }
  });
}

template <unsigned P, unsigned E>
std::vector<std::uint64_t> dispatch_words(const Plan& plan, unsigned threads) {
  switch ((plan.n + 63) / 64) {
    case 0:
    case 1: return sliced<P, E, 1>(plan, threads);
    case 2: return sliced<P, E, 2>(plan, threads);
    case 3: return sliced<P, E, 3>(plan, threads);
    case 4: return sliced<P, E, 4>(plan, threads);
    case 5: return sliced<P, E, 5>(plan, threads);
    default: return generic(plan, threads);
  }
}

}  // namespace

WeightEnumerator enumerate(const Mat& g, const EnumerateOptions& opts) {
  const Field& F = *g.field();
  const unsigned Q = F.order();
  const std::size_t k = g.rows(), n = g.cols();
  const BigInt needed = message_count(Q, k);
  if (needed > opts.budget)
    throw BudgetExceeded("enumeration needs " + needed.str() + " messages, budget is " + opts.budget.str(),
                         needed.str());
  if (rank(g) != k) throw PreconditionError("not-full-rank", "generator matrix rows are dependent");

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  Plan plan{&F, Q, n, k, k, 1, {}};
  for (std::size_t r = 0; r < k; ++r) {
    const auto row = g.row(r);
    plan.rows.emplace_back(row.begin(), row.end());
  }
  if (threads > 1) {
    // fix the top digits per shard; enough shards to balance the workers
    while (plan.free > 0 && plan.shards < 8ull * threads) {
      --plan.free;
      plan.shards *= Q;
    }
  }

  std::vector<std::uint64_t> hist;
  if (F.p() == 2 && F.prime_degree() == 2)
    hist = dispatch_words<2, 2>(plan, threads);
  else if (F.p() == 3 && F.prime_degree() == 2)
    hist = dispatch_words<3, 2>(plan, threads);
  else if (F.p() == 3 && F.prime_degree() == 4)
    hist = dispatch_words<3, 4>(plan, threads);
  else
    hist = generic(plan, threads);

  std::vector<BigInt> counts(hist.begin(), hist.end());
  return WeightEnumerator(std::move(counts));
}

std::size_t min_distance(const WeightEnumerator& w) {
  for (std::size_t i = 1; i <= w.length(); ++i)
    if (w[i] != 0) return i;
  throw PreconditionError("zero-code", "the code has no nonzero codeword");
}

namespace {

BigInt binom(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

}  // namespace

BigInt krawtchouk(unsigned Q, std::size_t n, std::size_t j, std::size_t i) {
  BigInt sum = 0;
  for (std::size_t s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    BigInt term = binom(i, s) * binom(n - i, j - s) * pow(BigInt(Q - 1), static_cast<unsigned>(j - s));
    if (s % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::size_t k, unsigned Q) {
  const std::size_t n = w.length();
  const BigInt size = message_count(Q, k);
  if (w.total() != size)
    throw PreconditionError("non-exact-division", "enumerator total " + w.total().str() + " is not Q^k = " + size.str());
  std::vector<BigInt> out(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (w[i] != 0) sum += w[i] * krawtchouk(Q, n, j, i);
    if (sum % size != 0 || sum < 0)
      throw PreconditionError("non-exact-division",
                              "MacWilliams coefficient " + std::to_string(j) + " is not a nonnegative integer");
    out[j] = sum / size;
  }
  return WeightEnumerator(std::move(out));
}

std::size_t dual_distance(const WeightEnumerator& w, std::size_t k, unsigned Q) {
  return min_distance(macwilliams(w, k, Q));
}

std::size_t impure_distance(const WeightEnumerator& code, const WeightEnumerator& dual) {
  if (code.length() != dual.length()) throw std::invalid_argument("enumerator lengths differ");
  for (std::size_t i = 1; i <= code.length(); ++i) {
    if (dual[i] < code[i])
      throw PreconditionError("not-self-orthogonal", "dual enumerator is below the code's at weight " + std::to_string(i));
    if (dual[i] > code[i]) return i;
  }
  throw PreconditionError("self-dual", "the code equals its dual");
}

}  // namespace qcx
