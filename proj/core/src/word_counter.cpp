#include "we/word_counter.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/inlined_vector.h"
#include "absl/hash/hash.h"

namespace we {
namespace {

using Key = absl::InlinedVector<std::uint32_t, 6>;
using Spans = absl::InlinedVector<std::pair<std::int32_t, std::int32_t>, 1>;

constexpr std::int64_t kMaxWindow = std::int64_t{1} << 26;

void merge_into(Spans& v, std::int32_t lo, std::int32_t hi) {
  for (const auto& s : v)
    if (s.first <= lo && hi <= s.second) return;
  Spans out;
  bool placed = false;
  for (const auto& s : v) {
    if (s.second + 1 < lo) {
      out.push_back(s);
    } else if (hi + 1 < s.first) {
      if (!placed) {
        out.emplace_back(lo, hi);
        placed = true;
      }
      out.push_back(s);
    } else {
      lo = std::min(lo, s.first);
      hi = std::max(hi, s.second);
    }
  }
  if (!placed) out.emplace_back(lo, hi);
  v = std::move(out);
}

}  // namespace

struct WordCounter::Impl {
  std::int64_t n;
  unsigned parts;
  unsigned part;
  bool empty_word = false;
  absl::flat_hash_map<Key, Spans> words;
  Key key;
  std::vector<int> choice;

  void insert(std::int32_t lo, std::int32_t hi) {
    if (parts > 1 && absl::Hash<Key>{}(key) % parts != part) return;
    auto [it, fresh] = words.try_emplace(key);
    if (fresh)
      it->second.emplace_back(lo, hi);
    else
      merge_into(it->second, lo, hi);
  }

  void expand(std::span<const Hit> run, std::int64_t t0, std::size_t at,
              std::int32_t lo, std::int32_t hi) {
    if (at == run.size()) {
      insert(lo, hi);
      return;
    }
    auto offset = static_cast<std::uint32_t>(run[at].time - t0) << 6;
    std::uint64_t m = run[at].mask;
    while (m) {
      auto letter = static_cast<std::uint32_t>(std::countr_zero(m));
      m &= m - 1;
      key.push_back(offset | letter);
      expand(run, t0, at + 1, lo, hi);
      key.pop_back();
    }
  }
};

WordCounter::WordCounter(std::int64_t n, unsigned parts, unsigned part)
    : impl_(std::make_unique<Impl>()) {
  if (n < 1) throw InvalidArgument("window length must be at least 1");
  if (n > kMaxWindow) throw InvalidArgument("window length too large");
  if (parts == 0 || part >= parts) throw InvalidArgument("bad partition");
  impl_->n = n;
  impl_->parts = parts;
  impl_->part = part;
}

WordCounter::~WordCounter() = default;
WordCounter::WordCounter(WordCounter&&) noexcept = default;
WordCounter& WordCounter::operator=(WordCounter&&) noexcept = default;

void WordCounter::add(std::span<const Hit> hits, std::int64_t a_min, std::int64_t a_max) {
  Impl& s = *impl_;
  const std::int64_t n = s.n;
  if (a_min > a_max) return;
  const std::size_t m = hits.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (hits[i].mask == 0) throw InvalidArgument("hit without letters");
    if (i && hits[i].time <= hits[i - 1].time) throw InvalidArgument("hits not sorted");
  }

  if (!s.empty_word) {
    if (m == 0) {
      s.empty_word = true;
    } else {
      auto gap = [&](std::int64_t lo, std::int64_t hi) {
        if (std::max(lo, a_min) <= std::min(hi, a_max)) s.empty_word = true;
      };
      gap(-kNoBound, hits[0].time - n);
      for (std::size_t i = 0; i + 1 < m; ++i) gap(hits[i].time + 1, hits[i + 1].time - n);
      gap(hits[m - 1].time + 1, kNoBound);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t ti = hits[i].time;
    const std::int64_t after_prev = i ? hits[i - 1].time + 1 : -kNoBound;
    // Runs of single-letter hits extend one key in place.
    bool simple = true;
    s.key.clear();
    for (std::size_t j = i; j < m && hits[j].time - ti <= n - 1; ++j) {
      if (simple && std::has_single_bit(hits[j].mask)) {
        s.key.push_back(static_cast<std::uint32_t>(hits[j].time - ti) << 6 |
                        static_cast<std::uint32_t>(std::countr_zero(hits[j].mask)));
      } else {
        simple = false;
      }
      std::int64_t lo = std::max({hits[j].time - n + 1, after_prev, a_min});
      std::int64_t hi = std::min({ti, j + 1 < m ? hits[j + 1].time - n : kNoBound, a_max});
      if (lo > hi) continue;
      if (simple) {
        s.insert(static_cast<std::int32_t>(ti - hi), static_cast<std::int32_t>(ti - lo));
        continue;
      }
      s.key.clear();
      s.expand(hits.subspan(i, j - i + 1), ti, 0, static_cast<std::int32_t>(ti - hi),
               static_cast<std::int32_t>(ti - lo));
    }
  }
}

BigCount WordCounter::count() const {
  std::uint64_t total = 0;
  for (const auto& [k, spans] : impl_->words)
    for (const auto& sp : spans) total += static_cast<std::uint64_t>(sp.second - sp.first + 1);
  BigCount c = total;
  if (impl_->empty_word && impl_->part == 0) c += 1;
  return c;
}

std::size_t WordCounter::keys() const { return impl_->words.size(); }

unsigned thread_count() {
  if (const char* env = std::getenv("WE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BigCount count_partitioned(std::int64_t n, const std::function<void(WordCounter&)>& feed) {
  const unsigned parts = thread_count();
  if (parts == 1) {
    WordCounter c(n);
    feed(c);
    return c.count();
  }
  std::vector<BigCount> totals(parts);
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> pool;
  for (unsigned p = 0; p < parts; ++p) {
    pool.emplace_back([&, p] {
      try {
        WordCounter c(n, parts, p);
        feed(c);
        totals[p] = c.count();
      } catch (...) {
        errors[p] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  BigCount sum = 0;
  for (auto& t : totals) sum += t;
  return sum;
}

}  // namespace we
