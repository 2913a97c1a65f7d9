#include "cweg/weight_enumerator.hpp"

#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

#include "cweg/errors.hpp"

namespace cweg {

namespace {

std::atomic<unsigned> g_threads{0};

unsigned worker_count() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

struct Key {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Key& o) const { return lo == o.lo && hi == o.hi; }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = k.lo * 0x9E3779B97F4A7C15ULL ^ (k.hi + 0x632BE59BD9B4E019ULL);
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

constexpr unsigned kBits = 7;  // counts are <= 64

void put_count(Key& k, unsigned v, unsigned count) {
    unsigned bit = v * kBits;
    if (bit + kBits <= 63) {
        k.lo |= std::uint64_t(count) << bit;
    } else {
        k.hi |= std::uint64_t(count) << (bit - 63);
    }
}

unsigned get_count(const Key& k, unsigned v) {
    unsigned bit = v * kBits;
    std::uint64_t mask = (std::uint64_t(1) << kBits) - 1;
    if (bit + kBits <= 63) return static_cast<unsigned>((k.lo >> bit) & mask);
    return static_cast<unsigned>((k.hi >> (bit - 63)) & mask);
}

Poly genus_zero(const LinearCode& c) {
    Poly out(c.p(), 0, c.length(), conductor_for(c.p()));
    out.add_term(Exps{static_cast<std::uint16_t>(c.length())}, CycNum(out.conductor(), Rat(1)));
    return out;
}

Rat count_rat(std::uint64_t n) {
    if (n <= static_cast<std::uint64_t>(INT64_MAX)) return Rat(static_cast<long long>(n));
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return Rat(b);
}

// Per-thread accumulation for the binary kernel.
class BinaryWorker {
public:
    BinaryWorker(const std::vector<std::uint64_t>& words, unsigned n, unsigned g)
        : words_(words), n_(n), g_(g), patterns_(1u << g), full_(n == 64 ? ~0ULL : ((1ULL << n) - 1)) {
        std::uint64_t size = 1;
        for (unsigned v = 0; v + 1 < patterns_; ++v) {
            size *= (n + 1);
            if (size > (1u << 20)) {
                size = 0;
                break;
            }
        }
        if (size) dense_.assign(size, 0);
        masks_.assign(g + 1, std::vector<std::uint64_t>(patterns_, 0));
    }

    void run_outer(std::size_t first) {
        masks_[0][0] = full_;
        descend(0, first);
    }

    std::unordered_map<Key, std::uint64_t, KeyHash> sparse;
    std::vector<std::uint64_t> dense_;

private:
    void descend(unsigned level, std::size_t word) {
        const auto& cur = masks_[level];
        auto& nxt = masks_[level + 1];
        std::uint64_t c = words_[word];
        unsigned width = 1u << level;
        for (unsigned u = 0; u < width; ++u) {
            nxt[2 * u] = cur[u] & ~c;
            nxt[2 * u + 1] = cur[u] & c;
        }
        if (level + 1 == g_) {
            record(nxt);
            return;
        }
        for (std::size_t w = 0; w < words_.size(); ++w) descend(level + 1, w);
    }

    void record(const std::vector<std::uint64_t>& m) {
        if (!dense_.empty()) {
            std::size_t idx = 0;
            for (unsigned v = patterns_ - 1; v-- > 0;) idx = idx * (n_ + 1) + static_cast<unsigned>(std::popcount(m[v]));
            ++dense_[idx];
            return;
        }
        Key k;
        for (unsigned v = 0; v < patterns_; ++v) put_count(k, v, static_cast<unsigned>(std::popcount(m[v])));
        ++sparse[k];
    }

    const std::vector<std::uint64_t>& words_;
    unsigned n_, g_, patterns_;
    std::uint64_t full_;
    std::vector<std::vector<std::uint64_t>> masks_;
};

}  // namespace

void set_enumeration_threads(unsigned n) { g_threads.store(n); }

std::uint64_t tuple_count(const LinearCode& c, unsigned g, std::uint64_t budget) {
    std::uint64_t words = codeword_count(c, budget);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < g; ++i) {
        if (words != 0 && total > budget / words)
            throw BudgetExceeded("genus-" + std::to_string(g) + " enumeration needs " + std::to_string(words) + "^" +
                                 std::to_string(g) + " tuples, over the budget of " + std::to_string(budget));
        total *= words;
    }
    return total;
}

Poly cwe(const LinearCode& c, unsigned g, std::uint64_t budget) {
    if (c.p() == 2 && c.length() <= 64 && g >= 1 && g <= 4) return cwe_binary_fast(c, g, budget);
    return cwe_generic(c, g, budget);
}

Poly cwe_generic(const LinearCode& c, unsigned g, std::uint64_t budget) {
    tuple_count(c, g, budget);
    if (g == 0) return genus_zero(c);
    auto words = codewords(c, budget);
    unsigned n = c.length(), p = c.p();
    unsigned nv = ipow_u(p, g);
    std::unordered_map<Exps, std::uint64_t, ExpsHash> counts;
    std::vector<std::vector<unsigned>> idx(g + 1, std::vector<unsigned>(n, 0));
    Exps e(nv, 0);
    // idx[level][i] = encoding of column i restricted to the first `level` codewords
    auto rec = [&](auto&& self, unsigned level) -> void {
        if (level == g) {
            std::fill(e.begin(), e.end(), 0);
            for (unsigned i = 0; i < n; ++i) ++e[idx[g][i]];
            ++counts[e];
            return;
        }
        for (const auto& w : words) {
            for (unsigned i = 0; i < n; ++i) idx[level + 1][i] = idx[level][i] * p + w[i];
            self(self, level + 1);
        }
    };
    rec(rec, 0);
    Poly out(p, g, n, conductor_for(p));
    for (const auto& [ex, k] : counts) out.add_term(ex, CycNum(out.conductor(), count_rat(k)));
    return out;
}

Poly cwe_binary_fast(const LinearCode& c, unsigned g, std::uint64_t budget) {
    if (c.p() != 2 || c.length() > 64) throw ShapeMismatch("binary kernel needs p = 2 and N <= 64");
    if (g > 4) throw ShapeMismatch("binary kernel supports genus <= 4");
    tuple_count(c, g, budget);
    if (g == 0) return genus_zero(c);
    auto words = binary_codewords(c, budget);
    unsigned n = c.length();
    unsigned patterns = 1u << g;
    unsigned nthreads = std::min<std::size_t>(worker_count(), words.size());

    std::vector<BinaryWorker> workers;
    workers.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) workers.emplace_back(words, n, g);
    auto job = [&](unsigned t) {
        for (std::size_t i = t; i < words.size(); i += nthreads) workers[t].run_outer(i);
    };
    if (nthreads == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(job, t);
        for (auto& th : pool) th.join();
    }

    // merge; exact integer sums are order independent
    Poly out(2, g, n, 8);
    std::unordered_map<Key, std::uint64_t, KeyHash> merged;
    for (auto& w : workers) {
        if (!w.dense_.empty()) {
            for (std::size_t idx = 0; idx < w.dense_.size(); ++idx) {
                if (!w.dense_[idx]) continue;
                Key k;
                std::size_t rest = idx;
                unsigned used = 0;
                for (unsigned v = 0; v + 1 < patterns; ++v) {
                    unsigned cnt = static_cast<unsigned>(rest % (n + 1));
                    rest /= (n + 1);
                    put_count(k, v, cnt);
                    used += cnt;
                }
                put_count(k, patterns - 1, n - used);
                merged[k] += w.dense_[idx];
            }
        }
        for (const auto& [k, cnt] : w.sparse) merged[k] += cnt;
    }
    for (const auto& [k, cnt] : merged) {
        Exps e(patterns, 0);
        for (unsigned v = 0; v < patterns; ++v) e[v] = static_cast<std::uint16_t>(get_count(k, v));
        out.add_term(e, CycNum(8, count_rat(cnt)));
    }
    return out;
}

}  // namespace cweg
