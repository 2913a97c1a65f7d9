#include "cweg/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "cweg/errors.hpp"

namespace cweg {

namespace {

struct EffortExceeded {};

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Coloring {
    std::vector<std::uint32_t> col;  // coords first, then words
    std::uint32_t ncol = 0;
    std::uint64_t trace = 0;
};

// Coordinates 0..n-1 and chosen codewords n..n+m-1, joined by incidence.
class Structure {
public:
    Structure(unsigned n, const std::vector<std::uint64_t>& words, const std::vector<unsigned>& word_class)
        : n_(n), m_(static_cast<unsigned>(words.size())), adj_(n + words.size()), word_class_(word_class) {
        for (unsigned w = 0; w < m_; ++w)
            for (unsigned j = 0; j < n; ++j)
                if ((words[w] >> j) & 1) {
                    adj_[j].push_back(n + w);
                    adj_[n + w].push_back(j);
                }
    }

    unsigned n() const { return n_; }

    Coloring initial() const {
        Coloring c;
        c.col.assign(n_ + m_, 0);
        for (unsigned w = 0; w < m_; ++w) c.col[n_ + w] = 1 + word_class_[w];
        c.ncol = 1 + (m_ ? *std::max_element(word_class_.begin(), word_class_.end()) + 1 : 0);
        return c;
    }

    // Colour refinement until stable; the trace summarises every round.
    void refine(Coloring& c) const {
        std::size_t total = c.col.size();
        std::vector<std::pair<std::uint64_t, std::uint32_t>> key(total);
        for (;;) {
            for (std::size_t v = 0; v < total; ++v) {
                std::uint64_t h = 0;
                for (unsigned u : adj_[v]) h += mix(c.col[u]);
                key[v] = {(std::uint64_t(c.col[v]) << 40) ^ (mix(h) >> 24), static_cast<std::uint32_t>(v)};
            }
            // the high bits carry the old colour, so sorting refines it
            std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted(key);
            std::sort(sorted.begin(), sorted.end());
            std::uint32_t next = 0;
            std::vector<std::uint32_t> fresh(total);
            std::uint64_t tr = c.trace;
            std::size_t run = 0;
            for (std::size_t i = 0; i < total; ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) {
                    tr = mix(tr ^ mix(sorted[i - 1].first) ^ run);
                    ++next;
                    run = 0;
                }
                ++run;
                fresh[sorted[i].second] = next;
            }
            if (total) tr = mix(tr ^ mix(sorted[total - 1].first) ^ run);
            std::uint32_t count = total ? next + 1 : 0;
            c.trace = tr;
            bool stable = count == c.ncol;
            c.col = std::move(fresh);
            c.ncol = count;
            if (stable) return;
        }
    }

    Coloring individualize(const Coloring& c, unsigned v) const {
        Coloring out = c;
        // the individualised vertex gets a colour just above its old one
        for (auto& x : out.col) x *= 2;
        out.col[v] += 1;
        out.trace = mix(out.trace ^ 0xABCDEFULL ^ c.col[v]);
        out.ncol = c.ncol;  // forces at least one refinement round
        refine(out);
        return out;
    }

    // First non-singleton coordinate cell, as (colour, members); empty if discrete.
    std::vector<unsigned> first_cell(const Coloring& c, std::uint32_t& colour) const {
        std::map<std::uint32_t, std::vector<unsigned>> cells;
        for (unsigned j = 0; j < n_; ++j) cells[c.col[j]].push_back(j);
        for (auto& [k, members] : cells)
            if (members.size() > 1) {
                colour = k;
                return members;
            }
        return {};
    }

    std::vector<unsigned> cell_of(const Coloring& c, std::uint32_t colour) const {
        std::vector<unsigned> out;
        for (unsigned j = 0; j < n_; ++j)
            if (c.col[j] == colour) out.push_back(j);
        return out;
    }

private:
    unsigned n_, m_;
    std::vector<std::vector<unsigned>> adj_;
    std::vector<unsigned> word_class_;
};

class Searcher {
public:
    Searcher(const LinearCode& code, const Structure& s, std::uint64_t max_nodes)
        : code_(code), s_(s), max_nodes_(max_nodes) {}

    std::uint64_t nodes = 0;

    Coloring indiv(const Coloring& c, unsigned v) {
        if (++nodes > max_nodes_) throw EffortExceeded{};
        return s_.individualize(c, v);
    }

    // An automorphism mapping the source individualisation onto the target one.
    std::optional<std::vector<unsigned>> search(const Coloring& src, const Coloring& tgt) {
        if (src.trace != tgt.trace || src.ncol != tgt.ncol) return std::nullopt;
        std::uint32_t colour = 0;
        auto cell = s_.first_cell(src, colour);
        if (cell.empty()) {
            unsigned n = s_.n();
            std::vector<unsigned> perm(n);
            std::map<std::uint32_t, unsigned> where;
            for (unsigned j = 0; j < n; ++j) where[tgt.col[j]] = j;
            for (unsigned j = 0; j < n; ++j) {
                auto it = where.find(src.col[j]);
                if (it == where.end()) return std::nullopt;
                perm[j] = it->second;
            }
            if (is_automorphism(code_, perm)) return perm;
            return std::nullopt;
        }
        Coloring s2 = indiv(src, cell.front());
        for (unsigned u : s_.cell_of(tgt, colour)) {
            Coloring t2 = indiv(tgt, u);
            if (auto r = search(s2, t2)) return r;
        }
        return std::nullopt;
    }

private:
    const LinearCode& code_;
    const Structure& s_;
    std::uint64_t max_nodes_;
};

std::vector<unsigned> orbit(unsigned point, const std::vector<std::vector<unsigned>>& gens, unsigned n) {
    std::vector<bool> seen(n, false);
    std::vector<unsigned> out{point};
    seen[point] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            unsigned y = g[out[i]];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    return out;
}

}  // namespace

bool is_automorphism(const LinearCode& c, const std::vector<unsigned>& perm) {
    unsigned n = c.length();
    if (perm.size() != n) return false;
    for (const auto& r : c.basis()) {
        Word w(n, 0);
        for (unsigned j = 0; j < n; ++j) w[perm[j]] = r[j];
        if (!c.contains(w)) return false;
    }
    return true;
}

AutResult automorphism_group(const LinearCode& c, const AutOptions& opt) {
    AutResult res;
    if (c.p() != 2 || c.length() > opt.max_length || c.length() > 64) return res;
    unsigned n = c.length();
    if (c.dim() == 0 || n <= 1) {
        res.order = factorial(n);
        return res;
    }

    // smallest nonzero weight classes until they span the code
    auto words = binary_codewords(c);
    std::map<unsigned, std::vector<std::uint64_t>> by_weight;
    for (auto w : words)
        if (w) by_weight[static_cast<unsigned>(std::popcount(w))].push_back(w);
    std::vector<std::uint64_t> chosen;
    std::vector<unsigned> cls;
    unsigned k = 0;
    for (auto& [wt, list] : by_weight) {
        for (auto w : list) {
            chosen.push_back(w);
            cls.push_back(k);
        }
        ++k;
        std::vector<Word> rows;
        for (auto w : chosen) {
            Word r(n, 0);
            for (unsigned j = 0; j < n; ++j) r[j] = (w >> j) & 1;
            rows.push_back(std::move(r));
        }
        if (code_from_rows(2, n, rows, c.type()).dim() == c.dim()) break;
    }

    Structure s(n, chosen, cls);
    Searcher search(c, s, opt.max_nodes);
    try {
        Coloring root = s.initial();
        s.refine(root);
        std::vector<Coloring> level{root};
        std::vector<std::vector<unsigned>> cells;
        for (;;) {
            std::uint32_t colour = 0;
            auto cell = s.first_cell(level.back(), colour);
            if (cell.empty()) break;
            res.base.push_back(cell.front());
            cells.push_back(cell);
            level.push_back(search.indiv(level.back(), cell.front()));
        }
        std::size_t depth = res.base.size();
        res.orbit_sizes.assign(depth, 1);
        BigInt order = 1;
        for (std::size_t i = depth; i-- > 0;) {
            unsigned b = res.base[i];
            auto orb = orbit(b, res.generators, n);
            std::vector<bool> in_orbit(n, false);
            for (unsigned x : orb) in_orbit[x] = true;
            for (unsigned t : cells[i]) {
                if (in_orbit[t]) continue;
                Coloring tgt = search.indiv(level[i], t);
                if (auto perm = search.search(level[i + 1], tgt)) {
                    res.generators.push_back(*perm);
                    orb = orbit(b, res.generators, n);
                    for (unsigned x : orb) in_orbit[x] = true;
                }
            }
            res.orbit_sizes[i] = static_cast<unsigned>(orb.size());
            order *= static_cast<unsigned long>(orb.size());
        }
        res.order = order;
    } catch (const EffortExceeded&) {
        res.order.reset();
    }
    res.nodes = search.nodes;
    return res;
}

std::optional<BigInt> aut_order(const LinearCode& c, const AutOptions& opt) {
    return automorphism_group(c, opt).order;
}

}  // namespace cweg
