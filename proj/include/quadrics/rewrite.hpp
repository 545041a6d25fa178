#pragma once

// Degree-truncated noncommutative Groebner bases (Buchberger completion over
// deglex), normal forms, Hilbert functions and multiplication tables.

#include "fdalgebra.hpp"
#include "presentation.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace quadrics {

/// Raised when a filtered completion produces a relation of lower degree than its
/// overlap, i.e. the deformation is not flat (typically an invalid Clifford map).
class CompletionAnomaly : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Rule {
    Word lead;
    FreePoly tail;  // lead -> tail, every tail word < lead
};

struct HilbertData {
    std::vector<std::size_t> dims;  // dims[n] = number of normal words of length n
    bool stabilized = false;        // some degree <= bound has no normal words
    std::size_t total() const {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
};

class RewriteSystem {
public:
    /// Completes the given relations up to overlaps of degree d_max. In filtered mode a
    /// leftover of degree below its overlap degree raises CompletionAnomaly.
    static RewriteSystem complete(std::vector<std::string> gens, std::vector<int> parity,
                                  const std::vector<FreePoly>& relations, std::size_t d_max, bool filtered) {
        if (d_max < 3) throw std::invalid_argument("complete: truncation degree must be at least 3");
        RewriteSystem rs;
        rs.gens_ = std::move(gens);
        rs.parity_ = std::move(parity);
        if (rs.parity_.empty()) rs.parity_.assign(rs.gens_.size(), 1);
        rs.d_max_ = d_max;
        for (const auto& r : relations) rs.insert(rs.reduce(r), 0, filtered);
        while (!rs.queue_.empty()) {
            Overlap o = rs.queue_.top();
            rs.queue_.pop();
            if (!rs.entries_[o.a].alive || !rs.entries_[o.b].alive) continue;
            FreePoly s = rs.reduce(rs.s_poly(o));
            if (s.is_zero()) continue;
            rs.insert(std::move(s), o.degree, filtered);
        }
        rs.audit();
        return rs;
    }

    std::size_t num_gens() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::vector<int>& parity() const { return parity_; }
    std::size_t truncation_degree() const { return d_max_; }
    /// Overlaps beyond the bound that were never examined.
    std::size_t skipped_overlaps() const { return skipped_; }
    /// True when no overlap was skipped: the rules form a full Groebner basis.
    bool exact_all_degrees() const { return skipped_ == 0; }

    std::vector<Rule> rules() const {
        std::vector<Rule> out;
        for (const auto& e : entries_)
            if (e.alive) out.push_back({e.lead, e.tail});
        std::sort(out.begin(), out.end(), [](const Rule& a, const Rule& b) { return DegLex{}(a.lead, b.lead); });
        return out;
    }

    /// Full reduction with no degree check.
    FreePoly reduce(FreePoly p) const {
        FreePoly out;
        auto& terms = p.mutable_terms();
        while (!terms.empty()) {
            auto it = std::prev(terms.end());
            Word w = it->first;
            Scalar c = it->second;
            terms.erase(it);
            auto hit = find_divisor(w);
            if (!hit) {
                out.add(w, c);
                continue;
            }
            const auto& [rule, pos] = *hit;
            const Entry& e = entries_[rule];
            const Word prefix = w.substr(0, pos), suffix = w.substr(pos + e.lead.size());
            for (const auto& [u, d] : e.tail.terms()) p.add(prefix + u + suffix, c * d);
        }
        return out;
    }

    bool is_normal(const Word& w) const { return !find_divisor(w); }

    /// True when no rule lead is a suffix of w (w's proper prefix assumed normal).
    bool extends_normal(const Word& w) const {
        for (std::size_t len = 1; len <= w.size() && len < lead_count_.size(); ++len) {
            if (lead_count_[len] == 0) continue;
            if (index_.count(w.substr(w.size() - len))) return false;
        }
        return true;
    }

private:
    struct Entry {
        Word lead;
        FreePoly tail;
        bool alive = true;
    };
    struct Overlap {
        std::size_t degree, seq, a, b, shift;  // word = lead_a + lead_b[len_b - ...]; shift = |lead_a| - overlap
        bool operator>(const Overlap& o) const { return std::tie(degree, seq) > std::tie(o.degree, o.seq); }
    };

    std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const Word& w) const {
        for (std::size_t len = 1; len <= w.size() && len < lead_count_.size(); ++len) {
            if (lead_count_[len] == 0) continue;
            for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
                auto it = index_.find(w.substr(pos, len));
                if (it != index_.end()) return std::make_pair(it->second, pos);
            }
        }
        return std::nullopt;
    }

    FreePoly s_poly(const Overlap& o) const {
        // w = lead_a * q = p * lead_b
        const Entry& a = entries_[o.a];
        const Entry& b = entries_[o.b];
        const std::size_t k = a.lead.size() - o.shift;  // overlap length
        const Word q = b.lead.substr(k), p = a.lead.substr(0, o.shift);
        FreePoly s;
        for (const auto& [u, c] : a.tail.terms()) s.add(u + q, c);
        for (const auto& [u, c] : b.tail.terms()) s.add(p + u, -c);
        return s;
    }

    void insert(FreePoly r, std::size_t overlap_degree, bool filtered) {
        std::vector<FreePoly> pending;
        pending.push_back(std::move(r));
        bool first = true;
        while (!pending.empty()) {
            FreePoly p = reduce(std::move(pending.back()));
            pending.pop_back();
            if (p.is_zero()) continue;
            if (filtered && first && overlap_degree > 0 && static_cast<std::size_t>(p.degree()) < overlap_degree)
                throw CompletionAnomaly("completion anomaly: overlap of degree " + std::to_string(overlap_degree) +
                                        " leaves " + p.to_string(gens_));
            first = false;
            if (p.degree() == 0) {
                if (filtered) throw CompletionAnomaly("completion anomaly: the ideal contains a nonzero constant");
                throw std::domain_error("relations generate the whole algebra");
            }
            p *= p.leading_coeff().inverse();
            Word lead = p.leading_word();
            p.add(lead, Scalar(-1));
            FreePoly tail = Scalar(-1) * p;
            // rules whose lead contains the new lead must be re-derived
            for (std::size_t k = 0; k < entries_.size(); ++k) {
                Entry& e = entries_[k];
                if (!e.alive || e.lead.find(lead) == Word::npos) continue;
                e.alive = false;
                index_.erase(e.lead);
                --lead_count_[e.lead.size()];
                FreePoly back = FreePoly::word(e.lead) - e.tail;
                pending.push_back(std::move(back));
            }
            const std::size_t id = entries_.size();
            entries_.push_back({lead, std::move(tail), true});
            index_[lead] = id;
            if (lead_count_.size() <= lead.size()) lead_count_.resize(lead.size() + 1, 0);
            ++lead_count_[lead.size()];
            for (auto& e : entries_)
                if (e.alive) e.tail = reduce(e.tail);
            for (std::size_t k = 0; k < entries_.size(); ++k) {
                if (!entries_[k].alive) continue;
                enqueue_overlaps(id, k);
                if (k != id) enqueue_overlaps(k, id);
            }
        }
    }

    // Proper overlaps where a suffix of lead_a equals a prefix of lead_b.
    void enqueue_overlaps(std::size_t a, std::size_t b) {
        const Word& la = entries_[a].lead;
        const Word& lb = entries_[b].lead;
        for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
            if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
            const std::size_t degree = la.size() + lb.size() - k;
            if (degree > d_max_) {
                ++skipped_;
                continue;
            }
            queue_.push({degree, seq_++, a, b, la.size() - k});
        }
    }

    void audit() const {
        for (std::size_t a = 0; a < entries_.size(); ++a) {
            if (!entries_[a].alive) continue;
            for (std::size_t b = 0; b < entries_.size(); ++b) {
                if (!entries_[b].alive) continue;
                const Word& la = entries_[a].lead;
                const Word& lb = entries_[b].lead;
                for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
                    if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
                    if (la.size() + lb.size() - k > d_max_) continue;
                    if (!reduce(s_poly({0, 0, a, b, la.size() - k})).is_zero())
                        throw std::logic_error("confluence audit failed");
                }
            }
        }
    }

    std::vector<std::string> gens_;
    std::vector<int> parity_;
    std::size_t d_max_ = 0;
    std::vector<Entry> entries_;
    std::unordered_map<Word, std::size_t> index_;
    std::vector<std::size_t> lead_count_;
    std::priority_queue<Overlap, std::vector<Overlap>, std::greater<>> queue_;
    std::size_t seq_ = 0;
    std::size_t skipped_ = 0;
};

inline std::size_t default_truncation(std::size_t num_gens) { return 2 * num_gens + 2; }

/// Completes a presentation; inhomogeneous presentations use the filtered audit.
inline RewriteSystem complete(const QuadraticPresentation& p, std::size_t d_max = 0) {
    if (d_max == 0) d_max = std::max<std::size_t>(3, default_truncation(p.num_gens()));
    return RewriteSystem::complete(p.gens(), {}, p.relation_polys(), d_max, !p.is_homogeneous());
}

inline FreePoly normal_form(const RewriteSystem& rs, const FreePoly& element) {
    if (element.degree() > static_cast<long>(rs.truncation_degree()) && !rs.exact_all_degrees())
        throw std::out_of_range("normal_form: degree " + std::to_string(element.degree()) +
                                " exceeds truncation degree " + std::to_string(rs.truncation_degree()));
    return rs.reduce(element);
}

/// Normal words of length 0..bound, grouped by length. Throws past the word budget.
inline std::vector<std::vector<Word>> normal_words(const RewriteSystem& rs, std::size_t bound,
                                                   std::size_t budget = 2000000) {
    std::vector<std::vector<Word>> levels{{Word{}}};
    std::size_t count = 1;
    for (std::size_t n = 1; n <= bound; ++n) {
        std::vector<Word> next;
        for (const auto& w : levels.back())
            for (std::size_t g = 0; g < rs.num_gens(); ++g) {
                Word v = w;
                v.push_back(static_cast<char>(g));
                if (rs.extends_normal(v)) next.push_back(std::move(v));
            }
        count += next.size();
        if (count > budget) throw std::length_error("normal word enumeration exceeds budget");
        levels.push_back(std::move(next));
        if (levels.back().empty()) break;
    }
    return levels;
}

inline HilbertData hilbert(const RewriteSystem& rs) {
    HilbertData h;
    for (const auto& level : normal_words(rs, rs.truncation_degree())) h.dims.push_back(level.size());
    h.stabilized = h.dims.back() == 0;
    return h;
}

inline bool is_central_upto(const RewriteSystem& rs, const FreePoly& f) {
    for (std::size_t g = 0; g < rs.num_gens(); ++g) {
        FreePoly x = FreePoly::word(make_word({static_cast<int>(g)}));
        if (!normal_form(rs, f * x - x * f).is_zero()) return false;
    }
    return true;
}
inline bool is_central_upto(const RewriteSystem& rs, const CentralElement& f) {
    return is_central_upto(rs, QuadraticPresentation::to_free_poly(f.lift, rs.num_gens()));
}

/// dim (A/(f))_n = dim A_n - dim A_{n-2} for all n <= d.
inline bool is_regular_upto(const QuadraticPresentation& a, const CentralElement& f, std::size_t d) {
    const std::size_t bound = std::max<std::size_t>(d, 3);
    RewriteSystem base = complete(a, bound);
    auto rels = a.relation_polys();
    rels.push_back(QuadraticPresentation::to_free_poly(f.lift, a.num_gens()));
    RewriteSystem quot = RewriteSystem::complete(a.gens(), {}, rels, bound, false);
    auto hb = normal_words(base, d), hq = normal_words(quot, d);
    auto dim = [](const std::vector<std::vector<Word>>& h, long n) -> long {
        if (n < 0 || static_cast<std::size_t>(n) >= h.size()) return 0;
        return static_cast<long>(h[static_cast<std::size_t>(n)].size());
    };
    for (long n = 0; n <= static_cast<long>(d); ++n)
        if (dim(hq, n) != dim(hb, n) - dim(hb, n - 2)) return false;
    return true;
}

/// Structure constants on the normal-word basis; Z2-degree of a word = sum of generator parities.
inline FDAlgebra multiplication_table(const RewriteSystem& rs) {
    auto levels = normal_words(rs, rs.truncation_degree());
    if (!levels.back().empty())
        throw std::domain_error("multiplication_table: not finite-dimensional within truncation degree " +
                                std::to_string(rs.truncation_degree()));
    const std::size_t top = levels.size() - 2;  // longest normal word
    if (!rs.exact_all_degrees() && 2 * top > rs.truncation_degree())
        throw std::domain_error("multiplication_table: truncation too low for products of normal words");
    std::vector<Word> basis;
    for (const auto& level : levels)
        for (const auto& w : level) basis.push_back(w);
    std::unordered_map<Word, std::size_t> pos;
    for (std::size_t k = 0; k < basis.size(); ++k) pos[basis[k]] = k;
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (const auto& w : basis) {
        labels.push_back(FreePoly::word_string(w, rs.gens()));
        int deg = 0;
        for (char g : w) deg += rs.parity()[static_cast<unsigned char>(g)];
        grading.push_back(deg & 1);
    }
    FDAlgebra a(
        labels,
        [&](std::size_t i, std::size_t j) {
            Vec v(basis.size());
            const FreePoly prod = rs.reduce(FreePoly::word(basis[i] + basis[j]));
            for (const auto& [w, c] : prod.terms()) v[pos.at(w)] = c;
            return v;
        },
        unit_vector(basis.size(), 0), grading);
    if (!a.is_associative()) throw std::logic_error("multiplication_table: table is not associative");
    return a;
}

}  // namespace quadrics
