#pragma once

// Noncommutative polynomials over Q(i). A word is a string of generator
// indices; words are ordered degree-lexicographically with the generator order.

#include "scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace quadrics {

using Word = std::string;  // each char is a generator index

inline Word make_word(std::initializer_list<int> gens) {
    Word w;
    for (int g : gens) w.push_back(static_cast<char>(g));
    return w;
}

struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class FreePoly {
public:
    using Terms = std::map<Word, Scalar, DegLex>;

    FreePoly() = default;
    static FreePoly constant(const Scalar& c) {
        FreePoly p;
        p.add(Word{}, c);
        return p;
    }
    static FreePoly word(const Word& w, const Scalar& c = Scalar(1)) {
        FreePoly p;
        p.add(w, c);
        return p;
    }

    void add(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Terms& mutable_terms() { return terms_; }
    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
    /// Degree of the leading word; -1 for zero.
    long degree() const { return is_zero() ? -1 : static_cast<long>(leading_word().size()); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    FreePoly& operator+=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    FreePoly& operator-=(const FreePoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    FreePoly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    friend FreePoly operator*(const Scalar& s, FreePoly p) { return p *= s; }
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
        FreePoly out;
        for (const auto& [u, c] : a.terms_)
            for (const auto& [v, d] : b.terms_) out.add(u + v, c * d);
        return out;
    }
    friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

    /// Keep only the terms of exactly this degree.
    FreePoly homogeneous_part(std::size_t degree) const {
        FreePoly out;
        for (const auto& [w, c] : terms_)
            if (w.size() == degree) out.add(w, c);
        return out;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [w, c] = *it;
            std::string coef = c.to_string();
            const bool compound = !c.is_real();
            if (compound) coef = "(" + coef + ")";
            const bool negative = !compound && coef.front() == '-';
            if (negative) coef.erase(0, 1);
            out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            first = false;
            std::string mono = word_string(w, names);
            if (w.empty())
                out += coef;
            else if (coef == "1")
                out += mono;
            else
                out += coef + "*" + mono;
        }
        return out;
    }

    static std::string word_string(const Word& w, const std::vector<std::string>& names) {
        if (w.empty()) return "1";
        std::string out;
        std::size_t k = 0;
        while (k < w.size()) {
            std::size_t run = 1;
            while (k + run < w.size() && w[k + run] == w[k]) ++run;
            if (!out.empty()) out += "*";
            out += names.at(static_cast<unsigned char>(w[k]));
            if (run > 1) out += "^" + std::to_string(run);
            k += run;
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace quadrics
