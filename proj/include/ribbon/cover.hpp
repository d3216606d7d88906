#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ribbon {

// Finite cover of the affine line: each open is the complement of a finite
// set of rational points. Pairs of labels are always kept with the
// lexicographically smaller label first; the intersection of two opens
// excludes the union of the two sets.
class Cover {
public:
    Cover() = default;
    explicit Cover(std::map<std::string, std::set<Rat>> opens) : opens_(std::move(opens)) {
        if (opens_.empty()) fail(errc::cover_mismatch, "cover has no opens");
        for (const auto& [label, pts] : opens_) {
            (void)pts;
            if (label.empty() || label.find('|') != std::string::npos)
                fail(errc::cover_mismatch, "bad open label '" + label + "'");
        }
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(opens_.size());
        for (const auto& [label, pts] : opens_) {
            (void)pts;
            out.push_back(label);
        }
        return out;
    }

    bool has(const std::string& label) const { return opens_.count(label) != 0; }

    const std::set<Rat>& excluded(const std::string& label) const {
        auto it = opens_.find(label);
        if (it == opens_.end()) fail(errc::cover_mismatch, "unknown open '" + label + "'");
        return it->second;
    }

    std::set<Rat> pair_excluded(const std::string& i, const std::string& j) const {
        std::set<Rat> out = excluded(i);
        const std::set<Rat>& other = excluded(j);
        out.insert(other.begin(), other.end());
        return out;
    }

    bool contains_point(const std::string& label, const Rat& p) const {
        return excluded(label).count(p) == 0;
    }

    const std::map<std::string, std::set<Rat>>& opens() const { return opens_; }

    friend bool operator==(const Cover& a, const Cover& b) { return a.opens_ == b.opens_; }
    friend bool operator!=(const Cover& a, const Cover& b) { return !(a == b); }

private:
    std::map<std::string, std::set<Rat>> opens_;
};

using PairKey = std::pair<std::string, std::string>;

inline PairKey make_pair_key(const std::string& i, const std::string& j) {
    if (i == j) fail(errc::cover_mismatch, "pair needs two distinct opens");
    return i < j ? PairKey{i, j} : PairKey{j, i};
}

// all i<j pairs of a cover, in lexicographic order
inline std::vector<PairKey> cover_pairs(const Cover& c) {
    std::vector<std::string> ls = c.labels();
    std::vector<PairKey> out;
    for (std::size_t a = 0; a < ls.size(); ++a)
        for (std::size_t b = a + 1; b < ls.size(); ++b)
            out.push_back({ls[a], ls[b]});
    return out;
}

// all i<j<k triples, lexicographic
inline std::vector<std::array<std::string, 3>> cover_triples(const Cover& c) {
    std::vector<std::string> ls = c.labels();
    std::vector<std::array<std::string, 3>> out;
    for (std::size_t a = 0; a < ls.size(); ++a)
        for (std::size_t b = a + 1; b < ls.size(); ++b)
            for (std::size_t d = b + 1; d < ls.size(); ++d)
                out.push_back({ls[a], ls[b], ls[d]});
    return out;
}

} // namespace ribbon
