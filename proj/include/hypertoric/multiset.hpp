#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypertoric {

/// How one multiset sits inside another.
enum class Containment { not_contained, proper, equal };

/// A finite multiset over opaque non-negative integer element ids.
///
/// Entries are kept sorted by element id with strictly positive
/// multiplicities, so equal multisets compare equal structurally and
/// serialization is canonical. Values are immutable after construction;
/// all algebra returns new values.
class Multiset {
public:
    using Element = std::int64_t;
    using Count = std::int64_t;
    using Entry = std::pair<Element, Count>;

    Multiset() = default;

    Multiset(std::initializer_list<Entry> entries)
        : Multiset(std::vector<Entry>(entries)) {}

    explicit Multiset(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        for (const auto& [elem, count] : entries) {
            if (count < 0) throw std::invalid_argument("multiset: negative multiplicity");
            if (count == 0) continue;
            if (!entries_.empty() && entries_.back().first == elem) {
                entries_.back().second += count;
            } else {
                entries_.emplace_back(elem, count);
            }
        }
    }

    /// Builds from a list of elements; repeats encode multiplicity.
    static Multiset from_elements(const std::vector<Element>& elems) {
        std::vector<Entry> entries;
        entries.reserve(elems.size());
        for (Element e : elems) entries.emplace_back(e, 1);
        return Multiset(std::move(entries));
    }

    const std::vector<Entry>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }

    /// |M| = sum of multiplicities.
    Count size() const {
        Count total = 0;
        for (const auto& [elem, count] : entries_) total += count;
        return total;
    }

    /// supp(M): the sorted list of distinct elements.
    std::vector<Element> support() const {
        std::vector<Element> elems;
        elems.reserve(entries_.size());
        for (const auto& [elem, count] : entries_) elems.push_back(elem);
        return elems;
    }

    Count count(Element e) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), e,
                                   [](const Entry& a, Element b) { return a.first < b; });
        return (it != entries_.end() && it->first == e) ? it->second : 0;
    }

    bool contains(Element e) const { return count(e) > 0; }

    /// Elements with repeats, sorted ascending.
    std::vector<Element> to_elements() const {
        std::vector<Element> out;
        for (const auto& [elem, count] : entries_)
            for (Count i = 0; i < count; ++i) out.push_back(elem);
        return out;
    }

    bool operator==(const Multiset&) const = default;
    auto operator<=>(const Multiset&) const = default;

private:
    std::vector<Entry> entries_;

    friend Multiset merge_multisets(const Multiset& a, const Multiset& b,
                                    Count (*rule)(Count, Count));
};

namespace detail {
inline std::int64_t mult_max(std::int64_t a, std::int64_t b) { return a > b ? a : b; }
inline std::int64_t mult_min(std::int64_t a, std::int64_t b) { return a < b ? a : b; }
inline std::int64_t mult_add(std::int64_t a, std::int64_t b) { return a + b; }
inline std::int64_t mult_sub(std::int64_t a, std::int64_t b) { return a > b ? a - b : 0; }
}  // namespace detail

inline Multiset merge_multisets(const Multiset& a, const Multiset& b,
                                Multiset::Count (*rule)(Multiset::Count, Multiset::Count)) {
    std::vector<Multiset::Entry> out;
    out.reserve(a.entries_.size() + b.entries_.size());
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        Multiset::Element elem;
        Multiset::Count ca = 0, cb = 0;
        if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
            elem = ia->first;
            ca = ia->second;
            ++ia;
        } else if (ia == a.entries_.end() || ib->first < ia->first) {
            elem = ib->first;
            cb = ib->second;
            ++ib;
        } else {
            elem = ia->first;
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        Multiset::Count c = rule(ca, cb);
        if (c > 0) out.emplace_back(elem, c);
    }
    Multiset result;
    result.entries_ = std::move(out);
    return result;
}

/// M1 ∪ M2: multiplicity max(f1, f2) on the union of supports.
inline Multiset union_of(const Multiset& a, const Multiset& b) {
    return merge_multisets(a, b, detail::mult_max);
}

/// M1 ∩ M2: multiplicity min(f1, f2); zero-multiplicity elements dropped.
inline Multiset intersection_of(const Multiset& a, const Multiset& b) {
    return merge_multisets(a, b, detail::mult_min);
}

/// M1 − M2: truncated subtraction; elements reaching 0 leave the support.
inline Multiset difference_of(const Multiset& a, const Multiset& b) {
    return merge_multisets(a, b, detail::mult_sub);
}

/// M1 ⊔ M2: multiplicities add.
inline Multiset sum_of(const Multiset& a, const Multiset& b) {
    return merge_multisets(a, b, detail::mult_add);
}

/// Classifies how m2 sits inside m1: contained iff support-contained and
/// multiplicity-wise ≤; proper iff contained and different.
inline Containment submultiset_relation(const Multiset& m2, const Multiset& m1) {
    for (const auto& [elem, count] : m2.entries())
        if (count > m1.count(elem)) return Containment::not_contained;
    return m2 == m1 ? Containment::equal : Containment::proper;
}

inline bool is_submultiset(const Multiset& m2, const Multiset& m1) {
    return submultiset_relation(m2, m1) != Containment::not_contained;
}

struct MultisetHash {
    std::size_t operator()(const Multiset& m) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (const auto& [elem, count] : m.entries()) {
            h = (h ^ static_cast<std::size_t>(elem)) * 0x100000001b3ull;
            h = (h ^ static_cast<std::size_t>(count)) * 0x100000001b3ull;
        }
        return h;
    }
};

}  // namespace hypertoric
