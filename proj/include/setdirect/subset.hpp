#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace setdirect {

using Element = std::uint32_t;

/// A set of element indices 0..universe-1 stored as a dense membership mask.
///
/// The population count is maintained on every mutation, so size() is O(1).
/// Iteration visits members in increasing index order.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    Subset(std::size_t universe, std::initializer_list<Element> members) : Subset(universe) {
        for (Element e : members) insert(e);
    }
    Subset(std::size_t universe, std::span<const Element> members) : Subset(universe) {
        for (Element e : members) insert(e);
    }

    static Subset full(std::size_t universe) {
        Subset s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Element e) const noexcept {
        return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u) != 0;
    }

    void insert(Element e) {
        if (e >= universe_) throw std::out_of_range("Subset::insert: element outside universe");
        auto& w = words_[e >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (e & 63);
        if ((w & bit) == 0) {
            w |= bit;
            ++count_;
        }
    }

    void erase(Element e) {
        if (e >= universe_) return;
        auto& w = words_[e >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (e & 63);
        if ((w & bit) != 0) {
            w &= ~bit;
            --count_;
        }
    }

    /// Smallest member, or universe() when empty.
    Element first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) return static_cast<Element>(i * 64 + std::countr_zero(words_[i]));
        }
        return static_cast<Element>(universe_);
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(count_);
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                const int b = std::countr_zero(w);
                f(static_cast<Element>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    Subset& operator|=(const Subset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        recount();
        return *this;
    }
    Subset& operator&=(const Subset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        recount();
        return *this;
    }
    Subset& operator-=(const Subset& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        recount();
        return *this;
    }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

    bool is_subset_of(const Subset& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        }
        return true;
    }
    bool intersects(const Subset& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & o.words_[i]) != 0) return true;
        }
        return false;
    }

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    /// Lexicographic order on sorted member lists, used for deterministic output.
    friend bool operator<(const Subset& a, const Subset& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        // The lists agree below the smallest element d of the symmetric
        // difference. If d is in a, a is smaller unless b stops before d.
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            const std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff == 0) continue;
            const int bit = std::countr_zero(diff);
            const bool in_a = ((a.words_[i] >> bit) & 1u) != 0;
            return in_a ? b.has_member_above(i, bit) : !a.has_member_above(i, bit);
        }
        return false;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t hash() const noexcept {
        std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check_same(const Subset& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("Subset: universe mismatch");
    }
    bool has_member_above(std::size_t word, int bit) const noexcept {
        if (bit < 63 && (words_[word] >> (bit + 1)) != 0) return true;
        for (std::size_t i = word + 1; i < words_.size(); ++i)
            if (words_[i] != 0) return true;
        return false;
    }
    void recount() noexcept {
        count_ = 0;
        for (std::uint64_t w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t count_ = 0;
};

struct SubsetHash {
    std::size_t operator()(const Subset& s) const noexcept { return s.hash(); }
};

}  // namespace setdirect
