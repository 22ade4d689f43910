#include "tsg/perm/group_table.hpp"

#include <bit>
#include <unordered_map>

namespace tsg::perm {

std::size_t ElementSet::count() const
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool ElementSet::is_subset_of(const ElementSet& other) const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<ElementIndex> ElementSet::to_vector() const
{
    std::vector<ElementIndex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool operator<(const ElementSet& a, const ElementSet& b)
{
    return a.to_vector() < b.to_vector();
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : s.words()) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

GroupTable::GroupTable(std::span<const Permutation> sorted_elements)
    : n_(sorted_elements.size()), mul_(n_ * n_), inv_(n_), order_(n_)
{
    std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
    index.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        index.emplace(sorted_elements[i], static_cast<ElementIndex>(i));
    }
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            mul_[a * n_ + b] = index.at(sorted_elements[a] * sorted_elements[b]);
        }
    }
    for (std::size_t a = 0; a < n_; ++a) {
        inv_[a] = index.at(sorted_elements[a].inverse());
        std::uint32_t k = 1;
        for (ElementIndex x = static_cast<ElementIndex>(a); x != 0; x = multiply(x, static_cast<ElementIndex>(a))) {
            ++k;
        }
        order_[a] = k;
    }
}

ElementSet GroupTable::closure(std::span<const ElementIndex> generators) const
{
    ElementSet set(n_);
    set.insert(0);
    std::vector<ElementIndex> members{0};
    for (std::size_t k = 0; k < members.size(); ++k) {
        for (ElementIndex g : generators) {
            const ElementIndex y = multiply(g, members[k]);
            if (!set.contains(y)) {
                set.insert(y);
                members.push_back(y);
            }
        }
    }
    return set;
}

ElementSet GroupTable::conjugate_set(const ElementSet& s, ElementIndex g) const
{
    ElementSet out(n_);
    for (ElementIndex x : s.to_vector()) {
        out.insert(conjugate(x, g));
    }
    return out;
}

std::size_t GroupTable::centralizer_size(ElementIndex a) const
{
    std::size_t count = 0;
    for (std::size_t b = 0; b < n_; ++b) {
        if (commute(a, static_cast<ElementIndex>(b))) {
            ++count;
        }
    }
    return count;
}

}  // namespace tsg::perm
