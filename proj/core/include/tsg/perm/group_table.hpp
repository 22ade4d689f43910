#pragma once

#include "tsg/perm/permutation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace tsg::perm {

using ElementIndex = std::uint32_t;

/// Dense bit set over element indices of one GroupTable.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0), universe_(universe) {}

    void insert(ElementIndex i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool contains(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] bool is_subset_of(const ElementSet& other) const;
    [[nodiscard]] std::vector<ElementIndex> to_vector() const;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    /// Orders by the sorted member list, so smaller indices first.
    friend bool operator<(const ElementSet& a, const ElementSet& b);

private:
    std::vector<std::uint64_t> words_;
    std::size_t universe_ = 0;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept;
};

/// Cayley table of a materialized group. Index 0 is the identity.
class GroupTable {
public:
    explicit GroupTable(std::span<const Permutation> sorted_elements);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] ElementIndex multiply(ElementIndex a, ElementIndex b) const { return mul_[a * n_ + b]; }
    [[nodiscard]] ElementIndex inverse(ElementIndex a) const { return inv_[a]; }
    [[nodiscard]] std::size_t element_order(ElementIndex a) const { return order_[a]; }
    [[nodiscard]] ElementIndex conjugate(ElementIndex x, ElementIndex g) const
    {
        return multiply(multiply(g, x), inverse(g));
    }
    [[nodiscard]] bool commute(ElementIndex a, ElementIndex b) const { return multiply(a, b) == multiply(b, a); }

    /// Smallest subset containing `generators` closed under multiplication.
    [[nodiscard]] ElementSet closure(std::span<const ElementIndex> generators) const;
    [[nodiscard]] ElementSet conjugate_set(const ElementSet& s, ElementIndex g) const;
    [[nodiscard]] std::size_t centralizer_size(ElementIndex a) const;

private:
    std::size_t n_;
    std::vector<ElementIndex> mul_;
    std::vector<ElementIndex> inv_;
    std::vector<std::uint32_t> order_;
};

}  // namespace tsg::perm
