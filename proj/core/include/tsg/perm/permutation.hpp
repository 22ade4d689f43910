#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tsg::perm {

using Point = std::uint16_t;

/// Natural label order: all-digit labels compare numerically and sort before
/// every other label; remaining labels compare as plain strings.
[[nodiscard]] bool label_less(std::string_view a, std::string_view b);

/// An ordered, duplicate-free set of labels. Points are indices into it.
class Domain {
public:
    /// Sorts `labels` in natural order. Throws InputError on duplicates or empty labels.
    static std::shared_ptr<const Domain> make(std::vector<std::string> labels);
    /// Labels "1".."n".
    static std::shared_ptr<const Domain> numbered(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::string& label(Point p) const { return labels_.at(p); }
    [[nodiscard]] std::span<const std::string> labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<Point> find(std::string_view label) const;
    /// Throws InputError naming the label when it is absent.
    [[nodiscard]] Point at(std::string_view label) const;

    friend bool operator==(const Domain& a, const Domain& b) { return a.labels_ == b.labels_; }

private:
    explicit Domain(std::vector<std::string> labels);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Point> index_;
};

using DomainPtr = std::shared_ptr<const Domain>;

[[nodiscard]] bool same_domain(const DomainPtr& a, const DomainPtr& b);

/// A bijection on a finite label domain.
///
/// Products compose right to left, as functions: (p * q)(x) = p(q(x)). This is
/// the convention under which (1425)(36) = (12)(14)(25)(36).
class Permutation {
public:
    static Permutation identity(DomainPtr domain);
    /// Throws InputError if `images` is not a bijection of the domain's points.
    static Permutation from_images(DomainPtr domain, std::vector<Point> images);

    [[nodiscard]] const Domain& domain() const { return *domain_; }
    [[nodiscard]] const DomainPtr& domain_ptr() const { return domain_; }
    [[nodiscard]] std::span<const Point> images() const noexcept { return images_; }
    [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }

    [[nodiscard]] Point operator()(Point p) const { return images_[p]; }
    [[nodiscard]] const std::string& apply(std::string_view label) const;

    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] Permutation pow(long long exponent) const;
    [[nodiscard]] std::size_t order() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_involution() const { return !is_identity() && (*this * *this).is_identity(); }

    /// Nontrivial cycles, each rotated to start at its least point, sorted by first point.
    [[nodiscard]] std::vector<std::vector<Point>> cycles() const;
    /// Sorted multiset of cycle lengths including fixed points, longest first.
    [[nodiscard]] std::vector<std::size_t> cycle_type() const;

    /// Canonical cycle notation, e.g. "(1 4 2 5 3 6)"; the identity is "id".
    [[nodiscard]] std::string to_string() const;

    friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
    friend bool operator==(const Permutation& a, const Permutation& b)
    {
        return a.images_ == b.images_ && same_domain(a.domain_, b.domain_);
    }
    /// Lexicographic on one-line image sequences.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.images_ <=> b.images_;
    }

private:
    Permutation(DomainPtr domain, std::vector<Point> images)
        : domain_(std::move(domain)), images_(std::move(images))
    {
    }

    DomainPtr domain_;
    std::vector<Point> images_;
};

/// Parses cycle notation over `domain`:
///
///     perm  := "id" | cycle+
///     cycle := "(" label (" " label)+ ")"
///
/// Labels are runs of characters other than whitespace and parentheses. Throws
/// ParseError (with position) on malformed syntax, unknown or repeated labels.
[[nodiscard]] Permutation parse_permutation(std::string_view text, const DomainPtr& domain);

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace tsg::perm
