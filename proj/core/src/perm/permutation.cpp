#include "tsg/perm/permutation.hpp"

#include "tsg/common/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ranges>

namespace tsg::perm {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::ranges::all_of(s, [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view strip_leading_zeros(std::string_view s)
{
    while (s.size() > 1 && s.front() == '0') {
        s.remove_prefix(1);
    }
    return s;
}

bool is_label_char(char c)
{
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')';
}

}  // namespace

bool label_less(std::string_view a, std::string_view b)
{
    const bool da = all_digits(a);
    const bool db = all_digits(b);
    if (da != db) {
        return da;
    }
    if (da) {
        const auto sa = strip_leading_zeros(a);
        const auto sb = strip_leading_zeros(b);
        if (sa.size() != sb.size()) {
            return sa.size() < sb.size();
        }
        if (sa != sb) {
            return sa < sb;
        }
    }
    return a < b;
}

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        index_.emplace(labels_[i], static_cast<Point>(i));
    }
}

std::shared_ptr<const Domain> Domain::make(std::vector<std::string> labels)
{
    if (labels.size() > 0xFFFF) {
        throw InputError("domain too large");
    }
    std::ranges::sort(labels, [](const auto& a, const auto& b) { return label_less(a, b); });
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) {
            throw InputError("empty label in domain");
        }
        if (!std::ranges::all_of(labels[i], is_label_char)) {
            throw InputError("label '" + labels[i] + "' contains whitespace or parentheses");
        }
        if (i > 0 && labels[i] == labels[i - 1]) {
            throw InputError("duplicate label '" + labels[i] + "'");
        }
    }
    return std::shared_ptr<const Domain>(new Domain(std::move(labels)));
}

std::shared_ptr<const Domain> Domain::numbered(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return make(std::move(labels));
}

std::optional<Point> Domain::find(std::string_view label) const
{
    if (auto it = index_.find(std::string(label)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Point Domain::at(std::string_view label) const
{
    if (auto p = find(label)) {
        return *p;
    }
    throw InputError("unknown label '" + std::string(label) + "'");
}

bool same_domain(const DomainPtr& a, const DomainPtr& b)
{
    return a == b || (a && b && *a == *b);
}

Permutation Permutation::identity(DomainPtr domain)
{
    std::vector<Point> images(domain->size());
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(domain), std::move(images));
}

Permutation Permutation::from_images(DomainPtr domain, std::vector<Point> images)
{
    if (images.size() != domain->size()) {
        throw InputError("image length does not match domain size");
    }
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
        if (p >= images.size() || seen[p]) {
            throw InputError("images do not form a bijection");
        }
        seen[p] = true;
    }
    return Permutation(std::move(domain), std::move(images));
}

const std::string& Permutation::apply(std::string_view label) const
{
    return domain_->label(images_[domain_->at(label)]);
}

Permutation Permutation::inverse() const
{
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[images_[i]] = static_cast<Point>(i);
    }
    return Permutation(domain_, std::move(inv));
}

Permutation Permutation::pow(long long exponent) const
{
    const auto n = static_cast<long long>(order());
    long long e = ((exponent % n) + n) % n;
    Permutation result = identity(domain_);
    Permutation base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::size_t Permutation::order() const
{
    std::size_t result = 1;
    for (const auto& cycle : cycles()) {
        result = std::lcm(result, cycle.size());
    }
    return result;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
    std::vector<std::vector<Point>> result;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        std::vector<Point> cycle;
        for (auto p = static_cast<Point>(start); !seen[p]; p = images_[p]) {
            seen[p] = true;
            cycle.push_back(p);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
    std::vector<std::size_t> type;
    std::size_t moved = 0;
    for (const auto& c : cycles()) {
        type.push_back(c.size());
        moved += c.size();
    }
    type.insert(type.end(), images_.size() - moved, 1);
    std::ranges::sort(type, std::greater<>{});
    return type;
}

std::string Permutation::to_string() const
{
    const auto cs = cycles();
    if (cs.empty()) {
        return "id";
    }
    std::string out;
    for (const auto& cycle : cs) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += domain_->label(cycle[i]);
        }
        out += ')';
    }
    return out;
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs)
{
    if (!same_domain(lhs.domain_, rhs.domain_)) {
        throw InputError("cannot compose permutations on different domains");
    }
    std::vector<Point> images(rhs.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i] = lhs.images_[rhs.images_[i]];
    }
    return Permutation(lhs.domain_, std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return h;
}

Permutation parse_permutation(std::string_view text, const DomainPtr& domain)
{
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };

    skip_ws();
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    if (pos == end) {
        throw ParseError("empty permutation", pos);
    }
    if (text.substr(pos, end - pos) == "id") {
        return Permutation::identity(domain);
    }

    std::vector<Point> images(domain->size());
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(domain->size(), false);

    while (pos < end) {
        if (text[pos] != '(') {
            throw ParseError("expected '('", pos);
        }
        ++pos;
        std::vector<Point> cycle;
        while (true) {
            const std::size_t label_start = pos;
            while (pos < end && is_label_char(text[pos])) {
                ++pos;
            }
            if (pos == label_start) {
                throw ParseError("expected a label", pos);
            }
            const auto label = text.substr(label_start, pos - label_start);
            const auto point = domain->find(label);
            if (!point) {
                throw ParseError("unknown label '" + std::string(label) + "'", label_start);
            }
            if (used[*point]) {
                throw ParseError("label '" + std::string(label) + "' repeated", label_start);
            }
            used[*point] = true;
            cycle.push_back(*point);

            if (pos >= end) {
                throw ParseError("unterminated cycle", pos);
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] != ' ') {
                throw ParseError("expected ' ' or ')'", pos);
            }
            while (pos < end && text[pos] == ' ') {
                ++pos;
            }
        }
        if (cycle.size() < 2) {
            throw ParseError("a cycle needs at least two labels", pos - 1);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        skip_ws();
    }
    return Permutation::from_images(domain, std::move(images));
}

}  // namespace tsg::perm
