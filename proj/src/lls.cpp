#include "secint/lls.hpp"

#include "secint/errors.hpp"

#include <algorithm>

namespace secint {

VanishingSequence VanishingSequence::make(std::vector<Integer> entries, Integer degree) {
    if (entries.empty())
        throw InvalidArgument("vanishing sequence must have at least one entry");
    if (sgn(entries.front()) < 0)
        throw InvalidArgument("vanishing orders must be nonnegative");
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] <= entries[i - 1])
            throw InvalidArgument("vanishing orders must be strictly increasing");
    if (entries.back() > degree)
        throw InvalidArgument("vanishing order " + entries.back().get_str() + " exceeds degree " + degree.get_str());
    return VanishingSequence(std::move(entries), std::move(degree));
}

Integer VanishingSequence::weight() const {
    Integer sum = 0;
    for (const auto& a : entries_)
        sum += a;
    Integer rank = static_cast<unsigned long>(r());
    return Integer(sum - rank * (rank + 1) / 2);
}

RamificationSequence RamificationSequence::make(std::vector<Integer> entries, Integer degree) {
    if (entries.empty())
        throw InvalidArgument("ramification sequence must have at least one entry");
    Integer cap = degree - static_cast<unsigned long>(entries.size() - 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (sgn(entries[i]) < 0 || entries[i] > cap)
            throw InvalidArgument("ramification index out of [0, d-r]: " + entries[i].get_str());
        if (i > 0 && entries[i] < entries[i - 1])
            throw InvalidArgument("ramification sequence must be nondecreasing");
    }
    return RamificationSequence(std::move(entries), std::move(degree));
}

Integer RamificationSequence::weight() const {
    Integer sum = 0;
    for (const auto& a : entries_)
        sum += a;
    return sum;
}

RamificationSequence ramification_from_vanishing(const VanishingSequence& a) {
    std::vector<Integer> alpha;
    alpha.reserve(a.entries().size());
    unsigned long i = 0;
    for (const auto& v : a.entries())
        alpha.emplace_back(v - i++);
    return RamificationSequence::make(std::move(alpha), a.degree());
}

VanishingSequence refined_complement(const VanishingSequence& a, const Integer& d) {
    if (a.entries().back() > d)
        throw InvalidArgument("sequence exceeds degree " + d.get_str());
    std::vector<Integer> out;
    out.reserve(a.entries().size());
    for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it)
        out.emplace_back(d - *it);
    return VanishingSequence::make(std::move(out), d);
}

namespace {

template <typename Cmp>
bool compatible(const VanishingSequence& y, const VanishingSequence& z, const Integer& d, Cmp cmp) {
    if (y.r() != z.r())
        return false;
    auto ye = y.entries();
    auto ze = z.entries();
    std::size_t r = y.r();
    for (std::size_t i = 0; i <= r; ++i)
        if (!cmp(Integer(ye[i] + ze[r - i]), d))
            return false;
    return true;
}

} // namespace

bool crude_compatible(const VanishingSequence& y_side, const VanishingSequence& z_side, const Integer& d) {
    return compatible(y_side, z_side, d, [](const Integer& s, const Integer& dd) { return s >= dd; });
}

bool refined_compatible(const VanishingSequence& y_side, const VanishingSequence& z_side, const Integer& d) {
    return compatible(y_side, z_side, d, [](const Integer& s, const Integer& dd) { return s == dd; });
}

Integer plucker_total(const Integer& g, const Integer& r, const Integer& d) {
    return Integer((r + 1) * d + (r + 1) * r / 2 * (2 * g - 2));
}

Integer ramification_budget_at_p(const Integer& r, const Integer& d, const Integer& num_cusps) {
    if (sgn(num_cusps) < 0)
        throw PreconditionError("cusp count must be nonnegative, got " + num_cusps.get_str());
    return Integer(plucker_total(0, r, d) - num_cusps * r);
}

bool is_subsequence_values(const VanishingSequence& a, const VanishingSequence& b) {
    auto be = b.entries();
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [&](const Integer& v) { return std::binary_search(be.begin(), be.end(), v); });
}

} // namespace secint
