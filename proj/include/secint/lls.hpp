#pragma once

// Numerical shadows of (limit) linear series: vanishing and ramification
// sequences at a point, plus the Plücker totals that bound them.

#include "secint/numeric.hpp"

#include <span>
#include <vector>

namespace secint {

// Orders of vanishing 0 <= a_0 < a_1 < ... < a_r <= d of a g^r_d at a point.
class VanishingSequence {
  public:
    static VanishingSequence make(std::vector<Integer> entries, Integer degree);

    std::span<const Integer> entries() const { return entries_; }
    const Integer& degree() const { return degree_; }
    std::size_t r() const { return entries_.size() - 1; }

    // Ramification weight  sum a_i - r(r+1)/2.
    Integer weight() const;

    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
    friend auto operator<=>(const VanishingSequence& a, const VanishingSequence& b) {
        return a.entries_ <=> b.entries_;
    }

  private:
    VanishingSequence(std::vector<Integer> entries, Integer degree)
        : entries_(std::move(entries)), degree_(std::move(degree)) {}
    std::vector<Integer> entries_;
    Integer degree_;
};

// alpha_i = a_i - i; nondecreasing with 0 <= alpha_i <= d - r.
class RamificationSequence {
  public:
    static RamificationSequence make(std::vector<Integer> entries, Integer degree);

    std::span<const Integer> entries() const { return entries_; }
    const Integer& degree() const { return degree_; }
    Integer weight() const;

    friend bool operator==(const RamificationSequence&, const RamificationSequence&) = default;

  private:
    RamificationSequence(std::vector<Integer> entries, Integer degree)
        : entries_(std::move(entries)), degree_(std::move(degree)) {}
    std::vector<Integer> entries_;
    Integer degree_;
};

RamificationSequence ramification_from_vanishing(const VanishingSequence& a);

// The sequence on the other side of a node under refined compatibility:
// (d - a_r, ..., d - a_0). An involution.
VanishingSequence refined_complement(const VanishingSequence& a, const Integer& d);

// a_i(Y) + a_{r-i}(Z) >= d for all i.
bool crude_compatible(const VanishingSequence& y_side, const VanishingSequence& z_side, const Integer& d);
// Equality for all i.
bool refined_compatible(const VanishingSequence& y_side, const VanishingSequence& z_side, const Integer& d);

// Total ramification (r+1)d + binom(r+1,2)(2g-2) of a g^r_d on a smooth genus-g curve.
Integer plucker_total(const Integer& g, const Integer& r, const Integer& d);

// Largest ramification weight left for one point of a rational curve carrying a g^r_d
// once num_cusps other points each take weight at least r.
Integer ramification_budget_at_p(const Integer& r, const Integer& d, const Integer& num_cusps);

// Every entry of a occurs among the entries of b.
bool is_subsequence_values(const VanishingSequence& a, const VanishingSequence& b);

} // namespace secint
