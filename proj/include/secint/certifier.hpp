#pragma once

// Emptiness certificates for Gamma_e(l1) ∩ V_e^{e-f}(K - l1) on a general curve.
//
// A divisor in the intersection forces two series on the curve,
//   |D+E| = g^r1_d1   and   |2D+E| = g^(r1+f)_(d1+e),
// whose limits on a flag curve split at a node p into a Y side (genus d1, carrying
// all d1 points) and a Z side (genus g-d1). The refined limits restrict the
// vanishing sequences at p; the certifier enumerates every pair of Y-side
// sequences and keeps those that survive all necessary conditions. No survivors
// means the intersection is empty.

#include "secint/bn_core.hpp"
#include "secint/lls.hpp"
#include "secint/numeric.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace secint {

enum class CertificateStatus { Empty, Inconclusive, NotApplicable };

std::string_view to_string(CertificateStatus status);

namespace reason {
inline constexpr std::string_view kGateFailed = "GATE_FAILED";
inline constexpr std::string_view kTildeBnNegative = "TILDE_BN_NEGATIVE";
inline constexpr std::string_view kSpecialRuleBpfTrick = "SPECIAL_RULE_BPF_TRICK";
inline constexpr std::string_view kGenusGate = "GENUS_GATE";
inline constexpr std::string_view kCaseIExcluded = "CASE_I_EXCLUDED";
inline constexpr std::string_view kCaseINotExcluded = "CASE_I_NOT_EXCLUDED";
inline constexpr std::string_view kCaseIINoSurvivor = "CASE_II_NO_SURVIVOR";
inline constexpr std::string_view kCaseIISurvivors = "CASE_II_SURVIVORS";
inline constexpr std::string_view kSpecialityTwo = "SPECIALITY_TWO_EMPTY";
inline constexpr std::string_view kCanonicalBpf = "CANONICAL_PENCIL_BPF_EMPTY";
inline constexpr std::string_view kCanonicalNotBpf = "CANONICAL_PENCIL_NOT_BPF";
} // namespace reason

// Necessary conditions on the sequences at the node p.
enum class Constraint : unsigned {
    Zero,  // both Y-side sequences start with 0
    Sub,   // a1_Y values occur in at_Y
    E,     // f = 1 only: e occurs in at_Y
    PlkY1, // Plücker budget for l1 on R_Y (d1 cusps)
    PlkY2, // Plücker budget for l~ on R_Y
    PlkZ1, // Plücker budget for l1 on R_Z (g-d1 cusps)
    PlkZ2, // Plücker budget for l~ on R_Z
    ZSub,  // Z-side values of l1 occur in Z-side values of l~
};

inline constexpr std::array kAllConstraints = {Constraint::Zero,  Constraint::Sub,   Constraint::E,
                                               Constraint::PlkY1, Constraint::PlkY2, Constraint::PlkZ1,
                                               Constraint::PlkZ2, Constraint::ZSub};

std::string_view constraint_id(Constraint c);
std::optional<Constraint> parse_constraint_id(std::string_view id);

class ConstraintFlags {
  public:
    static ConstraintFlags none() { return {}; }
    // Every constraint, with C-E and C-ZSUB only when f = 1.
    static ConstraintFlags defaults_for(const Integer& f);

    ConstraintFlags with(Constraint c) const;
    ConstraintFlags without(Constraint c) const;
    bool enabled(Constraint c) const { return bits_.test(static_cast<unsigned>(c)); }
    bool subset_of(const ConstraintFlags& other) const { return (bits_ & ~other.bits_).none(); }

    friend bool operator==(const ConstraintFlags&, const ConstraintFlags&) = default;

  private:
    std::bitset<kAllConstraints.size()> bits_;
};

// (g, r1, d1, e, f) with rho(g,r1,d1) >= 0, effective residual and 0 <= f < e <= min(d1, d2).
class CertifierInstance {
  public:
    static CertifierInstance make(Integer g, Integer r1, Integer d1, Integer e, Integer f);

    const Integer& g() const { return l1_.g(); }
    const Integer& r1() const { return l1_.r(); }
    const Integer& d1() const { return l1_.d(); }
    const Integer& e() const { return secant_.e(); }
    const Integer& f() const { return secant_.f(); }
    const SeriesParams& l1() const { return l1_; }
    const SeriesParams& l2() const { return l2_; }
    Integer rho() const { return l1_.rho(); }

    // Type of |2D+E|: (g, r1+f, d1+e). Not validated as a series.
    Integer tilde_r() const { return Integer(r1() + f()); }
    Integer tilde_d() const { return Integer(d1() + e()); }

  private:
    CertifierInstance(SeriesParams l1, SeriesParams l2, SecantParams secant)
        : l1_(std::move(l1)), l2_(std::move(l2)), secant_(std::move(secant)) {}
    SeriesParams l1_, l2_;
    SecantParams secant_;
};

// Y-side vanishing sequences at p; the Z sides follow by refined complement.
struct SequencePair {
    VanishingSequence a1_y; // l1, degree d1
    VanishingSequence at_y; // l~, degree d1+e

    VanishingSequence a1_z() const { return refined_complement(a1_y, a1_y.degree()); }
    VanishingSequence at_z() const { return refined_complement(at_y, at_y.degree()); }

    friend bool operator==(const SequencePair&, const SequencePair&) = default;
    friend auto operator<=>(const SequencePair& a, const SequencePair& b) {
        if (auto c = a.a1_y <=> b.a1_y; c != 0)
            return c;
        return a.at_y <=> b.at_y;
    }
};

inline constexpr std::uint64_t kDefaultSearchCap = 100'000'000;
inline constexpr std::size_t kDefaultWitnessCap = 1000;

// Case (i), all points collapsing to one: a point of total ramification (weight d1-r1)
// plus g cusps (weight r1 each) exceeds the rational Plücker budget iff g > d1 - r1.
bool case_i_excluded(const Integer& g, const Integer& r1, const Integer& d1);

struct XSumBounds {
    Integer lo;
    Integer hi;
};

// Range for x = x_1 + ... + x_r1 implied by the l1 budgets on both spines.
XSumBounds x_sum_bounds(const Integer& g, const Integer& r1, const Integer& d1);

// Size of the candidate set the enumerator walks for these flags.
Integer search_domain_size(const CertifierInstance& inst, const ConstraintFlags& flags);

// Calls visit on every survivor in lexicographic order of (a1_Y, at_Y) and returns the
// survivor count. Requires g >= d1. Throws SearchSpaceTooLarge if the domain exceeds cap.
std::uint64_t for_each_survivor(const CertifierInstance& inst, const ConstraintFlags& flags,
                                const std::function<void(const SequencePair&)>& visit,
                                std::uint64_t cap = kDefaultSearchCap);

std::vector<SequencePair> enumerate_candidates(const CertifierInstance& inst, const ConstraintFlags& flags,
                                               std::uint64_t cap = kDefaultSearchCap);

// Re-checks one pair against the enabled constraints through the lls operations.
bool satisfies_constraints(const CertifierInstance& inst, const ConstraintFlags& flags, const SequencePair& pair);

// Constraints that actually act for this instance (C-E is inert unless f = 1).
std::vector<std::string> effective_constraint_ids(const CertifierInstance& inst, const ConstraintFlags& flags);

struct Certificate {
    std::vector<std::pair<std::string, Integer>> instance;
    CertificateStatus status = CertificateStatus::NotApplicable;
    std::vector<std::string> reasons;
    std::vector<std::string> constraints_used;
    std::uint64_t survivor_count = 0;
    std::vector<SequencePair> witnesses; // at most the witness cap, in enumeration order
};

struct CertifyOptions {
    std::optional<ConstraintFlags> constraints; // defaults_for(f) when empty
    std::uint64_t search_cap = kDefaultSearchCap;
    std::size_t witness_cap = kDefaultWitnessCap;
};

Certificate certify_empty(const CertifierInstance& inst, const CertifyOptions& options = {});

// Zero Severi count (d2 = r1+2, rho = 0): speciality 2 is empty; speciality 1 (l1 = K)
// is empty iff the pencil is base point free. Throws NotApplicable otherwise.
Certificate classify_incidence_zero(const Integer& g, const Integer& r1, const Integer& d1,
                                    bool l2_base_point_free);

struct CounterexampleReport {
    Integer d1;
    Integer expected_dim;
    CertificateStatus certified;
    bool contradiction;
};

// Minimal pencil family: V_e^{e-f}(K - g^1_d1) with e = 2d1-8, f = d1-4 has expected
// dimension 0 but is certified empty. Requires d1 >= 6.
CounterexampleReport remark_counterexample_report(const Integer& d1);

} // namespace secint
