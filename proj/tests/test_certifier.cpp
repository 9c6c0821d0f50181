#include "doctest.h"

#include "secint/certifier.hpp"
#include "secint/errors.hpp"

#include <algorithm>
#include <set>

using namespace secint;

namespace {

using Seq = std::vector<long>;

// All strictly increasing sequences of length n in [0, top], lexicographic.
std::vector<Seq> all_sequences(long n, long top) {
    std::vector<Seq> out;
    Seq cur;
    auto rec = [&](auto&& self, long start) -> void {
        if (static_cast<long>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (long v = start; v <= top; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long weight(const Seq& a) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] - static_cast<long>(i);
    return s;
}

Seq complement(const Seq& a, long d) {
    Seq out;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        out.push_back(d - *it);
    return out;
}

bool has(const Seq& s, long v) { return std::find(s.begin(), s.end(), v) != s.end(); }

bool all_in(const Seq& a, const Seq& b) {
    return std::all_of(a.begin(), a.end(), [&](long v) { return has(b, v); });
}

// Bit i set when the pair violates kAllConstraints[i]; written straight from the definitions.
unsigned failure_mask(long g, long r1, long d1, long e, long f, const Seq& a1, const Seq& at) {
    long tr = r1 + f, td = d1 + e;
    auto budget = [](long r, long d, long cusps) { return (r + 1) * (d - r) - cusps * r; };
    unsigned mask = 0;
    auto fail = [&](Constraint c, bool bad) {
        if (bad)
            mask |= 1u << static_cast<unsigned>(c);
    };
    fail(Constraint::Zero, a1[0] != 0 || at[0] != 0);
    fail(Constraint::Sub, !all_in(a1, at));
    fail(Constraint::E, f == 1 && !has(at, e));
    fail(Constraint::PlkY1, weight(a1) > budget(r1, d1, d1));
    fail(Constraint::PlkY2, weight(at) > budget(tr, td, d1));
    fail(Constraint::PlkZ1, weight(complement(a1, d1)) > budget(r1, d1, g - d1));
    fail(Constraint::PlkZ2, weight(complement(at, td)) > budget(tr, td, g - d1));
    fail(Constraint::ZSub, !all_in(complement(a1, d1), complement(at, td)));
    return mask;
}

ConstraintFlags flags_from_mask(unsigned mask) {
    ConstraintFlags flags = ConstraintFlags::none();
    for (auto c : kAllConstraints)
        if (mask & (1u << static_cast<unsigned>(c)))
            flags = flags.with(c);
    return flags;
}

Seq to_seq(const VanishingSequence& v) {
    Seq out;
    for (const auto& x : v.entries())
        out.push_back(x.get_si());
    return out;
}

struct Small {
    long g, r1, d1, e, f;
};

// Valid, searchable instances whose unpruned domain is at most max_domain.
std::vector<Small> small_instances(long max_g, long max_domain) {
    std::vector<Small> out;
    for (long g = 1; g <= max_g; ++g)
        for (long r1 = 1; r1 <= 3; ++r1)
            for (long d1 = r1; d1 <= g; ++d1)
                for (long e = 1; e <= d1; ++e)
                    for (long f = 0; f < e; ++f) {
                        try {
                            auto inst = CertifierInstance::make(g, r1, d1, e, f);
                            if (search_domain_size(inst, ConstraintFlags::none()) <= max_domain)
                                out.push_back({g, r1, d1, e, f});
                        } catch (const Error&) {
                        }
                    }
    return out;
}

} // namespace

TEST_CASE("constraint ids round trip") {
    for (auto c : kAllConstraints)
        CHECK(parse_constraint_id(constraint_id(c)) == c);
    CHECK_FALSE(parse_constraint_id("C-NOPE").has_value());
    CHECK(constraint_id(Constraint::PlkZ2) == "C-PLK-Z2");
    auto one = ConstraintFlags::defaults_for(1);
    auto two = ConstraintFlags::defaults_for(2);
    CHECK(one.enabled(Constraint::E));
    CHECK(one.enabled(Constraint::ZSub));
    CHECK_FALSE(two.enabled(Constraint::E));
    CHECK_FALSE(two.enabled(Constraint::ZSub));
    CHECK(two.subset_of(one));
    CHECK_FALSE(one.subset_of(two));
    CHECK(one.without(Constraint::E).without(Constraint::ZSub) == two);
}

TEST_CASE("instance validation") {
    CHECK_NOTHROW(CertifierInstance::make(9, 1, 6, 2, 1));
    CHECK_THROWS_AS(CertifierInstance::make(9, 1, 4, 2, 1), InvalidArgument);      // rho < 0
    CHECK_THROWS_AS(CertifierInstance::make(2, 1, 3, 1, 0), ResidualNotEffective); // non-special
    CHECK_THROWS_AS(CertifierInstance::make(9, 1, 6, 2, 2), InvalidArgument);      // f >= e
    CHECK_THROWS_AS(CertifierInstance::make(9, 1, 6, 7, 1), InvalidArgument);      // e > d1
    auto inst = CertifierInstance::make(9, 1, 6, 2, 1);
    CHECK(inst.l2() == SeriesParams::make(9, 3, 10));
    CHECK(inst.tilde_r() == 2);
    CHECK(inst.tilde_d() == 8);
}

TEST_CASE("case (i) exclusion") {
    CHECK(case_i_excluded(9, 1, 6));
    CHECK_FALSE(case_i_excluded(0, 1, 6));
    CHECK(case_i_excluded(12, 2, 10));
    for (long g = 0; g <= 20; ++g)
        for (long r1 = 1; r1 <= 5; ++r1)
            for (long d1 = r1; d1 <= 20; ++d1)
                CHECK(case_i_excluded(g, r1, d1) == (g > d1 - r1));
}

TEST_CASE("x sum bounds") {
    auto b = x_sum_bounds(9, 1, 6);
    CHECK(b.lo == 4);
    CHECK(b.hi == 5);
    b = x_sum_bounds(12, 2, 10);
    CHECK(b.lo == 7);
    CHECK(b.hi == 7);
    for (long g = 0; g <= 20; ++g)
        for (long r1 = 1; r1 <= 5; ++r1)
            for (long d1 = r1; d1 <= 25; ++d1)
                if (rho(g, r1, d1) == 0) {
                    auto z = x_sum_bounds(g, r1, d1);
                    CHECK(z.lo == z.hi);
                }
}

TEST_CASE("enumeration examples") {
    auto inst = CertifierInstance::make(9, 1, 6, 2, 1);
    CHECK(enumerate_candidates(inst, ConstraintFlags::defaults_for(1)).empty());
    auto weak = ConstraintFlags::none().with(Constraint::Zero).with(Constraint::Sub);
    auto loose = enumerate_candidates(inst, weak);
    CHECK_FALSE(loose.empty());
    auto example = SequencePair{VanishingSequence::make({0, 1}, 6), VanishingSequence::make({0, 1, 2}, 8)};
    CHECK(std::find(loose.begin(), loose.end(), example) != loose.end());
    CHECK(std::is_sorted(loose.begin(), loose.end()));
    CHECK(enumerate_candidates(CertifierInstance::make(12, 2, 10, 2, 1), ConstraintFlags::defaults_for(1)).empty());
}

TEST_CASE("enumeration preconditions and cap") {
    // g = d1 leaves no cusps for the other side; g < d1 is rejected
    auto inst = CertifierInstance::make(6, 2, 6, 2, 1);
    CHECK_NOTHROW(enumerate_candidates(inst, ConstraintFlags::defaults_for(1)));
    auto low = CertifierInstance::make(5, 2, 6, 2, 1);
    CHECK_THROWS_AS(enumerate_candidates(low, ConstraintFlags::defaults_for(1)), PreconditionError);
    auto big = CertifierInstance::make(12, 2, 10, 2, 1);
    CHECK_THROWS_AS(enumerate_candidates(big, ConstraintFlags::none(), 1000), SearchSpaceTooLarge);
    CHECK(search_domain_size(big, ConstraintFlags::none()) == 165 * 715);
}

TEST_CASE("enumeration equals brute-force filtering for every flag subset") {
    auto instances = small_instances(9, 6000);
    REQUIRE(instances.size() > 20);
    int compared = 0;
    for (const auto& s : instances) {
        auto inst = CertifierInstance::make(s.g, s.r1, s.d1, s.e, s.f);
        auto a1s = all_sequences(s.r1 + 1, s.d1);
        auto ats = all_sequences(s.r1 + s.f + 1, s.d1 + s.e);
        std::vector<std::pair<unsigned, SequencePair>> domain;
        for (const auto& a1 : a1s)
            for (const auto& at : ats) {
                std::vector<Integer> x(a1.begin(), a1.end()), y(at.begin(), at.end());
                domain.push_back({failure_mask(s.g, s.r1, s.d1, s.e, s.f, a1, at),
                                  SequencePair{VanishingSequence::make(x, s.d1), VanishingSequence::make(y, s.d1 + s.e)}});
            }
        for (unsigned mask = 0; mask < (1u << kAllConstraints.size()); mask += (s.r1 == 1 ? 1 : 7)) {
            auto flags = flags_from_mask(mask);
            std::vector<SequencePair> expected;
            for (const auto& [fails, pair] : domain)
                if ((fails & mask) == 0)
                    expected.push_back(pair);
            auto got = enumerate_candidates(inst, flags);
            CHECK_MESSAGE(got == expected, s.g << ' ' << s.r1 << ' ' << s.d1 << ' ' << s.e << ' ' << s.f
                                               << " mask=" << mask);
            for (const auto& p : got)
                REQUIRE(satisfies_constraints(inst, flags, p));
            ++compared;
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("satisfies_constraints rejects pairs of the wrong shape") {
    auto inst = CertifierInstance::make(9, 1, 6, 2, 1);
    auto flags = ConstraintFlags::none();
    CHECK_FALSE(satisfies_constraints(inst, flags, {VanishingSequence::make({0, 1, 2}, 6), VanishingSequence::make({0, 1, 2}, 8)}));
    CHECK_FALSE(satisfies_constraints(inst, flags, {VanishingSequence::make({0, 1}, 7), VanishingSequence::make({0, 1, 2}, 8)}));
    CHECK(satisfies_constraints(inst, flags, {VanishingSequence::make({0, 1}, 6), VanishingSequence::make({0, 1, 2}, 8)}));
}

TEST_CASE("monotonicity under added constraints") {
    for (const auto& s : small_instances(8, 3000)) {
        auto inst = CertifierInstance::make(s.g, s.r1, s.d1, s.e, s.f);
        for (unsigned mask = 0; mask < (1u << kAllConstraints.size()); mask += 5) {
            auto base = enumerate_candidates(inst, flags_from_mask(mask));
            std::set<SequencePair> base_set(base.begin(), base.end());
            for (auto c : kAllConstraints) {
                auto more = enumerate_candidates(inst, flags_from_mask(mask).with(c));
                CHECK(more.size() <= base.size());
                for (const auto& p : more)
                    CHECK(base_set.count(p) == 1);
            }
        }
    }
}

TEST_CASE("x sum lies in its bounds for every survivor of the l1 budgets") {
    auto flags = ConstraintFlags::none().with(Constraint::Zero).with(Constraint::PlkY1).with(Constraint::PlkZ1);
    int seen = 0;
    for (const auto& s : small_instances(11, 200000)) {
        auto inst = CertifierInstance::make(s.g, s.r1, s.d1, s.e, s.f);
        auto bounds = x_sum_bounds(inst.g(), inst.r1(), inst.d1());
        for_each_survivor(inst, flags, [&](const SequencePair& p) {
            Integer x = 0;
            for (const auto& v : p.a1_y.entries())
                x += v;
            CHECK(bounds.lo <= x);
            CHECK(x <= bounds.hi);
            ++seen;
        });
    }
    CHECK(seen > 0);
}

TEST_CASE("gate consistency for f = 1") {
    int holds = 0;
    for (long g = 0; g <= 30; ++g)
        for (long r1 = 1; r1 <= 6; ++r1)
            for (long d1 = r1; d1 <= 2 * g; ++d1) {
                Integer p = rho(g, r1, d1);
                if (sgn(p) < 0 || g - d1 + r1 - 1 < 0)
                    continue;
                for (long e = 1; e <= d1; ++e) {
                    if (!emptiness_condition_holds(g, r1, d1, e, 1))
                        continue;
                    ++holds;
                    CHECK(Integer(r1 * e) <= Integer(d1) - (r1 + 1) * p - r1 * (r1 + 1));
                    CHECK(e <= g - d1);
                }
            }
    CHECK(holds > 100);
}

TEST_CASE("certify_empty pipeline outcomes") {
    auto c = certify_empty(CertifierInstance::make(9, 1, 6, 2, 1));
    CHECK(c.status == CertificateStatus::Empty);
    CHECK(c.reasons == std::vector<std::string>{"CASE_I_EXCLUDED", "CASE_II_NO_SURVIVOR"});
    CHECK(c.witnesses.empty());
    CHECK(c.constraints_used.size() == 8);

    for (long d1 = 6; d1 <= 10; ++d1) {
        auto bpf = certify_empty(CertifierInstance::make(2 * d1 - 3, 1, d1, d1, 3));
        CHECK(bpf.status == CertificateStatus::Empty);
        CHECK(bpf.reasons == std::vector<std::string>{"SPECIAL_RULE_BPF_TRICK"});
    }

    auto gate = certify_empty(CertifierInstance::make(9, 1, 6, 5, 1));
    CHECK(gate.status == CertificateStatus::NotApplicable);
    CHECK(gate.reasons == std::vector<std::string>{"GATE_FAILED"});

    // l~ = g^3_9 on genus 9 has rho = 9 - 4*3 < 0
    auto tilde = certify_empty(CertifierInstance::make(9, 1, 6, 3, 2));
    CHECK(tilde.status == CertificateStatus::Empty);
    CHECK(tilde.reasons == std::vector<std::string>{"TILDE_BN_NEGATIVE"});
}

TEST_CASE("certificate invariants over many instances") {
    int empty = 0, searched_inconclusive = 0;
    for (long g = 1; g <= 12; ++g)
        for (long r1 = 1; r1 <= 3; ++r1)
            for (long d1 = r1; d1 <= 2 * g - 2; ++d1)
                for (long e = 1; e <= d1; ++e)
                    for (long f = 0; f < e; ++f) {
                        std::optional<CertifierInstance> inst;
                        try {
                            inst = CertifierInstance::make(g, r1, d1, e, f);
                        } catch (const Error&) {
                            continue;
                        }
                        CertifyOptions opts;
                        opts.search_cap = 2'000'000;
                        Certificate c;
                        try {
                            c = certify_empty(*inst, opts);
                        } catch (const SearchSpaceTooLarge&) {
                            continue;
                        }
                        REQUIRE_FALSE(c.reasons.empty());
                        if (c.status == CertificateStatus::Empty) {
                            CHECK(c.witnesses.empty());
                            CHECK(c.survivor_count == 0);
                            ++empty;
                        }
                        if (c.reasons.back() == "CASE_II_SURVIVORS") {
                            CHECK(c.status == CertificateStatus::Inconclusive);
                            CHECK_FALSE(c.witnesses.empty());
                            CHECK(c.witnesses.size() == std::min<std::uint64_t>(c.survivor_count, kDefaultWitnessCap));
                            for (const auto& w : c.witnesses)
                                CHECK(satisfies_constraints(*inst, ConstraintFlags::defaults_for(f), w));
                            ++searched_inconclusive;
                        }
                        if (c.status == CertificateStatus::NotApplicable)
                            CHECK_FALSE(emptiness_condition_holds(g, r1, d1, e, f));
                    }
    CHECK(empty > 10);
    CHECK(searched_inconclusive > 0);
}

TEST_CASE("witness cap and determinism") {
    auto inst = CertifierInstance::make(9, 1, 6, 2, 1);
    CertifyOptions opts;
    opts.constraints = ConstraintFlags::none().with(Constraint::Zero).with(Constraint::Sub);
    opts.witness_cap = 5;
    auto a = certify_empty(inst, opts);
    auto b = certify_empty(inst, opts);
    CHECK(a.status == CertificateStatus::Inconclusive);
    CHECK(a.witnesses.size() == 5);
    CHECK(a.survivor_count == enumerate_candidates(inst, *opts.constraints).size());
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.reasons == b.reasons);
    CHECK(a.survivor_count == b.survivor_count);
    opts.witness_cap = 0;
    CHECK_THROWS_AS(certify_empty(inst, opts), InternalError);
}

TEST_CASE("search cap propagates") {
    CertifyOptions opts;
    opts.search_cap = 10;
    CHECK_THROWS_AS(certify_empty(CertifierInstance::make(12, 2, 10, 2, 1), opts), SearchSpaceTooLarge);
}

TEST_CASE("zero-count classification") {
    auto a = classify_incidence_zero(6, 2, 6, true);
    CHECK(a.status == CertificateStatus::Empty);
    CHECK(classify_incidence_zero(6, 2, 6, false).status == CertificateStatus::Empty);
    CHECK(classify_incidence_zero(3, 2, 4, true).status == CertificateStatus::Empty);
    CHECK(classify_incidence_zero(3, 2, 4, true).reasons == std::vector<std::string>{"CANONICAL_PENCIL_BPF_EMPTY"});
    auto c = classify_incidence_zero(3, 2, 4, false);
    CHECK(c.status == CertificateStatus::Inconclusive);
    CHECK(c.reasons == std::vector<std::string>{"CANONICAL_PENCIL_NOT_BPF"});
    CHECK(c.witnesses.empty());
    CHECK_THROWS_AS(classify_incidence_zero(9, 1, 6, true), NotApplicable); // rho = 1
    CHECK_THROWS_AS(classify_incidence_zero(12, 2, 10, true), NotApplicable); // speciality 4
}

TEST_CASE("counterexample report") {
    for (long d1 = 6; d1 <= 12; ++d1) {
        auto r = remark_counterexample_report(d1);
        CHECK(r.expected_dim == 0);
        CHECK(r.certified == CertificateStatus::Empty);
        CHECK(r.contradiction);
    }
    CHECK_THROWS_AS(remark_counterexample_report(5), PreconditionError);
}
