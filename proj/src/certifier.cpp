#include "secint/certifier.hpp"

#include "secint/counting.hpp"
#include "secint/errors.hpp"

#include <algorithm>
#include <numeric>

namespace secint {

std::string_view to_string(CertificateStatus status) {
    switch (status) {
    case CertificateStatus::Empty:
        return "EMPTY";
    case CertificateStatus::Inconclusive:
        return "INCONCLUSIVE";
    case CertificateStatus::NotApplicable:
        return "NOT_APPLICABLE";
    }
    return "UNKNOWN";
}

std::string_view constraint_id(Constraint c) {
    switch (c) {
    case Constraint::Zero:
        return "C-ZERO";
    case Constraint::Sub:
        return "C-SUB";
    case Constraint::E:
        return "C-E";
    case Constraint::PlkY1:
        return "C-PLK-Y1";
    case Constraint::PlkY2:
        return "C-PLK-Y2";
    case Constraint::PlkZ1:
        return "C-PLK-Z1";
    case Constraint::PlkZ2:
        return "C-PLK-Z2";
    case Constraint::ZSub:
        return "C-ZSUB";
    }
    return "C-UNKNOWN";
}

std::optional<Constraint> parse_constraint_id(std::string_view id) {
    for (auto c : kAllConstraints)
        if (constraint_id(c) == id)
            return c;
    return std::nullopt;
}

ConstraintFlags ConstraintFlags::defaults_for(const Integer& f) {
    ConstraintFlags flags;
    for (auto c : kAllConstraints)
        if (f == 1 || (c != Constraint::E && c != Constraint::ZSub))
            flags = flags.with(c);
    return flags;
}

ConstraintFlags ConstraintFlags::with(Constraint c) const {
    ConstraintFlags out = *this;
    out.bits_.set(static_cast<unsigned>(c));
    return out;
}

ConstraintFlags ConstraintFlags::without(Constraint c) const {
    ConstraintFlags out = *this;
    out.bits_.reset(static_cast<unsigned>(c));
    return out;
}

CertifierInstance CertifierInstance::make(Integer g, Integer r1, Integer d1, Integer e, Integer f) {
    auto l1 = SeriesParams::make(std::move(g), std::move(r1), std::move(d1));
    if (sgn(l1.rho()) < 0)
        throw InvalidArgument("instance needs rho(g,r1,d1) >= 0, got " + l1.rho().get_str());
    auto l2 = residual(l1);
    auto secant = SecantParams::make(std::move(e), std::move(f));
    if (secant.e() > l1.d() || secant.e() > l2.d())
        throw InvalidArgument("instance needs e <= min(d1, d2) = min(" + l1.d().get_str() + ", " +
                              l2.d().get_str() + "), got e=" + secant.e().get_str());
    return CertifierInstance(std::move(l1), std::move(l2), std::move(secant));
}

bool case_i_excluded(const Integer& g, const Integer& r1, const Integer& d1) {
    return g * r1 + (d1 - r1) > (r1 + 1) * (d1 - r1);
}

XSumBounds x_sum_bounds(const Integer& g, const Integer& r1, const Integer& d1) {
    // r1(r1+1) is even, so both ends are integers.
    Integer hi = d1 - r1 * (r1 + 1) / 2;
    Integer lo = hi - rho(g, r1, d1);
    return {std::move(lo), std::move(hi)};
}

namespace {

Integer binomial(const Integer& n, const Integer& k) {
    if (sgn(k) < 0 || sgn(n) < 0 || k > n)
        return 0;
    return gen_binomial(n, to_ulong(k, "binomial index"));
}

using Values = std::vector<long>;

// Visits every k-subset of pool (pool sorted) in lexicographic order.
template <typename Visit>
void for_each_combination(const Values& pool, std::size_t k, Values& scratch, Visit&& visit) {
    if (k > pool.size())
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    scratch.resize(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            scratch[i] = pool[idx[i]];
        visit(static_cast<const Values&>(scratch));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Values range_values(long lo, long hi) {
    Values v;
    for (long x = lo; x <= hi; ++x)
        v.push_back(x);
    return v;
}

long sum_of(const Values& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool contains(const Values& sorted, long value) { return std::binary_search(sorted.begin(), sorted.end(), value); }

VanishingSequence to_sequence(const Values& v, long degree) {
    std::vector<Integer> entries(v.begin(), v.end());
    return VanishingSequence::make(std::move(entries), degree);
}

// Everything the hot loop needs, narrowed to machine integers once.
struct SearchPlan {
    long r1, d1, e, f, td;
    bool f_is_one;
    long budget_y1, budget_y2, budget_z1, budget_z2;
};

SearchPlan make_plan(const CertifierInstance& inst) {
    Integer z_cusps = inst.g() - inst.d1();
    if (sgn(z_cusps) < 0)
        throw PreconditionError("the case (ii) split needs g >= d1, got g=" + inst.g().get_str() +
                                " d1=" + inst.d1().get_str());
    SearchPlan p{};
    p.r1 = to_long(inst.r1(), "r1");
    p.d1 = to_long(inst.d1(), "d1");
    p.e = to_long(inst.e(), "e");
    p.f = to_long(inst.f(), "f");
    p.td = to_long(inst.tilde_d(), "d1+e");
    p.f_is_one = inst.f() == 1;
    p.budget_y1 = to_long(ramification_budget_at_p(inst.r1(), inst.d1(), inst.d1()), "budget");
    p.budget_y2 = to_long(ramification_budget_at_p(inst.tilde_r(), inst.tilde_d(), inst.d1()), "budget");
    p.budget_z1 = to_long(ramification_budget_at_p(inst.r1(), inst.d1(), z_cusps), "budget");
    p.budget_z2 = to_long(ramification_budget_at_p(inst.tilde_r(), inst.tilde_d(), z_cusps), "budget");
    return p;
}

long triangular(long r) { return r * (r + 1) / 2; }

} // namespace

Integer search_domain_size(const CertifierInstance& inst, const ConstraintFlags& flags) {
    const Integer& d1 = inst.d1();
    const Integer& r1 = inst.r1();
    Integer td = inst.tilde_d();
    bool zero = flags.enabled(Constraint::Zero);
    Integer a1_count = zero ? binomial(d1, r1) : binomial(d1 + 1, r1 + 1);
    Integer at_count;
    if (flags.enabled(Constraint::Sub))
        at_count = binomial(td - r1, inst.f());
    else
        at_count = zero ? binomial(td, inst.tilde_r()) : binomial(td + 1, inst.tilde_r() + 1);
    return Integer(a1_count * at_count);
}

std::uint64_t for_each_survivor(const CertifierInstance& inst, const ConstraintFlags& flags,
                                const std::function<void(const SequencePair&)>& visit, std::uint64_t cap) {
    const SearchPlan plan = make_plan(inst);
    Integer domain = search_domain_size(inst, flags);
    if (domain > cap)
        throw SearchSpaceTooLarge("search domain has " + domain.get_str() + " candidates, cap is " +
                                  std::to_string(cap));

    const bool zero = flags.enabled(Constraint::Zero);
    const bool sub = flags.enabled(Constraint::Sub);
    const bool need_e = flags.enabled(Constraint::E) && plan.f_is_one;
    const bool y1 = flags.enabled(Constraint::PlkY1);
    const bool y2 = flags.enabled(Constraint::PlkY2);
    const bool z1 = flags.enabled(Constraint::PlkZ1);
    const bool z2 = flags.enabled(Constraint::PlkZ2);
    const bool zsub = flags.enabled(Constraint::ZSub);

    const long tilde_r = plan.r1 + plan.f;
    const long shift_1 = triangular(plan.r1);
    const long shift_t = triangular(tilde_r);

    std::uint64_t survivors = 0;
    Values a1, at, scratch_a1, scratch_at, extras_pool;

    auto inner = [&](const Values& candidate_at) {
        if (zero && candidate_at.front() != 0)
            return;
        if (sub && !std::all_of(a1.begin(), a1.end(), [&](long x) { return contains(candidate_at, x); }))
            return;
        if (need_e && !contains(candidate_at, plan.e))
            return;
        long s = sum_of(candidate_at);
        if (y2 && s - shift_t > plan.budget_y2)
            return;
        if (z2 && (tilde_r + 1) * plan.td - s - shift_t > plan.budget_z2)
            return;
        // d1 - x lies in the complement of at_Y over d1+e  <=>  x + e lies in at_Y.
        if (zsub && !std::all_of(a1.begin(), a1.end(), [&](long x) { return contains(candidate_at, x + plan.e); }))
            return;
        ++survivors;
        if (visit)
            visit(SequencePair{to_sequence(a1, plan.d1), to_sequence(candidate_at, plan.td)});
    };

    auto outer = [&](const Values& chosen) {
        a1.clear();
        if (zero)
            a1.push_back(0);
        a1.insert(a1.end(), chosen.begin(), chosen.end());
        long s = sum_of(a1);
        if (y1 && s - shift_1 > plan.budget_y1)
            return;
        if (z1 && (plan.r1 + 1) * plan.d1 - s - shift_1 > plan.budget_z1)
            return;
        if (sub) {
            extras_pool.clear();
            for (long v = 0; v <= plan.td; ++v)
                if (!contains(a1, v))
                    extras_pool.push_back(v);
            for_each_combination(extras_pool, static_cast<std::size_t>(plan.f), scratch_at, [&](const Values& extra) {
                at.clear();
                std::merge(a1.begin(), a1.end(), extra.begin(), extra.end(), std::back_inserter(at));
                inner(at);
            });
        } else if (zero) {
            for_each_combination(range_values(1, plan.td), static_cast<std::size_t>(tilde_r), scratch_at,
                                 [&](const Values& rest) {
                                     at.assign(1, 0);
                                     at.insert(at.end(), rest.begin(), rest.end());
                                     inner(at);
                                 });
        } else {
            for_each_combination(range_values(0, plan.td), static_cast<std::size_t>(tilde_r + 1), scratch_at,
                                 inner);
        }
    };

    if (zero)
        for_each_combination(range_values(1, plan.d1), static_cast<std::size_t>(plan.r1), scratch_a1, outer);
    else
        for_each_combination(range_values(0, plan.d1), static_cast<std::size_t>(plan.r1 + 1), scratch_a1, outer);
    return survivors;
}

std::vector<SequencePair> enumerate_candidates(const CertifierInstance& inst, const ConstraintFlags& flags,
                                               std::uint64_t cap) {
    std::vector<SequencePair> out;
    for_each_survivor(inst, flags, [&](const SequencePair& p) { out.push_back(p); }, cap);
    return out;
}

bool satisfies_constraints(const CertifierInstance& inst, const ConstraintFlags& flags, const SequencePair& pair) {
    const auto& a1 = pair.a1_y;
    const auto& at = pair.at_y;
    if (a1.r() != to_ulong(inst.r1(), "r1") || at.r() != to_ulong(inst.tilde_r(), "r1+f"))
        return false;
    if (a1.degree() != inst.d1() || at.degree() != inst.tilde_d())
        return false;
    Integer z_cusps = inst.g() - inst.d1();
    auto has_value = [](const VanishingSequence& s, const Integer& v) {
        return std::find(s.entries().begin(), s.entries().end(), v) != s.entries().end();
    };
    if (flags.enabled(Constraint::Zero) && (a1.entries().front() != 0 || at.entries().front() != 0))
        return false;
    if (flags.enabled(Constraint::Sub) && !is_subsequence_values(a1, at))
        return false;
    if (flags.enabled(Constraint::E) && inst.f() == 1 && !has_value(at, inst.e()))
        return false;
    if (flags.enabled(Constraint::PlkY1) &&
        ramification_from_vanishing(a1).weight() > ramification_budget_at_p(inst.r1(), inst.d1(), inst.d1()))
        return false;
    if (flags.enabled(Constraint::PlkY2) &&
        ramification_from_vanishing(at).weight() > ramification_budget_at_p(inst.tilde_r(), inst.tilde_d(), inst.d1()))
        return false;
    if (flags.enabled(Constraint::PlkZ1) &&
        ramification_from_vanishing(pair.a1_z()).weight() > ramification_budget_at_p(inst.r1(), inst.d1(), z_cusps))
        return false;
    if (flags.enabled(Constraint::PlkZ2) &&
        ramification_from_vanishing(pair.at_z()).weight() >
            ramification_budget_at_p(inst.tilde_r(), inst.tilde_d(), z_cusps))
        return false;
    if (flags.enabled(Constraint::ZSub) && !is_subsequence_values(pair.a1_z(), pair.at_z()))
        return false;
    return true;
}

std::vector<std::string> effective_constraint_ids(const CertifierInstance& inst, const ConstraintFlags& flags) {
    std::vector<std::string> ids;
    for (auto c : kAllConstraints) {
        if (!flags.enabled(c))
            continue;
        if (c == Constraint::E && inst.f() != 1)
            continue;
        ids.emplace_back(constraint_id(c));
    }
    return ids;
}

namespace {

Certificate base_certificate(const CertifierInstance& inst) {
    Certificate cert;
    cert.instance = {{"g", inst.g()}, {"r1", inst.r1()}, {"d1", inst.d1()}, {"e", inst.e()}, {"f", inst.f()}};
    return cert;
}

Certificate verdict(Certificate cert, CertificateStatus status, std::initializer_list<std::string_view> reasons) {
    cert.status = status;
    for (auto r : reasons)
        cert.reasons.emplace_back(r);
    return cert;
}

} // namespace

Certificate certify_empty(const CertifierInstance& inst, const CertifyOptions& options) {
    Certificate cert = base_certificate(inst);

    if (!emptiness_condition_holds(inst.g(), inst.r1(), inst.d1(), inst.e(), inst.f()))
        return verdict(std::move(cert), CertificateStatus::NotApplicable, {reason::kGateFailed});

    // |2D+E| would be a g^(r1+f)_(d1+e) with negative Brill-Noether number.
    if (sgn(rho(inst.g(), inst.tilde_r(), inst.tilde_d())) < 0)
        return verdict(std::move(cert), CertificateStatus::Empty, {reason::kTildeBnNegative});

    // Minimal pencil with V = Gamma: D would be a divisor of l1 inside K - l1, which
    // the injective Petri map rules out.
    if (inst.r1() == 1 && inst.rho() == 1 && inst.f() == 3 && inst.e() == inst.d1())
        return verdict(std::move(cert), CertificateStatus::Empty, {reason::kSpecialRuleBpfTrick});

    if (inst.g() <= inst.d1()) {
        if (inst.f() == 1)
            throw InternalError("f = 1 and the emptiness condition imply e <= g - d1, yet g <= d1");
        return verdict(std::move(cert), CertificateStatus::Inconclusive, {reason::kGenusGate});
    }

    if (!case_i_excluded(inst.g(), inst.r1(), inst.d1()))
        return verdict(std::move(cert), CertificateStatus::Inconclusive, {reason::kCaseINotExcluded});

    ConstraintFlags flags = options.constraints.value_or(ConstraintFlags::defaults_for(inst.f()));
    cert.constraints_used = effective_constraint_ids(inst, flags);
    cert.survivor_count = for_each_survivor(
        inst, flags,
        [&](const SequencePair& p) {
            if (cert.witnesses.size() < options.witness_cap)
                cert.witnesses.push_back(p);
        },
        options.search_cap);

    if (cert.survivor_count == 0)
        return verdict(std::move(cert), CertificateStatus::Empty, {reason::kCaseIExcluded, reason::kCaseIINoSurvivor});
    if (cert.witnesses.empty())
        throw InternalError("survivors counted but no witness recorded (witness cap is 0?)");
    return verdict(std::move(cert), CertificateStatus::Inconclusive, {reason::kCaseIExcluded, reason::kCaseIISurvivors});
}

Certificate classify_incidence_zero(const Integer& g, const Integer& r1, const Integer& d1, bool l2_base_point_free) {
    auto l1 = SeriesParams::make(g, r1, d1);
    if (sgn(r1) <= 0)
        throw NotApplicable("zero-count classification needs r1 >= 1");
    if (l1.rho() != 0)
        throw NotApplicable("zero-count classification needs rho(g,r1,d1) = 0, got " + l1.rho().get_str());
    Integer s1 = l1.speciality();
    if (s1 != 1 && s1 != 2)
        throw NotApplicable("a pencil of degree r1+2 exists on a general curve only for speciality 1 or 2, got " +
                            s1.get_str());

    Certificate cert;
    cert.instance = {{"g", g},
                     {"r1", r1},
                     {"d1", d1},
                     {"d2", Integer(r1 + 2)},
                     {"l2_base_point_free", Integer(l2_base_point_free ? 1 : 0)}};
    if (s1 == 2)
        return verdict(std::move(cert), CertificateStatus::Empty, {reason::kSpecialityTwo});
    if (l2_base_point_free)
        return verdict(std::move(cert), CertificateStatus::Empty, {reason::kCanonicalBpf});
    // Positive-dimensional intersection: no finite witness list exists.
    return verdict(std::move(cert), CertificateStatus::Inconclusive, {reason::kCanonicalNotBpf});
}

CounterexampleReport remark_counterexample_report(const Integer& d1) {
    if (d1 < 6)
        throw PreconditionError("the minimal pencil family needs d1 >= 6, got " + d1.get_str());
    Integer g = 2 * d1 - 3;
    auto inst = CertifierInstance::make(g, 1, d1, d1, 3);
    Integer expected = expected_dim_secant(2 * d1 - 8, d1 - 4, residual(inst.l1()).r());
    CertificateStatus status = certify_empty(inst).status;
    bool contradiction = sgn(expected) >= 0 && status == CertificateStatus::Empty;
    return {d1, std::move(expected), status, contradiction};
}

} // namespace secint
