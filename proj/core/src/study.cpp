#include "quaddec/study.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quaddec/errors.hpp"
#include "quaddec/transforms.hpp"

namespace quaddec {

namespace {

using Stream = Rational ExtendedValues::*;

const std::vector<std::pair<std::string, Stream>>& streams()
{
    static const std::vector<std::pair<std::string, Stream>> list = {
        {"betaP", &ExtendedValues::beta_p},     {"gammaP", &ExtendedValues::gamma_p},
        {"varrhoP", &ExtendedValues::varrho_p}, {"rhoP", &ExtendedValues::rho_p},
        {"betaR", &ExtendedValues::beta_r},     {"gammaR", &ExtendedValues::gamma_r},
        {"varrhoR", &ExtendedValues::varrho_r}, {"rhoR", &ExtendedValues::rho_r},
    };
    return list;
}

/// Stream names where the two value sets differ.
void collect_differences(const ExtendedValues& lhs, const ExtendedValues& rhs, std::set<std::string>& out)
{
    for (const auto& [name, member] : streams()) {
        if (lhs.*member != rhs.*member) {
            out.insert(name);
        }
    }
}

Stream stream_of(const std::string& name)
{
    for (const auto& [n, member] : streams()) {
        if (n == name) {
            return member;
        }
    }
    throw DomainError("unknown stream '" + name + "'");
}

/// True when the printed `stream` agrees with the engine on the erratum locus.
bool printed_holds_on_locus(const Erratum& e, const std::string& family, Params params, QuadMap map,
                            std::size_t nmax)
{
    if (!e.restrict_to_locus) {
        return true;
    }
    e.restrict_to_locus(params, map);
    const Stream member = stream_of(e.item);
    const ExtendedCoeffs ec(build(family, params).rc, map);
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (printed_extended(family, params, map, n).*member != extended_values(ec, n).*member) {
            return false;
        }
    }
    return true;
}

RecurrenceCoeffs reference_q()
{
    return RecurrenceCoeffs([](std::size_t) { return Rational(0); },
                            [](std::size_t) { return Rational(1, 16); });
}

/// Number of leading (β, γ) pairs available from an orthogonality certificate.
std::size_t known_depth(const ComponentVerdict& v)
{
    return v.recurrence.gamma.size();
}

RelationCheck check_claim(const RelationClaim& claim, const RecurrenceCoeffs& w, const StudyReport& r)
{
    RelationCheck out{claim, false, 0};
    const bool have_p = r.P.cls == ComponentClass::orthogonal;
    const bool have_r = r.R.cls == ComponentClass::orthogonal;
    const ComponentVerdict& lhs_v = claim.lhs == ComponentName::P ? r.P : r.R;

    if (claim.kind == RelationClaim::Kind::positive_definite) {
        out.holds = lhs_v.cls == ComponentClass::orthogonal && lhs_v.positive_definite;
        out.depth = known_depth(lhs_v);
        return out;
    }
    if (lhs_v.cls != ComponentClass::orthogonal) {
        return out;
    }
    const RecurrenceCoeffs lhs = RecurrenceCoeffs::from_prefix(lhs_v.recurrence);
    const std::size_t d = known_depth(lhs_v);

    switch (claim.kind) {
    case RelationClaim::Kind::corecursive: {
        if (!have_p || !have_r) {
            return out;
        }
        const RecurrenceCoeffs p = RecurrenceCoeffs::from_prefix(r.P.recurrence);
        const RecurrenceCoeffs rr = RecurrenceCoeffs::from_prefix(r.R.recurrence);
        out.depth = std::min(known_depth(r.P), known_depth(r.R));
        const auto mu = detect_corecursive(p, rr, out.depth);
        out.holds = mu && *mu == claim.mu;
        return out;
    }
    case RelationClaim::Kind::common_associated: {
        if (!have_p || !have_r) {
            return out;
        }
        const RecurrenceCoeffs p = RecurrenceCoeffs::from_prefix(r.P.recurrence);
        const RecurrenceCoeffs rr = RecurrenceCoeffs::from_prefix(r.R.recurrence);
        const std::size_t dd = std::min(known_depth(r.P), known_depth(r.R));
        if (dd <= claim.order) {
            return out;
        }
        out.depth = dd - claim.order;
        out.holds = same_coefficients(associated(p, claim.order), associated(rr, claim.order), out.depth);
        return out;
    }
    case RelationClaim::Kind::equals_reference: {
        if (d <= claim.order) {
            return out;
        }
        out.depth = d - claim.order;
        out.holds = same_coefficients(associated(lhs, claim.order), reference_q(), out.depth);
        return out;
    }
    case RelationClaim::Kind::shift_of_source: {
        RecurrenceCoeffs source = w;
        if (claim.source_corecursive) {
            source = corecursive(source, *claim.source_corecursive);
        }
        if (claim.source_perturbation) {
            source = perturbed(source, *claim.source_perturbation);
        }
        out.depth = d;
        out.holds = same_coefficients(shift(source, claim.shift.a, claim.shift.b), lhs, d);
        return out;
    }
    case RelationClaim::Kind::positive_definite: break;
    }
    return out;
}

DetectedRelations detect(const RecurrenceCoeffs& w, const StudyReport& r)
{
    DetectedRelations out;
    std::optional<RecurrenceCoeffs> p, rr;
    if (r.P.cls == ComponentClass::orthogonal && known_depth(r.P) > 0) {
        p = RecurrenceCoeffs::from_prefix(r.P.recurrence);
        out.p_from_w = detect_affine_relation(w, *p, known_depth(r.P));
    }
    if (r.R.cls == ComponentClass::orthogonal && known_depth(r.R) > 0) {
        rr = RecurrenceCoeffs::from_prefix(r.R.recurrence);
        out.r_from_w = detect_affine_relation(w, *rr, known_depth(r.R));
    }
    if (p && rr) {
        const std::size_t d = std::min(known_depth(r.P), known_depth(r.R));
        out.corecursive = detect_corecursive(*p, *rr, d);
        if (d > 1) {
            const std::size_t max_order = std::min<std::size_t>(3, d - 1);
            out.common_associated = detect_common_associated(*p, *rr, max_order, d - max_order);
        }
    }
    return out;
}

bool same_class(const ComponentVerdict& v, ComponentClass expected)
{
    return v.cls == expected;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ")
{
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) {
            out += sep;
        }
        out += s;
    }
    return out;
}

/// Why a report disagrees with its expected row; empty when it agrees.
std::vector<std::string> disagreements(const StudyReport& r, const ExpectedRow& e)
{
    std::vector<std::string> out;
    auto cmp = [&](const char* name, const ComponentVerdict& v, ComponentClass c) {
        if (!same_class(v, c)) {
            out.push_back(std::string(name) + " is " + to_string(v.cls) + ", expected " + to_string(c));
        }
    };
    cmp("P", r.P, e.P);
    cmp("R", r.R, e.R);
    cmp("a", r.a, e.a);
    cmp("b", r.b, e.b);
    if (r.pattern.a_vanishes != e.a_vanishes) {
        out.push_back("a_n = 0 flag differs");
    }
    if (r.pattern.b_vanishes != e.b_vanishes) {
        out.push_back("b_n = 0 flag differs");
    }
    if (e.b_over_r && r.pattern.b_over_r != e.b_over_r) {
        out.push_back("b_n = " + e.b_over_r->str() + " R_n not found");
    }
    return out;
}

} // namespace

std::string to_string(ExtendedStatus s)
{
    switch (s) {
    case ExtendedStatus::match: return "match";
    case ExtendedStatus::erratum_confirmed: return "erratum-confirmed";
    case ExtendedStatus::mismatch: return "mismatch";
    case ExtendedStatus::not_tabulated: return "not-tabulated";
    }
    return "unknown";
}

bool StudyReport::matches_expected() const
{
    if (!expected || !disagreements(*this, *expected).empty()) {
        return false;
    }
    for (const auto& rel : relations) {
        if (!rel.holds) {
            return false;
        }
    }
    return prop4_p.orthogonal == (P.cls == ComponentClass::orthogonal) &&
           prop4_r.orthogonal == (R.cls == ComponentClass::orthogonal);
}

std::pair<ExtendedStatus, std::vector<std::string>>
compare_extended(const std::string& family, const Params& params, const QuadMap& map, std::size_t nmax)
{
    if (!has_printed_extended(family)) {
        return {ExtendedStatus::not_tabulated, {}};
    }
    const ExtendedCoeffs ec(build(family, params).rc, map);
    std::set<std::string> printed_diff, corrected_diff;
    for (std::size_t n = 0; n <= nmax; ++n) {
        const ExtendedValues engine = extended_values(ec, n);
        collect_differences(printed_extended(family, params, map, n), engine, printed_diff);
        collect_differences(printed_extended(family, params, map, n, Transcription::corrected), engine,
                            corrected_diff);
    }
    std::vector<std::string> names(printed_diff.begin(), printed_diff.end());
    if (names.empty()) {
        return {ExtendedStatus::match, names};
    }
    if (!corrected_diff.empty()) {
        return {ExtendedStatus::mismatch, names};
    }
    for (const auto& name : names) {
        const Erratum* e = find_erratum(family, name);
        if (!e || !printed_holds_on_locus(*e, family, params, map, nmax)) {
            return {ExtendedStatus::mismatch, names};
        }
    }
    return {ExtendedStatus::erratum_confirmed, names};
}

StudyReport run_case(const FamilySpec& spec, const CasePoint& point, std::size_t depth)
{
    if (depth < 2) {
        throw DomainError("study depth must be at least 2");
    }
    StudyReport r;
    r.family = spec.name;
    r.params = spec.params;
    r.case_id = point.spec.id;
    r.map = point.map;
    r.depth = depth;

    const GqdResult res = gqd_orthogonal(spec.rc, point.map, depth);
    r.P = classify_principal(res.P);
    r.R = classify_principal(res.R);
    r.a = classify_secondary(res.a_components());
    r.b = classify_secondary(res.b_seq);
    r.pattern = secondary_pattern(res);
    std::tie(r.prop4_p, r.prop4_r) = prop4_check(spec.rc, lambda_theta(res), point.map, depth);
    r.corollary = corollary_check(ExtendedCoeffs(spec.rc, point.map), depth).has_value();
    r.detected = detect(spec.rc, r);

    if (find_case(spec.name, point.spec.id)) {
        r.expected = table_classification(spec.name, spec.params, point);
        for (const auto& claim : r.expected->relations) {
            r.relations.push_back(check_claim(claim, spec.rc, r));
        }
    }
    std::tie(r.extended, r.extended_differences) =
        compare_extended(spec.name, spec.params, point.map, std::min<std::size_t>(depth, 12));
    return r;
}

std::vector<CaseSpec> select_cases(const std::string& family, const std::string& list)
{
    const auto all = tabulated_cases(family);
    if (list.empty() || list == "all") {
        return all;
    }
    if (list == "special") {
        std::vector<CaseSpec> out;
        const auto& canon = canonical_cases();
        for (const auto& c : all) {
            const bool is_canon =
                std::any_of(canon.begin(), canon.end(), [&](const CaseSpec& k) { return k.id == c.id; });
            if (!is_canon) {
                out.push_back(c);
            }
        }
        return out;
    }
    std::vector<CaseSpec> out;
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ',')) {
        auto c = find_case(family, id);
        if (!c) {
            throw DomainError("case '" + id + "' is not tabulated for '" + family + "'");
        }
        out.push_back(*c);
    }
    return out;
}

std::vector<StudyReport> study(const FamilySpec& spec, const std::vector<CaseSpec>& cases, std::size_t depth,
                               std::uint64_t seed, const CaseSpec& fixed)
{
    RationalSampler rng(seed);
    std::vector<StudyReport> out;
    for (CaseSpec c : cases) {
        if (!c.p && !c.p_minus_two_beta) {
            c.p = fixed.p;
        }
        if (!c.q) {
            c.q = fixed.q;
        }
        if (!c.a) {
            c.a = fixed.a;
        }
        CasePoint point = sample_case(spec.name, spec.params, c, rng);
        point.spec.id = c.id;
        out.push_back(run_case(spec, point, depth));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool VerifyReport::pass() const
{
    return std::all_of(cells.begin(), cells.end(), [](const VerifyCell& c) { return c.pass; });
}

namespace {

VerifyCell cell_for(const std::string& family, const std::string& check, std::size_t sample, const Params& ps,
                    const QuadMap& map)
{
    VerifyCell c;
    c.family = family;
    c.check = check;
    c.sample = sample;
    c.params = ps;
    c.map = map;
    return c;
}

VerifyCell classification_cell(const FamilySpec& spec, const CasePoint& point, std::size_t sample,
                               std::size_t depth)
{
    VerifyCell cell = cell_for(spec.name, "classification", sample, spec.params, point.map);
    cell.case_id = point.spec.id;
    const StudyReport r = run_case(spec, point, depth);
    std::vector<std::string> why = disagreements(r, *r.expected);
    for (const auto& rel : r.relations) {
        if (!rel.holds) {
            why.push_back("relation failed: " + rel.claim.text);
        }
    }
    if (r.prop4_p.orthogonal != (r.P.cls == ComponentClass::orthogonal) ||
        r.prop4_r.orthogonal != (r.R.cls == ComponentClass::orthogonal)) {
        why.push_back("chi-criterion verdict differs from the structure coefficients");
    }
    cell.pass = why.empty();
    cell.detail = join(why, "; ");
    if (!cell.pass) {
        cell.status = "mismatch";
        return cell;
    }
    // A printed row that differs from the corrected one must be a registered erratum.
    const ExpectedRow printed = table_classification(spec.name, spec.params, point, Transcription::printed);
    std::vector<std::string> printed_why = disagreements(r, printed);
    bool relations_differ = false;
    for (const auto& claim : printed.relations) {
        if (!check_claim(claim, spec.rc, r).holds) {
            relations_differ = true;
            printed_why.push_back("printed relation fails: " + claim.text);
        }
    }
    if (printed_why.empty()) {
        cell.status = "match";
        return cell;
    }
    if (relations_differ && !find_erratum(spec.name, "class:" + point.spec.id + ":relations")) {
        cell.pass = false;
        cell.status = "mismatch";
        cell.detail = join(printed_why, "; ");
        return cell;
    }
    if (relations_differ && disagreements(r, printed).empty()) {
        cell.status = "erratum-confirmed";
        cell.detail = join(printed_why, "; ");
        return cell;
    }
    const auto comps = {std::string("P"), std::string("R"), std::string("a"), std::string("b")};
    for (const auto& comp : comps) {
        if (find_erratum(spec.name, "class:" + point.spec.id + ":" + comp)) {
            cell.status = "erratum-confirmed";
            cell.detail = "printed row: " + printed.printed;
            return cell;
        }
    }
    cell.pass = false;
    cell.status = "mismatch";
    cell.detail = join(printed_why, "; ");
    return cell;
}

void special_cells(const FamilySpec& spec, const CasePoint& point, std::size_t sample, std::size_t depth,
                   std::vector<VerifyCell>& out)
{
    auto printed_rc = printed_component_recurrences(spec.name, spec.params, point.map);
    if (printed_rc) {
        VerifyCell cell = cell_for(spec.name, "recurrences", sample, spec.params, point.map);
        cell.case_id = point.spec.id;
        const auto rcs = corollary_check(ExtendedCoeffs(spec.rc, point.map), depth);
        std::vector<std::string> why;
        if (!rcs) {
            why.push_back("extended recurrences do not collapse");
        } else {
            if (!same_coefficients(rcs->p, printed_rc->p, depth)) {
                why.push_back("P recurrence differs from the printed one");
            }
            if (!same_coefficients(rcs->r, printed_rc->r, depth)) {
                why.push_back("R recurrence differs from the printed one");
            }
            if (spec.name == "jacobi_symmetric_semiclassical") {
                Params shifted = spec.params;
                shifted["beta"] += Rational(1);
                auto moved = printed_component_recurrences(spec.name, shifted, point.map);
                if (!same_coefficients(rcs->r, moved->p, depth)) {
                    why.push_back("R recurrence is not P's with beta -> beta + 1");
                }
            }
        }
        cell.pass = why.empty();
        cell.status = cell.pass ? "match" : "mismatch";
        cell.detail = join(why, "; ");
        out.push_back(cell);
    }

    if (printed_moments(spec.name, spec.params, point.map)) {
        VerifyCell cell = cell_for(spec.name, "moments", sample, spec.params, point.map);
        cell.case_id = point.spec.id;
        const MomentsReport m =
            moments(spec, point.map, std::max<std::size_t>(3, std::min<std::size_t>(depth, 6)));
        const MomentLists printed = *printed_moments(spec.name, spec.params, point.map);
        const bool printed_ok = std::equal(printed.u.begin(), printed.u.end(), m.u0.begin()) &&
                                std::equal(printed.v.begin(), printed.v.end(), m.v0.begin());
        std::vector<std::string> why;
        if (!m.printed_match.value_or(false)) {
            why.push_back("moments differ from the corrected lists");
        }
        if (m.binomial_identity && !*m.binomial_identity) {
            why.push_back("binomial moment identity fails");
        }
        if (spec.name == "jacobi_symmetric_semiclassical") {
            for (std::size_t n = 0; n < m.u0.size(); ++n) {
                if (m.u0[n] != model_u0(spec.params, point.map.q, n) ||
                    m.v0[n] != model_v0(spec.params, point.map.q, n)) {
                    why.push_back("moment model differs at n = " + std::to_string(n));
                    break;
                }
            }
            for (std::size_t k = 0; 2 * k < m.w0.size(); ++k) {
                if (m.w0[2 * k] != model_w0_even(spec.params, k)) {
                    why.push_back("(w0)_2k model differs at k = " + std::to_string(k));
                    break;
                }
            }
        }
        cell.pass = why.empty();
        if (!cell.pass) {
            cell.status = "mismatch";
        } else if (printed_ok) {
            cell.status = "match";
        } else if (const auto* e = find_erratum(spec.name, "u0")) {
            cell.status = "erratum-confirmed";
            why.push_back("printed u0 list differs; " + e->correction);
        } else {
            cell.pass = false;
            cell.status = "mismatch";
            why.push_back("printed moment list differs");
        }
        cell.detail = join(why, "; ");
        out.push_back(cell);
    }
}

} // namespace

VerifyReport verify(const std::vector<std::string>& families, std::size_t samples, std::size_t depth,
                    std::uint64_t seed)
{
    VerifyReport report;
    report.seed = seed;
    report.samples = samples;
    report.depth = depth;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const std::string& name = families[f];
        RationalSampler rng(seed + f);
        for (std::size_t s = 0; s < samples; ++s) {
            const Params params = sample_params(name, rng, depth);
            const FamilySpec spec = build(name, params);

            if (has_printed_extended(name)) {
                const QuadMap map{rng.next(), rng.next(), rng.next()};
                VerifyCell cell = cell_for(name, "extended", s, params, map);
                auto [status, diff] = compare_extended(name, params, map, 12);
                cell.pass = status == ExtendedStatus::match || status == ExtendedStatus::erratum_confirmed;
                cell.status = to_string(status);
                cell.detail = join(diff);
                report.cells.push_back(cell);
            }
            for (const auto& c : tabulated_cases(name)) {
                const CasePoint point = sample_case(name, params, c, rng);
                report.cells.push_back(classification_cell(spec, point, s, depth));
                special_cells(spec, point, s, depth, report.cells);
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

MomentsReport moments(const FamilySpec& spec, const QuadMap& map, std::size_t nmax)
{
    MomentsReport m;
    m.family = spec.name;
    m.params = spec.params;
    m.map = map;
    m.nmax = nmax;

    const SeqPrefix w = generate_orthogonal(spec.rc, 2 * nmax + 2);
    const GqdResult res = gqd_direct(w, map, nmax);
    m.w0 = canonical_moments(w, 2 * nmax);
    m.u0 = canonical_moments(res.P, nmax);
    m.v0 = canonical_moments(res.R, nmax);

    const bool applies = (spec.name == "jacobi_symmetric_semiclassical" && map.p.is_zero()) ||
                         (spec.name == "constant" && map.p == -2 * spec.params.at("beta"));
    if (applies) {
        m.printed = printed_moments(spec.name, spec.params, map, Transcription::corrected);
        if (m.printed) {
            const std::size_t count = std::min(m.printed->u.size(), nmax + 1);
            m.printed_match = std::equal(m.printed->u.begin(), m.printed->u.begin() + count, m.u0.begin()) &&
                              std::equal(m.printed->v.begin(), m.printed->v.begin() + count, m.v0.begin());
        }
    }

    if (map.p.is_zero() && map.a.is_zero() && is_symmetric(w).symmetric) {
        bool ok = true;
        for (std::size_t n = 0; n <= nmax; ++n) {
            Rational sum(0);
            for (std::size_t k = 0; k <= n; ++k) {
                sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                       map.q.pow(static_cast<long>(n - k)) * m.w0[2 * k];
            }
            ok = ok && sum == m.u0[n];
        }
        m.binomial_identity = ok;
    }
    return m;
}

} // namespace quaddec
