#include "quaddec/serialize.hpp"

#include "quaddec/errors.hpp"

namespace quaddec {

json to_json(const Rational& r)
{
    return r.str();
}

json to_json(const Poly& p)
{
    return to_json(p.coeffs());
}

json to_json(const MomentTable& t)
{
    json out = json::object();
    for (const auto& [key, value] : t.moments) {
        out[std::to_string(key.first) + "," + std::to_string(key.second)] = value.str();
    }
    return out;
}

json to_json(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& r : v) {
        out.push_back(r.str());
    }
    return out;
}

json to_json(const std::vector<Poly>& v)
{
    json out = json::array();
    for (const auto& p : v) {
        out.push_back(to_json(p));
    }
    return out;
}

json to_json(const Params& params)
{
    json out = json::object();
    for (const auto& [k, v] : params) {
        out[k] = v.str();
    }
    return out;
}

json to_json(const QuadMap& map)
{
    return {{"p", map.p.str()}, {"q", map.q.str()}, {"a", map.a.str()}};
}

json to_json(const RecurrencePrefix& rc)
{
    return {{"beta", to_json(rc.beta)}, {"gamma", to_json(rc.gamma)}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw ParseError("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ParseError("expected a coefficient array, got " + j.dump());
    }
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        coeffs.push_back(rational_from_json(c));
    }
    return Poly(std::move(coeffs));
}

std::vector<Poly> polys_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ParseError("expected an array of polynomials");
    }
    std::vector<Poly> out;
    for (const auto& p : j) {
        out.push_back(poly_from_json(p));
    }
    return out;
}

json to_json(const SecondaryPattern& s)
{
    json out = {{"depth", s.depth},       {"a_vanishes", s.a_vanishes}, {"b_vanishes", s.b_vanishes},
                {"generic", s.generic()}, {"b_over_r", nullptr},        {"a_over_r", nullptr}};
    if (s.b_over_r) {
        out["b_over_r"] = s.b_over_r->str();
    }
    if (s.a_over_r) {
        out["a_over_r"] = s.a_over_r->str();
    }
    return out;
}

json to_json(const ComponentVerdict& v)
{
    json out = {{"class", to_string(v.cls)}, {"depth", v.depth}, {"positive_definite", v.positive_definite}};
    if (v.witness) {
        out["witness"] = {{"n", v.witness->n}, {"nu", v.witness->nu}, {"chi", v.witness->chi.str()}};
    }
    if (v.degree_defect) {
        out["degree_defect"] = *v.degree_defect;
    }
    if (v.cls == ComponentClass::orthogonal) {
        out["recurrence"] = to_json(v.recurrence);
    }
    return out;
}

json to_json(const CriterionVerdict& v)
{
    json out = {{"orthogonal", v.orthogonal}, {"depth", v.depth}};
    if (v.witness) {
        out["witness"] = {v.witness->first, v.witness->second};
    }
    return out;
}

json to_json(const GqdResult& res, const ExtendedCoeffs* ec)
{
    json out = {{"P", to_json(res.P.polys())},
                {"R", to_json(res.R.polys())},
                {"a", to_json(res.a_components())},
                {"b", to_json(res.b_seq)},
                {"depth", res.depth},
                {"flags", to_json(secondary_pattern(res))}};
    if (ec) {
        json ext = json::object();
        std::vector<Rational> bp, gp, vp, rp, br, gr, vr, rr;
        for (std::size_t n = 0; n < res.depth; ++n) {
            bp.push_back(ec->beta_p(n));
            br.push_back(ec->beta_r(n));
        }
        for (std::size_t k = 1; k < res.depth; ++k) {
            gp.push_back(ec->gamma_p(k));
            vp.push_back(ec->varrho_p(k));
            rp.push_back(ec->rho_p(k));
            gr.push_back(ec->gamma_r(k));
            vr.push_back(ec->varrho_r(k));
            rr.push_back(ec->rho_r(k));
        }
        ext["betaP"] = to_json(bp);
        ext["gammaP"] = to_json(gp);
        ext["varrhoP"] = to_json(vp);
        ext["rhoP"] = to_json(rp);
        ext["betaR"] = to_json(br);
        ext["gammaR"] = to_json(gr);
        ext["varrhoR"] = to_json(vr);
        ext["rhoR"] = to_json(rr);
        out["extended"] = ext;
    } else {
        out["extended"] = nullptr;
    }
    return out;
}

GqdResult gqd_from_json(const json& j)
{
    try {
        std::vector<Poly> a_seq{Poly()};
        for (auto& p : polys_from_json(j.at("a"))) {
            a_seq.push_back(std::move(p));
        }
        GqdResult res{SeqPrefix(polys_from_json(j.at("P"))), SeqPrefix(polys_from_json(j.at("R"))),
                      std::move(a_seq), polys_from_json(j.at("b")), j.at("depth").get<std::size_t>()};
        return res;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed decomposition: ") + e.what());
    }
}

namespace {

json claim_json(const RelationCheck& c)
{
    json out = {{"kind", to_string(c.claim.kind)},
                {"lhs", to_string(c.claim.lhs)},
                {"text", c.claim.text},
                {"holds", c.holds},
                {"depth", c.depth}};
    switch (c.claim.kind) {
    case RelationClaim::Kind::corecursive: out["mu"] = c.claim.mu.str(); break;
    case RelationClaim::Kind::common_associated:
    case RelationClaim::Kind::equals_reference: out["order"] = c.claim.order; break;
    case RelationClaim::Kind::shift_of_source:
        out["A"] = c.claim.shift.a.str();
        out["B"] = c.claim.shift.b.str();
        break;
    case RelationClaim::Kind::positive_definite: break;
    }
    return out;
}

json affine_json(const std::optional<AffineRelation>& a)
{
    if (!a) {
        return nullptr;
    }
    return {{"A", a->a.str()}, {"B", a->b.str()}};
}

json expected_json(const ExpectedRow& e)
{
    json out = {{"P", to_string(e.P)}, {"R", to_string(e.R)},        {"a", to_string(e.a)},
                {"b", to_string(e.b)}, {"a_vanishes", e.a_vanishes}, {"b_vanishes", e.b_vanishes},
                {"b_over_r", nullptr}, {"printed", e.printed}};
    if (e.b_over_r) {
        out["b_over_r"] = e.b_over_r->str();
    }
    return out;
}

} // namespace

json to_json(const StudyReport& r)
{
    json out = {
        {"family", r.family},
        {"params", to_json(r.params)},
        {"case", r.case_id},
        {"map", to_json(r.map)},
        {"depth", r.depth},
        {"components", {{"P", to_json(r.P)}, {"R", to_json(r.R)}, {"a", to_json(r.a)}, {"b", to_json(r.b)}}},
        {"pattern", to_json(r.pattern)},
        {"prop4", {{"P", to_json(r.prop4_p)}, {"R", to_json(r.prop4_r)}}},
        {"corollary", r.corollary},
        {"detected",
         {{"corecursive", r.detected.corecursive ? json(r.detected.corecursive->str()) : json(nullptr)},
          {"common_associated",
           r.detected.common_associated ? json(*r.detected.common_associated) : json(nullptr)},
          {"r_from_w", affine_json(r.detected.r_from_w)},
          {"p_from_w", affine_json(r.detected.p_from_w)}}},
        {"extended", {{"status", to_string(r.extended)}, {"differences", r.extended_differences}}},
        {"expected", r.expected ? expected_json(*r.expected) : json(nullptr)},
        {"matches_expected", r.matches_expected()}};
    json rels = json::array();
    for (const auto& c : r.relations) {
        rels.push_back(claim_json(c));
    }
    out["relations"] = rels;
    return out;
}

json to_json(const VerifyReport& r)
{
    json cells = json::array();
    for (const auto& c : r.cells) {
        cells.push_back({{"family", c.family},
                         {"check", c.check},
                         {"case", c.case_id},
                         {"sample", c.sample},
                         {"params", to_json(c.params)},
                         {"map", to_json(c.map)},
                         {"pass", c.pass},
                         {"status", c.status},
                         {"detail", c.detail}});
    }
    return {
        {"seed", r.seed}, {"samples", r.samples}, {"depth", r.depth}, {"pass", r.pass()}, {"cells", cells}};
}

json to_json(const MomentsReport& m)
{
    json out = {{"family", m.family},       {"params", to_json(m.params)},
                {"map", to_json(m.map)},    {"nmax", m.nmax},
                {"w0", to_json(m.w0)},      {"u0", to_json(m.u0)},
                {"v0", to_json(m.v0)},      {"printed", nullptr},
                {"printed_match", nullptr}, {"binomial_identity", nullptr}};
    if (m.printed) {
        out["printed"] = {{"u0", to_json(m.printed->u)}, {"v0", to_json(m.printed->v)}};
    }
    if (m.printed_match) {
        out["printed_match"] = *m.printed_match;
    }
    if (m.binomial_identity) {
        out["binomial_identity"] = *m.binomial_identity;
    }
    return out;
}

CoeffFile parse_coeff_file(const json& j)
{
    if (!j.is_object() || !j.contains("beta")) {
        throw ParseError("coefficient file needs a \"beta\" array");
    }
    std::vector<Rational> beta;
    for (const auto& b : j.at("beta")) {
        beta.push_back(rational_from_json(b));
    }
    if (j.contains("gamma") == j.contains("chi")) {
        throw ParseError("coefficient file needs exactly one of \"gamma\" and \"chi\"");
    }
    if (j.contains("gamma")) {
        RecurrencePrefix rc{std::move(beta), {}};
        for (const auto& g : j.at("gamma")) {
            rc.gamma.push_back(rational_from_json(g));
        }
        return rc;
    }
    StructureTable st{std::move(beta), {}};
    std::size_t n = 0;
    for (const auto& row : j.at("chi")) {
        if (!row.is_array() || row.size() != n + 1) {
            throw ParseError("chi row " + std::to_string(n) + " must have " + std::to_string(n + 1) +
                             " entries");
        }
        std::vector<Rational> r;
        for (const auto& c : row) {
            r.push_back(rational_from_json(c));
        }
        st.chi.push_back(std::move(r));
        ++n;
    }
    return st;
}

json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

} // namespace quaddec
