#include "pretty.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace quaddec::pretty {

namespace {

std::string poly_text(const json& coeffs, char var)
{
    return to_string(poly_from_json(coeffs), var);
}

std::string list_text(const json& arr)
{
    std::string out;
    for (const auto& v : arr) {
        if (!out.empty()) {
            out += ", ";
        }
        out += v.get<std::string>();
    }
    return "[" + out + "]";
}

std::string params_text(const json& params)
{
    std::string out;
    for (const auto& [k, v] : params.items()) {
        if (!out.empty()) {
            out += " ";
        }
        out += k + "=" + v.get<std::string>();
    }
    return out.empty() ? "-" : out;
}

std::string map_text(const json& m)
{
    return "p=" + m.at("p").get<std::string>() + " q=" + m.at("q").get<std::string>() +
           " a=" + m.at("a").get<std::string>();
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string pattern_text(const json& p)
{
    std::vector<std::string> parts;
    if (p.at("a_vanishes").get<bool>()) {
        parts.push_back("a_n=0");
    }
    if (p.at("b_vanishes").get<bool>()) {
        parts.push_back("b_n=0");
    }
    if (!p.at("b_over_r").is_null()) {
        parts.push_back("b_n=(" + p.at("b_over_r").get<std::string>() + ")R_n");
    }
    if (!p.at("a_over_r").is_null() && !p.at("a_vanishes").get<bool>()) {
        parts.push_back("a_n=(" + p.at("a_over_r").get<std::string>() + ")R_n");
    }
    if (parts.empty()) {
        return "generic";
    }
    std::string out;
    for (const auto& s : parts) {
        out += (out.empty() ? "" : ", ") + s;
    }
    return out;
}

} // namespace

std::string decomposition(const json& j)
{
    std::ostringstream os;
    const std::size_t depth = j.at("depth").get<std::size_t>();
    os << "depth " << depth << "; secondary pattern: " << pattern_text(j.at("flags")) << "\n";
    for (std::size_t n = 0; n <= depth; ++n) {
        os << "n=" << n << "\n";
        os << "  P_n = " << poly_text(j.at("P").at(n), 'y') << "\n";
        os << "  R_n = " << poly_text(j.at("R").at(n), 'y') << "\n";
        os << "  a_n = " << poly_text(j.at("a").at(n), 'y') << "\n";
        os << "  b_n = " << poly_text(j.at("b").at(n), 'y') << "\n";
    }
    if (!j.at("extended").is_null()) {
        os << "extended coefficients\n";
        for (const auto& [name, values] : j.at("extended").items()) {
            os << "  " << pad(name, 8) << " " << list_text(values) << "\n";
        }
    }
    return os.str();
}

std::string studies(const json& j)
{
    std::ostringstream os;
    os << pad("case", 12) << pad("P", 16) << pad("R", 16) << pad("a", 16) << pad("b", 16)
       << pad("pattern", 26) << "table\n";
    for (const auto& r : j) {
        const auto& c = r.at("components");
        os << pad(r.at("case").get<std::string>(), 12);
        for (const char* k : {"P", "R", "a", "b"}) {
            os << pad(c.at(k).at("class").get<std::string>(), 16);
        }
        os << pad(pattern_text(r.at("pattern")), 26);
        if (r.at("expected").is_null()) {
            os << "-";
        } else {
            os << (r.at("matches_expected").get<bool>() ? "agrees" : "DISAGREES");
        }
        os << "\n";
        os << "    " << map_text(r.at("map"))
           << "; extended: " << r.at("extended").at("status").get<std::string>();
        if (!r.at("detected").at("corecursive").is_null()) {
            os << "; P = R(" << r.at("detected").at("corecursive").get<std::string>() << ")";
        }
        os << "\n";
        for (const auto& rel : r.at("relations")) {
            os << "    [" << (rel.at("holds").get<bool>() ? "holds" : "FAILS") << "] "
               << rel.at("text").get<std::string>() << "\n";
        }
    }
    return os.str();
}

std::string verification(const json& j)
{
    std::ostringstream os;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const auto& c : j.at("cells")) {
        auto& t = tally[c.at("family").get<std::string>() + " " + c.at("check").get<std::string>()];
        ++t.second;
        if (c.at("pass").get<bool>()) {
            ++t.first;
        }
    }
    for (const auto& [key, t] : tally) {
        os << pad(key, 48) << t.first << "/" << t.second << "\n";
    }
    for (const auto& c : j.at("cells")) {
        const std::string status = c.at("status").get<std::string>();
        if (!c.at("pass").get<bool>() || status == "erratum-confirmed") {
            os << (c.at("pass").get<bool>() ? "  note " : "  FAIL ") << c.at("family").get<std::string>()
               << " " << c.at("check").get<std::string>() << " " << c.at("case").get<std::string>()
               << " sample " << c.at("sample").get<std::size_t>() << ": " << status << " "
               << c.at("detail").get<std::string>() << "\n";
        }
    }
    os << (j.at("pass").get<bool>() ? "PASS" : "FAIL") << " (seed " << j.at("seed").get<std::uint64_t>()
       << ")\n";
    return os.str();
}

std::string moments(const json& j)
{
    std::ostringstream os;
    os << j.at("family").get<std::string>() << " " << params_text(j.at("params")) << "; "
       << map_text(j.at("map")) << "\n";
    os << "  w0 " << list_text(j.at("w0")) << "\n";
    os << "  u0 " << list_text(j.at("u0")) << "\n";
    os << "  v0 " << list_text(j.at("v0")) << "\n";
    if (!j.at("printed_match").is_null()) {
        os << "  printed lists: " << (j.at("printed_match").get<bool>() ? "match" : "DIFFER") << "\n";
    }
    if (!j.at("binomial_identity").is_null()) {
        os << "  binomial identity: " << (j.at("binomial_identity").get<bool>() ? "holds" : "FAILS") << "\n";
    }
    return os.str();
}

std::string families(const json& j)
{
    std::ostringstream os;
    for (const auto& f : j.at("families")) {
        std::string ps;
        for (const auto& p : f.at("params")) {
            ps += (ps.empty() ? "" : ",") + p.get<std::string>();
        }
        os << pad(f.at("name").get<std::string>(), 32) << pad(ps.empty() ? "-" : ps, 12)
           << f.at("recurrence").get<std::string>() << "\n";
    }
    if (!j.at("errata").empty()) {
        os << "errata\n";
        for (const auto& e : j.at("errata")) {
            os << "  " << e.at("family").get<std::string>() << " " << e.at("item").get<std::string>() << ": "
               << e.at("correction").get<std::string>() << "\n";
        }
    }
    return os.str();
}

std::string error(const json& j)
{
    const auto& e = j.at("error");
    return "error (" + e.at("kind").get<std::string>() + "): " + e.at("message").get<std::string>() + "\n";
}

} // namespace quaddec::pretty
