#include "report_json.hpp"

#include <gmp.h>

#include <cstdio>
#include <sstream>

namespace apolar::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

Json md_json(const Multidegree& a) { return Json(a); }

Json params_json(const BoundParams& p) {
    Json o = Json::object();
    for (const auto& [k, v] : p) o[k] = v.size() == 1 && k != "a" && k != "delta" ? Json(v[0]) : Json(v);
    return o;
}

// Integers that may exceed 64 bits are emitted as numbers when they fit and as strings otherwise.
Json big_json(const BigInt& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

}  // namespace

std::string input_hash(const MultiPoly& M) {
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    feed(M.signature().str());
    feed("\n");
    feed(to_string(M));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json report_json(const MultiPoly& M, const BoundReport& r, const RunMeta& meta) {
    Json j;
    j["input"] = {{"signature", M.signature().sizes()},
                  {"multidegree", md_json(*M.multidegree())},
                  {"terms", M.size()},
                  {"hash", "fnv1a64:" + input_hash(M)}};

    Json prof = Json::array();
    for (const auto& c : r.profile)
        prof.push_back({{"a", md_json(c.a)}, {"rank", c.rank}, {"rows", c.rows}, {"cols", c.cols}, {"certified", c.certified}});
    j["profile"] = prof;

    Json hil = Json::array();
    for (const auto& c : r.apolar.hilbert) hil.push_back({{"a", md_json(c.a)}, {"value", c.rank}});
    Json gens = Json::array();
    for (const auto& g : r.apolar.generators) gens.push_back({{"degree", md_json(g.degree)}, {"count", g.count}});
    j["apolar"] = {{"hilbert", hil},
                   {"length", r.apolar.length},
                   {"generators", gens},
                   {"delta", r.apolar.delta},
                   {"delta_multi", md_json(r.apolar.delta_multi)},
                   {"certified", r.apolar.certified}};

    Json bounds = Json::array();
    for (const auto& e : r.entries) {
        Json b = {{"name", e.name},
                  {"target", target_name(e.target)},
                  {"value", e.value},
                  {"parameters", params_json(e.parameters)},
                  {"applicable", e.applicable},
                  {"provenance", e.provenance},
                  {"certified", e.certified}};
        if (!e.applicable) b["reason"] = e.reason;
        bounds.push_back(b);
    }
    j["bounds"] = bounds;

    Json ups = Json::array();
    for (const auto& u : r.uppers)
        ups.push_back({{"name", u.name},
                       {"target", target_name(u.target)},
                       {"value", big_json(u.value)},
                       {"verified", u.verified},
                       {"provenance", u.provenance}});
    j["uppers"] = ups;

    j["best"] = {{"target", target_name(r.target)},
                 {"lower", r.best_lower},
                 {"lower_provenance", r.best_lower_provenance},
                 {"upper", r.best_upper ? big_json(*r.best_upper) : Json(nullptr)},
                 {"status", r.status},
                 {"certified", r.certified}};
    j["meta"] = {{"seed", meta.seed},
                 {"strategy", meta.strategy},
                 {"versions", {{"apolar", kVersion}, {"gmp", gmp_version}}}};
    return j;
}

std::string report_text(const MultiPoly& M, const BoundReport& r, const RunMeta& meta) {
    std::ostringstream out;
    out << "input      " << M.signature().str() << " multidegree " << md_str(*M.multidegree()) << ", " << M.size()
        << " terms, hash " << input_hash(M) << "\n";
    out << "profile   ";
    for (const auto& c : r.profile) out << " " << md_str(c.a) << ":" << c.rank << (c.certified ? "" : "?");
    out << "\napolar     length " << r.apolar.length << ", generators";
    for (const auto& g : r.apolar.generators) out << " " << g.count << "@" << md_str(g.degree);
    out << "\nbounds\n";
    for (const auto& e : r.entries) {
        out << "  " << e.name << " [" << target_name(e.target) << "] = " << e.value;
        for (const auto& [k, v] : e.parameters) {
            out << " " << k << "=";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
        }
        if (!e.applicable) out << "  (not applicable: " << e.reason << ")";
        if (!e.certified) out << "  (probabilistic)";
        out << "\n";
    }
    out << "uppers\n";
    for (const auto& u : r.uppers)
        out << "  " << u.name << " [" << target_name(u.target) << "] = " << u.value.get_str()
            << (u.verified ? "  verified" : "  closed form") << "\n";
    out << "best       " << r.status << "  (lower from " << r.best_lower_provenance << ")\n";
    out << "seed       " << meta.seed << ", strategy " << meta.strategy << "\n";
    return out.str();
}

Json decomposition_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms) terms.push_back({{"coefficient", t.coefficient.get_str()}, {"point", t.point.str()}});
    return {{"target", d.target},
            {"signature", d.polynomial.signature().sizes()},
            {"multidegree", d.degree},
            {"length", d.length()},
            {"terms", terms},
            {"verified", verify_decomposition(d.polynomial, d.terms).ok}};
}

Json decomposition_json(const CycloDecomposition& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms)
        terms.push_back({{"coefficient", t.coefficient.get_str()}, {"root", t.root}, {"forms", t.forms}});
    return {{"target", d.target},
            {"signature", d.polynomial.signature().sizes()},
            {"multidegree", d.degree},
            {"root_order", d.order},
            {"length", d.length()},
            {"terms", terms},
            {"verified", verify_cyclo(d)}};
}

}  // namespace apolar::cli
