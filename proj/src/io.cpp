#include "bsroots/io.hpp"

#include "bsroots/errors.hpp"

#include <fstream>
#include <sstream>

namespace bsroots {

MonomialIdeal parse_ideal(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("ideal document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("generators"))
        throw InputError("ideal document needs fields \"vars\" and \"generators\"");
    const auto& vars = doc["vars"];
    if (!vars.is_number_integer() || vars.get<long long>() < 1) throw InputError("\"vars\" must be a positive integer");
    const auto& gens = doc["generators"];
    if (!gens.is_array()) throw InputError("\"generators\" must be an array");
    std::vector<Exponent> out;
    for (const auto& g : gens) {
        if (!g.is_array()) throw InputError("each generator must be an array of integers");
        Exponent e;
        for (const auto& x : g) {
            if (!x.is_number_integer()) throw InputError("exponents must be integers");
            e.push_back(x.get<std::int64_t>());
        }
        out.push_back(std::move(e));
    }
    return MonomialIdeal(vars.get<std::size_t>(), std::move(out));
}

MonomialIdeal load_ideal(const std::string& path_or_inline)
{
    const auto first = path_or_inline.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && path_or_inline[first] == '{') return parse_ideal(path_or_inline);
    std::ifstream in(path_or_inline);
    if (!in) throw InputError("cannot read ideal file " + path_or_inline);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_ideal(buf.str());
}

Json ideal_to_json(const MonomialIdeal& a)
{
    Json doc;
    doc["vars"] = a.nvars();
    doc["generators"] = a.generators();
    return doc;
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

IntVector parse_int_list(std::string_view text)
{
    IntVector out;
    for (auto item : split(text, ',')) {
        const Rational x = parse_rational(item);
        if (!is_integer(x)) throw InputError("expected an integer, got " + std::string(item));
        out.push_back(numerator(x));
    }
    return out;
}

RootMultiset parse_bpoly(std::string_view text)
{
    RootMultiset out;
    if (trim(text).empty()) return out;
    for (auto item : split(text, ',')) {
        const auto colon = item.find(':');
        const Rational root = parse_rational(item.substr(0, colon));
        unsigned mult = 1;
        if (colon != std::string_view::npos) {
            const Rational m = parse_rational(item.substr(colon + 1));
            if (!is_integer(m) || m < 1 || m > 1000) throw InputError("bad multiplicity in " + std::string(item));
            mult = numerator(m).convert_to<unsigned>();
        }
        out.emplace_back(root, mult);
    }
    return out;
}

Json rationals_to_json(const std::vector<Rational>& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

Json integers_to_json(const IntVector& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(to_string(x));
    return arr;
}

Json newton_to_json(const NewtonPolyhedron& p, const std::vector<FanCone>& cones, const Integer& modulus)
{
    Json doc;
    Json facets = Json::array();
    for (const auto& f : p.facets()) {
        Json j;
        j["functional"] = rationals_to_json(f.functional);
        j["modulus"] = to_string(f.modulus);
        j["coordinate"] = f.in_coordinate_hyperplane;
        facets.push_back(std::move(j));
    }
    doc["facets"] = std::move(facets);
    Json cs = Json::array();
    for (const auto& c : cones) {
        Json j;
        j["face"] = c.face;
        j["dim"] = c.dim;
        j["maximal"] = c.maximal;
        j["coordinate"] = c.in_coordinate_hyperplane;
        j["facets"] = p.faces()[c.face].facets;
        cs.push_back(std::move(j));
    }
    doc["cones"] = std::move(cs);
    doc["integrality_modulus"] = to_string(modulus);
    return doc;
}

Json root_report_to_json(const RootReport& r, bool verbose)
{
    Json doc;
    doc["roots"] = rationals_to_json(r.roots);
    doc["mod_z_classes"] = rationals_to_json(r.mod_z_classes);
    doc["modulus"] = to_string(r.modulus);
    doc["warnings"] = r.warnings;
    if (verbose) {
        Json certs = Json::object();
        for (const auto& root : r.roots) {
            Json list = Json::array();
            for (const auto& c : r.certificates.at(root)) {
                Json j;
                j["cone"] = c.cone;
                j["residue"] = integers_to_json(c.residue);
                j["representative"] = integers_to_json(c.representative);
                j["correction"] = to_string(c.correction);
                Json trace = Json::array();
                for (const auto& t : c.trace) trace.push_back({to_string(t.q), to_string(t.tau), to_string(t.tau_q)});
                j["trace"] = std::move(trace);
                list.push_back(std::move(j));
            }
            certs[to_string(root)] = std::move(list);
        }
        doc["certificates"] = std::move(certs);
        Json cov = Json::array();
        for (const auto& c : r.coverage)
            cov.push_back({{"cone", c.cone}, {"dim", c.dim}, {"realized", c.realized}, {"classes", to_string(c.classes)}});
        doc["coverage"] = std::move(cov);
    }
    return doc;
}

Json gamma_report_to_json(const GammaReport& r, bool verbose)
{
    Json doc;
    doc["roots"] = rationals_to_json(r.roots);
    doc["alpha_max"] = to_string(r.alpha_max);
    doc["beta_min"] = to_string(r.beta_min);
    if (verbose) {
        Json comps = Json::object();
        for (const auto& root : r.roots) {
            const auto& g = r.witnesses.at(root);
            comps[to_string(root)] = {{"A", g.gens},
                                      {"alpha", integers_to_json(g.alpha)},
                                      {"B", g.vars},
                                      {"beta", integers_to_json(g.beta)}};
        }
        doc["components"] = std::move(comps);
    }
    return doc;
}

Json law_to_json(const QuasiLinearLaw& law, bool verbose)
{
    Json doc;
    doc["modulus"] = to_string(law.modulus);
    doc["slope"] = to_string(law.slope);
    Json icpt = Json::object();
    for (const auto& [j, g] : law.intercepts) icpt[std::to_string(j)] = to_string(g);
    doc["intercepts"] = std::move(icpt);
    doc["q_min"] = to_string(law.q_min);
    if (verbose) {
        Json trace = Json::object();
        for (const auto& [j, samples] : law.trace) {
            Json list = Json::array();
            for (const auto& s : samples) list.push_back({to_string(s.q), to_string(s.nu)});
            trace[std::to_string(j)] = std::move(list);
        }
        doc["trace"] = std::move(trace);
    }
    return doc;
}

Json periodicity_to_json(const Periodicity& p)
{
    Json doc;
    doc["nu"] = integers_to_json(p.nu_values);
    doc["differences"] = integers_to_json(p.differences);
    doc["preperiod"] = p.preperiod;
    doc["period"] = p.period;
    return doc;
}

}  // namespace bsroots
