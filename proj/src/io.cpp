#include "g2cl/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace g2cl {

json to_json(const Rat& q) { return to_string(q); }

json to_json(const RatPoly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(to_string(p.coeff(i)));
    return arr;
}

json to_json(const EllipticCurve& e) {
    return json::array(
        {to_string(e.a1), to_string(e.a2), to_string(e.a3), to_string(e.a4), to_string(e.a6)});
}

json to_json(const VerifyFlags& f) {
    return json{{"quad_factor_divides", f.quad_factor_divides},
                {"et_isomorphic", f.et_isomorphic},
                {"eu_isomorphic", f.eu_isomorphic},
                {"sextic_separable", f.sextic_separable},
                {"bielliptic_eu", f.bielliptic_eu},
                {"bielliptic_et", f.bielliptic_et}};
}

json to_json(const HLPCurveRecord& rec) {
    return json{{"seed",
                 {{"t", to_string(rec.coeffs.t)},
                  {"u", to_string(rec.coeffs.u)},
                  {"z", to_string(rec.coeffs.z)}}},
                {"sextic", to_json(rec.sextic)},
                {"et", to_json(rec.et_prime)},
                {"eu", to_json(rec.eu_prime)},
                {"flags", to_json(rec.flags)}};
}

json to_json(const IgusaClass& ic) {
    return json::array(
        {to_string(ic.I2), to_string(ic.I4), to_string(ic.I6), to_string(ic.I10)});
}

json to_json(const CurveResult& cr) {
    json roots = json::array();
    for (const Rat& r : cr.roots) roots.push_back(to_string(r));
    return json{{"seed",
                 {{"t", to_string(cr.seed.t)},
                  {"u", to_string(cr.seed.u)},
                  {"z", to_string(cr.seed.z)}}},
                {"sextic", to_json(cr.model)},
                {"roots", roots},
                {"igusa", to_json(cr.igusa)}};
}

json to_json(const ConventionCounts& c) {
    return json{{"solutions", c.n_solutions},
                {"rwp_seeds", c.n_rwp_seeds},
                {"rwp_models", c.n_rwp_models},
                {"geometric_classes", c.n_geometric_classes}};
}

json to_json(const SearchReport& rep) {
    json conv;
    for (const auto& [name, counts] : rep.conventions) conv[name] = to_json(counts);
    return json{{"height_bound", rep.height_bound},
                {"seed_rationals", rep.n_seed_rationals},
                {"solutions", rep.n_solutions},
                {"curves_built", rep.n_curves_built},
                {"rwp_seeds", rep.n_rwp_seeds},
                {"rwp_models", rep.n_rwp_models},
                {"geometric_classes", rep.n_geometric_classes},
                {"conventions", conv},
                {"seconds", rep.seconds}};
}

json to_json(const ClassGroupReport& rep) {
    return json{{"D", to_string(rep.D)}, {"h", rep.h}, {"rank5", rep.rank5},
                {"seconds", rep.seconds}};
}

json to_json(const QuadForm& f) {
    return json::array({to_string(f.a), to_string(f.b), to_string(f.c)});
}

json to_json(const HarvestRecord& rec) {
    return json{{"n", rec.n},
                {"value", to_string(rec.value)},
                {"d", to_string(rec.d)},
                {"report", to_json(rec.report)}};
}

RatPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rat> c;
    for (const auto& e : j) {
        if (e.is_number_integer())
            c.push_back(Rat(static_cast<long>(e.get<long long>())));
        else
            c.push_back(parse_rat(e.get<std::string>()));
    }
    return RatPoly(std::move(c));
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("file_hash: cannot open " + path);
    uint64_t h = 1469598103934665603ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf), in.gcount() > 0)
        for (std::streamsize i = 0; i < in.gcount(); ++i)
            h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ULL;
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace g2cl
