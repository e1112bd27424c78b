#include "g2cl/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>

#include "g2cl/factor.hpp"
#include "g2cl/x1ten.hpp"

namespace g2cl {

std::string to_string(ZSignConvention z) {
    return z == ZSignConvention::BothSigns ? "both" : "nonneg";
}

std::string to_string(PairOrderConvention p) {
    return p == PairOrderConvention::Ordered ? "ordered" : "unordered";
}

std::vector<Rat> enumerate_rationals(long H) {
    if (H < 1) throw std::invalid_argument("enumerate_rationals: H must be >= 1");
    std::vector<Rat> out;
    for (long b = 1; b <= H; ++b) {
        for (long a = -H; a <= H; ++a) {
            if (std::gcd(std::abs(a), b) != 1) continue;
            Rat q = make_rat(a, b);
            if (excluded_parameter(q)) continue;
            out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Int, std::vector<Rat>> bucket_by_kernel(const std::vector<Rat>& ts) {
    std::map<Int, std::vector<Rat>> buckets;
    for (const Rat& t : ts) {
        Rat d = delta10(t);
        if (d == 0) continue;
        buckets[squarefree_kernel(d)].push_back(t);
    }
    return buckets;
}

namespace {

struct ModelInfo {
    RatPoly poly;
    IgusaClass igusa;
    std::string class_key;
    std::vector<Rat> roots;
    bool rwp = false;
};

std::string model_string(const RatPoly& p) {
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) s += ",";
        s += to_string(p.coeff(i));
    }
    return s;
}

}  // namespace

SearchReport run_search(const SearchConfig& cfg) {
    if (cfg.height_bound < 2) throw std::invalid_argument("run_search: height bound must be >= 2");
    auto start = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.height_bound = cfg.height_bound;
    std::vector<Rat> seeds = enumerate_rationals(cfg.height_bound);
    rep.n_seed_rationals = static_cast<long>(seeds.size());
    auto buckets = bucket_by_kernel(seeds);

    const std::string conv_names[4] = {"ordered/both", "ordered/nonneg", "unordered/both",
                                       "unordered/nonneg"};
    for (const auto& n : conv_names) rep.conventions[n];

    const std::string configured =
        to_string(cfg.pair_order) + "/" + to_string(cfg.z_signs);

    // model cache: canonical sextic -> classification data
    std::map<std::string, ModelInfo> models;
    // per-convention sets of surviving model strings
    std::map<std::string, std::set<std::string>> conv_models;

    struct Survivor {
        SolutionTriple seed;
        std::string model;
    };
    std::vector<Survivor> survivors;  // configured convention, in scan order

    long built = 0;
    for (const auto& [kernel, bucket] : buckets) {
        for (const Rat& t : bucket) {
            for (const Rat& u : bucket) {
                auto z0 = solve_z(t, u);
                if (!z0) throw std::logic_error("run_search: bucketed pair without solution");
                for (int sign = 0; sign < 2; ++sign) {
                    Rat z = sign ? Rat(-*z0) : *z0;
                    if (!hypotheses_ok(t, u, z)) continue;
                    const bool in_conv[4] = {true, z >= 0, t <= u, t <= u && z >= 0};

                    HLPCurveRecord rec = build_curve(t, u, z);
                    ++built;
                    if (!rec.flags.all())
                        throw std::runtime_error("run_search: verification failed (" +
                                                 rec.flags.first_failure() + ") at seed t=" +
                                                 to_string(t) + " u=" + to_string(u) +
                                                 " z=" + to_string(z));

                    RatPoly model = square_normalize(rec.sextic);
                    std::string key = model_string(model);
                    auto it = models.find(key);
                    if (it == models.end()) {
                        ModelInfo info;
                        info.poly = model;
                        auto roots = rational_roots(model);
                        for (auto& [r, m] : roots) info.roots.push_back(r);
                        info.rwp = !info.roots.empty();
                        if (info.rwp) {
                            info.igusa = igusa_clebsch(make_genus2(model));
                            info.class_key = normalized_key(info.igusa);
                        }
                        it = models.emplace(key, std::move(info)).first;
                    }
                    const ModelInfo& info = it->second;

                    for (int k = 0; k < 4; ++k) {
                        if (!in_conv[k]) continue;
                        auto& counts = rep.conventions[conv_names[k]];
                        ++counts.n_solutions;
                        if (info.rwp) {
                            ++counts.n_rwp_seeds;
                            conv_models[conv_names[k]].insert(key);
                        }
                    }
                    bool in_configured =
                        (cfg.pair_order == PairOrderConvention::Ordered || t <= u) &&
                        (cfg.z_signs == ZSignConvention::BothSigns || z >= 0);
                    if (info.rwp && in_configured) survivors.push_back({{t, u, z}, key});
                }
            }
        }
    }

    // class counts per convention via the class-invariant key
    for (auto& [name, keys] : conv_models) {
        auto& counts = rep.conventions[name];
        counts.n_rwp_models = static_cast<long>(keys.size());
        std::set<std::string> classes;
        for (const auto& k : keys) classes.insert(models.at(k).class_key);
        counts.n_geometric_classes = static_cast<long>(classes.size());
    }

    const ConventionCounts& main = rep.conventions.at(configured);
    rep.n_solutions = main.n_solutions;
    rep.n_curves_built = main.n_solutions;  // every hypothesis-passing triple is constructed
    (void)built;
    rep.n_rwp_seeds = main.n_rwp_seeds;
    rep.n_rwp_models = main.n_rwp_models;
    rep.n_geometric_classes = main.n_geometric_classes;

    // one result per distinct model, first seed wins, deterministic order
    std::set<std::string> seen;
    for (const Survivor& s : survivors) {
        if (!seen.insert(s.model).second) continue;
        const ModelInfo& info = models.at(s.model);
        CurveResult cr;
        cr.seed = s.seed;
        cr.model = info.poly;
        cr.roots = info.roots;
        cr.igusa = info.igusa;
        cr.class_key = info.class_key;
        rep.curves.push_back(std::move(cr));
    }

    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace g2cl
