#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2cl/genus2.hpp"
#include "g2cl/hlp.hpp"

namespace g2cl {

enum class ZSignConvention { NonnegOnly, BothSigns };
enum class PairOrderConvention { Ordered, Unordered };

std::string to_string(ZSignConvention z);
std::string to_string(PairOrderConvention p);

struct SearchConfig {
    long height_bound = 100;
    ZSignConvention z_signs = ZSignConvention::BothSigns;
    PairOrderConvention pair_order = PairOrderConvention::Ordered;
    bool emit_curves = false;
    std::string output_path;
    int workers = 1;
};

struct SolutionTriple {
    Rat t, u, z;
};

struct CurveResult {
    SolutionTriple seed;
    RatPoly model;  // square-normalized sextic (canonical in {q^2 f})
    std::vector<Rat> roots;
    IgusaClass igusa;
    std::string class_key;
};

struct ConventionCounts {
    long n_solutions = 0;
    long n_rwp_seeds = 0;    // solutions whose curve has a rational Weierstrass point
    long n_rwp_models = 0;   // distinct canonical sextic models among those
    long n_geometric_classes = 0;
};

struct SearchReport {
    long height_bound = 0;
    long n_seed_rationals = 0;
    long n_solutions = 0;
    long n_curves_built = 0;
    long n_rwp_seeds = 0;
    long n_rwp_models = 0;
    long n_geometric_classes = 0;
    // all four symmetry conventions, keyed "ordered/both" etc.
    std::map<std::string, ConventionCounts> conventions;
    std::vector<CurveResult> curves;  // rwp survivors, distinct models, configured convention
    double seconds = 0.0;
};

// All lowest-terms a/b with |a| <= H, 1 <= b <= H, excluding {0, 1/2, 1},
// ascending.
std::vector<Rat> enumerate_rationals(long H);

// Groups seeds by the squarefree kernel of delta10; two seeds share a
// bucket exactly when the matching equation has a rational solution z.
std::map<Int, std::vector<Rat>> bucket_by_kernel(const std::vector<Rat>& ts);

// Throws std::runtime_error if any constructed record fails verification
// (that would indicate a coefficient transcription bug, not a data
// condition).
SearchReport run_search(const SearchConfig& cfg);

}  // namespace g2cl
