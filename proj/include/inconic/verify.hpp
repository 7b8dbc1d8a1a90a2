#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inconic/conic.hpp"

namespace inconic {

enum class ShapeFilter { Any, NonRight, Acute };

const char* to_string(ShapeFilter f);
/// The more restrictive of the two filters.
ShapeFilter stricter(ShapeFilter a, ShapeFilter b);

/// Deterministic 64-bit generator (splitmix64). The standard distributions
/// are implementation-defined, so sampling goes through this to keep reports
/// byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform integer in [lo, hi], unbiased by rejection.
    long uniform(long lo, long hi);

private:
    std::uint64_t state_;
};

/// Mixes (seed, stream, index) into an independent per-trial seed, so trials
/// can run in any order (or concurrently) with identical results.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Rejection sampler for triangles on the integer grid [-bound, bound]^2
/// with nonzero area and the requested angle shape.
TriangleRef sample_triangle(Rng& rng, int bound, ShapeFilter filter);

/// Seeded triangle source; sample(i) is independent of evaluation order, so
/// trial streams can be replayed or parallelized.
struct TriangleSampler {
    std::uint64_t seed = 1;
    int bound = 100;
    ShapeFilter filter = ShapeFilter::Any;

    TriangleRef sample(std::uint64_t index) const;
};

/// Integer perspector in [-10,10]^3, all coordinates nonzero, finite
/// (coordinate sum nonzero). With finite_contacts, pairwise coordinate sums
/// are also nonzero so all three cevian feet are finite points.
HPoint sample_perspector(Rng& rng, bool finite_contacts = false);

/// Random rational chord of an inscribed conic, generated through the pencil
/// of lines at a contact point. Both endpoints are finite and distinct.
std::pair<HPoint, HPoint> sample_inconic_chord(const Conic& c, const HPoint& contact, Rng& rng);

// -- executable statements of the verified results ------------------------------

/// The lines joining the vertices to the tangency points of inconic(p)
/// concur at p, and the Ceva signed-ratio product of the tangency points
/// equals one. Tangency points are read off the conic matrix, not assumed.
bool verify_perspector_concurrency(const TriangleRef& t, const HPoint& p);

/// Chord midpoint, chord pole and conic center are collinear.
bool verify_lemma_chord_pole_center(const Conic& c, const HPoint& b, const HPoint& cpt);

/// The vertex-to-orthic-midpoint lines concur at the symmedian point.
bool verify_lemma_symmedian_midpoints(const TriangleRef& t);

/// Each line joining a side midpoint to the corresponding altitude midpoint
/// passes through the symmedian point.
bool verify_lemma_altitude_midline(const TriangleRef& t);

/// The orthic conic is centered at the symmedian point.
bool verify_thm1_orthic_center(const TriangleRef& t);

/// complement(isotomic(orthocenter)) equals the symmedian point, including
/// the proof-internal midline intersection landing on the centroid.
bool verify_thm2_complement_isotomic(const TriangleRef& t);

/// Center of inconic(p) equals complement(isotomic(p)); for parabolas both
/// degenerate to the same point at infinity.
bool verify_thm3_center_formula(const TriangleRef& t, const HPoint& p);

/// The Lemoine hexagon is concyclic about the symmedian point, centrally
/// symmetric, has parallel opposite sides, and circumscribes the orthic
/// conic with the altitude feet among the tangency points.
bool verify_hexagon_lemma(const TriangleRef& t);

/// complement(isotomic(g)) = g, and the sampled p != g is not fixed.
bool verify_corollary_fixed_point_sample(const HPoint& p);

/// The contact-chord center construction concurs and matches the
/// matrix-derived center (projectively, parabolas included).
bool verify_center_construction_agreement(const HPoint& p);

// -- randomized suite ----------------------------------------------------------

struct Counterexample {
    std::string triangle;
    std::string perspector;
    std::string detail;
};

struct VerdictReport {
    std::string property;
    int attempted = 0;
    int passed = 0;
    std::optional<Counterexample> counterexample;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;

    bool ok() const { return passed == attempted && !counterexample; }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 1000;
    ShapeFilter shape = ShapeFilter::Any;
    int bound = 100;
    /// Adds a deliberately false property, to exercise the failure path.
    bool inject_failure = false;
};

/// Runs every verifier over seeded random triangles and perspectors.
/// Deterministic given the options. Throws std::invalid_argument for
/// trials < 1. A failing trial is shrunk by halving coordinate magnitudes
/// while the failure persists; other properties still run.
std::vector<VerdictReport> run_suite(const SuiteOptions& options);

bool all_passed(const std::vector<VerdictReport>& reports);

/// Fixed-width table plus counterexample dumps; timing is deliberately
/// excluded so identical invocations print byte-identical reports.
void print_report_table(const std::vector<VerdictReport>& reports, std::ostream& os);

}  // namespace inconic
