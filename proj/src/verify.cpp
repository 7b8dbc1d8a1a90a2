#include "inconic/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace inconic {

const char* to_string(ShapeFilter f) {
    switch (f) {
        case ShapeFilter::Any: return "any";
        case ShapeFilter::NonRight: return "non-right";
        default: return "acute";
    }
}

ShapeFilter stricter(ShapeFilter a, ShapeFilter b) {
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return lo + static_cast<long>(r % span);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    Rng mixer(seed ^ (stream * 0xD1342543DE82EF95ULL) ^ (index * 0x2545F4914F6CDD1DULL));
    return mixer.next();
}

TriangleRef sample_triangle(Rng& rng, int bound, ShapeFilter filter) {
    for (;;) {
        Vec2 a(Scalar(rng.uniform(-bound, bound)), Scalar(rng.uniform(-bound, bound)));
        Vec2 b(Scalar(rng.uniform(-bound, bound)), Scalar(rng.uniform(-bound, bound)));
        Vec2 c(Scalar(rng.uniform(-bound, bound)), Scalar(rng.uniform(-bound, bound)));
        if (sgn(cross(b - a, c - a)) == 0) continue;
        TriangleRef t(std::move(a), std::move(b), std::move(c));
        if (filter == ShapeFilter::Acute && !t.acute()) continue;
        if (filter == ShapeFilter::NonRight && t.right()) continue;
        return t;
    }
}

TriangleRef TriangleSampler::sample(std::uint64_t index) const {
    Rng rng(trial_seed(seed, 0x7121, index));
    return sample_triangle(rng, bound, filter);
}

HPoint sample_perspector(Rng& rng, bool finite_contacts) {
    auto coord = [&rng] {
        long v;
        do {
            v = rng.uniform(-10, 10);
        } while (v == 0);
        return v;
    };
    for (;;) {
        long p = coord(), q = coord(), r = coord();
        if (p + q + r == 0) continue;
        if (finite_contacts && (q + r == 0 || r + p == 0 || p + q == 0)) continue;
        return HPoint(p, q, r);
    }
}

std::pair<HPoint, HPoint> sample_inconic_chord(const Conic& c, const HPoint& contact, Rng& rng) {
    auto random_conic_point = [&]() -> HPoint {
        for (;;) {
            long u = rng.uniform(-9, 9), v = rng.uniform(-9, 9), w = rng.uniform(-9, 9);
            if (u == 0 && v == 0 && w == 0) continue;
            HPoint dir(u, v, w);
            if (sgn(c.value_at(dir)) == 0) continue;  // pencil line must be a secant
            HPoint second = chord_second_point(c, contact, dir);
            if (second == contact || second.is_infinite()) continue;
            return second;
        }
    };
    HPoint b = random_conic_point();
    for (;;) {
        HPoint cpt = random_conic_point();
        if (cpt != b) return {std::move(b), std::move(cpt)};
    }
}

// -- verifiers -----------------------------------------------------------------

bool verify_perspector_concurrency(const TriangleRef&, const HPoint& p) {
    Conic inc = inconic_from_perspector(p);
    auto contacts = inconic_contacts(inc);
    HLine la = join(vertex_point(0), contacts[0]);
    HLine lb = join(vertex_point(1), contacts[1]);
    HLine lc = join(vertex_point(2), contacts[2]);
    if (!concurrent(la, lb, lc) || meet(la, lb) != p) return false;
    // Ceva's signed-ratio product over the tangency points, exactly one:
    // (BA'/A'C)(CB'/B'A)(AC'/C'B) = (z0/y0)(x1/z1)(y2/x2).
    Integer num = contacts[0].z() * contacts[1].x() * contacts[2].y();
    Integer den = contacts[0].y() * contacts[1].z() * contacts[2].x();
    return num == den;
}

bool verify_lemma_chord_pole_center(const Conic& c, const HPoint& b, const HPoint& cpt) {
    HPoint chord_pole = pole(c, join(b, cpt));
    return collinear(chord_pole, midpoint(b, cpt), conic_center(c));
}

bool verify_lemma_symmedian_midpoints(const TriangleRef& t) {
    auto mids = orthic_midpoints(t);
    HLine la = join(vertex_point(0), mids[0]);
    HLine lb = join(vertex_point(1), mids[1]);
    HLine lc = join(vertex_point(2), mids[2]);
    return concurrent(la, lb, lc) && meet(la, lb) == symmedian_point(t);
}

bool verify_lemma_altitude_midline(const TriangleRef& t) {
    auto feet = altitude_feet(t);
    HPoint k = symmedian_point(t);
    for (int s = 0; s < 3; ++s) {
        Side side = static_cast<Side>(s);
        HPoint alt_mid = midpoint(opposite_vertex(side), feet[s]);
        if (!incident(k, join(side_midpoint(side), alt_mid))) return false;
    }
    return true;
}

bool verify_thm1_orthic_center(const TriangleRef& t) {
    Conic orthic = inconic_from_perspector(orthocenter(t));
    return conic_center(orthic) == symmedian_point(t);
}

bool verify_thm2_complement_isotomic(const TriangleRef& t) {
    if (t.right()) throw DegenerateOrthic();  // H sits on a vertex
    HPoint h = orthocenter(t);
    if (complement(isotomic_conjugate(h)) != symmedian_point(t)) return false;

    // Proof-internal step: the median from a vertex meets the line through
    // the altitude midpoint and the reflected foot at the centroid. On an
    // isoceles axis the two lines coincide and the meet is indeterminate;
    // at least one vertex always yields a proper intersection.
    auto feet = altitude_feet(t);
    int checked = 0;
    for (int s = 0; s < 3; ++s) {
        Side side = static_cast<Side>(s);
        HPoint vertex = opposite_vertex(side);
        HPoint side_mid = side_midpoint(side);
        HLine median = join(vertex, side_mid);
        HPoint alt_mid = midpoint(vertex, feet[s]);
        HPoint reflected_foot = reflect(feet[s], side_mid);
        if (alt_mid == reflected_foot) return false;  // cannot happen off BC
        HLine midline = join(alt_mid, reflected_foot);
        if (median == midline) continue;
        ++checked;
        if (meet(median, midline) != centroid()) return false;
    }
    return checked > 0;
}

bool verify_thm3_center_formula(const TriangleRef&, const HPoint& p) {
    Conic inc = inconic_from_perspector(p);
    HPoint iso = isotomic_conjugate(p);
    if (classify(inc) == ConicClass::Parabola) {
        // The complement fixes every point at infinity, so the identity
        // degenerates to: the isotomic conjugate is the infinite center
        // direction, with zero coordinate sum.
        return iso.is_infinite() && pole(inc, line_at_infinity()) == iso;
    }
    return conic_center(inc) == complement(iso);
}

bool verify_hexagon_lemma(const TriangleRef& t) {
    Hexagon hex = lemoine_hexagon(t);
    HPoint k = symmedian_point(t);
    Conic orthic = inconic_from_perspector(orthocenter(t));
    auto feet = altitude_feet(t);

    Scalar radius2 = t.dist2(hex.vertex(0), k);
    for (int i = 1; i < 6; ++i)
        if (t.dist2(hex.vertex(i), k) != radius2) return false;

    for (int i = 0; i < 3; ++i) {
        if (reflect(hex.vertex(i), k) != hex.vertex(i + 3)) return false;
        if (!incident(k, hex.diagonal(i))) return false;
        // Opposite sides are parallel and congruent.
        HLine s1 = hex.side(i), s2 = hex.side(i + 3);
        if (s1 == s2 || !meet(s1, s2).is_infinite()) return false;
        if (t.dist2(hex.vertex(i), hex.vertex(i + 1)) !=
            t.dist2(hex.vertex(i + 3), hex.vertex(i + 4)))
            return false;
    }

    for (int i = 0; i < 6; ++i)
        if (!is_tangent_line(orthic, hex.side(i))) return false;

    // Sides 0, 2, 4 lie on AB, BC, CA; their tangency points are the feet.
    return pole(orthic, hex.side(0)) == feet[2] && pole(orthic, hex.side(2)) == feet[0] &&
           pole(orthic, hex.side(4)) == feet[1];
}

bool verify_corollary_fixed_point_sample(const HPoint& p) {
    if (complement(isotomic_conjugate(centroid())) != centroid()) return false;
    if (p == centroid()) return true;
    // For p on the Steiner circumellipse the conjugate is at infinity and
    // the complement fixes it there; the composite still cannot return to p.
    HPoint iso = isotomic_conjugate(p);
    HPoint image = iso.is_infinite() ? iso : complement(iso);
    return image != p;
}

bool verify_center_construction_agreement(const HPoint& p) {
    HPoint by_chords = inconic_center_by_chords(p);
    return by_chords == pole(inconic_from_perspector(p), line_at_infinity());
}

// -- suite ---------------------------------------------------------------------

namespace {

struct TrialInput {
    TriangleRef triangle;
    HPoint perspector;
    std::uint64_t salt = 0;
};

enum class PerspectorMode { Generic, FiniteContacts, NonParabola, Thm3Mixed };

struct PropertySpec {
    std::string name;
    ShapeFilter min_shape;
    PerspectorMode pmode;
    int trial_divisor;
    std::function<bool(const TrialInput&)> check;
};

HPoint sample_for_mode(Rng& rng, PerspectorMode mode, std::uint64_t trial) {
    switch (mode) {
        case PerspectorMode::FiniteContacts: return sample_perspector(rng, true);
        case PerspectorMode::NonParabola: {
            for (;;) {
                HPoint p = sample_perspector(rng);
                if (classify(inconic_from_perspector(p)) != ConicClass::Parabola) return p;
            }
        }
        case PerspectorMode::Thm3Mixed: {
            if (trial % 10 == 9) {
                // Target the parabola branch through the rational
                // parametrization of the Steiner circumellipse.
                for (;;) {
                    long u = rng.uniform(-10, 10), v = rng.uniform(-10, 10);
                    if (u == 0 || v == 0 || u + v == 0) continue;
                    return steiner_circumellipse_point(Integer(u), Integer(v));
                }
            }
            return sample_perspector(rng);
        }
        default: return sample_perspector(rng);
    }
}

bool run_check(const PropertySpec& prop, const TrialInput& input, std::string* detail) {
    try {
        return prop.check(input);
    } catch (const GeometryError& e) {
        if (detail) *detail = std::string("unexpected degeneracy: ") + e.what();
        return false;
    }
}

Scalar halved(const Scalar& v) {
    Scalar h = v / 2;
    h.canonicalize();
    return h;
}

std::optional<TriangleRef> halved_triangle(const TriangleRef& t) {
    try {
        return TriangleRef({halved(t.A().x), halved(t.A().y)}, {halved(t.B().x), halved(t.B().y)},
                           {halved(t.C().x), halved(t.C().y)});
    } catch (const DegenerateTriangle&) {
        return std::nullopt;
    }
}

std::optional<HPoint> halved_point(const HPoint& p) {
    std::array<Integer, 3> h = {p[0] / 2, p[1] / 2, p[2] / 2};
    if (sgn(h[0]) == 0 || sgn(h[1]) == 0 || sgn(h[2]) == 0) return std::nullopt;
    HPoint q{Scalar(h[0]), Scalar(h[1]), Scalar(h[2])};
    if (q == p) return std::nullopt;
    return q;
}

/// Shrinks a failing input by halving coordinate magnitudes while the
/// failure persists. Candidates that become invalid (degenerate triangle,
/// wrong shape, zero perspector coordinate) are rejected.
TrialInput shrink_failure(const PropertySpec& prop, ShapeFilter shape, TrialInput input) {
    auto still_fails = [&](const TrialInput& candidate) {
        try {
            return !prop.check(candidate);
        } catch (const GeometryError&) {
            return false;  // invalid candidate, not a genuine failure
        }
    };
    for (int round = 0; round < 64; ++round) {
        bool progressed = false;
        if (auto t2 = halved_triangle(input.triangle)) {
            bool shape_ok = (shape != ShapeFilter::Acute || t2->acute()) &&
                            (shape != ShapeFilter::NonRight || !t2->right());
            TrialInput candidate{*t2, input.perspector, input.salt};
            if (shape_ok && still_fails(candidate)) {
                input = std::move(candidate);
                progressed = true;
            }
        }
        if (auto p2 = halved_point(input.perspector)) {
            TrialInput candidate{input.triangle, *p2, input.salt};
            if (still_fails(candidate)) {
                input = std::move(candidate);
                progressed = true;
            }
        }
        if (!progressed) break;
    }
    return input;
}

std::vector<PropertySpec> build_properties(const SuiteOptions& options) {
    const std::uint64_t seed = options.seed;
    std::vector<PropertySpec> props;

    props.push_back({"perspector_concurrency", ShapeFilter::Any, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) {
                         return verify_perspector_concurrency(in.triangle, in.perspector);
                     }});
    props.push_back({"lemma1_symmedian_midpoints", ShapeFilter::Acute, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) {
                         return verify_lemma_symmedian_midpoints(in.triangle);
                     }});
    props.push_back({"lemma2_chord_pole_center", ShapeFilter::Any, PerspectorMode::NonParabola, 1,
                     [seed](const TrialInput& in) {
                         Conic c = inconic_from_perspector(in.perspector);
                         Rng rng(trial_seed(seed, 0xC0DA, in.salt));
                         auto contacts = inconic_contacts(c);
                         auto [b, cpt] = sample_inconic_chord(c, contacts[0], rng);
                         return verify_lemma_chord_pole_center(c, b, cpt);
                     }});
    props.push_back({"lemma3_altitude_midline", ShapeFilter::Acute, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) { return verify_lemma_altitude_midline(in.triangle); }});
    props.push_back({"thm1_orthic_center", ShapeFilter::Acute, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) { return verify_thm1_orthic_center(in.triangle); }});
    props.push_back({"thm2_complement_isotomic", ShapeFilter::NonRight, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) {
                         return verify_thm2_complement_isotomic(in.triangle);
                     }});
    props.push_back({"thm3_center_formula", ShapeFilter::Any, PerspectorMode::Thm3Mixed, 1,
                     [](const TrialInput& in) {
                         return verify_thm3_center_formula(in.triangle, in.perspector);
                     }});
    props.push_back({"hexagon_lemma", ShapeFilter::Acute, PerspectorMode::Generic, 2,
                     [](const TrialInput& in) { return verify_hexagon_lemma(in.triangle); }});
    props.push_back({"corollary_steiner_fixed_point", ShapeFilter::Any, PerspectorMode::Generic, 1,
                     [](const TrialInput& in) {
                         return verify_corollary_fixed_point_sample(in.perspector);
                     }});
    props.push_back({"figure2_center_construction", ShapeFilter::Any,
                     PerspectorMode::FiniteContacts, 1, [](const TrialInput& in) {
                         return verify_center_construction_agreement(in.perspector);
                     }});
    if (options.inject_failure) {
        props.push_back({"injected_failure_canary", ShapeFilter::Any, PerspectorMode::Generic, 1,
                         [](const TrialInput&) { return false; }});
    }
    return props;
}

}  // namespace

std::vector<VerdictReport> run_suite(const SuiteOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
    auto props = build_properties(options);

    std::vector<VerdictReport> reports;
    for (std::size_t pi = 0; pi < props.size(); ++pi) {
        const PropertySpec& prop = props[pi];
        ShapeFilter shape = stricter(options.shape, prop.min_shape);
        VerdictReport report;
        report.property = prop.name;
        report.seed = options.seed;
        report.attempted = std::max(1, options.trials / prop.trial_divisor);

        auto start = std::chrono::steady_clock::now();
        for (int trial = 0; trial < report.attempted; ++trial) {
            Rng rng(trial_seed(options.seed, pi + 1, trial));
            TrialInput input{sample_triangle(rng, options.bound, shape),
                             sample_for_mode(rng, prop.pmode, trial),
                             static_cast<std::uint64_t>(trial)};
            std::string detail;
            if (run_check(prop, input, &detail)) {
                ++report.passed;
                continue;
            }
            TrialInput minimal = shrink_failure(prop, shape, input);
            report.counterexample = Counterexample{
                minimal.triangle.str(), minimal.perspector.str(),
                detail.empty() ? "property evaluated to false" : detail};
            report.attempted = trial + 1;
            break;  // fail fast within the property, keep running the others
        }
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        reports.push_back(std::move(report));
    }
    return reports;
}

bool all_passed(const std::vector<VerdictReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok()) return false;
    return true;
}

void print_report_table(const std::vector<VerdictReport>& reports, std::ostream& os) {
    os << std::left << std::setw(34) << "property" << std::right << std::setw(8) << "trials"
       << std::setw(8) << "passed" << "  verdict\n";
    os << std::string(58, '-') << "\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(34) << r.property << std::right << std::setw(8) << r.attempted
           << std::setw(8) << r.passed << "  " << (r.ok() ? "PASS" : "FAIL") << "\n";
    }
    for (const auto& r : reports) {
        if (r.ok()) continue;
        os << "\ncounterexample for " << r.property << " (seed " << r.seed << "):\n"
           << "  triangle: " << r.counterexample->triangle << "\n"
           << "  perspector: " << r.counterexample->perspector << "\n"
           << "  detail: " << r.counterexample->detail << "\n";
    }
}

}  // namespace inconic
