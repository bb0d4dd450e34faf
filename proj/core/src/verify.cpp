#include "boxcalc/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "boxcalc/binomial.hpp"
#include "boxcalc/closed_form.hpp"
#include "boxcalc/operators.hpp"
#include "boxcalc/sequences.hpp"

namespace boxcalc {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Distinct points of the grid (1/210)·ℤ inside [lo, hi], skipping the
// half-integer sublattice (k ≡ 0 mod 105) so that no knot of an f_n, g_n,
// or any half-lattice test function can be hit. 210 = 2·3·5·7 keeps the
// grid fine enough to separate the piece polynomials encountered here.
std::vector<Rational> sample_points(const Rational& lo, const Rational& hi, int count,
                                    std::mt19937_64& rng) {
    const long long kmin = ceil(lo * 210).convert_to<long long>();
    const long long kmax = floor(hi * 210).convert_to<long long>();
    const auto span = static_cast<std::uint64_t>(kmax - kmin + 1);
    std::set<long long> chosen;
    std::vector<Rational> points;
    points.reserve(static_cast<std::size_t>(count));
    long long attempts = 0;
    const long long limit = 64LL * count + 4096;
    while (static_cast<int>(points.size()) < count && attempts++ < limit) {
        const long long k = kmin + static_cast<long long>(rng() % span);
        if (k % 105 == 0) continue;
        if (!chosen.insert(k).second) continue;
        points.emplace_back(Integer(k), Integer(210));
    }
    return points;
}

std::string range_label(int n_lo, int n_max) {
    return "n=" + std::to_string(n_lo) + ".." + std::to_string(n_max);
}

}  // namespace

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

PiecewisePoly random_test_function(std::uint64_t seed, int max_knots, int max_degree) {
    if (max_knots < 2) throw std::invalid_argument("random_test_function needs max_knots >= 2");
    if (max_knots > 24) throw std::invalid_argument("random_test_function knot pool caps at 24");
    if (max_degree < 0) throw std::invalid_argument("random_test_function needs max_degree >= 0");
    std::mt19937_64 rng(seed);
    const int knot_count = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_knots - 1));
    const bool half_lattice = (rng() & 1U) != 0;

    std::set<Rational> knot_set;
    while (static_cast<int>(knot_set.size()) < knot_count) {
        if (half_lattice) {
            const auto j = static_cast<long long>(rng() % 25) - 12;  // j/2 in [-6, 6]
            knot_set.insert(Rational(Integer(j), Integer(2)));
        } else {
            const auto num = static_cast<long long>(rng() % 33) - 16;
            const auto den = static_cast<long long>(rng() % 8) + 1;
            knot_set.insert(Rational(Integer(num), Integer(den)));
        }
    }
    std::vector<Rational> knots(knot_set.begin(), knot_set.end());

    std::vector<Polynomial> pieces;
    pieces.reserve(static_cast<std::size_t>(knot_count) + 1);
    pieces.emplace_back();
    for (int i = 1; i < knot_count; ++i) {
        const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(degree) + 1);
        for (int d = 0; d <= degree; ++d)
            coeffs.emplace_back(static_cast<long long>(rng() % 11) - 5);
        pieces.emplace_back(Polynomial(std::move(coeffs)));
    }
    pieces.emplace_back();
    return PiecewisePoly::from_parts(std::move(knots), std::move(pieces));
}

VerificationReport run_all(int n_max, int samples_per_n, std::uint64_t seed) {
    if (n_max < 2) throw std::invalid_argument("run_all needs n_max >= 2");
    if (samples_per_n < 1) throw std::invalid_argument("run_all needs samples_per_n >= 1");

    VerificationReport report;
    report.seed = seed;
    report.n_max = n_max;
    report.samples_per_n = samples_per_n;

    const auto push = [&report](std::string name, std::string parameters, bool ok,
                                std::optional<std::string> witness) {
        report.checks.push_back(
            {std::move(name), std::move(parameters), ok, std::move(witness)});
    };

    // The coefficient table is checked at least up to 32 rows regardless of
    // n_max — the table is cheap and the larger range exercises carry-free
    // big-integer growth.
    {
        const int table_n = std::max(32, n_max);
        const CoeffTable table = coeff_table(table_n);
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 1; n <= table_n && ok; ++n) {
            for (int k = 0; k <= n - 1; ++k) {
                if (table.entry(n, k) == binomial(n - 1, k)) continue;
                ok = false;
                witness = "entry(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                          table.entry(n, k).str() + " vs binomial(" + std::to_string(n - 1) +
                          "," + std::to_string(k) + ") = " + binomial(n - 1, k).str();
                break;
            }
        }
        push("coefficient-table-vs-binomial", "n_max=" + std::to_string(table_n), ok, witness);
    }

    // One seed per test function, fixed up front so the commutativity and
    // derivative-identity checks run on the very same functions.
    std::vector<std::uint64_t> function_seeds(static_cast<std::size_t>(samples_per_n));
    {
        std::mt19937_64 seeder(splitmix64(seed ^ 0x66756E63ULL));
        for (auto& s : function_seeds) s = seeder();
    }
    const std::string function_params =
        "functions=" + std::to_string(samples_per_n) + ", max_knots=6, max_degree=4";

    {
        bool ok = true;
        std::optional<std::string> witness;
        for (std::size_t i = 0; i < function_seeds.size() && ok; ++i) {
            const PiecewisePoly u = random_test_function(function_seeds[i], 6, 4);
            if (equal_ae(diff_L(window_K(u)), window_K(diff_L(u)))) continue;
            ok = false;
            witness = "function " + std::to_string(i) + " (seed " +
                      std::to_string(function_seeds[i]) + "): L·K and K·L disagree";
        }
        push("commutativity", function_params, ok, witness);
    }

    {
        bool ok = true;
        std::optional<std::string> witness;
        for (std::size_t i = 0; i < function_seeds.size() && ok; ++i) {
            const PiecewisePoly u = random_test_function(function_seeds[i], 6, 4);
            if (equal_ae(derivative(window_K(u)), diff_L(u))) continue;
            ok = false;
            witness = "function " + std::to_string(i) + " (seed " +
                      std::to_string(function_seeds[i]) + "): (K u)' and L u disagree";
        }
        push("derivative-identity", function_params, ok, witness);
    }

    const std::string sampled_params_tail =
        ", samples_per_n=" + std::to_string(samples_per_n) + ", grid=1/210";

    {
        std::mt19937_64 rng(splitmix64(seed ^ 0x665F636CULL));
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 2; n <= n_max && ok; ++n) {
            const PiecewisePoly fn = build_f(n);
            const Rational lo = Rational(-n, 2) - 1;
            const Rational hi = Rational(n, 2) + 1;
            for (const Rational& x : sample_points(lo, hi, samples_per_n, rng)) {
                const Rational direct = eval_f_closed(n, x);
                const Rational recursive = fn.eval(x, Side::interior);
                if (direct == recursive) continue;
                ok = false;
                witness = "n=" + std::to_string(n) + ", x=" + x.to_string() + ": closed form " +
                          direct.to_string() + " vs recursion " + recursive.to_string();
                break;
            }
        }
        push("f-closed-form-equivalence", range_label(2, n_max) + sampled_params_tail, ok,
             witness);
    }

    {
        std::mt19937_64 rng(splitmix64(seed ^ 0x675F636FULL));
        bool ok = true;
        std::optional<std::string> witness;
        // Where both sides exist as piecewise objects, compare those outright;
        // sampling is reserved for the pointwise evaluator.
        for (int n = 1; n <= n_max && ok; ++n) {
            if (equal_ae(build_g(n), build_g_via_f(n))) continue;
            ok = false;
            witness = "n=" + std::to_string(n) + ": piecewise forms differ";
        }
        for (int n = 1; n <= n_max && ok; ++n) {
            const PiecewisePoly gn = build_g(n);
            const Rational lo = Rational(-n, 2) - 1;
            const Rational hi = Rational(n, 2) + 1;
            for (const Rational& x : sample_points(lo, hi, samples_per_n, rng)) {
                const Rational direct = eval_g_combination(n, x);
                const Rational recursive = gn.eval(x, Side::interior);
                if (direct == recursive) continue;
                ok = false;
                witness = "n=" + std::to_string(n) + ", x=" + x.to_string() + ": combination " +
                          direct.to_string() + " vs recursion " + recursive.to_string();
                break;
            }
        }
        push("g-combination-equivalence",
             range_label(1, n_max) + sampled_params_tail + ", plus full piecewise comparison",
             ok, witness);
    }

    {
        std::mt19937_64 rng(splitmix64(seed ^ 0x675F636CULL));
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 2; n <= n_max && ok; ++n) {
            const PiecewisePoly gn = build_g(n);
            const Rational lo = Rational(-n, 2) - 1;
            const Rational hi = Rational(n, 2) + 1;
            for (const Rational& x : sample_points(lo, hi, samples_per_n, rng)) {
                const Rational direct = eval_g_closed(n, x);
                const Rational recursive = gn.eval(x, Side::interior);
                if (direct == recursive) continue;
                ok = false;
                witness = "n=" + std::to_string(n) + ", x=" + x.to_string() + ": closed form " +
                          direct.to_string() + " vs recursion " + recursive.to_string();
                break;
            }
        }
        push("g-closed-form-equivalence", range_label(2, n_max) + sampled_params_tail, ok,
             witness);
    }

    {
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 1; n <= n_max && ok; ++n) {
            const Rational fi = definite_integral(build_f(n));
            const Rational gi = definite_integral(build_g(n));
            if (fi == Rational(1) && gi == Rational(1)) continue;
            ok = false;
            witness = "n=" + std::to_string(n) + ": integral f = " + fi.to_string() +
                      ", integral g = " + gi.to_string();
        }
        push("conservation", range_label(1, n_max) + ", kinds=f,g", ok, witness);
    }

    {
        const auto violation = [](const PiecewisePoly& p, int n) -> std::optional<std::string> {
            const Rational bound(n, 2);
            for (const Rational& k : p.knots()) {
                if (!(k * 2).is_integer())
                    return "knot " + k.to_string() + " off the half-integer lattice";
                if (abs(k) > bound) return "knot " + k.to_string() + " outside [-n/2, n/2]";
            }
            if (p.max_degree() > n - 1)
                return "piece degree " + std::to_string(p.max_degree()) + " exceeds n-1";
            if (!p.has_compact_support()) return std::string("nonzero outer piece");
            return std::nullopt;
        };
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 1; n <= n_max && ok; ++n) {
            if (auto why = violation(build_f(n), n)) {
                ok = false;
                witness = "f, n=" + std::to_string(n) + ": " + *why;
            } else if (auto why_g = violation(build_g(n), n)) {
                ok = false;
                witness = "g, n=" + std::to_string(n) + ": " + *why_g;
            }
        }
        push("structure-invariants", range_label(1, n_max) + ", kinds=f,g", ok, witness);
    }

    {
        bool ok = true;
        std::optional<std::string> witness;
        for (int n = 1; n <= n_max && ok; ++n) {
            const PiecewisePoly fn = build_f(n);
            if (equal_ae(fn, reflect(fn))) continue;
            ok = false;
            witness = "n=" + std::to_string(n) + ": f_n differs from its reflection";
        }
        push("f-symmetry", range_label(1, n_max), ok, witness);
    }

    {
        const Rational x(-1, 4);
        const Rational negative = eval_g_closed(2, x, TailSign::negative);
        const Rational positive = eval_g_closed(2, x, TailSign::positive);
        const Rational recursive = build_g(2).eval(x, Side::interior);
        const bool ok =
            negative == Rational(3, 4) && positive == recursive && recursive == Rational(7, 4);
        // The witness is recorded even on pass; it is the point of the check.
        std::string witness = "n=2, x=-1/4: negative-tail variant = " + negative.to_string() +
                              ", implemented form = " + positive.to_string() +
                              ", recursion = " + recursive.to_string();
        push("sign-variant-witness", "n=2, x=-1/4", ok, std::move(witness));
    }

    return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["parameters"] = c.parameters;
        entry["status"] = c.passed ? "pass" : "fail";
        if (c.witness) entry["witness"] = *c.witness;
        j["checks"].push_back(std::move(entry));
    }
    j["seed"] = report.seed;
    j["n_max"] = report.n_max;
    j["samples_per_n"] = report.samples_per_n;
    return j;
}

}  // namespace boxcalc
