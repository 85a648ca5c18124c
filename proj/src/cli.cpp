#include "rankdens/cli.hpp"

#include "rankdens/codes.hpp"
#include "rankdens/critical.hpp"
#include "rankdens/qcomb.hpp"
#include "rankdens/restricted.hpp"
#include "rankdens/semifield.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

namespace rankdens::cli {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw usage_error("unknown format: " + s);
}

std::uint64_t parse_count(const std::string& s) {
    try {
        std::size_t pos = 0;
        if (s.find_first_of("eE.") != std::string::npos) {
            double d = std::stod(s, &pos);
            if (pos != s.size() || d < 1 || d > 1.8e19 || d != std::floor(d)) throw usage_error("");
            return static_cast<std::uint64_t>(d);
        }
        auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw usage_error("");
        return v;
    } catch (const std::exception&) {
        throw usage_error("not a count: " + s);
    }
}

namespace {

std::string fmt_double(double v, unsigned precision) {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(precision)) << v;
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

// typed access to the flag map
struct Args {
    const std::map<std::string, std::string>& m;

    bool has(const std::string& k) const { return m.count(k) > 0; }
    const std::string& str(const std::string& k) const {
        auto it = m.find(k);
        if (it == m.end()) throw usage_error("missing parameter --" + k);
        return it->second;
    }
    long integer(const std::string& k) const {
        const auto& s = str(k);
        try {
            std::size_t pos = 0;
            long v = std::stol(s, &pos);
            if (pos != s.size()) throw usage_error("");
            return v;
        } catch (const std::exception&) {
            throw usage_error("--" + k + " expects an integer, got " + s);
        }
    }
    unsigned u(const std::string& k) const {
        long v = integer(k);
        if (v < 0) throw usage_error("--" + k + " must be non-negative");
        return static_cast<unsigned>(v);
    }
    unsigned u_or(const std::string& k, unsigned def) const { return has(k) ? u(k) : def; }
    BigInt big(const std::string& k) const {
        const auto& s = str(k);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("--" + k + " expects a non-negative integer, got " + s);
        return BigInt(s);
    }
    unsigned prime_power(const std::string& k) const {
        unsigned q = u(k);
        if (!PrimePower::try_of(q)) throw usage_error("--" + k + " must be a prime power");
        return q;
    }
    std::pair<unsigned, unsigned> range(const std::string& k) const {
        const auto& s = str(k);
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            unsigned v = u(k);
            return {v, v};
        }
        std::map<std::string, std::string> tmp{{"a", s.substr(0, dots)}, {"b", s.substr(dots + 2)}};
        Args t{tmp};
        auto lo = t.u("a"), hi = t.u("b");
        if (lo > hi) throw usage_error("--" + k + " range is empty");
        return {lo, hi};
    }
};

struct Value {
    std::optional<Rational> exact;
    std::optional<double> approx;
    json extra = json::object();
};

Value exact_value(const Rational& r) { return {r, to_double(r), json::object()}; }
Value exact_value(const BigInt& b) { return exact_value(Rational(b)); }
Value approx_value(double d) { return {std::nullopt, d, json::object()}; }

struct FormulaDef {
    std::string name;
    std::vector<std::string> params;
    std::string help;
    std::function<Value(const Args&)> eval;
};

json certified_json(const Certified& c) {
    json j;
    j["value"] = c.value;
    j["error"] = c.error;
    return j;
}

const std::vector<FormulaDef>& formulas() {
    static const std::vector<FormulaDef> defs = {
        {"qbinom", {"i", "j", "q"}, "Gaussian binomial [i, j]_q",
         [](const Args& a) { return exact_value(qbinom(a.integer("i"), a.integer("j"), a.big("q"))); }},
        {"gl-order", {"n", "q"}, "|GL_n(q)|", [](const Args& a) { return exact_value(gl_order(a.u("n"), a.big("q"))); }},
        {"rank-count-full", {"n", "m", "i", "q"}, "n x m matrices of rank i",
         [](const Args& a) { return exact_value(rank_count_full(a.u("n"), a.u("m"), a.u("i"), a.big("q"))); }},
        {"ball-size", {"n", "m", "r", "q"}, "n x m matrices of rank at most r",
         [](const Args& a) { return exact_value(ball_size(a.u("n"), a.u("m"), a.u("r"), a.big("q"))); }},
        {"pointset-size", {"n", "m", "r", "q"}, "projective points of rank 1..r",
         [](const Args& a) { return exact_value(pointset_size(a.u("n"), a.u("m"), a.u("r"), a.big("q"))); }},
        {"pi", {"q", "n"}, "prod_{i=1..n} q^i/(q^i - 1)",
         [](const Args& a) { return exact_value(pi_q(a.big("q"), a.u("n"))); }},
        {"pi-infinite", {"q"}, "infinite product pi(q) with certified error",
         [](const Args& a) {
             auto c = pi_q_infinite(a.prime_power("q"), 1e-12);
             Value v = approx_value(c.value);
             v.extra["certified"] = certified_json(c);
             return v;
         }},
        {"alt-exp-sum", {"m"}, "sum_{i=0..m} (-1)^i / i!",
         [](const Args& a) { return exact_value(alt_exp_sum(a.u("m"))); }},
        {"inequality", {"q", "n"}, "log-form comparison with n product terms",
         [](const Args& a) {
             auto c = comparison_inequality_check(a.prime_power("q"), a.u("n"));
             Value v = approx_value(c.margin);
             v.extra["holds"] = c.holds;
             v.extra["conclusive"] = c.conclusive;
             v.extra["error"] = c.error;
             return v;
         }},
        {"density3x3", {"q"}, "density of 3 x 3 codes, dimension 3, distance 3",
         [](const Args& a) { return exact_value(density_3x3_formula(a.big("q"))); }},
        {"mrd-lowerbound", {"n", "q"}, "lower bound on full-rank MRD codes (count and density)",
         [](const Args& a) {
             auto b = mrd_lowerbound_formula(a.u("n"), a.big("q"));
             Value v = exact_value(b.density);
             v.extra["count"] = to_string(b.count);
             return v;
         }},
        {"kantor", {"n"}, "q = 2 lower bound for composite n",
         [](const Args& a) { return exact_value(kantor_lowerbound(a.u("n"))); }},
        {"minfty", {"n", "d", "q"}, "limiting MRD density bound as m grows",
         [](const Args& a) {
             auto b = minfty_bound(a.u("n"), a.u("d"), a.prime_power("q"));
             Value v = approx_value(b.min.value);
             v.extra["first"] = certified_json(b.first);
             v.extra["second"] = certified_json(b.second);
             v.extra["min"] = certified_json(b.min);
             return v;
         }},
        {"asymptotic", {"n", "d", "m"}, "q -> infinity estimates",
         [](const Args& a) {
             Value v;
             json arr = json::array();
             for (const auto& e : asymptotic_constants(a.u("n"), a.u("d"), a.u("m"))) {
                 json j;
                 j["label"] = e.label;
                 j["constant"] = e.exact_constant ? to_string(e.constant) : std::to_string(e.constant_float);
                 j["base"] = e.base;
                 j["exponent"] = to_string(e.exponent);
                 arr.push_back(j);
             }
             v.extra["estimates"] = arr;
             return v;
         }},
        {"avg-density", {"N", "k", "l", "q"}, "average density over point sets of size l",
         [](const Args& a) { return exact_value(avg_density_formula(a.u("N"), a.u("k"), a.big("l"), a.big("q"))); }},
        {"lambda", {"N", "s", "l", "rho", "q"}, "distinguished point sets of size l and rank rho",
         [](const Args& a) { return exact_value(lambda(a.u("N"), a.u("s"), a.big("l"), a.u("rho"), a.big("q"))); }},
        {"avg-rank", {"N", "k", "l", "rho", "q"}, "average density over point sets of size l and rank rho",
         [](const Args& a) {
             return exact_value(avg_density_rank_formula(a.u("N"), a.u("k"), a.big("l"), a.u("rho"), a.big("q")));
         }},
        {"avg-limit", {"N", "k", "s", "q"}, "exp(-q^(k+s-N))",
         [](const Args& a) { return approx_value(avg_limit_q_large(a.u("N"), a.u("k"), a.u("s"), a.u("q"))); }},
        {"rankball-limit", {"n", "d", "q"}, "average-density limits for the rank ball (q large, m large)",
         [](const Args& a) {
             Value v = approx_value(avg_rankball_limit_q_large(a.u("n"), a.u("d"), a.u("q")));
             v.extra["m_large"] = avg_rankball_limit_m_large(a.u("n"), a.u("d"), a.prime_power("q"));
             return v;
         }},
        {"hyperplane-points", {"N", "i", "q", "case"}, "hyperplane density for i collinear (case 1) or independent (case 2) points",
         [](const Args& a) { return exact_value(prop52_formula(a.u("N"), a.u("i"), a.big("q"), int(a.integer("case")))); }},
        {"mds-arc", {"N", "l", "q"}, "hyperplane density for an arc",
         [](const Args& a) { return exact_value(mds_arc_density(a.u("N"), a.big("l"), a.big("q"))); }},
        {"arc-plus-point", {"N", "l", "q"}, "hyperplane density for an arc extended by a point",
         [](const Args& a) {
             Value v = exact_value(arc_plus_point_density(a.u("N"), a.big("l"), a.big("q")));
             v.extra["gap"] = to_string(arc_plus_point_gap(a.u("N"), a.big("l"), a.big("q")));
             return v;
         }},
        {"rank-count", {"kind", "n", "i", "q"}, "matrices of rank i in a restricted ambient",
         [](const Args& a) {
             Kind k = parse_kind(a.str("kind"));
             Value v = exact_value(rank_count(k, a.u("n"), a.u("i"), a.big("q")));
             if (k == Kind::hermitian)
                 v.extra["printed_variant"] = rank_count_hermitian_printed(a.u("n"), a.u("i"), a.big("q")).str();
             return v;
         }},
        {"dim-bound", {"kind", "n", "d"}, "largest code dimension in a restricted ambient",
         [](const Args& a) { return exact_value(BigInt(dim_bound(parse_kind(a.str("kind")), a.u("n"), a.u("d")))); }},
        {"ball-exponent", {"kind", "n", "r"}, "leading q-exponent of the rank-r ball",
         [](const Args& a) {
             return exact_value(BigInt(ball_asymptotic_exponent(parse_kind(a.str("kind")), a.u("n"), a.u("r"))));
         }},
        {"sparseness", {"kind", "n", "k", "d"}, "O(q^e) density bound and 0/1 limit",
         [](const Args& a) {
             Kind kind = parse_kind(a.str("kind"));
             auto s = sparseness_exponent(kind, a.u("n"), a.u("k"), a.u("d"));
             Value v = exact_value(BigInt(s.exponent));
             v.extra["threshold"] = s.threshold;
             if (s.limit) v.extra["limit"] = *s.limit;
             else v.extra["limit"] = nullptr;
             if (kind == Kind::hermitian)
                 v.extra["printed_exponent"] = hermitian_sparseness_exponent_printed(a.u("n"), a.u("k"), a.u("d"));
             return v;
         }},
        {"density-2dim", {"n", "q"}, "density of 2-dimensional n x n codes of distance n",
         [](const Args& a) { return exact_value(density_2dim_formula(a.u("n"), a.prime_power("q"))); }},
        {"tensor-ratio", {"r", "n", "q"}, "delta(r x n, n, r) / delta(n x n, r, n)",
         [](const Args& a) { return exact_value(tensor_ratio(a.u("r"), a.u("n"), a.big("q"))); }},
        {"class-count", {"n", "q"}, "equivalence classes of twisted-field codes",
         [](const Args& a) { return exact_value(class_count_formula(a.u("n"), a.big("q"))); }},
        {"aut-c0", {"n", "q"}, "h n (q^n - 1)^2",
         [](const Args& a) {
             unsigned q = a.prime_power("q");
             BigInt qn = ipow(BigInt(q), a.u("n"));
             return exact_value(BigInt(PrimePower::of(q).h) * a.u("n") * (qn - 1) * (qn - 1));
         }},
        {"aut-twisted", {"n", "q"}, "n (q^n - 1)(q - 1) h",
         [](const Args& a) {
             unsigned q = a.prime_power("q");
             BigInt qn = ipow(BigInt(q), a.u("n"));
             return exact_value(BigInt(PrimePower::of(q).h) * a.u("n") * (qn - 1) * (q - 1));
         }},
    };
    return defs;
}

void check_known_params(const RunConfig& cfg, const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : cfg.params) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || a == k;
        if (!ok) throw usage_error("parameter --" + k + " is not used by " + cfg.name);
    }
}

// ---------------------------------------------------------------- verify

struct Check {
    std::string suite, name, status, detail;
    double elapsed_ms = 0;
};

struct Outcome {
    bool pass;
    std::string detail;
};

class Runner {
public:
    Runner(const RunConfig& cfg) : cfg_(cfg) {}

    void run(const std::string& suite, const std::string& name, const std::function<Outcome()>& fn) {
        Check c{suite, name, "", "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto o = fn();
            c.status = o.pass ? "PASS" : "FAIL";
            c.detail = o.detail;
        } catch (const budget_exceeded& e) {
            c.status = "SKIPPED";
            c.detail = std::string("budget: ") + e.what();
        }
        c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        checks.push_back(c);
    }

    const RunConfig& cfg_;
    std::vector<Check> checks;
};

template <class A, class B>
Outcome equal(const A& a, const B& b) {
    std::ostringstream os;
    os << a << (a == b ? " = " : " != ") << b;
    return {a == b, os.str()};
}

Outcome equal_r(const Rational& a, const Rational& b) {
    return {a == b, to_string(a) + (a == b ? " = " : " != ") + to_string(b)};
}

void suite_hejar(Runner& R) {
    const auto& c = R.cfg_;
    for (auto [m, q] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        std::string tag = "m" + std::to_string(m) + "-q" + std::to_string(q);
        R.run("hejar", "identity/" + tag, [&] {
            auto h = hejar_identity_check(m, q, c.budget, c.jobs);
            return Outcome{h.holds, "delta*[2m,m] = " + h.lhs.str() + ", s_q(m) = " + h.rhs.str()};
        });
    }
    for (unsigned q : {2u, 3u})
        R.run("hejar", "2dim-formula/q" + std::to_string(q), [&] {
            return equal_r(density_2dim_formula(2, q, std::nullopt, c.budget),
                           density_bruteforce(2, 2, 2, 2, q, c.budget, c.jobs).density);
        });
}

void suite_mrd192(Runner& R) {
    const auto& c = R.cfg_;
    std::optional<DensityResult> r;
    R.run("mrd192", "bruteforce-count", [&] {
        r = density_bruteforce(3, 3, 3, 3, 2, c.budget, c.jobs);
        return equal(r->count, BigInt(192));
    });
    R.run("mrd192", "density3x3-formula", [&] {
        if (!r) throw budget_exceeded("needs the brute-force count");
        return equal_r(density_3x3_formula(2), r->density);
    });
    R.run("mrd192", "mrd-lowerbound", [&] {
        if (!r) throw budget_exceeded("needs the brute-force count");
        // the twisted-field bound is attained for n = 3, q = 2
        return equal_r(mrd_lowerbound_formula(3, 2).count, Rational(r->count));
    });
}

void suite_lambda(Runner& R) {
    const auto& c = R.cfg_;
    struct G {
        unsigned q, Nmax, lmax;
    };
    for (G g : {G{2, 4, 5}, G{3, 3, 4}})
        for (unsigned N = 2; N <= g.Nmax; ++N) {
            std::string tag = "q" + std::to_string(g.q) + "-N" + std::to_string(N);
            R.run("lambda", "oracle/" + tag, [&] {
                unsigned cases = 0, bad = 0;
                for (unsigned rho = 2; rho <= N; ++rho) {
                    BigInt cap = (ipow(BigInt(g.q), rho) - 1) / (g.q - 1);
                    for (unsigned l = rho; l <= g.lmax && l <= cap; ++l)
                        for (unsigned s = 0; s <= N; ++s) {
                            ++cases;
                            if (lambda(N, s, l, rho, g.q) != lambda_bruteforce(N, s, l, rho, g.q, c.budget)) ++bad;
                        }
                }
                return Outcome{bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases agree"};
            });
        }
    for (unsigned q : {2u, 3u})
        for (unsigned N = 1; N <= 3; ++N)
            R.run("lambda", "average/q" + std::to_string(q) + "-N" + std::to_string(N), [&] {
                unsigned cases = 0, bad = 0;
                BigInt pts = (ipow(BigInt(q), N) - 1) / (q - 1);
                for (unsigned k = 0; k <= N; ++k)
                    for (unsigned l = 1; l <= 6 && l <= pts; ++l) {
                        ++cases;
                        if (avg_density_formula(N, k, l, q) != avg_density_bruteforce(N, k, l, q, c.budget)) ++bad;
                    }
                return Outcome{bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " cases agree"};
            });
    R.run("lambda", "critical-example", [&] {
        const char* printed[] = {"0.1352", "0.1333", "0.1295", "0.1211", "0.1003", "0.0000"};
        auto rows = critical_example_rows();
        bool ok = true;
        std::string got;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto t = decimal_truncated(rows[i].density, 4);
            ok = ok && t == printed[i];
            got += (i ? " " : "") + t;
        }
        return Outcome{ok, "truncated: " + got};
    });
}

void suite_carlitz(Runner& R) {
    const auto& c = R.cfg_;
    for (Kind k : {Kind::symmetric, Kind::alternating, Kind::hermitian})
        for (unsigned q : {2u, 3u})
            for (unsigned n = 1; n <= (k == Kind::hermitian ? 2u : 3u); ++n) {
                std::string tag = kind_name(k) + "/n" + std::to_string(n) + "-q" + std::to_string(q);
                R.run("carlitz", tag, [&] {
                    auto strata = rank_strata_bruteforce(k, n, q, c.budget);
                    bool ok = true;
                    BigInt sum = 0;
                    std::string note;
                    for (unsigned i = 0; i <= n; ++i) {
                        ok = ok && rank_count(k, n, i, q) == strata[i];
                        sum += strata[i];
                        if (k == Kind::hermitian && rank_count_hermitian_printed(n, i, q) != strata[i])
                            note += (note.empty() ? "; printed variant differs at i=" : ",") + std::to_string(i);
                    }
                    ok = ok && sum == ipow(BigInt(q), ambient_dim(k, n));
                    std::ostringstream os;
                    os << "strata";
                    for (const auto& s : strata) os << ' ' << s;
                    return Outcome{ok, os.str() + note};
                });
            }
    R.run("carlitz", "hermitian-printed-regression", [&] {
        BigInt printed = rank_count_hermitian_printed(1, 1, 2);
        BigInt enumerated = rank_strata_bruteforce(Kind::hermitian, 1, 2, c.budget)[1];
        return Outcome{printed == 3 && enumerated == 1 && rank_count(Kind::hermitian, 1, 1, 2) == 1,
                       "printed " + printed.str() + ", enumerated " + enumerated.str() + ", validated variant used"};
    });
}

void suite_tensor(Runner& R) {
    const auto& c = R.cfg_;
    struct T {
        unsigned r, n, q;
    };
    for (T t : {T{1, 2, 2}, T{1, 2, 3}, T{2, 3, 2}}) {
        std::string tag = "r" + std::to_string(t.r) + "-n" + std::to_string(t.n) + "-q" + std::to_string(t.q);
        R.run("tensor", tag, [&] {
            Rational a = density_bruteforce(t.r, t.n, t.n, t.r, t.q, c.budget, c.jobs).density;
            Rational b = density_bruteforce(t.n, t.n, t.r, t.n, t.q, c.budget, c.jobs).density;
            return equal_r(a / b, tensor_ratio(t.r, t.n, t.q));
        });
    }
}

void suite_cw(Runner& R) {
    const auto& c = R.cfg_;
    R.run("cw-bridge", "random-pointsets", [&] {
        std::mt19937_64 rng(20240601);
        unsigned done = 0, bad = 0;
        for (unsigned it = 0; done < 20; ++it) {
            unsigned q = it % 2 ? 3 : 2;
            unsigned N = 2 + it % 3;
            Field f = Field::of_order(q);
            auto pts = projective_points(f, N);
            std::shuffle(pts.begin(), pts.end(), rng);
            std::size_t l = N + rng() % (pts.size() - N + 1);
            PointSet P(f, N, std::vector<Point>(pts.begin(), pts.begin() + std::ptrdiff_t(l)));
            if (P.dim() != N) continue;
            auto w = weight_distribution(code_from_pointset(P), c.budget);
            if (Rational(w[l], ipow(BigInt(q), N) - 1) != delta_bruteforce(N - 1, P, c.budget, c.jobs)) ++bad;
            ++done;
        }
        return Outcome{bad == 0, std::to_string(done - bad) + "/" + std::to_string(done) + " point sets agree"};
    });
    for (unsigned q : {3u, 4u, 5u})
        R.run("cw-bridge", "arc/q" + std::to_string(q), [&] {
            unsigned cases = 0, bad = 0;
            for (unsigned N = 2; N <= 3; ++N)
                for (unsigned l = N; l <= q + 1; ++l) {
                    auto P = moment_curve_arc(Field::of_order(q), N, l);
                    ++cases;
                    if (delta_bruteforce(N - 1, P, c.budget, c.jobs) != mds_arc_density(N, l, q)) ++bad;
                }
            return Outcome{bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " arcs agree"};
        });
    R.run("cw-bridge", "arc-plus-point/q5", [&] {
        unsigned cases = 0, bad = 0;
        for (unsigned N = 3; N <= 4; ++N)
            for (unsigned l = N; l <= 4; ++l) {
                auto P = arc_plus_point(Field::of_order(5), N, l);
                ++cases;
                if (delta_bruteforce(N - 1, P, c.budget, c.jobs) != arc_plus_point_density(N, l, 5)) ++bad;
            }
        return Outcome{bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " point sets agree"};
    });
}

const std::vector<std::pair<std::string, std::function<void(Runner&)>>>& suites() {
    static const std::vector<std::pair<std::string, std::function<void(Runner&)>>> s = {
        {"hejar", suite_hejar},   {"mrd192", suite_mrd192}, {"lambda", suite_lambda},
        {"carlitz", suite_carlitz}, {"tensor", suite_tensor}, {"cw-bridge", suite_cw},
    };
    return s;
}

} // namespace

std::vector<std::string> formula_names() {
    std::vector<std::string> out;
    for (const auto& f : formulas()) out.push_back(f.name);
    return out;
}

std::vector<std::string> verify_suites() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    out.push_back("all");
    return out;
}

std::vector<std::string> table_names() { return {"critical-example", "mrd-bounds", "rank-strata"}; }

int cmd_formula(const RunConfig& cfg, std::ostream& out) {
    const FormulaDef* def = nullptr;
    for (const auto& f : formulas())
        if (f.name == cfg.name) def = &f;
    if (!def) throw usage_error("unknown formula: " + cfg.name);
    check_known_params(cfg, def->params);
    Args a{cfg.params};
    Value v;
    try {
        v = def->eval(a);
    } catch (const usage_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    switch (cfg.format) {
    case Format::json: {
        json j;
        j["formula"] = def->name;
        json p = json::object();
        for (const auto& k : def->params) p[k] = cfg.params.at(k);
        j["params"] = p;
        if (v.exact) j["exact"] = to_string(*v.exact);
        if (v.approx) j["float"] = *v.approx;
        for (auto it = v.extra.begin(); it != v.extra.end(); ++it) j[it.key()] = it.value();
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "formula,exact,float\n"
            << def->name << "," << (v.exact ? to_string(*v.exact) : "") << ","
            << (v.approx ? fmt_double(*v.approx, cfg.precision) : "") << "\n";
        break;
    case Format::text:
        out << def->name << " = ";
        if (v.exact) out << to_string(*v.exact);
        if (v.approx) out << (v.exact ? "  ~ " : "") << fmt_double(*v.approx, cfg.precision);
        out << "\n";
        for (auto it = v.extra.begin(); it != v.extra.end(); ++it) out << "  " << it.key() << ": " << it.value().dump() << "\n";
        break;
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    check_known_params(cfg, {});
    Runner R(cfg);
    bool found = false;
    for (const auto& [name, fn] : suites())
        if (cfg.name == "all" || cfg.name == name) {
            fn(R);
            found = true;
        }
    if (!found) throw usage_error("unknown verify suite: " + cfg.name);
    unsigned pass = 0, fail = 0, skip = 0;
    for (const auto& c : R.checks) {
        if (c.status == "PASS") ++pass;
        else if (c.status == "FAIL") ++fail;
        else ++skip;
    }
    switch (cfg.format) {
    case Format::json: {
        json j;
        j["suite"] = cfg.name;
        json arr = json::array();
        for (const auto& c : R.checks) {
            json e;
            e["suite"] = c.suite;
            e["name"] = c.name;
            e["status"] = c.status;
            e["detail"] = c.detail;
            e["elapsed_ms"] = cfg.timing ? c.elapsed_ms : 0.0;
            arr.push_back(e);
        }
        j["check"] = arr;
        j["passed"] = pass;
        j["failed"] = fail;
        j["skipped"] = skip;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "suite,check,status,detail" << (cfg.timing ? ",elapsed_ms" : "") << "\n";
        for (const auto& c : R.checks) {
            out << c.suite << "," << c.name << "," << c.status << "," << csv_escape(c.detail);
            if (cfg.timing) out << "," << fmt_double(c.elapsed_ms, cfg.precision);
            out << "\n";
        }
        break;
    case Format::text:
        for (const auto& c : R.checks) {
            out << std::left << std::setw(8) << c.status << std::setw(40) << (c.suite + "/" + c.name) << c.detail;
            if (cfg.timing) out << "  [" << fmt_double(c.elapsed_ms, 4) << " ms]";
            out << "\n";
        }
        out << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
        break;
    }
    return fail ? 1 : 0;
}

namespace {

void emit_table(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (cfg.format == Format::json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
            arr.push_back(o);
        }
        json j;
        j["table"] = cfg.name;
        j["rows"] = arr;
        out << j.dump(2) << "\n";
        return;
    }
    // csv is also the text form: tables are meant for golden files and plotting
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(r[i]);
        out << "\n";
    }
}

} // namespace

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    Args a{cfg.params};
    std::vector<std::vector<std::string>> rows;
    try {
        if (cfg.name == "critical-example") {
            check_known_params(cfg, {});
            // the 4-decimal column truncates, as the published table does
            for (const auto& r : critical_example_rows())
                rows.push_back({std::to_string(r.rho), numerator(r.density).str(), denominator(r.density).str(),
                                decimal_truncated(r.density, 4)});
            emit_table(cfg, out, {"rho", "density_num", "density_den", "density_float_4dp"}, rows);
            return 0;
        }
        if (cfg.name == "mrd-bounds") {
            check_known_params(cfg, {"n", "q"});
            auto [lo, hi] = a.range("n");
            unsigned q = a.prime_power("q");
            if (lo < 2) throw usage_error("--n must be at least 2");
            for (unsigned n = lo; n <= hi; ++n) {
                auto b = mrd_lowerbound_formula(n, q);
                std::string kantor;
                if (q == 2) {
                    try {
                        Rational k = kantor_lowerbound(n) / qbinom(n * n, n, 2);
                        kantor = fmt_double(to_double(k), cfg.precision);
                    } catch (const std::invalid_argument&) {
                    }
                }
                long upper = 2 - long(n); // full rank, d = n
                rows.push_back({std::to_string(n), std::to_string(q), to_string(b.count),
                                fmt_double(to_double(b.density), cfg.precision), kantor, std::to_string(upper)});
            }
            emit_table(cfg, out,
                       {"n", "q", "lower_count", "lower_density", "q2_composite_lower_density", "upper_exponent"},
                       rows);
            return 0;
        }
        if (cfg.name == "rank-strata") {
            check_known_params(cfg, {"kind", "n", "q"});
            Kind k = parse_kind(a.str("kind"));
            unsigned n = a.u("n"), q = a.prime_power("q");
            auto strata = rank_strata_bruteforce(k, n, q, cfg.budget);
            for (unsigned i = 0; i <= n; ++i) {
                BigInt v = rank_count(k, n, i, q);
                BigInt p = k == Kind::hermitian ? rank_count_hermitian_printed(n, i, q) : v;
                rows.push_back({std::to_string(i), p.str(), v.str(), strata[i].str()});
            }
            emit_table(cfg, out, {"i", "printed_formula", "validated_formula", "enumerated"}, rows);
            return 0;
        }
    } catch (const usage_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    throw usage_error("unknown table: " + cfg.name);
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
    check_known_params(cfg, {"n", "m", "k", "d", "q", "kind"});
    Args a{cfg.params};
    DensityResult r;
    try {
        unsigned q = a.prime_power("q");
        if (a.has("kind") && a.str("kind") != "full") {
            if (a.has("m") && a.u("m") != a.u("n")) throw usage_error("restricted ambients are square");
            r = restricted_density_bruteforce(parse_kind(a.str("kind")), a.u("n"), a.u("k"), a.u("d"), q, cfg.budget,
                                              cfg.jobs);
        } else {
            r = density_bruteforce(a.u("n"), a.u_or("m", a.u("n")), a.u("k"), a.u("d"), q, cfg.budget, cfg.jobs);
        }
    } catch (const usage_error&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    if (cfg.format == Format::json) {
        out << r.to_json(cfg.timing).dump(2) << "\n";
    } else if (cfg.format == Format::csv) {
        out << "kind,q,n,m,k,d,count,total,density,density_float\n"
            << (r.kind.empty() ? "full" : r.kind) << "," << r.q << "," << r.n << "," << r.m << "," << r.k << ","
            << r.d << "," << r.count << "," << r.total << "," << to_string(r.density) << ","
            << fmt_double(to_double(r.density), cfg.precision) << "\n";
    } else {
        out << "density = " << to_string(r.density) << "  ~ " << fmt_double(to_double(r.density), cfg.precision)
            << "  (" << r.count << " of " << r.total << " codes)\n";
    }
    return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "formula") return cmd_formula(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out);
        if (cfg.command == "table") return cmd_table(cfg, out);
        if (cfg.command == "density") return cmd_density(cfg, out);
        throw usage_error("unknown command: " + cfg.command);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rankdens::cli
