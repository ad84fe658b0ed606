#include "algent/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "algent/entropy.hpp"
#include "algent/mahler.hpp"
#include "algent/parse.hpp"
#include "algent/roots.hpp"
#include "algent/trajectory.hpp"

namespace algent::cli {

namespace {

using nlohmann::ordered_json;

struct OutputOptions {
    bool json = false;
    std::string log_base = "e";
    bool log_base_given = false;
    int precision = 128;
    double tolerance = 1e-9;
};

double base_divisor(const std::string& b) {
    if (b == "2") return std::log(2.0);
    if (b == "10") return std::log(10.0);
    return 1.0;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

std::string slurp_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// the one object every subcommand emits; key set is fixed
void emit(const OutputOptions& opt, std::ostream& out, const std::string& subcommand,
          const std::string& input_echo, ordered_json result, double error_bound,
          int precision_bits, std::optional<double> headline,
          const std::vector<std::string>& human_lines) {
    if (opt.json) {
        ordered_json j;
        j["subcommand"] = subcommand;
        j["input_echo"] = input_echo;
        j["result"] = std::move(result);
        j["error_bound"] = error_bound;
        j["precision_bits"] = precision_bits;
        j["log_base"] = opt.log_base;
        if (opt.log_base_given && headline)
            j["display_value"] = *headline / base_divisor(opt.log_base);
        out << j.dump(2) << "\n";
        return;
    }
    for (const std::string& line : human_lines) out << line << "\n";
    if (opt.log_base_given && headline && opt.log_base != "e")
        out << "display_value (log base " << opt.log_base
            << "): " << fmt(*headline / base_divisor(opt.log_base)) << "\n";
}

// ---- randomized verification suites ----

Rational random_entry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    Rational q(Integer(num(rng)), Integer(den(rng)));
    q.canonicalize();
    return q;
}

RatMatrix random_matrix(std::mt19937_64& rng, int n) {
    RatMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = random_entry(rng);
    return a;
}

RatMatrix random_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        RatMatrix a = random_matrix(rng, n);
        if (determinant(a) != 0) return a;
    }
}

struct SuiteSummary {
    int cases = 0;
    int failures = 0;
    double max_defect = 0.0;
    double max_combined = 0.0;

    void record(double defect, double combined) {
        ++cases;
        if (defect > max_defect) max_defect = defect;
        if (combined > max_combined) max_combined = combined;
        if (defect > combined) ++failures;
    }
};

SuiteSummary run_addition_suite(int cases, std::uint64_t seed, double tolerance) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> block(1, 4);
    SuiteSummary s;
    for (int c = 0; c < cases; ++c) {
        int n1 = block(rng), n2 = block(rng);
        RatMatrix a1 = random_invertible(rng, n1);
        RatMatrix a2 = random_invertible(rng, n2);
        RatMatrix m(n1 + n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) m.at(i, j) = a1.at(i, j);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) m.at(n1 + i, n1 + j) = a2.at(i, j);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) m.at(i, n1 + j) = random_entry(rng);
        AdditionReport rep = check_addition(m, n1, tolerance);
        s.record(rep.defect, rep.combined_error);
    }
    return s;
}

SuiteSummary run_power_suite(int cases, std::uint64_t seed, double tolerance) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3), kk(-3, 5);
    SuiteSummary s;
    for (int c = 0; c < cases; ++c) {
        RatMatrix a = random_invertible(rng, dim(rng));
        PowerLawReport rep = check_power_law(a, kk(rng), tolerance);
        s.record(rep.defect, rep.combined_error);
    }
    return s;
}

SuiteSummary run_product_suite(int cases, std::uint64_t seed, double tolerance) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    SuiteSummary s;
    for (int c = 0; c < cases; ++c) {
        int n1 = dim(rng), n2 = dim(rng);
        RatMatrix a = random_invertible(rng, n1);
        RatMatrix b = random_invertible(rng, n2);
        RatMatrix d(n1 + n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) d.at(i, j) = a.at(i, j);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) d.at(n1 + i, n1 + j) = b.at(i, j);
        double each = tolerance / 3.0;
        EntropyValue hd = yuzvinski_entropy(d, each);
        EntropyValue ha = yuzvinski_entropy(a, each);
        EntropyValue hb = yuzvinski_entropy(b, each);
        double defect = std::fabs(hd.value_nats - ha.value_nats - hb.value_nats);
        s.record(defect, hd.error_bound + ha.error_bound + hb.error_bound);
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact algebraic entropy of rational endomorphisms", "algent"};
    app.require_subcommand(1);

    OutputOptions opt;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "JSON object on stdout instead of text");
        sub->add_option("--log-base", opt.log_base, "display base for values: e, 2, or 10")
            ->check(CLI::IsMember({"e", "2", "10"}));
        sub->add_option("--precision", opt.precision,
                        "working precision in bits for root refinement (first ladder rung)")
            ->check(CLI::Range(64, 2048))
            ->envname("ALGENT_PRECISION_BITS");
        sub->add_option("--tolerance", opt.tolerance, "certified error budget in nats")
            ->check(CLI::Range(1e-15, 1e3));
    };

    std::string poly_file, matrix_file, action_text, set_text, verify_mode;
    int horizon = 20;
    std::uint64_t cap = 5000000;
    int search_d = 0, search_h = 0, workers = 0, cases = 100;
    double search_t = 0.0;
    std::uint64_t seed = 1;

    CLI::App* c_mahler = app.add_subcommand("mahler", "Mahler measure of a polynomial file ('-' for stdin)");
    c_mahler->add_option("file", poly_file, "coefficients, ascending, one line")->required();
    add_common(c_mahler);

    CLI::App* c_entropy = app.add_subcommand("entropy", "entropy of the endomorphism given by a square rational matrix");
    c_entropy->add_option("file", matrix_file, "matrix file, one row per line")->required();
    add_common(c_entropy);

    CLI::App* c_traj = app.add_subcommand("trajectory", "exact trajectory sizes and growth estimates for an action");
    c_traj->add_option("--action", action_text, "scalar(R,N) | shift(M) | matrix(...) | matrix(@FILE) | product(A,B)")
        ->required();
    c_traj->add_option("--set", set_text, "';'-separated base elements, e.g. '0; (1, 0); box:1' or '0; e0'")
        ->required();
    c_traj->add_option("-N,--horizon", horizon, "number of trajectory steps");
    c_traj->add_option("--cap", cap, "stop when the next set would exceed this size");
    add_common(c_traj);

    CLI::App* c_lehmer = app.add_subcommand("lehmer-seq", "log Delta_n / n profile of a monic integer polynomial");
    c_lehmer->add_option("file", poly_file, "integer coefficients, ascending, one line")->required();
    c_lehmer->add_option("-N,--horizon", horizon, "largest n");
    add_common(c_lehmer);

    CLI::App* c_kron = app.add_subcommand("kronecker", "exact test: is every root a root of unity");
    c_kron->add_option("file", poly_file, "integer coefficients, ascending, one line")->required();
    add_common(c_kron);

    CLI::App* c_search = app.add_subcommand("search", "monic integer polynomials of small positive measure");
    c_search->add_option("-d,--max-degree", search_d, "largest degree")->required();
    c_search->add_option("-H,--height", search_h, "coefficient bound")->required();
    c_search->add_option("-t,--threshold", search_t, "measure threshold in nats")->required();
    c_search->add_option("--workers", workers, "worker threads (0 = hardware)");
    add_common(c_search);

    CLI::App* c_verify = app.add_subcommand("verify", "randomized law suites with seeded reproducibility");
    c_verify->add_option("mode", verify_mode, "addition | power | product")
        ->required()
        ->check(CLI::IsMember({"addition", "power", "product"}));
    c_verify->add_option("--cases", cases, "number of random cases")->check(CLI::Range(1, 1000000));
    c_verify->add_option("--seed", seed, "RNG seed");
    add_common(c_verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {c_mahler, c_entropy, c_traj, c_lehmer, c_kron, c_search, c_verify})
        opt.log_base_given |= sub->count("--log-base") > 0;
    set_ladder_start_bits(opt.precision);

    try {
        if (c_mahler->parsed()) {
            std::string text = slurp_file(poly_file);
            RatPolynomial f = parse_polynomial(text);
            MahlerResult m = mahler_measure_any(f, opt.tolerance);
            ordered_json terms = ordered_json::array();
            for (const auto& [i, lg] : m.expanding_terms) terms.push_back({i, lg});
            ordered_json result;
            result["value_nats"] = m.value_nats;
            result["log_leading"] = m.log_leading;
            result["expanding_terms"] = std::move(terms);
            emit(opt, out, "mahler", format_polynomial(f), std::move(result), m.error_bound,
                 m.precision_bits, m.value_nats,
                 {"value_nats: " + fmt(m.value_nats), "log_leading: " + fmt(m.log_leading),
                  "expanding_terms: " + std::to_string(m.expanding_terms.size()),
                  "error_bound: " + fmt(m.error_bound),
                  "precision_bits: " + std::to_string(m.precision_bits)});
            return 0;
        }

        if (c_entropy->parsed()) {
            std::string text = slurp_file(matrix_file);
            RatMatrix a = parse_matrix(text);
            EntropyValue h = endo_entropy(a, opt.tolerance);
            ordered_json terms = ordered_json::array();
            for (const auto& [root, lg] : h.expanding_terms)
                terms.push_back({root.real(), root.imag(), lg});
            ordered_json result;
            result["value_nats"] = h.value_nats;
            result["log_s_term"] = h.log_s_term;
            result["expanding_terms"] = std::move(terms);
            result["reduced_dimension"] = h.reduced_dimension;
            emit(opt, out, "entropy", format_matrix(a), std::move(result), h.error_bound,
                 opt.precision, h.value_nats,
                 {"value_nats: " + fmt(h.value_nats), "log_s_term: " + fmt(h.log_s_term),
                  "expanding_terms: " + std::to_string(h.expanding_terms.size()),
                  "reduced_dimension: " + std::to_string(h.reduced_dimension),
                  "error_bound: " + fmt(h.error_bound)});
            return 0;
        }

        if (c_traj->parsed()) {
            EndoAction action = parse_action(action_text, slurp_file);
            std::vector<Element> base = parse_element_set(set_text, action);
            TrajectoryRecord rec = enumerate_trajectory(action, base, horizon, cap);
            std::optional<GrowthEstimate> est;
            if (rec.sizes.size() >= 2) est = growth_estimate(rec);

            ordered_json result;
            result["sizes"] = rec.sizes;
            result["log_sizes"] = rec.c;
            result["horizon"] = rec.horizon;
            result["recorded"] = rec.sizes.size();
            result["truncated"] = rec.truncated;
            result["fekete_upper"] = est ? ordered_json(est->fekete_upper) : ordered_json(nullptr);
            result["tail_slope"] = est ? ordered_json(est->tail_slope) : ordered_json(nullptr);

            std::ostringstream sizes_line;
            sizes_line << "sizes:";
            for (std::uint64_t v : rec.sizes) sizes_line << ' ' << v;
            std::vector<std::string> human{sizes_line.str(),
                                           std::string("truncated: ") + (rec.truncated ? "yes" : "no")};
            if (est) {
                human.push_back("fekete_upper: " + fmt(est->fekete_upper));
                human.push_back("tail_slope: " + fmt(est->tail_slope));
            }
            emit(opt, out, "trajectory", action_text + " | " + set_text, std::move(result), 0.0,
                 opt.precision, est ? std::optional<double>(est->tail_slope) : std::nullopt, human);
            return 0;
        }

        if (c_lehmer->parsed()) {
            std::string text = slurp_file(poly_file);
            IntPolynomial f = parse_int_polynomial(text);
            std::vector<ProfileEntry> profile = lehmer_limit_profile(f, horizon);
            ordered_json result = ordered_json::array();
            std::optional<double> last;
            std::vector<std::string> human;
            for (const ProfileEntry& e : profile) {
                result.push_back({e.n, e.defined ? ordered_json(e.value) : ordered_json(nullptr)});
                if (e.defined) last = e.value;
                human.push_back(std::to_string(e.n) + " " +
                                (e.defined ? fmt(e.value) : std::string("undefined")));
            }
            emit(opt, out, "lehmer-seq", format_polynomial(f), std::move(result), 0.0,
                 opt.precision, last, human);
            return 0;
        }

        if (c_kron->parsed()) {
            std::string text = slurp_file(poly_file);
            IntPolynomial f = parse_int_polynomial(text);
            bool cyc = is_cyclotomic(f);
            emit(opt, out, "kronecker", format_polynomial(f), ordered_json(cyc), 0.0,
                 opt.precision, std::nullopt,
                 {std::string("cyclotomic: ") + (cyc ? "yes" : "no")});
            return 0;
        }

        if (c_search->parsed()) {
            std::vector<SearchFinding> found =
                search_small_measures(search_d, search_h, search_t, workers);
            ordered_json result = ordered_json::array();
            std::vector<std::string> human;
            for (const SearchFinding& f : found) {
                ordered_json coeffs = ordered_json::array();
                for (const Integer& c : f.poly.c) coeffs.push_back(c.get_str());
                ordered_json row;
                row["coefficients"] = std::move(coeffs);
                row["value_nats"] = f.measure.value_nats;
                row["error_bound"] = f.measure.error_bound;
                result.push_back(std::move(row));
                human.push_back(format_polynomial(f.poly) + " | " + fmt(f.measure.value_nats));
            }
            human.push_back("findings: " + std::to_string(found.size()));
            // Workers are a scheduling knob, not part of the problem statement,
            // so they stay out of the echo and the output is stable across counts.
            std::ostringstream echo;
            echo << "d=" << search_d << " H=" << search_h << " t=" << search_t;
            double max_err = 0.0;
            for (const SearchFinding& f : found) max_err = std::max(max_err, f.measure.error_bound);
            emit(opt, out, "search", echo.str(), std::move(result), max_err, opt.precision,
                 found.empty() ? std::nullopt : std::optional<double>(found[0].measure.value_nats),
                 human);
            return 0;
        }

        if (c_verify->parsed()) {
            SuiteSummary s;
            if (verify_mode == "addition")
                s = run_addition_suite(cases, seed, opt.tolerance);
            else if (verify_mode == "power")
                s = run_power_suite(cases, seed, opt.tolerance);
            else
                s = run_product_suite(cases, seed, opt.tolerance);
            ordered_json result;
            result["mode"] = verify_mode;
            result["cases"] = s.cases;
            result["max_defect"] = s.max_defect;
            result["max_combined_error"] = s.max_combined;
            result["failures"] = s.failures;
            std::ostringstream echo;
            echo << verify_mode << " cases=" << cases << " seed=" << seed;
            emit(opt, out, "verify", echo.str(), std::move(result), s.max_combined, opt.precision,
                 std::nullopt,
                 {"mode: " + verify_mode, "cases: " + std::to_string(s.cases),
                  "max_defect: " + fmt(s.max_defect),
                  "max_combined_error: " + fmt(s.max_combined),
                  "failures: " + std::to_string(s.failures)});
            if (s.failures > 0) {
                err << "error: " << s.failures << " of " << s.cases
                    << " cases exceeded their certified error bounds\n";
                return 1;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand handled\n";
    return 2;
}

}  // namespace algent::cli
