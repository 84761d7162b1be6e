// Command-line surface for torsion counting and multiplication-map rank
// verification on principally polarized abelian varieties.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "thetacount/errors.hpp"
#include "thetacount/hyperelliptic.hpp"
#include "thetacount/matrix_io.hpp"
#include "thetacount/multiplication.hpp"
#include "thetacount/parallel.hpp"
#include "thetacount/ppav.hpp"
#include "thetacount/rng.hpp"

using json = nlohmann::json;
using namespace theta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- parsing helpers -------------------------------------------------------

double parse_number(const std::string& s) {
    // decimal or rational p/q
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
        const double v = std::stod(s, &used);
        if (used != s.size()) throw UsageError("bad number: " + s);
        return v;
    }
    const double p = std::stod(s.substr(0, slash), &used);
    if (used != slash) throw UsageError("bad number: " + s);
    const double q = std::stod(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1 || q == 0.0) throw UsageError("bad number: " + s);
    return p / q;
}

// Complex literals: "i", "2i", "-1.5", "1+2i", "3i/2", "1/2+i".
Complex parse_complex(std::string s) {
    std::erase(s, ' ');
    if (s.empty()) throw UsageError("empty complex literal");
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        double sign = 1.0;
        if (s[pos] == '+') ++pos;
        else if (s[pos] == '-') { sign = -1.0; ++pos; }
        else if (!first) throw UsageError("bad complex literal: " + s);
        // find end of this term: next top-level + or - (not exponent sign)
        std::size_t end = pos;
        while (end < s.size()) {
            const char c = s[end];
            if ((c == '+' || c == '-') && end > pos && s[end - 1] != 'e' && s[end - 1] != 'E') break;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw UsageError("bad complex literal: " + s);
        const auto ipos = term.find('i');
        if (ipos != std::string::npos) {
            std::string coef = term.substr(0, ipos);
            std::string denom = term.substr(ipos + 1);  // e.g. "/2" in "3i/2"
            double v = coef.empty() ? 1.0 : parse_number(coef);
            if (!denom.empty()) {
                if (denom[0] != '/') throw UsageError("bad complex literal: " + s);
                v /= parse_number(denom.substr(1));
            }
            im += sign * v;
        } else {
            re += sign * parse_number(term);
        }
        pos = end;
        first = false;
    }
    return {re, im};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

// ---- configuration ---------------------------------------------------------

struct MatrixSource {
    std::string product;  // comma list of factor moduli
    std::string file;
    int random_g = 0;
};

struct Config {
    MatrixSource source;
    std::uint64_t seed = 1;
    double eps = 1e-9;
    double vanish_tol = 1e-6;
    double rel_tol = 1e-8;
    int order = 2;
    int trials = 20;
    int n_samples = 0;
    int threads = default_thread_count();
    std::string format = "human";
    std::string x_spec = "0";
    std::string y_spec = "0";
    bool scan_lemma_g2 = false;
};

void add_matrix_flags(CLI::App* cmd, Config& cfg) {
    auto* p = cmd->add_option("--product", cfg.source.product,
                              "Product of elliptic curves; comma list of moduli, e.g. i,2i");
    auto* r = cmd->add_option("--random", cfg.source.random_g, "Random period matrix of the given genus");
    auto* f = cmd->add_option("--file", cfg.source.file, "Period matrix file (JSON: g, re, im)");
    p->excludes(r)->excludes(f);
    r->excludes(f);
}

void add_tolerance_flags(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--eps", cfg.eps, "Certified theta evaluation error (default 1e-9)");
    cmd->add_option("--vanish-tol", cfg.vanish_tol, "Vanishing threshold (default 1e-6)");
    cmd->add_option("--seed", cfg.seed, "Random seed (default 1)");
    cmd->add_option("--threads", cfg.threads, "Internal parallelism (default $THETACOUNT_THREADS or 1)");
    cmd->add_option("--format", cfg.format, "Output format: human, csv, json")
        ->check(CLI::IsMember({"human", "csv", "json"}));
}

RiemannMatrix build_matrix(const Config& cfg) {
    int provided = (!cfg.source.product.empty()) + (!cfg.source.file.empty()) + (cfg.source.random_g > 0);
    if (provided != 1) throw UsageError("exactly one of --product, --random, --file is required");
    if (!cfg.source.product.empty()) {
        std::vector<Complex> taus;
        for (const auto& tok : split(cfg.source.product, ',')) taus.push_back(parse_complex(tok));
        return product_ppav(taus);
    }
    if (!cfg.source.file.empty()) return load_period_matrix_file(cfg.source.file);
    return random_ppav(cfg.source.random_g, cfg.seed);
}

// Point specs: "0", "random", "t:m1,..,mg/k1,..,kg/n", or a comma list of
// complex coordinates.
CVector parse_point(const std::string& spec, const RiemannMatrix& tau, Rng& rng) {
    const int g = tau.g();
    if (spec == "0") return CVector::Zero(g);
    if (spec == "random") {
        RVector s(g), t(g);
        for (int i = 0; i < g; ++i) s[i] = rng.next_double();
        for (int i = 0; i < g; ++i) t[i] = rng.next_double();
        return s.cast<Complex>() + tau.tau() * t.cast<Complex>();
    }
    if (spec.rfind("t:", 0) == 0) {
        const auto parts = split(spec.substr(2), '/');
        if (parts.size() != 3) throw UsageError("torsion point spec must be t:m1,..,mg/k1,..,kg/n");
        TorsionPoint p;
        for (const auto& v : split(parts[0], ',')) p.m.push_back(std::stoi(v));
        for (const auto& v : split(parts[1], ',')) p.k.push_back(std::stoi(v));
        p.order = std::stoi(parts[2]);
        if (p.g() != g || static_cast<int>(p.k.size()) != g || p.order < 1)
            throw UsageError("torsion point spec does not match the genus");
        return p.embed(tau);
    }
    const auto coords = split(spec, ',');
    if (static_cast<int>(coords.size()) != g) throw UsageError("point needs " + std::to_string(g) + " coordinates");
    CVector z(g);
    for (int i = 0; i < g; ++i) z[i] = parse_complex(coords[i]);
    return z;
}

// ---- output ----------------------------------------------------------------

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

json config_json(const Config& cfg, const std::string& command, const RiemannMatrix* tau) {
    json c{{"command", command},
           {"seed", cfg.seed},
           {"eps", cfg.eps},
           {"vanish_tol", cfg.vanish_tol},
           {"rel_tol", cfg.rel_tol},
           {"order", cfg.order},
           {"trials", cfg.trials},
           {"n_samples", cfg.n_samples},
           {"threads", cfg.threads},
           {"format", cfg.format},
           {"x", cfg.x_spec},
           {"y", cfg.y_spec}};
    if (!cfg.source.product.empty()) c["source"] = {{"product", cfg.source.product}};
    else if (!cfg.source.file.empty()) c["source"] = {{"file", cfg.source.file}};
    else c["source"] = {{"random", cfg.source.random_g}};
    if (tau) c["tau"] = json::parse(period_matrix_json(*tau));
    return c;
}

json count_json(const CountReport& r) {
    json j{{"g", r.g},         {"n", r.n},
           {"odd_count", r.odd_count}, {"even_vanishing", r.even_vanishing},
           {"theta_n", r.theta_n},     {"achieves_bound", r.achieves_bound}};
    if (r.has_bound) j["bound"] = r.bound;
    return j;
}

json rank_json(const RankReport& r) {
    return json{{"numerical_rank", r.numerical_rank},
                {"kempf_count", r.kempf_count},
                {"agrees", r.agrees},
                {"reliable", r.reliable},
                {"lower_bound_ok", r.lower_bound_ok},
                {"gap_ratio", std::isinf(r.gap_ratio) ? json("inf") : json(r.gap_ratio)},
                {"rel_tol", r.rel_tol},
                {"singular_values", r.singular_values}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// ---- subcommands -----------------------------------------------------------

int cmd_count(const Config& cfg) {
    const RiemannMatrix tau = build_matrix(cfg);
    CountOptions opts{cfg.eps, cfg.vanish_tol, cfg.threads};
    const CountReport r = cfg.order == 2 ? theta2_count(tau, opts) : theta_n_count(tau, cfg.order, opts);
    if (cfg.format == "json") {
        emit(json{{"config", config_json(cfg, "count", &tau)}, {"result", count_json(r)}});
    } else if (cfg.format == "csv") {
        std::cout << "g,n,odd_count,even_vanishing,theta_n,bound,achieves_bound\n"
                  << r.g << "," << r.n << "," << r.odd_count << "," << r.even_vanishing << ","
                  << r.theta_n << "," << (r.has_bound ? std::to_string(r.bound) : std::string()) << ","
                  << (r.achieves_bound ? "true" : "false") << "\n";
    } else {
        std::cout << "Theta(" << r.n << ") = " << r.theta_n << " at genus " << r.g;
        if (r.has_bound) std::cout << "  (bound " << r.bound << (r.achieves_bound ? ", achieved" : "") << ")";
        std::cout << "\n";
        if (r.n == 2)
            std::cout << "  odd points: " << r.odd_count << ", vanishing even thetanulls: " << r.even_vanishing
                      << "\n";
        std::cout << "  eps=" << cfg.eps << " vanish_tol=" << cfg.vanish_tol << " seed=" << cfg.seed << "\n";
    }
    return kExitOk;
}

int cmd_rank(const Config& cfg) {
    const RiemannMatrix tau = build_matrix(cfg);
    RankOptions opts;
    opts.eps = cfg.eps;
    opts.vanish_tol = cfg.vanish_tol;
    opts.rel_tol = cfg.rel_tol;
    opts.n_samples = cfg.n_samples;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;

    if (cfg.scan_lemma_g2) {
        const auto reports = g2_irreducible_rank_scan(tau, cfg.trials, opts);
        int min_rank = 1 << 30;
        bool all_reliable = true, all_agree = true;
        json items = json::array();
        for (const auto& r : reports) {
            min_rank = std::min(min_rank, r.numerical_rank);
            all_reliable = all_reliable && r.reliable;
            all_agree = all_agree && r.agrees;
            items.push_back(rank_json(r));
        }
        if (cfg.format == "json") {
            emit(json{{"config", config_json(cfg, "rank", &tau)},
                      {"result", {{"scan", items}, {"min_rank", min_rank}, {"trials", cfg.trials}}}});
        } else if (cfg.format == "csv") {
            std::cout << "trial,numerical_rank,kempf_count,agrees,reliable,gap_ratio\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const auto& r = reports[i];
                std::cout << i << "," << r.numerical_rank << "," << r.kempf_count << ","
                          << (r.agrees ? "true" : "false") << "," << (r.reliable ? "true" : "false") << ","
                          << r.gap_ratio << "\n";
            }
        } else {
            std::cout << "Lemma scan over " << cfg.trials << " random x not in A[2]: min rank = " << min_rank
                      << "\n";
        }
        return (all_reliable && all_agree) ? kExitOk : kExitNumerical;
    }

    Rng rng(cfg.seed ^ 0xc001d00dull);
    const CVector x = parse_point(cfg.x_spec, tau, rng);
    const CVector y = parse_point(cfg.y_spec, tau, rng);
    const RankReport r = verify_kempf(tau, x, y, opts);
    if (cfg.format == "json") {
        emit(json{{"config", config_json(cfg, "rank", &tau)}, {"result", rank_json(r)}});
    } else if (cfg.format == "csv") {
        std::cout << "numerical_rank,kempf_count,agrees,reliable,gap_ratio\n"
                  << r.numerical_rank << "," << r.kempf_count << "," << (r.agrees ? "true" : "false") << ","
                  << (r.reliable ? "true" : "false") << "," << r.gap_ratio << "\n";
    } else {
        std::cout << "rank M(x,y) = " << r.numerical_rank << ", Kempf count = " << r.kempf_count << " ("
                  << (r.agrees ? "agree" : "DISAGREE") << ", gap " << r.gap_ratio << ")\n";
    }
    return (r.agrees && r.reliable) ? kExitOk : kExitNumerical;
}

int cmd_hyperelliptic(const Config& cfg, int genus) {
    const CountReport r = hyperelliptic_theta2_count(genus);
    const bool enumerable = genus <= 10;
    if (cfg.format == "json") {
        json res = count_json(r);
        res["enumeration_checked"] = enumerable;
        emit(json{{"config", config_json(cfg, "hyperelliptic", nullptr)}, {"result", res}});
    } else if (cfg.format == "csv") {
        std::cout << "g,theta_2,odd_count,even_vanishing,bound,enumeration_checked\n"
                  << r.g << "," << r.theta_n << "," << r.odd_count << "," << r.even_vanishing << ","
                  << r.bound << "," << (enumerable ? "true" : "false") << "\n";
    } else {
        std::cout << "Hyperelliptic Theta(2) at genus " << genus << ": " << r.theta_n << " = 4^" << genus
                  << " - C(" << 2 * genus + 1 << "," << genus << ")"
                  << (enumerable ? " (matches branch-point enumeration)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_bound_table(const Config& cfg, int gmin, int gmax, int mmin, int mmax) {
    std::cout << "g,m,theta2_bound,hyperelliptic,theta_2m_bound\n";
    for (int g = gmin; g <= gmax; ++g) {
        for (int m = mmin; m <= mmax; ++m) {
            const std::uint64_t hyper = g <= 20 ? hyperelliptic_theta2_count(g).theta_n : 0;
            std::cout << g << "," << m << "," << theta2_bound(g) << "," << hyper << ","
                      << theta_2m_bound(g, m) << "\n";
        }
    }
    return kExitOk;
}

int cmd_quadrics(const Config& cfg) {
    const RiemannMatrix tau = build_matrix(cfg);
    RankOptions opts;
    opts.eps = cfg.eps;
    opts.vanish_tol = cfg.vanish_tol;
    opts.rel_tol = cfg.rel_tol;
    opts.n_samples = cfg.n_samples;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    const int dim = sym_kernel_dim(tau, opts);
    const int g = tau.g();
    const long long closed = (1ll << (g - 1)) * ((1ll << g) + 1) - static_cast<long long>(pow3(g));
    if (cfg.format == "json") {
        emit(json{{"config", config_json(cfg, "quadrics", &tau)},
                  {"result", {{"sym_kernel_dim", dim}, {"product_formula", closed}, {"matches", dim == closed}}}});
    } else if (cfg.format == "csv") {
        std::cout << "g,sym_kernel_dim,product_formula,matches\n"
                  << g << "," << dim << "," << closed << "," << (dim == closed ? "true" : "false") << "\n";
    } else {
        std::cout << "dim ker Sym M(0,0) = " << dim << " (product-ppav formula: " << closed << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion-point counts on theta divisors and multiplication-map rank checks"};
    app.require_subcommand(1);

    Config cfg;
    int genus = 2, gmin = 1, gmax = 5, mmin = 1, mmax = 1;

    auto* count = app.add_subcommand("count", "Count n-torsion points on the theta divisor");
    add_matrix_flags(count, cfg);
    add_tolerance_flags(count, cfg);
    count->add_option("--order", cfg.order, "Torsion order n (default 2)")->check(CLI::PositiveNumber);

    auto* rank = app.add_subcommand("rank", "Numerical rank of M(x,y) against Kempf's count");
    add_matrix_flags(rank, cfg);
    add_tolerance_flags(rank, cfg);
    rank->add_option("--rel-tol", cfg.rel_tol, "Relative singular value cutoff (default 1e-8)");
    rank->add_option("--samples", cfg.n_samples, "Sample points (default 2*4^g+16)");
    rank->add_option("--x", cfg.x_spec, "Shift x: 0, random, t:m/k/n, or coordinates");
    rank->add_option("--y", cfg.y_spec, "Shift y: 0, random, t:m/k/n, or coordinates");
    rank->add_flag("--scan-lemma-g2", cfg.scan_lemma_g2, "Rank sweep of M(0,x) over random x (g=2)");
    rank->add_option("--trials", cfg.trials, "Trials for --scan-lemma-g2 (default 20)");

    auto* hyper = app.add_subcommand("hyperelliptic", "Closed-form hyperelliptic Theta(2) count");
    hyper->add_option("--genus", genus, "Genus (1..20)")->required();
    hyper->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "csv", "json"}));

    auto* table = app.add_subcommand("bound-table", "CSV table of bounds and hyperelliptic counts");
    table->add_option("--gmin", gmin, "Smallest genus (default 1)");
    table->add_option("--gmax", gmax, "Largest genus (default 5)");
    table->add_option("--mmin", mmin, "Smallest m for the Theta(2m) bound (default 1)");
    table->add_option("--mmax", mmax, "Largest m (default 1)");

    auto* quad = app.add_subcommand("quadrics", "Kernel dimension of Sym^2 H^0(L^2) -> H^0(L^4)");
    add_matrix_flags(quad, cfg);
    add_tolerance_flags(quad, cfg);
    quad->add_option("--rel-tol", cfg.rel_tol, "Relative singular value cutoff (default 1e-8)");
    quad->add_option("--samples", cfg.n_samples, "Sample points (default 2*4^g+16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!(cfg.eps > 0.0) || cfg.eps > cfg.vanish_tol / 10.0)
            throw UsageError("require 0 < eps <= vanish_tol/10");
        if (count->parsed()) return cmd_count(cfg);
        if (rank->parsed()) return cmd_rank(cfg);
        if (hyper->parsed()) return cmd_hyperelliptic(cfg, genus);
        if (table->parsed()) return cmd_bound_table(cfg, gmin, gmax, mmin, mmax);
        if (quad->parsed()) return cmd_quadrics(cfg);
    } catch (const AmbiguousVerdict& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const UnreliableRank& e) {
        std::cerr << "unreliable: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const PrecisionError& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
