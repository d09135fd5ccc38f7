// Command-line front end: Kerov polynomials, genus parts, symmetric-function
// fits, divisibility checks, brute-force cross-checks and diagram evaluation.
//
// Exit codes: 0 ok, 2 usage/precondition, 3 cross-method mismatch,
// 4 theorem violation (divisibility / fit inconsistency), 5 underdetermined.

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <map>
#include <thread>
#include <vector>

#include "kerov/cumulants.hpp"
#include "kerov/diagrams.hpp"
#include "kerov/factorizations.hpp"
#include "kerov/goulden_rattan.hpp"
#include "kerov/lassalle.hpp"
#include "kerov/poly_cache.hpp"
#include "kerov/serialize.hpp"

namespace {

using namespace kerov;

enum class Format { Text, Json, Latex };

std::string render(const CumulantPoly& p, Format f) {
    switch (f) {
        case Format::Json:
            return poly_to_json(p).dump();
        case Format::Latex:
            return p.render_latex();
        case Format::Text:
        default:
            return p.render_text();
    }
}

KerovPolynomial sigma_cached(int k, PolyCache* cache) {
    if (cache) {
        if (auto hit = cache->get(k)) return KerovPolynomial{k, std::move(*hit)};
    }
    KerovPolynomial kp = sigma(k);
    if (cache) cache->put(k, kp.poly);
    return kp;
}

// Independent k values may run in parallel; everything per k is sequential.
std::map<int, KerovPolynomial> compute_sigmas(const std::vector<int>& ks, PolyCache* cache,
                                              int jobs) {
    std::map<int, KerovPolynomial> out;
    std::vector<int> missing;
    for (int k : ks) {
        if (cache) {
            if (auto hit = cache->get(k)) {
                out.emplace(k, KerovPolynomial{k, std::move(*hit)});
                continue;
            }
        }
        missing.push_back(k);
    }
    if (jobs <= 1 || missing.size() <= 1) {
        for (int k : missing) out.emplace(k, sigma(k));
    } else {
        std::vector<KerovPolynomial> results(missing.size());
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), missing.size());
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < missing.size(); i = next.fetch_add(1))
                    results[i] = sigma(missing[i]);
            });
        }
        for (auto& t : pool) t.join();
        for (std::size_t i = 0; i < missing.size(); ++i)
            out.emplace(missing[i], std::move(results[i]));
    }
    if (cache)
        for (int k : missing) cache->put(k, out.at(k).poly);
    return out;
}

struct Options {
    Format format = Format::Text;
    bool no_cache = false;
    std::string cache_path;
    int jobs = 1;
};

PolyCache* open_cache(const Options& opt, std::optional<PolyCache>& storage) {
    if (opt.no_cache) return nullptr;
    storage.emplace(opt.cache_path.empty() ? PolyCache::default_path() : opt.cache_path);
    return &*storage;
}

int cmd_poly(int k, const Options& opt) {
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    KerovPolynomial kp = sigma_cached(k, c);
    if (c) c->save();
    std::cout << render(kp.poly, opt.format) << '\n';
    return 0;
}

int cmd_genus(int k, int g, const std::string& method, const Options& opt) {
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    std::optional<CumulantPoly> from_product, from_gr;
    if (method == "product" || method == "both") {
        KerovPolynomial kp = sigma_cached(k, c);
        from_product = genus_part(kp, g);
    }
    if (method == "gr" || method == "both") from_gr = gr_genus_part(k, g);
    if (c) c->save();
    if (from_product && from_gr && !(*from_product == *from_gr)) {
        std::cerr << "cross-method mismatch:\n  product: " << render(*from_product, opt.format)
                  << "\n  gr:      " << render(*from_gr, opt.format) << '\n';
        return 3;
    }
    std::cout << render(from_product ? *from_product : *from_gr, opt.format) << '\n';
    return 0;
}

int cmd_fit(int g, int kmax, const std::string& basis_name, const Options& opt) {
    if (kmax < 2 * g + 2) {
        std::cerr << "fit needs kmax >= 2g+2\n";
        return 2;
    }
    std::vector<int> ks;
    for (int k = 2 * g + 1; k <= kmax; ++k) ks.push_back(k);
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    auto sigmas = compute_sigmas(ks, c, opt.jobs);
    if (c) c->save();
    FitBasis basis = basis_name == "Q" ? FitBasis::Q : FitBasis::R;
    FitReport report =
        lassalle_report(g, ks, basis, [&](int k) { return sigmas.at(k); });
    std::cout << fit_report_to_json(report).dump() << '\n';
    return report.consistent ? 0 : 4;
}

int cmd_divcheck(int p, const Options& opt) {
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    DivisibilityResult result = divisibility_check(p, [&](int k) { return sigma_cached(k, c); });
    if (c) c->save();
    if (opt.format == Format::Json) {
        nlohmann::json out;
        out["p"] = p;
        out["quotients"] = {poly_to_json(result.q1), poly_to_json(result.q2),
                            poly_to_json(result.q3)};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << render(result.q1, opt.format) << '\n'
                  << render(result.q2, opt.format) << '\n'
                  << render(result.q3, opt.format) << '\n';
    }
    return 0;
}

int cmd_brute(int k, int bound, const Options& opt) {
    CumulantPoly counted = brute_kerov(k, BruteOptions{bound, 1});
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    KerovPolynomial kp = sigma_cached(k, c);
    if (c) c->save();
    bool match = counted == kp.poly;
    if (opt.format == Format::Json) {
        nlohmann::json out;
        out["poly"] = poly_to_json(counted);
        out["match"] = match;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << render(counted, opt.format) << '\n'
                  << (match ? "match" : "MISMATCH") << '\n';
    }
    return match ? 0 : 3;
}

int cmd_eval(const std::string& diagram_text, int k, const Options& opt) {
    YoungDiagram lambda = YoungDiagram::parse(diagram_text);
    Rational lhs = normalized_character(lambda, k);
    std::optional<PolyCache> cache;
    PolyCache* c = open_cache(opt, cache);
    KerovPolynomial kp = sigma_cached(k, c);
    if (c) c->save();
    Rational rhs = kp.poly.evaluate(free_cumulants_of(lambda, k + 1));
    bool match = lhs == rhs;
    if (opt.format == Format::Json) {
        nlohmann::json out;
        out["character"] = to_string(lhs);
        out["kerov"] = to_string(rhs);
        out["match"] = match;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << to_string(lhs) << (match ? " = " : " != ") << to_string(rhs) << '\n';
    }
    return match ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of Kerov character polynomials"};
    app.require_subcommand(1);

    Options opt;
    std::map<std::string, Format> format_names{
        {"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};

    auto add_common = [&](CLI::App* sub, bool with_jobs = false) {
        sub->add_option("--format", opt.format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
        sub->add_flag("--no-cache", opt.no_cache, "Disable the polynomial cache");
        sub->add_option("--cache", opt.cache_path, "Cache file path (overrides KEROV_CACHE)");
        if (with_jobs)
            sub->add_option("--jobs", opt.jobs, "Parallelize over independent k values")
                ->check(CLI::Range(1, 256));
    };

    int k = 1, g = 1, p = 3, kmax = 10, bound = 9;
    std::string method = "both", basis = "R", diagram;

    CLI::App* poly = app.add_subcommand("poly", "Print the Kerov polynomial K_k");
    poly->add_option("--k", k, "Cycle length")->required()->check(CLI::Range(1, 1000));
    add_common(poly);

    CLI::App* genus = app.add_subcommand("genus", "Print the genus part K_{k,k+1-2g}");
    genus->add_option("--k", k, "Cycle length")->required()->check(CLI::Range(1, 1000));
    genus->add_option("--g", g, "Genus")->required()->check(CLI::Range(0, 500));
    genus->add_option("--method", method, "product, gr or both")
        ->check(CLI::IsMember({"product", "gr", "both"}));
    add_common(genus);

    CLI::App* fit = app.add_subcommand("fit", "Fit the genus-g symmetric function");
    fit->add_option("--g", g, "Genus")->required()->check(CLI::Range(1, 100));
    fit->add_option("--kmax", kmax, "Largest k to use")->required()->check(CLI::Range(1, 1000));
    fit->add_option("--basis", basis, "R or Q")->check(CLI::IsMember({"R", "Q"}));
    add_common(fit, true);

    CLI::App* divcheck = app.add_subcommand("divcheck", "Verify the prime divisibility quotients");
    divcheck->add_option("--p", p, "Odd prime")->required()->check(CLI::Range(3, 1000));
    add_common(divcheck);

    CLI::App* brute = app.add_subcommand("brute", "Count factorizations and cross-check K_k");
    brute->add_option("--k", k, "Cycle length")->required()->check(CLI::Range(1, 1000));
    brute->add_option("--bound", bound, "Enumeration bound")->check(CLI::Range(1, 12));
    add_common(brute);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate both sides of the character identity");
    eval->add_option("--diagram", diagram, "Comma-separated row lengths")->required();
    eval->add_option("--k", k, "Cycle length")->required()->check(CLI::Range(1, 1000));
    add_common(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (poly->parsed()) return cmd_poly(k, opt);
        if (genus->parsed()) return cmd_genus(k, g, method, opt);
        if (fit->parsed()) return cmd_fit(g, kmax, basis, opt);
        if (divcheck->parsed()) return cmd_divcheck(p, opt);
        if (brute->parsed()) return cmd_brute(k, bound, opt);
        if (eval->parsed()) return cmd_eval(diagram, k, opt);
    } catch (const Underdetermined& e) {
        std::cerr << "underdetermined: " << e.what() << '\n';
        return 5;
    } catch (const Inconsistent& e) {
        std::cerr << "inconsistent: " << e.what() << '\n';
        return 4;
    } catch (const NotDivisible& e) {
        std::cerr << "divisibility violated: " << e.what() << '\n';
        return 4;
    } catch (const NegativeCoefficient& e) {
        std::cerr << "negative coefficient: " << e.what() << '\n';
        return 4;
    } catch (const ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidPartition& e) {
        std::cerr << "invalid partition: " << e.what() << '\n';
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const DegenerateK& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
