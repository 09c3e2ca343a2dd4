#include "medgeo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "medgeo/json_io.hpp"
#include "medgeo/median_ops.hpp"
#include "medgeo/version.hpp"

namespace medgeo {

namespace {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    char hex[32];
    std::snprintf(hex, sizeof hex, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(buf.str())));
    return hex;
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        throw invalid_input(std::string("environment variable ") + name + " is not an integer");
    }
}

const char* tri_str(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

json rats_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(r.str());
    return a;
}

json measure_definite_to_json(const MeasureDefiniteVerdict& v) {
    json out;
    out["verdict"] = tri_str(v.verdict);
    out["slack"] = v.slack.str();
    if (v.triangle_failed)
        out["triangle_violation"] = {v.triangle.i, v.triangle.j, v.triangle.k};
    else if (v.verdict == Tri::yes)
        out["decomposition"] = cut_decomposition_to_json(v.decomposition);
    else if (v.verdict == Tri::no)
        out["certificate"] = farkas_to_json(v.certificate);
    return out;
}

json hierarchy_to_json(const HierarchyVerdict& v) {
    json out;
    out["type1"] = measure_definite_to_json(v.type1_detail);
    out["type1"]["verdict"] = tri_str(v.type1);
    json hyper;
    hyper["verdict"] = tri_str(v.hypermetric_at_bound);
    hyper["bound"] = v.bound;
    hyper["semantics"] = "yes means no violation with |coef| <= bound; not a proof of hypermetricity";
    if (v.hypermetric_at_bound == Tri::no) {
        hyper["violation"] = v.hypermetric_detail.violation;
        hyper["form_value"] = v.hypermetric_detail.form_value.str();
    }
    out["hypermetric_at_bound"] = std::move(hyper);
    json cnd;
    cnd["verdict"] = tri_str(v.negative_type);
    if (v.negative_type == Tri::no) {
        cnd["violation"] = rats_to_json(v.cnd_detail.violation);
        cnd["form_value"] = v.cnd_detail.form_value.str();
    }
    out["negative_type"] = std::move(cnd);
    if (v.sqrt_type1 != Tri::unknown) {
        out["sqrt_type1"] = measure_definite_to_json(v.sqrt_detail);
        out["sqrt_type1"]["verdict"] = tri_str(v.sqrt_type1);
    }
    return out;
}

// Mirrors the report with every rational string rendered to `digits`
// decimal digits. The exact values stay authoritative.
json decimal_view(const json& j, unsigned digits) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        try {
            return Rat::parse(s).decimal(digits);
        } catch (const invalid_input&) {
            return j;
        }
    }
    if (j.is_array()) {
        json out = json::array();
        for (const json& v : j) out.push_back(decimal_view(v, digits));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = decimal_view(it.value(), digits);
        return out;
    }
    return j;
}

struct RandomKernelCheck {
    int instances = 0;
    void run(std::uint64_t seed, int count, long long bound, int lp_cap) {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < count; ++t) {
            int n = 3 + int(rng() % 4);
            int dim = 1 + int(rng() % 3);
            std::vector<std::vector<Rat>> pts(n, std::vector<Rat>(dim));
            for (auto& p : pts)
                for (Rat& c : p) c = Rat(long(rng() % 7), 1 + long(rng() % 2));
            Kernel k;
            k.n = n;
            k.psi.assign(std::size_t(n) * n, Rat(0));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Rat q(0);
                    for (int c = 0; c < dim; ++c) {
                        Rat d = pts[i][c] - pts[j][c];
                        q += d * d;
                    }
                    k.psi[std::size_t(i) * n + j] = q;
                    k.psi[std::size_t(j) * n + i] = q;
                }
            if (!is_cnd(k).cnd)
                throw verification_error("squared-Euclidean kernel failed the CND test");
            for (long den : {4L, 2L}) {
                for (long num = 1; num < den; num += 2) {
                    Kernel p = schoenberg_power(k, Rat(num, den));
                    if (!is_cnd(p, p.approx ? approx_slack() : Rat(0)).cnd)
                        throw verification_error("Schoenberg power failed the CND test");
                }
            }
            classify(k, bound, lp_cap);
            ++instances;
        }
    }
};

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"medgeo: exact computations on finite median spaces, walls and kernels"};
    app.require_subcommand(1);

    std::string output_path;
    unsigned decimal_digits = 0;
    int lp_cap = env_int("MEDGEO_MAX_POINTS", 12);
    int wall_cap = env_int("MEDGEO_MAX_WALLS", 20);
    int brute_cap = env_int("MEDGEO_MAX_BRUTE", 64);
    app.add_option("-o,--output", output_path, "write the report to this file");
    auto* dec_opt =
        app.add_option("--decimal", decimal_digits, "add a decimal view with this many digits");
    app.add_option("--max-points", lp_cap, "cut-cone LP point cap (env MEDGEO_MAX_POINTS)");
    app.add_option("--max-walls", wall_cap, "section enumeration wall cap (env MEDGEO_MAX_WALLS)");
    app.add_option("--max-brute", brute_cap,
                   "triple-scan point cap for median checks (env MEDGEO_MAX_BRUTE)");

    auto* median = app.add_subcommand("median", "median structure of a finite metric");
    median->require_subcommand(1);
    auto* med_check = median->add_subcommand("check", "decide whether the metric is median");
    std::string med_check_path;
    bool quotient_first = false;
    med_check->add_option("input", med_check_path, "metric JSON")->required();
    med_check->add_flag("--quotient", quotient_first, "quotient zero-distance classes first");
    auto* med_closure = median->add_subcommand("closure", "median closure of l1 points");
    std::string med_closure_path;
    med_closure->add_option("input", med_closure_path, "points JSON")->required();

    auto* walls = app.add_subcommand("walls", "measured-wall structures");
    walls->require_subcommand(1);
    auto* walls_extract = walls->add_subcommand("extract", "convex walls of a median metric");
    std::string walls_extract_path;
    walls_extract->add_option("input", walls_extract_path, "metric JSON")->required();
    auto* walls_medianize = walls->add_subcommand("medianize", "median space of a wall space");
    std::string walls_medianize_path;
    walls_medianize->add_option("input", walls_medianize_path, "wall space JSON")->required();
    auto* walls_subdivide = walls->add_subcommand("subdivide", "geodesic interval subdivision");
    std::string subdivide_metric_path, subdivide_pairs_path;
    walls_subdivide->add_option("metric", subdivide_metric_path, "metric JSON")->required();
    walls_subdivide->add_option("pairs", subdivide_pairs_path, "a/b/pairs JSON")->required();

    auto* embed = app.add_subcommand("embed", "l1 embeddings");
    embed->require_subcommand(1);
    auto* embed_l1 = embed->add_subcommand("l1", "cut-cone decomposition of a metric");
    std::string embed_l1_path;
    embed_l1->add_option("input", embed_l1_path, "metric JSON")->required();
    auto* embed_walls = embed->add_subcommand("from-walls", "coordinates from a wall space");
    std::string embed_walls_path;
    int base_point = 0;
    embed_walls->add_option("input", embed_walls_path, "wall space JSON")->required();
    embed_walls->add_option("--base", base_point, "base point")->required();

    auto* kernel = app.add_subcommand("kernel", "kernel hierarchy");
    kernel->require_subcommand(1);
    auto* kernel_classify = kernel->add_subcommand("classify", "type-1 / hypermetric / CND");
    std::string kernel_path;
    long long bound = 3;
    int random_count = 0;
    std::uint64_t seed = 0;
    kernel_classify->add_option("input", kernel_path, "kernel JSON");
    kernel_classify->add_option("--bound", bound, "hypermetric integer bound");
    kernel_classify->add_option("--random", random_count, "run N randomized property instances");
    kernel_classify->add_option("--seed", seed, "seed for --random");

    for (auto* sub : {median, walls, embed, kernel}) sub->fallthrough();
    for (auto* sub : {med_check, med_closure, walls_extract, walls_medianize, walls_subdivide,
                      embed_l1, embed_walls, kernel_classify})
        sub->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    auto started = std::chrono::steady_clock::now();
    json report;
    report["tool"] = "medgeo";
    report["version"] = version;

    auto with_input = [&](const std::string& path) {
        report["input"] = json{{"path", path}, {"digest", file_digest(path)}};
        return load_json_file(path);
    };
    // reports produced by other subcommands are accepted wherever their
    // payload would be, so outputs chain without editing
    auto unwrap = [](json j, const char* key) {
        if (j.is_object() && j.contains(key) && j.at(key).is_object()) return j.at(key);
        return j;
    };

    if (med_check->parsed()) {
        report["command"] = "median check";
        FiniteMetric m = metric_from_json(unwrap(with_input(med_check_path), "metric"));
        if (quotient_first) {
            std::vector<int> cls;
            m = metric_quotient(m, &cls);
            report["quotient_classes"] = cls;
        }
        MedianVerdict v = is_median(m, brute_cap);
        report["verdict"] = v.is_median ? "yes" : "no";
        if (!v.is_median) report["witness"] = {v.a, v.b, v.c};
    } else if (med_closure->parsed()) {
        report["command"] = "median closure";
        L1Points p = points_from_json(unwrap(with_input(med_closure_path), "points"));
        MedianClosureResult res = median_closure(p);
        report["count"] = res.points.size();
        report["points"] = points_to_json(res.points);
        report["metric"] = metric_to_json(res.metric);
    } else if (walls_extract->parsed()) {
        report["command"] = "walls extract";
        FiniteMetric m = metric_from_json(unwrap(with_input(walls_extract_path), "metric"));
        WallSpace ws = extract_convex_walls(m);
        report["walls"] = walls_to_json(ws);
        report["measure_identity"] = "verified-exact";
    } else if (walls_medianize->parsed()) {
        report["command"] = "walls medianize";
        WallSpace ws = walls_from_json(unwrap(with_input(walls_medianize_path), "walls"));
        MedianizedSpace ms = medianize(ws, wall_cap);
        MedianVerdict v = is_median(ms.metric, ms.metric.size());
        if (!v.is_median) throw verification_error("medianization is not median");
        for (int x = 0; x < ws.n; ++x)
            for (int y = 0; y < ws.n; ++y)
                if (ms.metric.dist(ms.iota[x], ms.iota[y]) != wall_pdist(ws, x, y))
                    throw verification_error("iota is not isometric");
        report["medianization"] = medianized_to_json(ms);
        report["is_median"] = true;
        report["iota_isometric"] = true;
    } else if (walls_subdivide->parsed()) {
        report["command"] = "walls subdivide";
        FiniteMetric m = metric_from_json(unwrap(with_input(subdivide_metric_path), "metric"));
        json pj = load_json_file(subdivide_pairs_path);
        report["pairs_input"] =
            json{{"path", subdivide_pairs_path}, {"digest", file_digest(subdivide_pairs_path)}};
        int a = pj.at("a").get<int>(), b = pj.at("b").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const json& pr : pj.at("pairs")) pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
        SubdivisionResult res = subdivide_interval(m, a, b, pairs);
        report["subdivision"] = subdivision_to_json(res);
        report["verified"] = true;
    } else if (embed_l1->parsed()) {
        report["command"] = "embed l1";
        FiniteMetric m = metric_from_json(unwrap(with_input(embed_l1_path), "metric"));
        CutConeResult res = cut_cone_decompose(m, lp_cap);
        report["embeddable"] = res.embeddable;
        if (res.embeddable)
            report["decomposition"] = cut_decomposition_to_json(res.decomposition);
        else
            report["certificate"] = farkas_to_json(res.certificate);
    } else if (embed_walls->parsed()) {
        report["command"] = "embed from-walls";
        WallSpace ws = walls_from_json(unwrap(with_input(embed_walls_path), "walls"));
        L1Points pts = walls_to_embedding(ws, base_point);
        for (int x = 0; x < ws.n; ++x)
            for (int y = x + 1; y < ws.n; ++y)
                if (l1_dist(pts.points[x], pts.points[y]) != wall_pdist(ws, x, y))
                    throw verification_error("embedding is not isometric for the wall pseudo-metric");
        report["points"] = points_to_json(pts);
        report["base"] = base_point;
        report["isometric"] = true;
    } else if (kernel_classify->parsed()) {
        report["command"] = "kernel classify";
        if (random_count > 0) {
            RandomKernelCheck check;
            check.run(seed, random_count, bound, lp_cap);
            report["random"] = json{{"instances", check.instances}, {"seed", seed},
                                    {"all_passed", true}};
        } else {
            if (kernel_path.empty()) throw invalid_input("kernel classify needs an input file or --random N");
            Kernel k = kernel_from_json(unwrap(with_input(kernel_path), "kernel"));
            report["hierarchy"] = hierarchy_to_json(classify(k, bound, lp_cap));
        }
    }

    auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (*dec_opt) report["decimal_view"] = decimal_view(report, decimal_digits);

    std::string text = report.dump(2) + "\n";
    if (!output_path.empty()) {
        std::ofstream f(output_path);
        if (!f) throw invalid_input("cannot write file: " + output_path);
        f << text;
    } else {
        out << text;
    }
    return 0;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out, err);
    } catch (const verification_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const cap_exceeded& e) {
        err << "error: cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const invalid_input& e) {
        err << "error: invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: invalid input: " << e.what() << "\n";
        return 1;
    }
}

} // namespace medgeo
