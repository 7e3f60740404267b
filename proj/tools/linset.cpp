// linset - construct and certify minimum-size F_q-linear sets in PG(l, q^h)
//
// Subcommands: construct, verify-blocking, count, spectra, crossratio, run.
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 invalid config.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linset/blocking.hpp"
#include "linset/json_io.hpp"
#include "linset/linear_set.hpp"

using namespace linset;

namespace {

struct Experiment {
    std::string command = "construct";
    unsigned p = 0;
    unsigned e = 1;
    unsigned h = 0;
    unsigned s = 0;
    std::vector<unsigned> partition;
    std::uint64_t seed = 0;
    std::optional<std::vector<unsigned>> modulus;
    std::vector<std::string> checks{"size", "spectrum"};
    bool include_points = false;
    std::string format = "json";
    bool assert_non_redei = false;
    bool assert_redei = false;
};

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<unsigned>(std::stoul(item)));
        } catch (const std::exception&) {
            fail_config("BadFlag", std::string("cannot parse ") + what + ": '" + item + "'");
        }
    }
    if (out.empty()) fail_config("BadFlag", std::string(what) + " must not be empty");
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_config("BadConfigFile", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail_config("BadConfigFile", std::string("cannot parse ") + path + ": " + ex.what());
    }
    return j;
}

void experiment_from_json(const Json& j, Experiment& exp) {
    if (j.contains("command")) exp.command = j.at("command").get<std::string>();
    if (j.contains("p")) exp.p = j.at("p").get<unsigned>();
    if (j.contains("e")) exp.e = j.at("e").get<unsigned>();
    if (j.contains("h")) exp.h = j.at("h").get<unsigned>();
    if (j.contains("s")) exp.s = j.at("s").get<unsigned>();
    if (j.contains("partition")) exp.partition = j.at("partition").get<std::vector<unsigned>>();
    if (j.contains("seed")) exp.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("modulus")) exp.modulus = j.at("modulus").get<std::vector<unsigned>>();
    if (j.contains("checks")) exp.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("points")) exp.include_points = j.at("points").get<bool>();
    if (j.contains("format")) exp.format = j.at("format").get<std::string>();
    if (j.contains("assert_non_redei")) exp.assert_non_redei = j.at("assert_non_redei").get<bool>();
    if (j.contains("assert_redei")) exp.assert_redei = j.at("assert_redei").get<bool>();
}

std::shared_ptr<const Field> build_field(const Experiment& exp) {
    if (exp.p == 0 || exp.h == 0) fail_config("BadFlag", "--p and --h are required");
    if (exp.modulus)
        return std::make_shared<const Field>(
            Field::with_modulus(exp.p, exp.e, exp.h, *exp.modulus, exp.seed));
    return std::make_shared<const Field>(Field::make(exp.p, exp.e, exp.h, exp.seed));
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::filesystem::path path(out_path);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("LINSET_OUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) fail_config("BadOutputPath", "cannot write " + path.string());
    out << text << '\n';
}

// ---- construct checks ----------------------------------------------------

Json check_size(const ConstructionSpec& spec, const LinearSetReport& rep) {
    BigInt expected = count_reduced_closed_form(spec.partition, BigInt(rep.q));
    Json j;
    j["pass"] = BigInt(rep.size()) == expected;
    j["expected"] = to_decimal(expected);
    j["observed"] = rep.size();
    return j;
}

Json check_spectrum(const ConstructionSpec& spec, const LinearSetReport& rep) {
    std::vector<BigInt> predicted = spec.l() == 1
                                        ? predicted_spectrum_line(spec)
                                        : predicted_full_spectrum(BigInt(rep.q), spec.partition);
    bool pass = predicted.size() == rep.spectrum.size();
    Json pred = Json::array();
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        pred.push_back(to_decimal(predicted[i]));
        if (pass && predicted[i] != BigInt(rep.spectrum[i])) pass = false;
    }
    Json j;
    j["pass"] = pass;
    j["predicted"] = std::move(pred);
    j["observed"] = rep.spectrum;
    return j;
}

Json check_projection_agreement(const ConstructionSpec& spec, const LinearSetReport& rep) {
    Json j;
    auto frame = build_projection_frame(spec);
    auto projected = project_subgeometry(frame);
    j["pass"] = reports_agree(projected, rep);
    j["sigma_points"] = to_decimal((big_pow(BigInt(rep.q), rep.k) - 1) / (BigInt(rep.q) - 1));
    j["projected_size"] = projected.size();
    return j;
}

Json check_blocking(const ConstructionSpec& spec, const LinearSetReport& rep) {
    const Field& F = *spec.field;
    Json j;
    if (spec.l() != 2) {
        j["pass"] = false;
        j["reason"] = "blocking checks need l = 2";
        return j;
    }
    auto scan = verify_blocking(F, rep.points);
    j["pass"] = scan.blocking;
    j["lines"] = scan.line_count;
    if (!scan.blocking && scan.missed_line) j["missed_line"] = point_to_json(F, *scan.missed_line);
    return j;
}

Json check_redei(const ConstructionSpec& spec, const LinearSetReport& rep) {
    const Field& F = *spec.field;
    Json j;
    if (spec.l() != 2) {
        j["pass"] = false;
        j["reason"] = "Redei analysis needs l = 2";
        return j;
    }
    auto lines = redei_lines(F, rep);
    unsigned tmin = *std::min_element(spec.partition.begin(), spec.partition.end());
    // characterization: a Redei line exists iff one part has size one
    j["pass"] = lines.empty() == (tmin >= 2);
    j["redei_line_count"] = lines.size();
    j["min_part"] = tmin;
    return j;
}

Json check_secants(const ConstructionSpec& spec, const LinearSetReport& rep) {
    const Field& F = *spec.field;
    Json j;
    if (spec.l() != 2) {
        j["pass"] = false;
        j["reason"] = "secant analysis needs l = 2";
        return j;
    }
    auto scan = secant_spectrum(F, rep.points);
    std::uint64_t incidences = 0;
    for (const auto& [hits, lines] : scan.histogram) incidences += hits * lines;
    bool pass = incidences == rep.size() * (F.order() + 1);  // double counting
    if (rep.k >= 3 && rep.k - 3 < spec.s) pass = pass && scan.has_q_plus_one_secant;
    j["pass"] = pass;
    j["has_q_plus_one_secant"] = scan.has_q_plus_one_secant;
    Json hist;
    for (const auto& [hits, lines] : scan.histogram) hist[std::to_string(hits)] = lines;
    j["histogram"] = std::move(hist);
    return j;
}

Json check_spectra_solver(const ConstructionSpec& spec, const LinearSetReport& rep) {
    auto sols = feasible_spectra(rep.k, BigInt(rep.size()), BigInt(rep.q), rep.k - 1);
    std::vector<BigInt> observed;
    for (std::uint64_t x : rep.spectrum) observed.emplace_back(x);
    bool found = std::find(sols.begin(), sols.end(), observed) != sols.end();
    Json j;
    j["pass"] = found;
    j["solutions"] = sols.size();
    (void)spec;
    return j;
}

Json check_cross_ratio(const ConstructionSpec& spec, const LinearSetReport& rep) {
    const Field& F = *spec.field;
    Json j;
    if (spec.l() != 1) {
        j["pass"] = false;
        j["reason"] = "cross-ratio scan needs l = 1";
        return j;
    }
    // all 4-subsets of a deterministic prefix; exhaustive for small sets
    const std::size_t cap = 40;
    const std::size_t n = std::min(rep.points.size(), cap);
    bool pass = true;
    std::uint64_t subsets = 0;
    for (std::size_t a = 0; a < n && pass; ++a)
        for (std::size_t b = a + 1; b < n && pass; ++b)
            for (std::size_t c = b + 1; c < n && pass; ++c)
                for (std::size_t d = c + 1; d < n && pass; ++d) {
                    ++subsets;
                    CrossRatio r =
                        cross_ratio(F, rep.points[a], rep.points[b], rep.points[c], rep.points[d]);
                    for (const CrossRatio& o : cross_ratio_orbit(F, r))
                        if (!o.infinite && !F.in_subfield(o.value, spec.s)) pass = false;
                }
    j["pass"] = pass;
    j["subsets"] = subsets;
    j["exhaustive"] = rep.points.size() <= cap;
    j["subfield_order"] = to_decimal(big_pow(BigInt(F.q()), spec.s));
    return j;
}

int cmd_construct(const Experiment& exp, const std::string& out_path) {
    auto field = build_field(exp);
    auto spec = make_construction(field, exp.s, exp.partition);
    auto rep = build_evaluation_set(spec);

    Json result;
    result["schema"] = kSchemaVersion;
    result["command"] = "construct";
    result["spec"] = spec_to_json(spec);
    result["size"] = rep.size();
    result["spectrum"] = rep.spectrum;
    result["max_weight"] = rep.max_weight();
    result["club"] = detect_club(rep);
    result["degenerate_subline"] = is_degenerate_subline(rep);

    bool all_pass = true;
    Json checks;
    for (const std::string& name : exp.checks) {
        Json c;
        if (name == "size") c = check_size(spec, rep);
        else if (name == "spectrum") c = check_spectrum(spec, rep);
        else if (name == "projection-agreement") c = check_projection_agreement(spec, rep);
        else if (name == "blocking") c = check_blocking(spec, rep);
        else if (name == "redei") c = check_redei(spec, rep);
        else if (name == "secants") c = check_secants(spec, rep);
        else if (name == "spectra-solver") c = check_spectra_solver(spec, rep);
        else if (name == "cross-ratio") c = check_cross_ratio(spec, rep);
        else fail_config("UnknownCheck", "no check named '" + name + "'");
        all_pass = all_pass && c.at("pass").get<bool>();
        checks[name] = std::move(c);
    }
    result["checks"] = std::move(checks);
    result["pass"] = all_pass;
    if (exp.include_points) result["points"] = report_to_json(spec, rep, true).at("points");

    if (exp.format == "csv") write_output(report_to_csv(*field, rep), out_path);
    else write_output(result.dump(2), out_path);
    return all_pass ? 0 : 1;
}

int cmd_verify_blocking(const Experiment& exp, const std::string& out_path) {
    if (exp.partition.size() != 3)
        fail_config("BadShape", "verify-blocking needs a partition with exactly three parts");
    auto field = build_field(exp);
    auto spec = make_construction(field, exp.s, exp.partition);
    auto rep = build_evaluation_set(spec);
    BlockingCertificate cert = certify_blocking(*field, rep);

    Json result = certificate_to_json(*field, cert);
    result["command"] = "verify-blocking";
    result["spec"] = spec_to_json(spec);

    bool pass = true;
    if (spec.k() == field->h() + 1) pass = cert.blocking && cert.minimal && cert.small;
    if (exp.assert_non_redei) pass = pass && cert.redei.empty();
    if (exp.assert_redei) pass = pass && !cert.redei.empty();
    result["pass"] = pass;

    write_output(result.dump(2), out_path);
    return pass ? 0 : 1;
}

int cmd_count(std::uint64_t q, const std::vector<unsigned>& bounds, bool enumerate,
              const std::string& out_path) {
    std::uint64_t p = 2;
    while (p <= q && q % p != 0) ++p;
    unsigned e = 0;
    std::uint64_t t = q;
    while (t > 1 && t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1 || e == 0) fail_config("BadFlag", "q must be a prime power");

    Json result;
    result["schema"] = kSchemaVersion;
    result["command"] = "count";
    result["q"] = q;
    result["bounds"] = bounds;
    BigInt closed = count_reduced_closed_form(bounds, BigInt(q));
    result["count"] = to_decimal(closed);
    bool pass = true;
    if (enumerate) {
        Field F = Field::make(static_cast<unsigned>(p), e, 1);
        PolyRing ring(F);
        BigInt n = count_reduced_by_enumeration(ring, bounds);
        result["enumerated"] = to_decimal(n);
        pass = n == closed;
        result["match"] = pass;
    }
    write_output(result.dump(2), out_path);
    return pass ? 0 : 1;
}

int cmd_spectra(unsigned k, std::uint64_t q, const std::string& size_text, unsigned max_weight,
                const std::string& out_path) {
    if (k < 2) fail_config("BadFlag", "--k must be at least 2");
    BigInt size = size_text.empty() ? big_pow(BigInt(q), k - 1) + 1 : BigInt(size_text);
    if (max_weight == 0) max_weight = k - 1;
    auto sols = feasible_spectra(k, size, BigInt(q), max_weight);
    Json result;
    result["schema"] = kSchemaVersion;
    result["command"] = "spectra";
    result["q"] = q;
    result["k"] = k;
    result["size"] = to_decimal(size);
    result["max_weight"] = max_weight;
    result["solutions"] = sols.size();
    Json list = Json::array();
    for (const auto& sol : sols) {
        Json row = Json::array();
        for (const BigInt& x : sol) row.push_back(to_decimal(x));
        list.push_back(std::move(row));
    }
    result["spectra"] = std::move(list);
    write_output(result.dump(2), out_path);
    return 0;
}

int cmd_crossratio(const Experiment& exp, const std::string& points_text,
                   const std::string& out_path) {
    auto field = build_field(exp);
    const Field& F = *field;
    Geometry g(F, 2);
    std::vector<Point> pts;
    if (!points_text.empty()) {
        std::stringstream ss(points_text);
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            auto xy = parse_uint_list(pair, "--points entry");
            if (xy.size() != 2) fail_config("BadFlag", "--points entries must be 'x,y' pairs");
            pts.push_back(g.point({F.element(xy[0]), F.element(xy[1])}));
        }
        if (pts.size() != 4) fail_config("BadFlag", "--points needs exactly four points");
    } else {
        if (exp.s == 0) fail_config("BadFlag", "crossratio needs --s (frame mode) or --points");
        FieldElement beta = F.select_alpha(exp.s);
        pts = {g.point({F.one(), F.zero()}), g.point({F.zero(), F.one()}),
               g.point({F.one(), F.one()}), g.point({F.one(), beta})};
    }
    CrossRatio r = cross_ratio(F, pts[0], pts[1], pts[2], pts[3]);

    Json result;
    result["schema"] = kSchemaVersion;
    result["command"] = "crossratio";
    result["field"] = field_to_json(F);
    Json jpts = Json::array();
    for (const Point& p : pts) jpts.push_back(point_to_json(F, p));
    result["points"] = std::move(jpts);
    auto describe = [&](const CrossRatio& c) {
        Json j;
        j["infinite"] = c.infinite;
        if (!c.infinite) {
            j["value"] = element_to_json(F, c.value);
            Json sub;
            for (unsigned d = 1; d <= F.h(); ++d)
                if (F.h() % d == 0) sub[std::to_string(d)] = F.in_subfield(c.value, d);
            j["in_subfield_of_degree"] = std::move(sub);
        }
        return j;
    };
    result["cross_ratio"] = describe(r);
    Json orbit = Json::array();
    for (const CrossRatio& c : cross_ratio_orbit(F, r)) orbit.push_back(describe(c));
    result["orbit"] = std::move(orbit);
    bool in_q2 = F.h() % 2 == 0 && !r.infinite && F.in_subfield(r.value, 2);
    result["in_F_q2"] = in_q2;
    write_output(result.dump(2), out_path);
    return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_path) {
    Json batch = load_json_file(config_path);
    if (!batch.contains("experiments") || !batch.at("experiments").is_array())
        fail_config("BadConfigFile", "batch config needs an 'experiments' array");
    Json results = Json::array();
    bool all_pass = true;
    for (const Json& entry : batch.at("experiments")) {
        Experiment exp;
        experiment_from_json(entry, exp);
        // capture each sub-result instead of writing it to stdout directly
        std::ostringstream buffer;
        std::streambuf* old = std::cout.rdbuf(buffer.rdbuf());
        int rc = 0;
        try {
            if (exp.command == "construct") rc = cmd_construct(exp, "");
            else if (exp.command == "verify-blocking") rc = cmd_verify_blocking(exp, "");
            else fail_config("BadConfigFile", "unknown batch command '" + exp.command + "'");
        } catch (...) {
            std::cout.rdbuf(old);
            throw;
        }
        std::cout.rdbuf(old);
        results.push_back(Json::parse(buffer.str()));
        all_pass = all_pass && rc == 0;
    }
    Json result;
    result["schema"] = kSchemaVersion;
    result["command"] = "run";
    result["pass"] = all_pass;
    result["results"] = std::move(results);
    write_output(result.dump(2), out_path);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for minimum-size F_q-linear sets in PG(l, q^h)"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for the field degree

    Experiment exp;
    std::string partition_text, modulus_text, checks_text, out_path, config_path;
    std::string points_text, size_text;
    std::uint64_t q = 0;
    std::string bounds_text;
    unsigned k = 0, max_weight = 0;
    bool enumerate = false;

    auto add_field_flags = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--p", exp.p, "characteristic (prime)");
        cmd->add_option("--e", exp.e, "q = p^e (default 1)");
        cmd->add_option("--h", exp.h, "extension degree of F_{q^h} over F_q");
        cmd->add_option("--seed", exp.seed, "rotates the deterministic modulus scan");
        cmd->add_option("--modulus", modulus_text, "modulus coefficients c0,c1,... (lowest first)");
        cmd->add_option("--out", out_path,
                        "output file (default stdout; LINSET_OUT_DIR prefixes relative paths)");
    };

    CLI::App* construct = app.add_subcommand("construct", "build a linear set and run checks");
    add_field_flags(construct);
    construct->add_option("--s", exp.s, "degree of alpha over F_q");
    construct->add_option("--partition", partition_text, "t_1,t_2,... (comma separated)");
    construct->add_option(
        "--check", checks_text,
        "size,spectrum,projection-agreement,blocking,redei,secants,spectra-solver,cross-ratio");
    construct->add_flag("--points", exp.include_points, "include the full point list");
    construct->add_option("--format", exp.format, "json|csv");
    construct->add_option("--config", config_path, "JSON config; flags override its fields");

    CLI::App* verify =
        app.add_subcommand("verify-blocking", "certify a plane linear set as a blocking set");
    add_field_flags(verify);
    verify->add_option("--s", exp.s, "degree of alpha over F_q");
    verify->add_option("--partition", partition_text, "t_1,t_2,t_3");
    verify->add_flag("--assert-non-redei", exp.assert_non_redei, "fail unless no Redei line exists");
    verify->add_flag("--assert-redei", exp.assert_redei, "fail unless a Redei line exists");
    verify->add_option("--config", config_path, "JSON config; flags override its fields");

    CLI::App* count = app.add_subcommand("count", "reduced-tuple counting");
    count->set_help_flag("--help", "print help");
    count->add_option("--q", q, "field size (prime power)")->required();
    count->add_option("--bounds", bounds_text, "t_1,t_2,... (comma separated)")->required();
    count->add_flag("--enumerate", enumerate, "cross-check the closed form by enumeration");
    count->add_option("--out", out_path, "output file");

    CLI::App* spectra = app.add_subcommand("spectra", "feasible weight distributions");
    spectra->set_help_flag("--help", "print help");
    spectra->add_option("--q", q, "field size")->required();
    spectra->add_option("--k", k, "rank")->required();
    spectra->add_option("--size", size_text, "set size (decimal, default q^{k-1}+1)");
    spectra->add_option("--max-weight", max_weight, "largest admissible weight (default k-1)");
    spectra->add_option("--out", out_path, "output file");

    CLI::App* crossratio = app.add_subcommand("crossratio", "cross-ratio probe in PG(1, q^h)");
    add_field_flags(crossratio);
    crossratio->add_option("--s", exp.s, "degree of beta for the standard frame");
    crossratio->add_option("--points", points_text,
                           "four points 'x1,y1;x2,y2;x3,y3;x4,y4' as element indices");

    CLI::App* run = app.add_subcommand("run", "run a batch of experiments from a config file");
    run->set_help_flag("--help", "print help");
    run->add_option("--config", config_path, "batch JSON config")->required();
    run->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty() && !run->parsed()) {
            // config file first, explicit flags win
            Experiment from_file;
            experiment_from_json(load_json_file(config_path), from_file);
            Experiment flags = exp;
            exp = from_file;
            CLI::App* active = construct->parsed() ? construct : verify;
            if (active->count("--p")) exp.p = flags.p;
            if (active->count("--e")) exp.e = flags.e;
            if (active->count("--h")) exp.h = flags.h;
            if (active->count("--s")) exp.s = flags.s;
            if (active->count("--seed")) exp.seed = flags.seed;
            if (active->count("--points")) exp.include_points = flags.include_points;
            if (construct->parsed() && construct->count("--format")) exp.format = flags.format;
            if (verify->parsed() && verify->count("--assert-non-redei"))
                exp.assert_non_redei = flags.assert_non_redei;
            if (verify->parsed() && verify->count("--assert-redei")) exp.assert_redei = flags.assert_redei;
        }
        if (!partition_text.empty()) exp.partition = parse_uint_list(partition_text, "--partition");
        if (!modulus_text.empty()) exp.modulus = parse_uint_list(modulus_text, "--modulus");
        if (!checks_text.empty()) {
            exp.checks.clear();
            std::stringstream ss(checks_text);
            std::string item;
            while (std::getline(ss, item, ',')) exp.checks.push_back(item);
        }

        if (construct->parsed()) return cmd_construct(exp, out_path);
        if (verify->parsed()) return cmd_verify_blocking(exp, out_path);
        if (count->parsed())
            return cmd_count(q, parse_uint_list(bounds_text, "--bounds"), enumerate, out_path);
        if (spectra->parsed()) return cmd_spectra(k, q, size_text, max_weight, out_path);
        if (crossratio->parsed()) return cmd_crossratio(exp, points_text, out_path);
        if (run->parsed()) return cmd_run(config_path, out_path);
        fail_config("BadFlag", "no subcommand given");
    } catch (const Error& err) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["error"]["code"] = err.code();
        j["error"]["message"] = err.what();
        std::cout << j.dump(2) << '\n';
        return err.kind() == ErrorKind::Config ? 2 : 1;
    } catch (const std::exception& ex) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["error"]["code"] = "Unexpected";
        j["error"]["message"] = ex.what();
        std::cout << j.dump(2) << '\n';
        return 2;
    }
}
