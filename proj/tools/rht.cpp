// rht: command-line front end.
//
// Exit codes: 0 resolved, 2 input error, 3 hypothesis failure,
// 4 symbolic sphere factor, 1 failing verify suite.

#include "rht/error.hpp"
#include "rht/immersion.hpp"
#include "rht/manifold_io.hpp"
#include "rht/report_io.hpp"
#include "rht/samples.hpp"
#include "rht/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace rht;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, HypothesisFailed = 3, Symbolic = 4 };

struct Common {
    int max_degree = 20;
    std::string format = "table";
    std::string out;
    bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--max-degree", c.max_degree, "Cohomology cutoff N")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw ParseError("cannot write '" + c.out + "'");
    f << text;
}

Json betti_json(const BettiTable& b)
{
    return Json{{"cutoff", b.cutoff}, {"dims", b.dims}};
}

std::string betti_table(const BettiTable& b)
{
    std::ostringstream out;
    out << "degree";
    for (int n = 0; n <= b.cutoff; ++n)
        out << std::setw(4) << n;
    out << "\nbetti ";
    for (int n = 0; n <= b.cutoff; ++n)
        out << std::setw(4) << b.dims[static_cast<std::size_t>(n)];
    out << "\n";
    return out.str();
}

std::string free_table(const FreeCdga& m)
{
    std::ostringstream out;
    out << "model " << m.label() << "\n";
    for (std::size_t i = 0; i < m.generators().size(); ++i) {
        const auto& g = m.generators()[i];
        out << "  " << std::left << std::setw(10) << g.name << std::right << " deg " << std::setw(3) << g.degree;
        if (!m.d(i).is_zero())
            out << "   d = " << to_string(m.d(i));
        out << "\n";
    }
    return out.str();
}

std::string relative_table(const RelativeModel& m)
{
    std::ostringstream out;
    out << "model " << m.label() << "\n  base " << m.base().label() << ", dimension " << m.base().dimension() << "\n";
    for (std::size_t i = 0; i < m.fiber()->size(); ++i) {
        const auto& g = (*m.fiber())[i];
        out << "  " << std::left << std::setw(10) << g.name << std::right << " deg " << std::setw(3) << g.degree;
        if (!m.d(i).is_zero())
            out << "   D = " << m.to_string(m.d(i));
        out << "\n";
    }
    return out.str();
}

ManifoldModel load(const std::string& file, const std::string& named)
{
    if (!named.empty())
        return named_manifold(named);
    if (file.empty())
        throw ValidationError("one of --manifold FILE or --named NAME is required");
    return load_manifold(file);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational homotopy of immersion spaces and framed bundles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rht 0.3.0");

    Common common;
    int m = 0, k = 0;
    std::string manifold_file, named, input, method = "sparse", suite = "all";
    bool unreduced = false;
    unsigned threads = 0, seed = 1;

    auto* stiefel = app.add_subcommand("stiefel", "Minimal model and Betti numbers of V_m(R^{m+k})");
    stiefel->add_option("--m", m, "Frame count m")->required();
    stiefel->add_option("--k", k, "Codimension k")->required();
    add_common(stiefel, common);

    auto add_manifold = [&](CLI::App* cmd) {
        cmd->add_option("--manifold", manifold_file, "Manifold file (JSON)");
        cmd->add_option("--named", named, "Built-in manifold: S<n>, CP<n>, products like S2xS3");
        cmd->add_option("--k", k, "Codimension k")->required();
        add_common(cmd, common);
    };
    auto* framed = app.add_subcommand("framed-model", "Framed bundle model over a manifold");
    add_manifold(framed);
    framed->add_flag("--unreduced", unreduced, "Also check the reduction from the unreduced model");
    auto* immersion = app.add_subcommand("immersion", "Components of Imm(M, R^{m+k})");
    add_manifold(immersion);
    auto* map_sphere = app.add_subcommand("map-sphere", "Null component of Map(M, S^k)");
    add_manifold(map_sphere);

    auto* cohom = app.add_subcommand("cohomology", "Betti numbers of a CDGA file");
    cohom->add_option("--input", input, "CDGA file (JSON)")->required();
    cohom->add_option("--method", method, "Rank computation")->check(CLI::IsMember({"sparse", "dense"}));
    cohom->add_option("--threads", threads, "Worker threads for per-degree ranks (0 = serial)");
    add_common(cohom, common);

    auto* verify = app.add_subcommand("verify", "Run built-in invariant suites");
    verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"core", "models", "immersion", "all"}));
    verify->add_option("--seed", seed, "Seed for random sweeps");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rht: error: " << e.what() << "\n";
        return InputError;
    }

    try {
        const int N = common.max_degree;
        if (*stiefel) {
            FreeCdga model = stiefel_model(m, k);
            BettiTable b = cohomology(model, N);
            if (common.json())
                emit(common, Json{{"model", to_json(model)}, {"betti", betti_json(b)}}.dump(2) + "\n");
            else
                emit(common, free_table(model) + betti_table(b));
            return Ok;
        }
        if (*framed) {
            ManifoldModel M = load(manifold_file, named);
            RelativeModel model = framed_bundle_model(M, k);
            BettiTable b = cohomology(model, N);
            TrivialityVerdict v = is_rationally_trivial(M, k, N);
            std::optional<QuasiIsoReport> qi;
            if (unreduced)
                qi = is_quasi_iso(unreduced_framed_model(M, k).reduction, N);
            const bool trivial = v.kind == TrivialityVerdict::Kind::Trivial;
            if (common.json()) {
                Json doc{{"model", to_json(model)}, {"betti", betti_json(b)}};
                doc["rationally_trivial"] = trivial;
                Json obstructions = Json::array();
                for (int i : v.obstructions)
                    obstructions.push_back("p" + std::to_string(i));
                doc["obstructions"] = obstructions;
                if (qi)
                    doc["reduction_quasi_iso"] = qi->quasi_iso;
                emit(common, doc.dump(2) + "\n");
            } else {
                std::string text = relative_table(model) + betti_table(b);
                text += std::string("rationally trivial: ") + (trivial ? "yes" : "not established");
                for (int i : v.obstructions)
                    text += " [p" + std::to_string(i) + " != 0]";
                text += "\n";
                if (qi)
                    text += std::string("reduction quasi-isomorphism up to degree ") + std::to_string(N) + ": " +
                            (qi->quasi_iso ? "yes" : "no") + "\n";
                emit(common, text);
            }
            return Ok;
        }
        if (*immersion) {
            ManifoldModel M = load(manifold_file, named);
            ImmersionReport r = immersion_components(M, k, N);
            emit(common, common.json() ? serialize(r) : render_table(r));
            if (!r.hypotheses_passed)
                return HypothesisFailed;
            return r.symbolic() ? Symbolic : Ok;
        }
        if (*map_sphere) {
            ManifoldModel M = load(manifold_file, named);
            BettiTable bm = cohomology(M.model(), std::max(k, 1));
            if (k % 2 == 1) {
                auto factors = odd_sphere_mapping(bm, k);
                if (common.json()) {
                    Json fs = Json::array();
                    for (const auto& f : factors)
                        fs.push_back(Json{{"degree", f.degree}, {"multiplicity", f.coefficient_dim}});
                    emit(common, Json{{"factors", fs}, {"components_rank", em_component_rank(bm, k)}}.dump(2) + "\n");
                } else {
                    std::string text;
                    for (const auto& f : factors)
                        text += "factor K(Q" + (f.coefficient_dim > 1 ? "^" + std::to_string(f.coefficient_dim) : "") +
                                ", " + std::to_string(f.degree) + ")\n";
                    text += "components Q^" + std::to_string(em_component_rank(bm, k)) + "\n";
                    emit(common, text);
                }
                return Ok;
            }
            if (bm[static_cast<std::size_t>(k)] != 0 && k <= M.dimension()) {
                std::cerr << "rht: note: H^" << k << "(M) != 0; only the null component is modeled\n";
            }
            FreeCdga model = sphere_map_null_model(M.model(), k);
            BettiTable b = cohomology(model, N);
            if (common.json())
                emit(common, Json{{"model", to_json(model)}, {"betti", betti_json(b)}}.dump(2) + "\n");
            else
                emit(common, free_table(model) + betti_table(b));
            return Ok;
        }
        if (*cohom) {
            CdgaValue value = parse_cdga(read_file(input));
            CohomologyOptions opt;
            opt.method = method == "dense" ? RankMethod::Dense : RankMethod::Sparse;
            opt.threads = threads;
            BettiTable b = std::visit([&](const auto& c) { return cohomology(c, N, opt); }, value);
            emit(common, common.json() ? betti_json(b).dump(2) + "\n" : betti_table(b));
            return Ok;
        }
        if (*verify) {
            auto results = run_verify(suite, seed);
            std::ostringstream out;
            bool ok = true;
            for (const auto& r : results) {
                ok = ok && r.passed;
                out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(10) << r.suite << std::setw(40)
                    << r.name << std::right << std::fixed << std::setprecision(1) << std::setw(10) << r.millis
                    << " ms";
                if (!r.passed)
                    out << "  " << r.detail;
                out << "\n";
            }
            out << (ok ? "all checks passed" : "some checks failed") << " (timings are not canonical output)\n";
            emit(common, out.str());
            return ok ? Ok : VerifyFailed;
        }
    } catch (const Error& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "rht: error: " << msg << "\n";
        return InputError;
    }
    return Ok;
}
