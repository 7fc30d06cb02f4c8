// dvblab: exact fiberwise models of double vector bundles and their duality
// theory, with randomized verification against independent oracles.
//
//   dvblab gen       write a random instance (sequence or trivial double)
//   dvblab verify    run the verification suites over random instances
//   dvblab example   build a jet/Atiyah/square example and report on it
//   dvblab roundtrip run the equivalence round trips on a stored instance
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input or I/O.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dvblab/dvblab.hpp"

namespace {

using namespace dvblab;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DVBLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("DVBLAB_SEED is not an integer: ") + env);
        }
    }
    return 0;
}

bool parse_dims(const std::string& text, int& da, int& db, int& dc) {
    std::istringstream in(text);
    char c1 = 0, c2 = 0;
    if (!(in >> da >> c1 >> db >> c2 >> dc) || c1 != ',' || c2 != ',') return false;
    std::string rest;
    if (in >> rest) return false;
    return da >= 0 && db >= 0 && dc >= 0;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file " + path);
    out << text << "\n";
}

int cmd_gen(const std::string& dims, std::uint64_t seed, const std::string& out_path, const std::string& kind) {
    int da = 0, db = 0, dc = 0;
    if (!parse_dims(dims, da, db, dc)) {
        std::cerr << "bad --dims, expected dA,dB,dC with nonnegative integers\n";
        return 2;
    }
    nlohmann::json j;
    if (kind == "dvb") {
        j = to_json(TrivialDVB(Space(da, "A"), Space(db, "B"), Space(dc, "C")));
    } else {
        j = to_json(random_seq(da, db, dc, seed));
    }
    j["seed"] = seed;
    write_output(out_path, j.dump(2));
    return 0;
}

void print_report(const Report& rep) {
    for (const auto& c : rep.checks) {
        std::cout << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.trials << " trials";
        if (!c.passed()) std::cout << ", " << c.failures << " failures";
        std::cout << ")\n";
        if (!c.passed() && !c.first_counterexample.empty())
            std::cout << "      counterexample: " << c.first_counterexample << "\n";
    }
}

int cmd_verify(const std::string& suite, int trials, int max_dim, std::uint64_t seed, const std::string& out_path,
               const std::string& instance_path) {
    Report rep;
    if (!instance_path.empty()) {
        // verify a stored instance instead of random ones
        std::ifstream in(instance_path);
        if (!in) {
            std::cerr << "cannot open " << instance_path << "\n";
            return 2;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const std::exception& ex) {
            std::cerr << "parse error: " << ex.what() << "\n";
            return 2;
        }
        try {
            CheckRecord rec{"instance/exactness", "the stored sequence is exact"};
            const RawSeq raw = raw_seq_from_json(j);
            const ExactnessReport ex = check_exact(raw.e, raw.p);
            rec.trials = 1;
            if (!ex.exact()) {
                rec.failures = 1;
                rec.first_counterexample = j.dump() + " : " + ex.describe();
            }
            rep.checks.push_back(rec);
            if (ex.exact()) {
                const DVBSeq s = seq_from_json(j);
                CheckRecord laws{"instance/interchange", "the realized double of the instance obeys the laws"};
                laws.trials = 1;
                if (!check_interchange_ops(doubled_ops(doubling(s)), 200, seed).all_passed()) {
                    laws.failures = 1;
                    laws.first_counterexample = j.dump();
                }
                rep.checks.push_back(laws);
            }
        } catch (const ParseError& ex) {
            std::cerr << "parse error: " << ex.what() << "\n";
            return 2;
        }
        rep.sort();
    } else {
        SuiteConfig cfg;
        cfg.trials = trials;
        cfg.max_dim = max_dim;
        cfg.seed = seed;
        run_suites(suite, cfg, rep);
    }
    print_report(rep);
    if (!out_path.empty()) write_output(out_path, rep.to_json().dump(2));
    std::cout << (rep.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return rep.passed() ? 0 : 1;
}

int cmd_example(const std::string& kind, int dim_t, int dim_e, const std::string& out_path, std::uint64_t seed) {
    const GeomContext g = geom_context(dim_t, dim_e);
    nlohmann::json j;
    bool ok = true;
    std::ostringstream text;
    if (kind == "jet") {
        const FiberModel f = jet_fiber(g);
        const FiberModelReport rep = check_jet(f, 20, seed);
        ok = rep.ok();
        text << "jet fiber over (dim T, dim E) = (" << dim_t << ", " << dim_e << ")\n"
             << "  sequence: 0 -> T*(x)E [" << f.seq.s.left.dim << "] -> J [" << f.seq.pi().dim << "] -> E ["
             << f.seq.s.right.dim << "] -> 0\n"
             << "  dim J = " << rep.dim << " (expected " << rep.expected_dim << ")\n"
             << "  direct-model isomorphism: " << (rep.iso_invertible && rep.kernel_square && rep.quotient_square ? "certified" : "FAILED")
             << "\n  evaluation and addition laws: " << (rep.evaluation && rep.structure_law ? "certified" : "FAILED") << "\n";
        j = {{"kind", "jet"}, {"dimT", dim_t}, {"dimE", dim_e}, {"dim", rep.dim}, {"expected", rep.expected_dim}, {"ok", ok}};
    } else if (kind == "atiyah") {
        const FiberModel f = atiyah_fiber(g);
        const FiberModelReport rep = check_atiyah(f, 20, seed);
        ok = rep.ok();
        text << "Atiyah fiber over (dim T, dim E) = (" << dim_t << ", " << dim_e << ")\n"
             << "  sequence: 0 -> E*(x)E [" << f.seq.s.left.dim << "] -> D [" << f.seq.pi().dim << "] -> T ["
             << f.seq.s.right.dim << "] -> 0\n"
             << "  dim D = " << rep.dim << " (expected " << rep.expected_dim << ")\n"
             << "  direct-model isomorphism: " << (rep.iso_invertible && rep.kernel_square && rep.quotient_square ? "certified" : "FAILED")
             << "\n  evaluation law and anchor: " << (rep.evaluation ? "certified" : "FAILED") << "\n";
        j = {{"kind", "atiyah"}, {"dimT", dim_t}, {"dimE", dim_e}, {"dim", rep.dim}, {"expected", rep.expected_dim}, {"ok", ok}};
    } else if (kind == "square") {
        const SquareReport rep = square_report(g, 15, seed);
        ok = rep.all_passed();
        text << "duality square over (dim T, dim E) = (" << dim_t << ", " << dim_e << ")\n";
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& e : rep.edges) {
            text << "  " << (e.passed ? "PASS" : "FAIL") << "  " << e.name;
            if (!e.note.empty()) text << "  [" << e.note << "]";
            text << "\n";
            edges.push_back({{"name", e.name}, {"passed", e.passed}, {"note", e.note}});
        }
        text << "  " << (rep.consistency ? "PASS" : "FAIL") << "  mutual consistency";
        if (!rep.consistency_note.empty()) text << "  [" << rep.consistency_note << "]";
        text << "\n";
        j = {{"kind", "square"}, {"dimT", dim_t}, {"dimE", dim_e}, {"edges", edges}, {"consistency", rep.consistency},
             {"ok", ok}};
        j["pairings"] = {{"jetJet", to_json(rep.jet_jet)},
                         {"jetAtiyah", to_json(rep.jet_atiyah)},
                         {"jetAtiyahDual", to_json(rep.jet_atiyah_dual)}};
    } else {
        std::cerr << "unknown example kind " << kind << "\n";
        return 2;
    }
    std::cout << text.str();
    if (!out_path.empty()) write_output(out_path, j.dump(2));
    return ok ? 0 : 1;
}

int cmd_roundtrip(const std::string& path, std::uint64_t seed) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const std::exception& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    }

    Report rep;
    try {
        const std::string kind = j.value("kind", "seq");
        if (kind == "dvb") {
            const TrivialDVB D = dvb_from_json(j);
            const auto named = named_elements_from_json(j, D);
            const NatT nt = nat_t(D);
            CheckRecord rec{"roundtrip/unit", "d -> ([d], a, b) is an isomorphism for the stored double"};
            rec.trials = 1;
            Rng rng(seed);
            bool good = nt.is_iso();
            for (int k = 0; k < 50 && good; ++k) {
                const DVBElement d = random_element(D, rng);
                const DoubledElement x = nt.apply(d);
                if (!nt.doubled.member(x) || !(nt.invert(x) == d)) good = false;
            }
            for (const auto& [name, d] : named) {
                const DoubledElement x = nt.apply(d);
                if (!nt.doubled.member(x) || !(nt.invert(x) == d)) {
                    good = false;
                    rec.first_counterexample = "element " + name;
                }
            }
            if (!good) {
                rec.failures = 1;
                if (rec.first_counterexample.empty()) rec.first_counterexample = j.dump();
            }
            rep.checks.push_back(rec);
        } else if (kind == "seq") {
            const DVBSeq s = seq_from_json(j);
            const NatPi np = nat_pi(s);
            CheckRecord rec{"roundtrip/counit", "[(omega, a, b)] -> omega is an isomorphism for the stored sequence"};
            rec.trials = 1;
            bool good = np.is_iso() && seq_morphism_check(np.pi).ok();
            Rng rng(seed);
            for (int k = 0; k < 50 && good; ++k) {
                const DoubledElement x = random_member(np.triv.doubled, rng);
                if (np.pi.varpi.apply(np.class_of_member(x)) != x.omega) good = false;
            }
            if (!good) {
                rec.failures = 1;
                rec.first_counterexample = j.dump();
            }
            rep.checks.push_back(rec);
        } else {
            std::cerr << "unknown instance kind " << kind << "\n";
            return 2;
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const SequenceNotExact& ex) {
        CheckRecord rec{"roundtrip/exactness", "the stored sequence is exact"};
        rec.trials = 1;
        rec.failures = 1;
        rec.first_counterexample = ex.what();
        rep.checks.push_back(rec);
    }
    rep.sort();
    print_report(rep);
    std::cout << (rep.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fiberwise double-vector-bundle models and their verification suites"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* gen = app.add_subcommand("gen", "write a random instance as JSON");
    std::string gen_dims = "2,2,1", gen_out, gen_kind = "seq";
    gen->add_option("--dims", gen_dims, "dimensions dA,dB,dC");
    gen->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");
    gen->add_option("--kind", gen_kind, "instance kind: seq or dvb")->check(CLI::IsMember({"seq", "dvb"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all", verify_out, verify_instance;
    int trials = 100, max_dim = 3;
    verify->add_option("--suite", suite, "all|interchange|equivalence|duality|triality|examples")
        ->check(CLI::IsMember({"all", "interchange", "equivalence", "duality", "triality", "examples"}));
    verify->add_option("--trials", trials, "random instances per check")->check(CLI::PositiveNumber);
    verify->add_option("--max-dim", max_dim, "maximum dimension per space")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
    verify->add_option("--out", verify_out, "write the JSON report here");
    verify->add_option("--instance", verify_instance, "verify this stored instance instead of random ones");

    auto* example = app.add_subcommand("example", "build a jet/atiyah/square example");
    std::string ex_kind;
    int dim_t = 1, dim_e = 1;
    std::string ex_out;
    example->add_option("kind", ex_kind, "jet|atiyah|square")->required()->check(CLI::IsMember({"jet", "atiyah", "square"}));
    example->add_option("--dim-t", dim_t, "dimension of the base tangent space")->check(CLI::NonNegativeNumber);
    example->add_option("--dim-e", dim_e, "dimension of the bundle fiber")->check(CLI::NonNegativeNumber);
    example->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
    example->add_option("--out", ex_out, "write the JSON report here");

    auto* roundtrip = app.add_subcommand("roundtrip", "equivalence round trips on a stored instance");
    std::string rt_path;
    roundtrip->add_option("file", rt_path, "instance JSON file")->required();
    roundtrip->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        if (gen->parsed()) return cmd_gen(gen_dims, seed, gen_out, gen_kind);
        if (verify->parsed()) return cmd_verify(suite, trials, max_dim, seed, verify_out, verify_instance);
        if (example->parsed()) return cmd_example(ex_kind, dim_t, dim_e, ex_out, seed);
        if (roundtrip->parsed()) return cmd_roundtrip(rt_path, seed);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
