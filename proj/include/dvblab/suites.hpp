#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "dvblab/geomexamples.hpp"
#include "dvblab/json_io.hpp"
#include "dvblab/report.hpp"

namespace dvblab {

struct SuiteConfig {
    int trials = 100;
    int max_dim = 3;
    std::uint64_t seed = 0;
    int samples_per_law = 50; // interchange sampling density per instance
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t check_seed(std::uint64_t master, const std::string& check) { return master ^ fnv1a(check); }

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline TrivialDVB trial_dvb(const SuiteConfig& cfg, const std::string& check, int trial, int min_dim = 0) {
    Rng rng = Rng::substream(check_seed(cfg.seed, check), static_cast<std::uint64_t>(trial));
    const int da = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    const int db = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    const int dc = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    return TrivialDVB(Space(da, "A"), Space(db, "B"), Space(dc, "C"));
}

inline DVBSeq trial_seq(const SuiteConfig& cfg, const std::string& check, int trial, int min_dim = 0) {
    Rng rng = Rng::substream(check_seed(cfg.seed, check) ^ 0x9e77ull, static_cast<std::uint64_t>(trial));
    const int da = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    const int db = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    const int dc = static_cast<int>(rng.int_in(min_dim, cfg.max_dim));
    return random_seq(da, db, dc, check_seed(cfg.seed, check) + static_cast<std::uint64_t>(trial));
}

inline DVBStarSeq trial_star_seq(const SuiteConfig& cfg, const std::string& check, int trial) {
    Rng rng = Rng::substream(check_seed(cfg.seed, check) ^ 0x517aull, static_cast<std::uint64_t>(trial));
    const int du = static_cast<int>(rng.int_in(1, cfg.max_dim));
    const int dv = static_cast<int>(rng.int_in(1, cfg.max_dim));
    const int dk = static_cast<int>(rng.int_in(1, cfg.max_dim));
    return random_star_seq(du, dv, dk, check_seed(cfg.seed, check) + static_cast<std::uint64_t>(trial));
}

inline std::string dims_note(const TrivialDVB& d) {
    return to_json(d).dump();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Interchange
// ---------------------------------------------------------------------------

inline void run_interchange_suite(const SuiteConfig& cfg, Report& out) {
    using detail::Timer;
    {
        Timer tm;
        CheckRecord rec{"interchange/trivial-models", "the eight interchange laws hold on trivial models"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t);
            const InterchangeReport rep =
                check_interchange(D, cfg.samples_per_law, detail::check_seed(cfg.seed, rec.name) + t);
            ++rec.trials;
            if (!rep.all_passed()) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"interchange/doubled-sequences", "the realized double of any exact sequence obeys the laws"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBSeq s = detail::trial_seq(cfg, rec.name, t);
            const DoubledDVB dd = doubling(s);
            const InterchangeReport rep = check_interchange_ops(
                doubled_ops(dd), cfg.samples_per_law, detail::check_seed(cfg.seed, rec.name) + t);
            ++rec.trials;
            if (!rep.all_passed()) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = to_json(s).dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"interchange/trivialization-transport",
                        "the splitting trivialization carries the doubled operations to the trivial ones"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBSeq s = detail::trial_seq(cfg, rec.name, t);
            const Trivialization tv = doubled_to_trivial(doubling(s));
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name), static_cast<std::uint64_t>(t));
            bool good = true;
            for (int k = 0; k < 8; ++k) {
                const Vec a = rng.vec(s.A.dim), b1 = rng.vec(s.B.dim), b2 = rng.vec(s.B.dim);
                const Vec c1 = rng.vec(s.C.dim), c2 = rng.vec(s.C.dim);
                const Rat r = rng.scalar();
                const DoubledElement x = tv.doubled.from_abc(a, b1, c1);
                const DoubledElement y = tv.doubled.from_abc(a, b2, c2);
                const DVBElement lhs = tv.to_trivial(tv.doubled.combine_a(r, x, y));
                const DVBElement rhs = combine_A(tv.triv, r, tv.to_trivial(x), tv.to_trivial(y));
                if (!(lhs == rhs)) good = false;
                const DVBElement back = tv.to_trivial(tv.from_trivial(rhs));
                if (!(back == rhs)) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = to_json(s).dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Equivalence
// ---------------------------------------------------------------------------

inline void run_equivalence_suite(const SuiteConfig& cfg, Report& out) {
    using detail::Timer;
    {
        Timer tm;
        CheckRecord rec{"equivalence/dimension-law", "the associated sequence has dimension dim A * dim B + dim C"};
        const int top = std::max(cfg.max_dim, 4);
        for (int da = 0; da <= top; ++da)
            for (int db = 0; db <= top; ++db)
                for (int dc = 0; dc <= top; ++dc) {
                    const TrivialDVB D(Space(da, "A"), Space(db, "B"), Space(dc, "C"));
                    const Combining com = combining(D); // exactness certified on construction
                    ++rec.trials;
                    if (com.seq.omega().dim != da * db + dc) {
                        ++rec.failures;
                        if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
                    }
                }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/unit-iso", "d -> ([d], a, b) is an isomorphism onto the realized double"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t);
            const NatT nt = nat_t(D);
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x11ull, static_cast<std::uint64_t>(t));
            bool good = nt.is_iso();
            for (int k = 0; k < 6 && good; ++k) {
                const DVBElement d = random_element(D, rng);
                const DoubledElement img = nt.apply(d);
                if (!nt.doubled.member(img)) good = false;
                if (!(nt.invert(img) == d)) good = false;
                const DVBElement d2{d.a, rng.vec(D.B.dim), rng.vec(D.C.dim)};
                const Rat r = rng.scalar();
                const DoubledElement lhs = nt.apply(combine_A(D, r, d, d2));
                const DoubledElement rhs = nt.doubled.combine_a(r, nt.apply(d), nt.apply(d2));
                if (!(lhs == rhs)) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/counit-iso", "[(omega, a, b)] -> omega is a sequence isomorphism"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBSeq s = detail::trial_seq(cfg, rec.name, t);
            const NatPi np = nat_pi(s);
            bool good = np.is_iso() && seq_morphism_check(np.pi).ok();
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x22ull, static_cast<std::uint64_t>(t));
            for (int k = 0; k < 6 && good; ++k) {
                const DoubledElement x = random_member(np.triv.doubled, rng);
                if (np.pi.varpi.apply(np.class_of_member(x)) != x.omega) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = to_json(s).dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/unit-naturality", "the unit square commutes for every morphism"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, 2 * t);
            const TrivialDVB Dp = detail::trial_dvb(cfg, rec.name, 2 * t + 1);
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x33ull, static_cast<std::uint64_t>(t));
            const DVBMorphism phi = random_morphism(D, Dp, rng);
            const NatT tsrc = nat_t(D), tdst = nat_t(Dp);
            const SeqMorphism cphi = combining_on_morphism(phi, tsrc.comb, tdst.comb);
            const DoubledMorphism dcphi = doubling_on_morphism(cphi);
            bool good = seq_morphism_check(cphi).ok();
            for (int k = 0; k < 6 && good; ++k) {
                const DVBElement d = random_element(D, rng);
                if (!(tdst.apply(morphism_apply(phi, d)) == dcphi.apply(tsrc.apply(d)))) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/counit-naturality", "the counit square commutes for every sequence morphism"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBSeq s = detail::trial_seq(cfg, rec.name, 2 * t);
            const DVBSeq sp = detail::trial_seq(cfg, rec.name, 2 * t + 1);
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x44ull, static_cast<std::uint64_t>(t));
            const SeqMorphism m = random_seq_morphism(s, sp, rng);
            const NatPi pi_s = nat_pi(s), pi_sp = nat_pi(sp);
            const DVBMorphism triv_m = doubling_on_morphism_trivialized(m, pi_s.triv, pi_sp.triv);
            const SeqMorphism cdm = combining_on_morphism(triv_m, pi_s.comb, pi_sp.comb);
            const bool good = seq_morphism_check(m).ok() && seq_morphism_check(cdm).ok() &&
                              compose(pi_sp.pi.varpi, cdm.varpi) == compose(m.varpi, pi_s.pi.varpi);
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = to_json(s).dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/functoriality", "both constructions preserve identities and composition"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, 3 * t);
            const TrivialDVB Dp = detail::trial_dvb(cfg, rec.name, 3 * t + 1);
            const TrivialDVB Dpp = detail::trial_dvb(cfg, rec.name, 3 * t + 2);
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x55ull, static_cast<std::uint64_t>(t));
            const DVBMorphism phi = random_morphism(D, Dp, rng);
            const DVBMorphism psi = random_morphism(Dp, Dpp, rng);
            const Combining c0 = combining(D), c1 = combining(Dp), c2 = combining(Dpp);
            bool good = true;
            // combining: composition and identity
            const SeqMorphism lhs = combining_on_morphism(morphism_compose(psi, phi), c0, c2);
            const SeqMorphism rhs = seq_morphism_compose(combining_on_morphism(psi, c1, c2),
                                                         combining_on_morphism(phi, c0, c1));
            if (!(lhs.varpi == rhs.varpi)) good = false;
            if (!(combining_on_morphism(identity_morphism(D), c0, c0).varpi == identity(c0.seq.omega()))) good = false;
            // doubling: composition on carrier elements
            const DoubledDVB dd = doubling(c0.seq);
            const DoubledMorphism dphi = doubling_on_morphism(combining_on_morphism(phi, c0, c1));
            const DoubledMorphism dpsi = doubling_on_morphism(combining_on_morphism(psi, c1, c2));
            const DoubledMorphism dcomp =
                doubling_on_morphism(combining_on_morphism(morphism_compose(psi, phi), c0, c2));
            for (int k = 0; k < 4 && good; ++k) {
                const DoubledElement x = random_member(dd, rng);
                if (!(dpsi.apply(dphi.apply(x)) == dcomp.apply(x))) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"equivalence/combining-oracle",
                        "the closed-form associated sequence matches the generators-and-relations realization"};
        const int top = std::min(cfg.max_dim, 3);
        for (int da = 0; da <= top; ++da)
            for (int db = 0; db <= top; ++db)
                for (int dc = 0; dc <= top; ++dc) {
                    const TrivialDVB D(Space(da, "A"), Space(db, "B"), Space(dc, "C"));
                    const Combining com = combining(D);
                    const CombiningOracle orc = combining_oracle(D, detail::check_seed(cfg.seed, rec.name));
                    const OracleComparison cmp =
                        compare_combining_routes(com, orc, 10, detail::check_seed(cfg.seed, rec.name) ^ 0x66ull);
                    ++rec.trials;
                    if (!cmp.ok()) {
                        ++rec.failures;
                        if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
                    }
                }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

inline void run_duality_suite(const SuiteConfig& cfg, Report& out) {
    using detail::Timer;
    {
        Timer tm;
        CheckRecord rec{"duality/double-linear-oracle",
                        "every double-linear function is a pair (theta, chi), certified by brute force"};
        const int top = std::min(cfg.max_dim, 3);
        for (int da = 0; da <= top; ++da)
            for (int db = 0; db <= top; ++db)
                for (int dc = 0; dc <= top; ++dc) {
                    const TrivialDVB D(Space(da, "A"), Space(db, "B"), Space(dc, "C"));
                    const MonomialBasis mb(da, db, dc);
                    const auto solved = double_linear_function_space(D, detail::check_seed(cfg.seed, rec.name));
                    const auto canon = canonical_double_linear_generators(mb);
                    ++rec.trials;
                    if (static_cast<int>(solved.size()) != da * db + dc || !same_span(solved, canon, mb.count())) {
                        ++rec.failures;
                        if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
                    }
                }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/standard-pairing", "the class/function pairing satisfies both compatibilities"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t);
            const Combining com = combining(D);
            const XSpace xd = xspace(D);
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name) ^ 0x77ull, static_cast<std::uint64_t>(t));
            bool good = true;
            for (int k = 0; k < 6 && good; ++k) {
                const DVBElement d = random_element(D, rng);
                const Vec x = rng.vec(xd.seq.pi().dim);
                const DoubleLinearFunctional sigma = xd.functional_of(x);
                // <[d], sigma> = sigma(d)
                if (pair_cd_xd(D, com.class_of(d), sigma) != xd.eval(x, d)) good = false;
                // <omega, i(theta)> = <p(omega), theta>
                const Vec omega = rng.vec(com.seq.omega().dim);
                const Vec theta = rng.vec(D.A.dim * D.B.dim);
                const DoubleLinearFunctional itheta = xd.functional_of(xd.seq.i().apply(theta));
                if (pair_cd_xd(D, omega, itheta) != dot(com.seq.p().apply(omega), theta)) good = false;
                // <e(c), sigma> = <c, j(sigma)>
                const Vec c = rng.vec(D.C.dim);
                if (pair_cd_xd(D, com.seq.e().apply(c), sigma) != dot(c, xd.seq.j().apply(x))) good = false;
            }
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/vertical-dual-model", "the four defining identities of the vertical dual hold"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t);
            const DualModelReport rep =
                verify_dual_over_a(D, 10, detail::check_seed(cfg.seed, rec.name) + static_cast<std::uint64_t>(t));
            bool good = rep.ok();
            // horizontal dual is the flip of the vertical dual of the flip
            if (!(dual_over_B(D).dual == flip(dual_over_A(flip(D)).dual))) good = false;
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/side-dual", "side duals satisfy both duality identities and are nondegenerate"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBStarSeq s = detail::trial_star_seq(cfg, rec.name, t);
            bool good = true;
            const UDual d1 = u_dual(s, Side::First);
            if (!check_u_duality(d1).ok()) good = false;
            if (d1.seq.pi().dim != s.U.dim * s.K.dim + s.V.dim) good = false;
            const UDual d2 = u_dual(s, Side::Second);
            if (!check_u_duality(d2).ok()) good = false;
            if (d2.seq.pi().dim != s.K.dim * s.V.dim + s.U.dim) good = false;
            ++rec.trials;
            if (!good) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"U", s.U.dim}, {"V", s.V.dim}, {"K", s.K.dim}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/side-dual-decomposition",
                        "the direct and the decomposition construction give the same subspace"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBStarSeq s = detail::trial_star_seq(cfg, rec.name, t);
            ++rec.trials;
            if (!u_dual_matches_abstract(u_dual(s, Side::First))) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"U", s.U.dim}, {"V", s.V.dim}, {"K", s.K.dim}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/line-dual", "the dual over a line is the ordinary dual"};
        for (int t = 0; t < cfg.trials; ++t) {
            Rng rng = Rng::substream(detail::check_seed(cfg.seed, rec.name), static_cast<std::uint64_t>(t));
            const int dv = static_cast<int>(rng.int_in(1, cfg.max_dim));
            const int dk = static_cast<int>(rng.int_in(1, cfg.max_dim));
            const DVBStarSeq s =
                random_star_seq(1, dv, dk, detail::check_seed(cfg.seed, rec.name) + static_cast<std::uint64_t>(t));
            ++rec.trials;
            if (!line_dual_compare(u_dual(s, Side::First)).ok()) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"U", 1}, {"V", dv}, {"K", dk}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/associated-sequences",
                        "the associated sequences of a double and of its vertical dual are in duality"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t, 1);
            ++rec.trials;
            if (!adual_compare(D).ok()) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"duality/core-duality", "the two side duals are mutually dual over the core"};
        for (int t = 0; t < cfg.trials; ++t) {
            const TrivialDVB D = detail::trial_dvb(cfg, rec.name, t, 1);
            ++rec.trials;
            if (!cstar_duality(D).ok()) {
                ++rec.failures;
                if (rec.first_counterexample.empty()) rec.first_counterexample = detail::dims_note(D);
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Triality
// ---------------------------------------------------------------------------

inline void run_triality_suite(const SuiteConfig& cfg, Report& out) {
    using detail::Timer;
    {
        Timer tm;
        CheckRecord rec{"triality/transposition-involution", "transposing twice returns the original sequence"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBStarSeq s = detail::trial_star_seq(cfg, rec.name, t);
            const DVBStarSeq tt = transpose_seq(transpose_seq(s));
            ++rec.trials;
            if (!(tt.i() == s.i() && tt.j() == s.j())) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"U", s.U.dim}, {"V", s.V.dim}, {"K", s.K.dim}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"triality/three-duals", "three successive side duals recover the transposition"};
        for (int t = 0; t < cfg.trials; ++t) {
            const DVBStarSeq s = detail::trial_star_seq(cfg, rec.name, t);
            const Triality tr = triality_pairing(s);
            const TrialityReport rep =
                check_triality(tr, 5, detail::check_seed(cfg.seed, rec.name) + static_cast<std::uint64_t>(t));
            ++rec.trials;
            if (!rep.ok()) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"U", s.U.dim}, {"V", s.V.dim}, {"K", s.K.dim}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
}

// ---------------------------------------------------------------------------
// Geometric examples
// ---------------------------------------------------------------------------

inline void run_examples_suite(const SuiteConfig& cfg, Report& out) {
    using detail::Timer;
    const int top = std::min(cfg.max_dim, 3);
    {
        Timer tm;
        CheckRecord rec{"examples/jet-fiber", "the jet fiber is the function space of the tangent double of the dual"};
        for (int dt = 0; dt <= top; ++dt)
            for (int de = 0; de <= top; ++de) {
                const FiberModelReport rep =
                    check_jet(jet_fiber(geom_context(dt, de)), 8, detail::check_seed(cfg.seed, rec.name));
                ++rec.trials;
                if (!rep.ok()) {
                    ++rec.failures;
                    if (rec.first_counterexample.empty())
                        rec.first_counterexample = nlohmann::json{{"T", dt}, {"E", de}}.dump();
                }
            }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"examples/atiyah-fiber",
                        "the Atiyah fiber is the function space of the cotangent double of the dual"};
        for (int dt = 0; dt <= top; ++dt)
            for (int de = 0; de <= top; ++de) {
                const FiberModelReport rep =
                    check_atiyah(atiyah_fiber(geom_context(dt, de)), 8, detail::check_seed(cfg.seed, rec.name));
                ++rec.trials;
                if (!rep.ok()) {
                    ++rec.failures;
                    if (rec.first_counterexample.empty())
                        rec.first_counterexample = nlohmann::json{{"T", dt}, {"E", de}}.dump();
                }
            }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
    {
        Timer tm;
        CheckRecord rec{"examples/closing-square",
                        "transposition, the two jet/Atiyah dualities and the jet/jet duality close up"};
        const std::pair<int, int> cases[] = {{1, 1}, {2, 2}, {2, 3}};
        for (const auto& [dt, de] : cases) {
            const SquareReport rep = square_report(geom_context(dt, de), 8, detail::check_seed(cfg.seed, rec.name));
            ++rec.trials;
            if (!rep.all_passed()) {
                ++rec.failures;
                if (rec.first_counterexample.empty())
                    rec.first_counterexample = nlohmann::json{{"T", dt}, {"E", de}}.dump();
            }
        }
        rec.elapsed_ms = tm.ms();
        out.checks.push_back(std::move(rec));
    }
}

inline void run_suites(const std::string& suite, const SuiteConfig& cfg, Report& out) {
    const bool all = suite == "all";
    if (all || suite == "interchange") run_interchange_suite(cfg, out);
    if (all || suite == "equivalence") run_equivalence_suite(cfg, out);
    if (all || suite == "duality") run_duality_suite(cfg, out);
    if (all || suite == "triality") run_triality_suite(cfg, out);
    if (all || suite == "examples") run_examples_suite(cfg, out);
    out.sort();
}

} // namespace dvblab
