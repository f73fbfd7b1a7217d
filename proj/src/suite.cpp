#include "leibniz/suite.hpp"

#include "leibniz/algebra_io.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/criteria.hpp"
#include "leibniz/random_algebra.hpp"
#include "leibniz/sequences.hpp"
#include "leibniz/zstar.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <omp.h>

namespace leibniz {

namespace {

std::vector<Scalar> random_center_vector(const Subspace& Z, std::mt19937_64& rng) {
    std::vector<Scalar> v(Z.ambient_dim(), Scalar(0));
    for (std::size_t i = 0; i < Z.dim(); ++i) {
        const long c = static_cast<long>(rng() % 3) - 1;
        if (c == 0) continue;
        const std::vector<Scalar> b = Z.basis_vector(i);
        for (std::size_t p = 0; p < v.size(); ++p)
            if (b[p] != 0) v[p] += Scalar(c) * b[p];
    }
    return v;
}

TwoCochain random_cocycle(const LeibnizAlgebra& L, const Subspace& z2, std::mt19937_64& rng) {
    const std::size_t n = L.dim();
    std::vector<Scalar> flat(n * n, Scalar(0));
    for (std::size_t g = 0; g < z2.dim(); ++g) {
        const long c = static_cast<long>(rng() % 5) - 2;
        if (c == 0) continue;
        const std::vector<Scalar> b = z2.basis_vector(g);
        for (std::size_t p = 0; p < n * n; ++p)
            if (b[p] != 0) flat[p] += Scalar(c) * b[p];
    }
    return TwoCochain::from_flat(std::move(flat), n, 1, L.field());
}

bool is_zero_vec(const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

// Per-algebra scratch collecting failures; flushed into the shared outcome
// once the algebra is done.
struct Recorder {
    const LeibnizAlgebra* L = nullptr;
    std::string digest;
    std::string reproducer_dir;
    std::size_t checks = 0;
    std::map<std::string, std::size_t> by_property;
    std::vector<SuiteFailure> failures;

    void count(const std::string& property) {
        ++checks;
        ++by_property[property];
    }

    void fail(const std::string& property, const std::string& detail) {
        SuiteFailure f;
        f.algebra = L->name();
        f.digest = digest;
        f.property = property;
        f.detail = detail;
        f.reproducer = write_reproducer(property, detail);
        failures.push_back(std::move(f));
    }

    void check(const std::string& property, bool ok, const std::string& detail) {
        count(property);
        if (!ok) fail(property, detail);
    }

    // Runs fn as one counted check; a thrown error is a failure, not an abort.
    template <typename Fn> void guarded(const std::string& property, Fn&& fn) {
        count(property);
        try {
            fn();
        } catch (const Error& e) {
            fail(property, e.what());
        }
    }

    std::string write_reproducer(const std::string& property, const std::string& detail) {
        if (reproducer_dir.empty()) return "";
        const std::string stem = digest.substr(digest.find(':') + 1);
        const std::string path = reproducer_dir + "/finding_" + stem + "_" + property + ".json";
        nlohmann::ordered_json j;
        j["property"] = property;
        j["detail"] = detail;
        j["algebra"] = algebra_to_json(*L);
        std::ofstream out(path);
        if (!out) return "";
        out << j.dump(2) << "\n";
        return path;
    }
};

void run_sequence_checks(Recorder& rec, const LeibnizAlgebra& L, const SuiteConfig& cfg,
                         const Subspace& z_star_space, std::uint64_t seed) {
    const std::vector<Subspace> ideals = central_ideal_samples(L, cfg.ideal_cap, seed);
    for (const Subspace& Z : ideals) {
        const std::string tag = "dim " + std::to_string(Z.dim()) + " ideal";
        CentralContext c = central_context(L, Z);
        for (const SequenceReport& r :
             {check_five_term(c.ft), check_extended(c), check_ganea(c), check_stallings(c)}) {
            rec.count("sequence:" + r.name);
            if (!r.pass) {
                std::string joints;
                for (const JointReport& jr : r.joints)
                    if (!jr.exact) joints += " " + jr.at;
                rec.fail("sequence:" + r.name, tag + ", inexact at" + joints);
            }
        }
        rec.guarded("criteria", [&] {
            const CriteriaReport cr = criteria_report(c, z_star_space);
            if (!cr.consistent)
                throw FindingError(tag + ": the four criteria disagree");
        });
    }
}

void run_cover_checks(Recorder& rec, const LeibnizAlgebra& L) {
    rec.guarded("cover", [&] {
        const CohomologyGroup h2F(L, TrivialModule{1});
        std::vector<TwoCochain> reps;
        for (std::size_t j = 0; j < h2F.dim(); ++j) {
            std::vector<Scalar> cls(h2F.dim(), Scalar(0));
            cls[j] = Scalar(1);
            reps.push_back(h2F.rep_of(cls));
        }
        const CentralExtension cov = cover_from_classes(L, h2F, reps);
        if (!tra_bijective_on_cover(h2F, cov))
            throw FindingError("cover transgression is not bijective");
        if (cocycle_of(cov) != cov.cocycle)
            throw FindingError("cover cocycle does not recompute from its section");
        if (quotient_algebra(cov.total, cov.kernel).algebra != L)
            throw FindingError("cover quotient by its kernel differs from the base");
    });
}

void run_zstar_checks(Recorder& rec, const LeibnizAlgebra& L, std::uint64_t seed) {
    rec.guarded("zstar", [&] {
        const Subspace zs = z_star(L); // cross-checks both routes internally
        if (!center(L).contains(zs))
            throw FindingError("z_star is not inside the center");
    });
    rec.guarded("stem_center", [&] {
        const StemCenterReport sr = stem_center_image(L, seed);
        if (!sr.pass)
            throw FindingError("a stem extension center image left its required range");
    });
}

void run_roundtrip_checks(Recorder& rec, const LeibnizAlgebra& L, std::uint64_t seed) {
    rec.guarded("file_roundtrip", [&] {
        if (algebra_from_json(algebra_to_json(L)) != L)
            throw FindingError("serialized algebra did not parse back equal");
    });
    rec.guarded("extension_roundtrip", [&] {
        std::mt19937_64 rng(seed);
        const Subspace z2 = cocycle_space(L, TrivialModule{1});
        const Subspace b2 = coboundary_space(L, TrivialModule{1});
        const TwoCochain f = random_cocycle(L, z2, rng);
        const CentralExtension e1 = from_cocycle(L, f);
        if (cocycle_of(e1) != f)
            throw FindingError("extension cocycle does not recompute from its section");
        std::vector<Scalar> shift(L.dim() * L.dim(), Scalar(0));
        if (b2.dim() > 0) shift = b2.basis_vector(rng() % b2.dim());
        const TwoCochain g =
            f + TwoCochain::from_flat(std::move(shift), L.dim(), 1, L.field());
        if (!equivalent(e1, from_cocycle(L, g)))
            throw FindingError("cohomologous cocycles gave inequivalent extensions");
        const CohomologyGroup h2F(L, TrivialModule{1});
        const bool trivial_class = is_zero_vec(h2F.class_of(f));
        if (equivalent(e1, split_extension(L, 1)) != trivial_class)
            throw FindingError("equivalence with the split extension disagrees with the class");
    });
}

void run_section_checks(Recorder& rec, const LeibnizAlgebra& L, std::uint64_t seed) {
    rec.guarded("section_independence", [&] {
        const Subspace Z = center(L);
        if (Z.dim() == 0) return;
        const FiveTermData d = five_term_data(L, Z, TrivialModule{1});
        std::mt19937_64 rng(seed);
        const std::size_t q = d.quo.algebra.dim();
        Matrix R(Z.dim(), q, L.field());
        for (std::size_t r = 0; r < R.rows(); ++r)
            for (std::size_t c = 0; c < R.cols(); ++c)
                R.at(r, c) = Scalar(static_cast<long>(rng() % 3) - 1);
        const Matrix section2 = d.quo.section.matrix() + Z.basis() * R;
        const TwoCochain defining2 = defining_cocycle(L, Z, d.quo, section2);
        if (transgression_matrix(d.h2_quotient, defining2, 1) != d.tra)
            throw FindingError("transgression changed under a different section");
    });
}

} // namespace

std::vector<Subspace> central_ideal_samples(const LeibnizAlgebra& L, std::size_t cap,
                                            std::uint64_t seed) {
    const Subspace Z = center(L);
    std::vector<Subspace> out;
    auto push = [&](const Subspace& s) {
        if (out.size() >= cap) return;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    push(Subspace::zero(L.dim(), L.field()));
    push(Z);
    for (std::size_t i = 0; i < Z.dim(); ++i)
        push(Subspace::from_vectors({Z.basis_vector(i)}, L.dim(), L.field()));
    std::mt19937_64 rng(seed);
    for (std::size_t tries = 0; tries < 4 * cap && out.size() < cap; ++tries) {
        const std::size_t vecs = 1 + rng() % 2;
        std::vector<std::vector<Scalar>> gen;
        for (std::size_t v = 0; v < vecs; ++v) {
            std::vector<Scalar> w = random_center_vector(Z, rng);
            if (!is_zero_vec(w)) gen.push_back(std::move(w));
        }
        if (!gen.empty()) push(Subspace::from_vectors(gen, L.dim(), L.field()));
    }
    return out;
}

SuiteOutcome run_suite(const SuiteConfig& cfg) {
    std::vector<LeibnizAlgebra> corpus = catalog_instances(cfg.field);
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
        const std::size_t span = cfg.max_dim >= 2 ? cfg.max_dim - 1 : 1;
        const std::size_t dim = 2 + i % span;
        corpus.push_back(random_nilpotent(cfg.field, dim, cfg.base_seed + i));
    }

    SuiteOutcome outcome;
    outcome.algebras = corpus.size();
    std::vector<Recorder> recs(corpus.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(corpus.size()); ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx);
        const LeibnizAlgebra& L = corpus[i];
        Recorder& rec = recs[i];
        rec.L = &L;
        rec.digest = algebra_digest(L);
        rec.reproducer_dir = cfg.reproducer_dir;
        const std::uint64_t seed = cfg.base_seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));

        rec.check("identity", verify_leibniz(L), "structure constants violate the identity");
        run_sequence_checks(rec, L, cfg, z_star_annihilator(L), seed);
        run_cover_checks(rec, L);
        run_zstar_checks(rec, L, seed);
        run_roundtrip_checks(rec, L, seed);
        run_section_checks(rec, L, seed);
    }

    for (Recorder& rec : recs) {
        outcome.checks += rec.checks;
        for (const auto& [property, count] : rec.by_property)
            outcome.checks_by_property[property] += count;
        for (SuiteFailure& f : rec.failures) outcome.failures.push_back(std::move(f));
    }
    std::sort(outcome.failures.begin(), outcome.failures.end(),
              [](const SuiteFailure& a, const SuiteFailure& b) {
                  return std::tie(a.digest, a.property, a.detail) <
                         std::tie(b.digest, b.property, b.detail);
              });
    return outcome;
}

} // namespace leibniz
