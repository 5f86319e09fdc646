#include "../support.hpp"

#include "ccshell/cone.hpp"
#include "ccshell/regularity.hpp"
#include "ccshell/shelling.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace ccs;
using namespace ccs::test;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Verdict worked_examples()
{
    auto t = Clock::now();
    auto results = run_examples();
    std::size_t ok = 0;
    std::string bad;
    for (const auto& r : results) {
        ok += r.passed();
        if (!r.passed())
            bad += " " + r.name;
    }
    double s = seconds_since(t);
    bool pass = ok == results.size() && s < 5.0;
    return {pass, std::to_string(ok) + "/" + std::to_string(results.size()) + " fixtures, " + std::to_string(s) + " s" +
                      (bad.empty() ? "" : ", mismatches:" + bad)};
}

// Pure complexes of order >= 1 whose first top element has a nonzero
// boundary.
bool usable_pure(const ChainComplex& c, const DegreeOrdering& ordering)
{
    return c.order() >= 1 && is_pure(c) && !c.bd(ordering.permutation.front()).empty();
}

Verdict critical_basis()
{
    auto t = Clock::now();
    std::size_t found = 0, with_critical = 0;
    for (std::uint64_t seed = 0; found < 100 && seed < 20000; ++seed) {
        ChainComplex c = seeded(seed, true, 10);
        if (c.order() == 0)
            continue;
        DegreeOrdering ordering = conventional_ordering(c, c.order());
        if (!usable_pure(c, ordering))
            continue;
        TopClassification top = classify_top_degree(c, ordering);
        std::vector<Cell> critical;
        bool strict = false;
        for (const auto& k : top.classes) {
            strict = strict || k.tag == ElementTag::Precritical;
            if (k.tag == ElementTag::Critical)
                critical.push_back(k.element);
        }
        if (strict)
            continue;
        ++found;
        with_critical += !critical.empty();
        auto rho = critical_cycle_basis(c, ordering);
        if (rho.size() != critical.size())
            return {false, "seed " + std::to_string(seed) + ": wrong number of cycles"};
        for (std::size_t i = 0; i < rho.size(); ++i) {
            if (!is_cycle(c, rho[i]))
                return {false, "seed " + std::to_string(seed) + ": rho is not a cycle"};
            for (std::size_t j = 0; j < critical.size(); ++j)
                if (rho[i](critical[j].index) != (i == j ? 1 : 0))
                    return {false, "seed " + std::to_string(seed) + ": delta property fails"};
        }
        const auto kernel = kernel_basis(c.boundary(c.order()));
        if (kernel.size() != rho.size())
            return {false, "seed " + std::to_string(seed) + ": kernel rank differs"};
        for (const auto& x : kernel) {
            Vector sum(c.rank(c.order()));
            for (std::size_t i = 0; i < rho.size(); ++i) {
                Vector r = dense(c, rho[i]);
                for (std::size_t k = 0; k < sum.size(); ++k)
                    sum[k] += x[critical[i].index] * r[k];
            }
            if (sum != x)
                return {false, "seed " + std::to_string(seed) + ": cycles do not span the kernel"};
        }
    }
    double s = seconds_since(t);
    return {found == 100 && with_critical > 0 && s < 10.0,
            std::to_string(found) + " complexes, " + std::to_string(with_critical) + " with critical elements, " +
                std::to_string(s) + " s"};
}

Verdict precritical_count()
{
    std::size_t found = 0;
    for (std::uint64_t seed = 0; found < 100 && seed < 20000; ++seed) {
        ChainComplex c = seeded(seed, true, 10);
        if (c.order() == 0)
            continue;
        DegreeOrdering ordering = conventional_ordering(c, c.order());
        if (!usable_pure(c, ordering))
            continue;
        ++found;
        TopClassification top = classify_top_degree(c, ordering);
        FGModule hd = dense_homology_oracle(c).back();
        if (hd.free_rank != top.precritical || !hd.torsion.empty())
            return {false, "seed " + std::to_string(seed) + ": H_d rank " + std::to_string(hd.free_rank) +
                               " but n = " + std::to_string(top.precritical)};
    }
    return {found == 100, std::to_string(found) + " complexes"};
}

Verdict cone_acyclic()
{
    std::size_t tried = 0, cones = 0;
    for (std::uint64_t seed = 0; tried < 100 && seed < 20000; ++seed) {
        ChainComplex c = seed % 2 ? random_simplicial_cone(seed) : seeded(seed);
        if (c.size() > 12)
            continue;
        ++tried;
        auto a = search_cone(c);
        if (!a)
            continue;
        ++cones;
        if (auto v = verify_cone(c, *a))
            return {false, "seed " + std::to_string(seed) + ": invalid assignment (" + v->detail + ")"};
        if (!is_acyclic(dense_homology_oracle(c)))
            return {false, "seed " + std::to_string(seed) + ": cone is not acyclic"};
    }
    return {tried == 100 && cones > 0, std::to_string(tried) + " complexes, " + std::to_string(cones) + " cones"};
}

Verdict monotonization()
{
    std::size_t certs = 0, steps = 0;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        ChainComplex c = seeded(seed, false, 8);
        std::vector<ShellingCertificate> all;
        try {
            all = brute_shellings(c);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLarge)
                continue;
            throw;
        }
        for (const auto& cert : all) {
            const std::size_t m = failures(cert).size();
            if (m == 0)
                continue;
            ++certs;
            auto seq = monotonize_steps(c, cert);
            if (seq.size() != m + 1)
                return {false, "seed " + std::to_string(seed) + ": expected " + std::to_string(m) + " steps"};
            for (std::size_t k = 0; k < seq.size(); ++k) {
                if (failures(seq[k]).size() != m - k)
                    return {false, "seed " + std::to_string(seed) + ": failure count does not drop by one"};
                if (verify_shelling(c, seq[k]))
                    return {false, "seed " + std::to_string(seed) + ": intermediate certificate invalid"};
            }
            steps += m;
        }
    }
    return {certs > 0, std::to_string(certs) + " certificates with failures, " + std::to_string(steps) + " steps"};
}

Verdict skeleton_closure()
{
    std::vector<ChainComplex> corpus;
    for (const auto& f : embedded_fixture_files())
        corpus.push_back(to_complex(parse_document(f.text)));
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        corpus.push_back(seeded(seed));
    std::size_t shellable = 0, regular = 0, skeletons = 0;
    for (const auto& c : corpus) {
        if (auto cert = search_shelling(c)) {
            ++shellable;
            ShellingCertificate mono = monotonize(c, *cert);
            for (unsigned i = 0; i < c.order(); ++i) {
                ShellingCertificate sk = skeleton_shelling(c, mono, i);
                ++skeletons;
                if (auto v = verify_shelling(skeleton(c, i), sk))
                    return {false, "skeleton shelling invalid: " + v->detail};
            }
        }
        if (search_regular(c)) {
            ++regular;
            for (unsigned i = 0; i < c.order(); ++i) {
                ChainComplex k = skeleton(c, i);
                auto cert = search_regular(k);
                ++skeletons;
                if (!cert || verify_regular(k, *cert))
                    return {false, "skeleton of a regular complex is not regular"};
            }
        }
    }
    return {shellable > 0 && regular > 0, std::to_string(shellable) + " shellable, " + std::to_string(regular) +
                                              " regular, " + std::to_string(skeletons) + " skeletons re-certified"};
}

Verdict totally_regular_homology()
{
    using Source = GeneratorConfig::Source;
    auto t = Clock::now();
    std::size_t found = 0;
    for (std::uint64_t seed = 0; found < 50 && seed < 20000; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.source = seed % 2 ? Source::RandomSimplicial : Source::ShiftedComplex;
        ChainComplex c = generate(cfg);
        auto cert = search_regular(c);
        if (!cert || !is_totally_regular(c, *cert))
            continue;
        ++found;
        auto n = precritical_counts(c, *cert);
        auto h = dense_homology_oracle(c);
        if (h != homology(c))
            return {false, "seed " + std::to_string(seed) + ": homology paths disagree"};
        for (std::size_t v = 0; v < h.size(); ++v)
            if (h[v].free_rank != n[v] + (v == 0 ? 1 : 0) || !h[v].torsion.empty())
                return {false, "seed " + std::to_string(seed) + ": H_" + std::to_string(v) + " has rank " +
                                   std::to_string(h[v].free_rank) + ", count " + std::to_string(n[v])};
    }
    double s = seconds_since(t);
    return {found == 50 && s < 30.0, std::to_string(found) + " totally regular complexes, " + std::to_string(s) + " s"};
}

Verdict oracle_equivalence()
{
    std::size_t homology_checked = 0, brute_checked = 0, unshellable = 0;
    for (const auto& f : embedded_fixture_files()) {
        ChainComplex c = to_complex(parse_document(f.text));
        ++homology_checked;
        if (homology(c) != dense_homology_oracle(c))
            return {false, f.name + ": homology differs from the dense oracle"};
    }
    const char* rings[] = {"Z", "Q", "Fp:2", "Fp:3"};
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        ChainComplex base = seeded(seed, false, 7);
        ChainComplex c = to_complex(to_document(base), std::string(rings[seed % 4]));
        ++homology_checked;
        if (homology(c) != dense_homology_oracle(c))
            return {false, "seed " + std::to_string(seed) + ": homology differs from the dense oracle"};
    }
    for (std::uint64_t seed = 0; brute_checked < 200 && seed < 5000; ++seed) {
        ChainComplex c = seed % 2 ? random_facet_family(seed) : seeded(seed, false, 8);
        std::vector<ShellingCertificate> all;
        try {
            all = brute_shellings(c);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TooLarge)
                continue;
            throw;
        }
        ++brute_checked;
        unshellable += all.empty();
        auto found = search_shelling(c);
        if (found.has_value() == all.empty())
            return {false, "seed " + std::to_string(seed) + ": search and brute force disagree"};
        if (found && verify_shelling(c, *found))
            return {false, "seed " + std::to_string(seed) + ": search certificate invalid"};
        for (const auto& cert : all)
            if (verify_shelling(c, cert))
                return {false, "seed " + std::to_string(seed) + ": brute certificate rejected by the verifier"};
    }
    return {brute_checked == 200, std::to_string(homology_checked) + " homology comparisons, " +
                                      std::to_string(brute_checked) + " shelling comparisons, " +
                                      std::to_string(unshellable) + " not shellable"};
}

bool integral(const DenseMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1)
                return false;
    return true;
}

Verdict snf_contract()
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 8);
    const Ring z = Ring::integers();
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t r = dim(rng), k = dim(rng);
        SparseMatrix m = random_matrix(rng, z, r, k, -9, 9);
        SNFDecomposition s = smith_normal_form(m);
        if (multiply(z, multiply(z, s.U, m.to_dense()), s.V) != s.D)
            return {false, "trial " + std::to_string(trial) + ": U M V != D"};
        if (multiply(z, s.U, s.U_inv) != DenseMatrix::identity(r) ||
            multiply(z, s.V, s.V_inv) != DenseMatrix::identity(k))
            return {false, "trial " + std::to_string(trial) + ": transform not invertible"};
        if (!integral(s.U) || !integral(s.U_inv) || !integral(s.V) || !integral(s.V_inv))
            return {false, "trial " + std::to_string(trial) + ": transform not integral"};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j && s.D(i, j) != 0)
                    return {false, "trial " + std::to_string(trial) + ": D not diagonal"};
        const std::size_t n = std::min(r, k);
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar& a = s.D(i, i);
            if (a < 0 || (i >= s.rank) != (a == 0))
                return {false, "trial " + std::to_string(trial) + ": bad diagonal"};
            if (i + 1 < n && a != 0 && s.D(i + 1, i + 1) != 0 &&
                !mpz_divisible_p(s.D(i + 1, i + 1).get_num_mpz_t(), a.get_num_mpz_t()))
                return {false, "trial " + std::to_string(trial) + ": divisibility chain broken"};
        }
    }
    return {true, "1000 matrices"};
}

Verdict augmentation()
{
    std::size_t built = 0, absent = 0;
    for (std::uint64_t seed = 0; built < 100 && seed < 20000; ++seed) {
        ChainComplex c = seeded(seed);
        if (min_boundary_support(c) < 2)
            continue;
        ++built;
        auto eps = build_augmentation(c);
        if (!eps)
            return {false, "seed " + std::to_string(seed) + ": no augmentation built"};
        check_augmentation(c, *eps);
        for (const auto& x : eps->values)
            if (x == 0)
                return {false, "seed " + std::to_string(seed) + ": zero value"};
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        ChainComplex c = with_single_support_edge(seeded(seed));
        if (min_boundary_support(c) != 1)
            return {false, "single-support family not detected"};
        if (build_augmentation(c))
            return {false, "seed " + std::to_string(seed) + ": augmentation on the single-support family"};
        ++absent;
    }
    return {built == 100 && absent == 100,
            std::to_string(built) + " augmentations built, " + std::to_string(absent) + " counterexamples absent"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"worked example suite", worked_examples},
        {"critical cycle basis", critical_basis},
        {"precritical count gives top homology", precritical_count},
        {"cones are acyclic", cone_acyclic},
        {"monotonization removes one failure per step", monotonization},
        {"skeletons stay shellable and regular", skeleton_closure},
        {"totally regular homology", totally_regular_homology},
        {"oracle equivalence", oracle_equivalence},
        {"Smith normal form contract", snf_contract},
        {"augmentation", augmentation},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first << " (" << v.detail
                  << ")\n";
    }
    return failed == 0 ? 0 : 1;
}
