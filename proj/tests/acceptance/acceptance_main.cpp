// Acceptance suite: twelve criteria, each backed by named checks from the
// verification catalog, one pass/fail line per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "greensum/checks.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> check_ids;
};

const std::vector<Criterion> kCriteria = {
    {1,
     "box sum rules: closed-form integrals to 1e-10, series route to 1e-3",
     {"box.sumrule.case1.km2.closed", "box.sumrule.case2.km2.closed",
      "box.sumrule.case3.km2.closed", "box.sumrule.case4.km2.closed",
      "box.sumrule.case1.km4.closed", "box.sumrule.case2.km4.closed",
      "box.sumrule.case3.km4.closed", "box.sumrule.case4.km4.closed",
      "box.sumrule.case1.km2.series", "box.sumrule.case2.km2.series",
      "box.sumrule.case3.km2.series", "box.sumrule.case4.km2.series",
      "box.sumrule.case1.km4.series", "box.sumrule.case2.km4.series",
      "box.sumrule.case3.km4.series", "box.sumrule.case4.km4.series"}},
    {2,
     "integral identities q1..q8 on a 5x5 interior grid",
     {"box.identity.q1", "box.identity.q2", "box.identity.q3", "box.identity.q4",
      "box.identity.q5", "box.identity.q6", "box.identity.q7", "box.identity.q8"}},
    {3,
     "downward recursion rebuilds g_{-4} with the predetermined boundary constants",
     {"spectral.recurdown.case1", "spectral.recurdown.case2"}},
    {4, "four-way second-order sum equals 1/90 within 1e-8", {"susy.box.fourway"}},
    {5,
     "box partner states: orthonormal Gram matrix and endpoint values",
     {"susy.box.gram", "susy.box.endpoints"}},
    {6,
     "oscillator: SS1/SS2 = pi^2/32, shifted spectrum 2n-1, logarithmic divergence",
     {"susy.oscillator.ss1", "susy.oscillator.ss2", "susy.oscillator.spectrum",
      "susy.oscillator.logdiv"}},
    {7,
     "alpha = 4 shooting sums match the Gamma formulas; assignment recorded",
     {"powerlaw.alpha4.eigensum.alternating", "powerlaw.alpha4.assignment"}},
    {8,
     "Bessel product integrals against Gamma forms and nested representations",
     {"powerlaw.bessel.identity.nu16.minus", "powerlaw.bessel.identity.nu16.plus",
      "powerlaw.bessel.identity.nu15.minus", "powerlaw.bessel.identity.nu15.plus",
      "powerlaw.bessel.nested.nu16.minus", "powerlaw.bessel.nested.nu16.plus",
      "powerlaw.bessel.nested.nu15.minus", "powerlaw.bessel.nested.nu15.plus"}},
    {9,
     "partner spectrum is {0} plus the base spectrum with the right node count",
     {"powerlaw.partner.augmentation"}},
    {10,
     "soliton sum rules and the Lax recursion residual",
     {"reflectionless.lax.sumrule", "reflectionless.lax.recursion",
      "reflectionless.soliton.integral"}},
    {11,
     "WKB eigenvalues: monotone error, under 0.5% at n = 20",
     {"powerlaw.wkb.n20", "powerlaw.wkb.monotone"}},
    {12,
     "property suites: jumps, Wronskians, symmetry, grid convergence",
     {"box.jump.case1", "box.jump.case2", "box.jump.case3", "susy.greens.jump",
      "powerlaw.greens.jump", "susy.wronskian.constancy", "specfun.bessel.wronskian",
      "spectral.symmetry", "eigensolve.grid.convergence"}},
};

}  // namespace

int main() {
    std::vector<std::string> wanted;
    for (const auto& c : kCriteria)
        for (const auto& id : c.check_ids) wanted.push_back(id);

    const auto results = greensum::checks::run_selected(wanted, 1);
    std::map<std::string, const greensum::checks::CheckResult*> by_id;
    for (const auto& r : results) by_id[r.id] = &r;

    int failed_criteria = 0;
    for (const auto& c : kCriteria) {
        bool pass = true;
        double worst = 0.0;
        std::string worst_id;
        for (const auto& id : c.check_ids) {
            const auto* r = by_id.at(id);
            if (!r->pass) pass = false;
            const double score = r->tolerance > 0.0 ? r->abs_err / r->tolerance : r->abs_err;
            if (score >= worst) {
                worst = score;
                worst_id = id;
            }
        }
        std::printf("%s criterion %02d: %s  [%zu checks, tightest margin %.2g of tolerance at %s]\n",
                    pass ? "PASS" : "FAIL", c.number, c.title.c_str(), c.check_ids.size(),
                    worst, worst_id.c_str());
        if (!pass) {
            for (const auto& id : c.check_ids) {
                const auto* r = by_id.at(id);
                if (!r->pass)
                    std::printf("       %-44s computed %.12g reference %.12g |err| %.3e tol %.1e %s\n",
                                r->id.c_str(), r->computed, r->reference, r->abs_err,
                                r->tolerance, r->note.c_str());
            }
            ++failed_criteria;
        }
    }

    double total_ms = 0.0;
    for (const auto& r : results) total_ms += r.wall_ms;
    std::printf("%d of %zu criteria failed (%zu checks, %.1f s)\n", failed_criteria,
                kCriteria.size(), results.size(), total_ms / 1000.0);
    return failed_criteria == 0 ? 0 : 1;
}
