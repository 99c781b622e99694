// Runs the acceptance criteria at their stated sizes and time limits.
// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dicube/category.hpp"
#include "dicube/double_order.hpp"
#include "dicube/homology.hpp"
#include "dicube/models.hpp"
#include "dicube/order_category.hpp"
#include "dicube/verify.hpp"

using namespace dicube;

namespace {

struct Result {
    bool ok = true;
    std::string note;
};

Result suite_check(const std::string& id, int n_max, std::size_t samples = 1000, const std::string& target = "yA") {
    SuiteOptions opts;
    opts.n_max = n_max;
    opts.random_samples = samples;
    opts.target = target;
    auto r = run_check(id, opts);
    Result out;
    out.ok = r.status == Status::Pass;
    if (!out.ok) out.note = id + ": " + r.details.dump();
    return out;
}

Result both(Result a, const Result& b) {
    a.ok = a.ok && b.ok;
    if (!b.note.empty()) a.note += (a.note.empty() ? "" : "; ") + b.note;
    return a;
}

std::string show(const std::vector<HomologyGroup>& h) { return "(" + to_string(h) + ")"; }

Result cardinality() {
    Result r;
    long long fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        const std::size_t expect = static_cast<std::size_t>(fact << (n - 1));
        const std::size_t blocks = enumerate_orders(n, OrderClass::Regular).size();
        if (blocks != expect) {
            r.ok = false;
            r.note += "n=" + std::to_string(n) + " blocks " + std::to_string(blocks) + " ";
        }
        // Ordered set partitions with a chosen order inside each block.
        std::vector<long long> t(static_cast<std::size_t>(n) + 1, 0);
        t[0] = 1;
        for (int m = 1; m <= n; ++m) {
            long long binom = 1, fk = 1;
            for (int k = 1; k <= m; ++k) {
                binom = binom * (m - k + 1) / k;
                fk *= k;
                t[m] += binom * fk * t[m - k];
            }
        }
        if (static_cast<std::size_t>(t[n]) != expect) {
            r.ok = false;
            r.note += "n=" + std::to_string(n) + " partition count " + std::to_string(t[n]) + " ";
        }
        if (n <= 3) {
            const std::size_t filtered = regular_orders_by_filter(n).size();
            if (filtered != expect) {
                r.ok = false;
                r.note += "n=" + std::to_string(n) + " filter " + std::to_string(filtered) + " ";
            }
        }
    }
    return r;
}

Result cross_model_homology() {
    Result r;
    const std::vector<std::vector<HomologyGroup>> pinned{
        {},
        {{1, {}}},
        {{1, {}}, {1, {}}},
        {{1, {}}, {1, {}}},
        {{1, {}}, {1, {}}, {0, {Integer(2)}}},
    };
    for (int n = 2; n <= 4; ++n) {
        auto en = trimmed(model_homology("en", n));
        auto quo = trimmed(model_homology("quotient", n));
        bool ok = en == quo && en == pinned[n];
        std::string line = "n=" + std::to_string(n) + " En" + show(en) + " R/S" + show(quo);
        if (n <= 3) {
            auto rq = trimmed(model_homology("rplus-quotient", n));
            ok = ok && rq == en;
            line += " R+/S" + show(rq);
        }
        if (!ok) {
            r.ok = false;
            r.note += line + "; ";
        }
    }
    for (int n = 2; n <= 5; ++n) {
        const long long chi = euler_characteristic(build_nerve(build_En(n).category, enumeration_cap()).complex);
        if (chi != 0) {
            r.ok = false;
            r.note += "euler(E_" + std::to_string(n) + ")=" + std::to_string(chi) + "; ";
        }
        if (n <= 4) {
            const long long chi_q =
                euler_characteristic(build_nerve(category_model("quotient", n), enumeration_cap()).complex);
            if (chi_q != 0) {
                r.ok = false;
                r.note += "euler(R/S," + std::to_string(n) + ")=" + std::to_string(chi_q) + "; ";
            }
        }
    }
    return r;
}

Result ordered_model_homology() {
    Result r;
    const std::vector<HomologyGroup> two{{1, {}}, {1, {}}};
    const std::vector<HomologyGroup> three{{1, {}}, {3, {}}, {2, {}}};
    for (int n = 1; n <= 3; ++n) {
        auto a = trimmed(model_homology("r-poset", n));
        auto b = trimmed(model_homology("rplus-poset", n));
        bool ok = a == b;
        if (n == 2) ok = ok && a == two;
        if (n == 3) ok = ok && a == three;
        if (!ok) {
            r.ok = false;
            r.note += "n=" + std::to_string(n) + " R" + show(a) + " R+" + show(b) + "; ";
        }
    }
    return r;
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Result()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "cardinality of regular orders, n = 1..5", 10, cardinality},
        {2, "chains of Y^A versus (R, reverse order), n <= 4", 60, [] { return suite_check("chain-order-iso", 4); }},
        {3, "orbit complex of Y^A versus z-tilde, n <= 5", 30, [] { return suite_check("orbit-iso", 5); }},
        {4, "non-self-linkedness of Y^A, failure of truncated Z", 10,
         [] {
             Result yes = suite_check("non-self-linked", 4);
             SuiteOptions z;
             z.target = "z";
             z.n_max = 4;
             auto rep = run_check("non-self-linked", z);
             Result no;
             no.ok = rep.status == Status::Fail && rep.details.contains("counterexample") &&
                     rep.details["counterexample"]["cell"] == "z^1";
             if (!no.ok) no.note = "truncated Z: " + rep.details.dump();
             return both(yes, no);
         }},
        {5, "face swap on all p + q <= 7", 30, [] { return suite_check("face-swap", 7); }},
        {6, "free action and union with translates, n <= 4", 60,
         [] { return both(suite_check("free-action", 4), suite_check("union-sigma", 4)); }},
        {7, "functor triangles, n <= 3", 60, [] { return suite_check("F-G-triangles", 3); }},
        {8, "nerve of quotient versus orbit complex, n <= 3", 60, [] { return suite_check("nerve-quotient", 3); }},
        {9, "induced functor to E_n is an isomorphism, n <= 4", 120, [] { return suite_check("bar-F-iso", 4); }},
        {10, "cover completeness, properness, equivariance, 1000 samples, n <= 3", 120,
         [] { return both(suite_check("cover-complete", 3, 1000), suite_check("cover-proper", 3)); }},
        {11, "cross-model homology n <= 4, Euler characteristic n <= 5", 300, cross_model_homology},
        {12, "ordered-model homology, n <= 3", 120, ordered_model_homology},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.ok = false;
            r.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = r.ok && in_time;
        if (!pass) ++failures;
        std::printf("criterion %2d: %s  %-70s %8.3fs (limit %gs)%s\n", c.number, pass ? "PASS" : "FAIL",
                    c.title.c_str(), secs, c.limit_seconds, in_time ? "" : " over time");
        if (!r.note.empty()) std::printf("              %s\n", r.note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
