#include "funho/verify/verify.hpp"

#include "funho/exactlin/triplet_io.hpp"
#include "funho/theories/theories.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace funho {

using json = nlohmann::ordered_json;

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped-resource";
    }
    return "?";
}

Status parse_status(std::string_view s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped-resource" || s == "skipped") return Status::skipped;
    throw Error("unknown status '" + std::string(s) + "'");
}

Corpus Corpus::empty() {
    Corpus c;
    c.algebras.clear();
    c.fields.clear();
    c.representables.clear();
    return c;
}

std::size_t SuiteReport::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
}

Status SuiteReport::overall() const {
    if (count(Status::fail)) return Status::fail;
    if (count(Status::skipped)) return Status::skipped;
    return Status::pass;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities",  "representables", "prop53", "stable-sequence",
                                                "periodicity", "stab-b",         "ladder", "q0",
                                                "lemma31",     "degeneracy",     "all"};
    return names;
}

namespace {

// ---- outcomes and witnesses -------------------------------------------------

struct Outcome {
    Status status = Status::pass;
    std::string detail;
    json witness;
};

Outcome ok(std::string detail = {}) { return {Status::pass, std::move(detail), nullptr}; }
Outcome bad(std::string detail, json witness = nullptr) { return {Status::fail, std::move(detail), std::move(witness)}; }
Outcome refused(std::string detail) { return {Status::skipped, std::move(detail), nullptr}; }

template <class K>
json vector_witness(const K& k, const SparseVector<K>& v, Index dim) {
    json entries = json::array();
    for (const auto& e : v) entries.push_back(json::array({e.index, k.to_exact_string(e.value)}));
    return json{{"kind", "vector"}, {"field", descriptor(k).name()}, {"dim", dim}, {"entries", entries}};
}

template <class K>
json matrix_witness(const K& k, const SparseMatrix<K>& m) {
    return json{{"kind", "matrix"}, {"field", descriptor(k).name()}, {"triplets", to_triplet_string(k, m)}};
}

std::string dims_string(const std::vector<Index>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + ")";
}

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    void check(const std::string& name, const std::string& input, const std::function<Outcome()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult c;
        c.name = name;
        c.input = input;
        try {
            Outcome o = fn();
            c.status = o.status;
            c.detail = std::move(o.detail);
            c.witness = std::move(o.witness);
        } catch (const ResourceError& e) {
            c.status = Status::skipped;
            c.detail = e.what();
        } catch (const CompositionError& e) {
            c.status = Status::fail;
            c.detail = e.what();
            c.witness = json{{"kind", "column"}, {"index", e.column()}};
        } catch (const std::exception& e) {
            c.status = Status::fail;
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out_.push_back(std::move(c));
    }

private:
    std::vector<CheckResult>& out_;
};

std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

template <class K>
SparseVector<K> random_vector(const K& k, Index dim, std::mt19937_64& rng) {
    SparseVector<K> v;
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (Index i = 0; i < dim; ++i) {
        int c = coeff(rng);
        if (c == 0) continue;
        auto x = k.from_int(c);
        if (!k.is_zero(x)) v.push_back(Entry<K>{i, x});
    }
    return v;
}

// ---- per-input state -----------------------------------------------------------

template <class K>
struct Pair {
    std::string input;
    AlgebraSpec spec;
    Algebra<K> algebra;
    ModulePtr<K> loday_module;
    std::unique_ptr<FTheory<K>> theory;
    std::unique_ptr<GammaTheory<K>> reduced;
    KahlerResult<K> kahler;

    Pair(const K& k, const std::string& algebra_spec, std::uint64_t cap)
        : spec(AlgebraSpec::parse(algebra_spec)), algebra(build_algebra(spec, k)) {
        input = spec.to_string() + "/" + descriptor(k).name();
        loday_module = loday(unit_adapted(algebra));
        theory = std::make_unique<FTheory<K>>(loday_module, cap);
        reduced = std::make_unique<GammaTheory<K>>(reduced_part(mu_pullback(loday_module)), cap);
        kahler = kahler_oracle(algebra);
    }
};

struct Context {
    Corpus corpus;
    std::uint64_t seed = 0;
    RunOptions options;
};

/// Runs jobs on a small pool.
void run_jobs(int threads, const std::vector<std::function<void()>>& jobs) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    if (workers == 1) {
        for (const auto& j : jobs) j();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < jobs.size();) jobs[i]();
        });
    for (auto& t : pool) t.join();
}

// ---- small helpers ------------------------------------------------------------

template <class K>
Index rank_of(const K& k, const SparseMatrix<K>& m) {
    return rank(k, m);
}

/// Largest cube degree ≤ want that fits under the cap (-1 if none).
template <class K>
int feasible_cube_top(const GammaTheory<K>& g, int want) {
    int top = -1;
    for (int c = 0; c <= want; ++c)
        if (g.cube_feasible(c)) top = c;
    return top;
}

std::string deg(const std::string& name, int n) { return name + " [n=" + std::to_string(n) + "]"; }

/// Exactness of A --f--> B --g--> C at B: g∘f = 0 and rank f = dim B - rank g.
template <class K>
Outcome exact_at(const K& k, const SparseMatrix<K>& f, const SparseMatrix<K>& g, Index dim_b, const std::string& node) {
    auto gf = multiply(k, g, f);
    Index rf = rank_of(k, f), rg = rank_of(k, g);
    json w{{"node", node}, {"dim", dim_b}, {"rank_in", rf}, {"rank_out", rg}};
    if (!gf.is_zero()) return bad("composite through " + node + " is nonzero", matrix_witness(k, gf));
    if (rf + rg != dim_b)
        return bad("rank in " + std::to_string(rf) + " + rank out " + std::to_string(rg) + " ≠ dim " +
                       std::to_string(dim_b) + " at " + node,
                   w);
    return ok("dim " + std::to_string(dim_b) + " = " + std::to_string(rf) + " + " + std::to_string(rg));
}

// ---- suites ---------------------------------------------------------------------

template <class K>
struct Identities {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const int D = ctx.corpus.max_degree;
        const auto& t = *p.theory;
        const auto& g = t.gamma();
        rec.check("hochschild d^2 = 0", p.input, [&] {
            g.hochschild(D + 2);
            return ok("degrees 0.." + std::to_string(D + 2));
        });
        rec.check("total (b,B) d^2 = 0", p.input, [&] {
            t.total(D + 2);
            return ok("degrees 0.." + std::to_string(D + 2));
        });
        rec.check("B^2 = 0", p.input, [&] {
            for (int n = 0; n <= D; ++n) {
                auto bb = multiply(k, connes_B(t.module(), n + 1), connes_B(t.module(), n));
                if (!bb.is_zero()) return bad("B_{n+1}·B_n ≠ 0 at n=" + std::to_string(n), matrix_witness(k, bb));
            }
            return ok("n = 0.." + std::to_string(D));
        });
        rec.check("bB + Bb = 0", p.input, [&] {
            for (int n = 0; n <= D + 1; ++n) {
                auto lhs = multiply(k, hochschild_boundary(g.module(), n + 1), connes_B(t.module(), n));
                if (n > 0)
                    lhs = add(k, lhs, multiply(k, connes_B(t.module(), n - 1), hochschild_boundary(g.module(), n)));
                if (!lhs.is_zero()) return bad("bB + Bb ≠ 0 at n=" + std::to_string(n), matrix_witness(k, lhs));
            }
            return ok("n = 0.." + std::to_string(D + 1));
        });
        for (int n = 1; n <= D + 1; ++n) {
            rec.check(deg("cube delta(D_n) in D_(n-1)", n), p.input, [&, n] {
                const auto& cube = g.cube(n);
                const auto& d = cube.ambient_boundaries[static_cast<std::size_t>(n - 1)];
                const auto& below = cube.degeneracies[static_cast<std::size_t>(n - 1)];
                for (const auto& v : cube.degeneracies[static_cast<std::size_t>(n)].reduced_basis().vectors())
                    if (!below.contains(apply(k, d, v)))
                        return bad("δ of a degenerate cube is not degenerate", vector_witness(k, v, cube.ambient_ranks[n]));
                return ok("dim D_n = " + std::to_string(cube.degeneracies[static_cast<std::size_t>(n)].dim()));
            });
        }
        for (int n = 2; n <= D + 1; ++n) {
            rec.check(deg("cube delta^2 = 0 on the quotient", n), p.input, [&, n] {
                const auto& q = g.cube(n).quotient.complex;
                auto dd = multiply(k, q.d(n - 1), q.d(n));
                if (!dd.is_zero()) return bad("δ̄∘δ̄ ≠ 0", matrix_witness(k, dd));
                return ok("dim Q_n = " + std::to_string(q.rank(n)));
            });
        }
        for (int n = 1; n <= D; ++n) {
            rec.check(deg("stab chain map, eps = -1", n), p.input, [&, n] {
                const auto& c = g.hochschild(n + 1);
                const auto& q = g.cube(n).quotient.complex;
                auto lhs = multiply(k, g.stab(n - 1), c.d(n + 1));
                auto rhs = scaled(k, k.from_int(kStabSign), multiply(k, q.d(n), g.stab(n)));
                if (!(lhs == rhs))
                    return bad("stab_(n-1)·b_(n+1) ≠ -δ̄_n·stab_n", matrix_witness(k, subtract(k, lhs, rhs)));
                return ok();
            });
        }
        rec.check("normalized HH = HH", p.input, [&] {
            auto nc = normalized_hochschild_complex(g.module(), D + 1);
            std::vector<Index> a, b;
            for (int n = 0; n <= D; ++n) {
                a.push_back(nc.complex.homology(n)->dim());
                b.push_back(g.hh(n)->dim());
            }
            if (a != b) return bad("normalized " + dims_string(a) + " vs " + dims_string(b));
            return ok(dims_string(a));
        });
    }
};

template <class K>
void representables_for_field(Context& ctx, const K& k, Recorder& rec) {
    for (int n : ctx.corpus.representables) {
        const std::string input = "F^" + std::to_string(n) + "/" + descriptor(k).name();
        rec.check("HGammaC of representable = (n,0,0)", input, [&, n] {
            FTheory<K> t(representable(k, Site::F, n), ctx.corpus.cap);
            std::vector<Index> dims;
            for (int m = 0; m <= 2; ++m) dims.push_back(t.hgammac(m)->dim());
            std::vector<Index> want{static_cast<Index>(n), 0, 0};
            if (dims != want) return bad("got " + dims_string(dims), json{{"dims", dims}});
            return ok(dims_string(dims));
        });
    }
}

template <class K>
struct CyclicDegreeOne {
    static void run(Context&, Pair<K>& p, Recorder& rec) {
        const auto& t = *p.theory;
        rec.check("dim HC_0 = dim A", p.input, [&] {
            Index hc0 = t.hc(0)->dim();
            if (hc0 != static_cast<Index>(p.algebra.dim())) return bad("HC_0 has dim " + std::to_string(hc0));
            return ok(std::to_string(hc0));
        });
        rec.check("dim HGammaC_0 = dim HC_1", p.input, [&] {
            Index a = t.hgammac(0)->dim(), b = t.hc(1)->dim();
            if (a != b) return bad("HΓC_0 " + std::to_string(a) + " vs HC_1 " + std::to_string(b));
            return ok(std::to_string(a));
        });
        rec.check("dim HC_1 = dim Omega^1/dA (oracle)", p.input, [&] {
            Index a = t.hc(1)->dim(), b = p.kahler.quotient_dim;
            if (a != b) return bad("HC_1 " + std::to_string(a) + " vs oracle " + std::to_string(b));
            return ok(std::to_string(a));
        });
    }
};

template <class K>
struct StableSequence {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const auto& t = *p.theory;
        rec.check("five-term sequence exact", p.input, [&] {
            auto j = t.low_j(), dl = t.low_delta(), bb = t.low_Bbar(), pi = t.low_pi0();
            const Index h1 = t.hgamma(1)->dim(), c1 = t.hgammac(1)->dim(), x0 = t.module().dim(0),
                        h0 = t.hgamma(0)->dim(), c0 = t.hgammac(0)->dim();
            json w{{"dims", {h1, c1, x0, h0, c0}},
                   {"ranks", {rank_of(k, j), rank_of(k, dl), rank_of(k, bb), rank_of(k, pi)}}};
            if (rank_of(k, j) != h1) return bad("j is not injective", w);
            for (auto o : {exact_at(k, j, dl, c1, "HΓC_1"), exact_at(k, dl, bb, x0, "F(0)"),
                           exact_at(k, bb, pi, h0, "HΓ_0")})
                if (o.status != Status::pass) return o;
            if (rank_of(k, pi) != c0) return bad("π₀ is not surjective", w);
            return ok("0 → " + std::to_string(h1) + " → " + std::to_string(c1) + " → " + std::to_string(x0) + " → " +
                      std::to_string(h0) + " → " + std::to_string(c0) + " → 0");
        });
        for (int n = 2; n <= ctx.corpus.max_degree; ++n)
            rec.check(deg("HGammaC_n = HGamma_n", n), p.input, [&, n] {
                Index a = t.hgammac(n)->dim(), b = t.hgamma(n)->dim();
                if (a != b) return bad(std::to_string(a) + " vs " + std::to_string(b));
                return ok(std::to_string(a));
            });
        if (p.spec.kind == AlgebraSpec::Kind::prod)
            rec.check("etale collapse", p.input, [&] {
                std::vector<Index> g, c;
                for (int n = 0; n <= 2; ++n) {
                    g.push_back(t.hgamma(n)->dim());
                    c.push_back(t.hgammac(n)->dim());
                }
                std::vector<Index> wg{0, 0, 0}, wc{0, static_cast<Index>(p.algebra.dim()), 0};
                if (g != wg || c != wc) return bad("HΓ " + dims_string(g) + ", HΓC " + dims_string(c));
                return ok("HΓ " + dims_string(g) + ", HΓC " + dims_string(c));
            });
    }
};

template <class K>
struct Periodicity {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const auto& t = *p.theory;
        const int top = ctx.corpus.max_degree + 1;
        for (int n = 0; n <= top; ++n) {
            rec.check(deg("exact at HC_n: im I = ker S", n), p.input,
                      [&, n] { return exact_at(k, t.periodicity_I(n), t.periodicity_S(n), t.hc(n)->dim(), "HC_n"); });
            rec.check(deg("exact at HH_n: im B = ker I", n), p.input, [&, n] {
                SparseMatrix<K> b = n == 0 ? SparseMatrix<K>(t.hh(0)->dim(), 0) : t.periodicity_B(n - 1);
                return exact_at(k, b, t.periodicity_I(n), t.hh(n)->dim(), "HH_n");
            });
            if (n >= 2)
                rec.check(deg("exact at HC_(n-2): im S = ker B", n), p.input, [&, n] {
                    return exact_at(k, t.periodicity_S(n), t.periodicity_B(n - 2), t.hc(n - 2)->dim(), "HC_(n-2)");
                });
        }
    }
};

template <class K>
struct StabB {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const auto& t = *p.theory;
        const auto& g = t.gamma();
        for (int n = 1; n <= ctx.corpus.max_degree; ++n) {
            rec.check(deg("stab∘B = 0 on HC_n", n), p.input, [&, n]() -> Outcome {
                if (g.cube_feasible(n + 1)) {
                    auto m = t.stab_B(n);
                    if (!m.is_zero()) return bad("nonzero on homology", matrix_witness(k, m));
                    return ok("zero " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
                }
                if (!g.cube_feasible(n)) return refused("cube degree " + std::to_string(n) + " exceeds the cap");
                auto imgs = t.stab_B_chain_images(n);
                for (const auto& v : imgs)
                    if (!v.empty())
                        return refused("HΓ_" + std::to_string(n) +
                                       " exceeds the cap and chain-level images do not vanish in Q_n");
                return ok("chain-level images vanish in Q_" + std::to_string(n) + " (HΓ_" + std::to_string(n) +
                          " itself exceeds the cap)");
            });
            rec.check(deg("chain-level stab(B x) in D_n", n), p.input, [&, n]() -> Outcome {
                const auto& f = t.module();
                const auto& span = g.cube(n).degeneracies[static_cast<std::size_t>(n)];
                auto sig = f.matrix(staircase(n).unpointed());
                auto bn = connes_B(f, n);
                auto image = [&](const SparseVector<K>& x) { return apply(k, *sig, apply(k, bn, x)); };
                json witness = nullptr;
                for (Index i = 0; i < f.dim(n) && witness.is_null(); ++i)
                    if (!span.contains(image(unit_vector(k, i)))) {
                        witness = vector_witness(k, unit_vector(k, i), f.dim(n));
                        witness["label"] = f.label(n, i);
                        witness["basis"] = f.descriptor();
                    }
                std::mt19937_64 rng(derive_seed(ctx.seed, p.input + "/stab-b/" + std::to_string(n)));
                int inside = 0;
                for (int s = 0; s < ctx.corpus.samples; ++s) {
                    auto x = random_vector(k, f.dim(n), rng);
                    if (span.contains(image(x)))
                        ++inside;
                    else if (witness.is_null())
                        witness = vector_witness(k, x, f.dim(n));
                }
                std::string d = std::to_string(inside) + "/" + std::to_string(ctx.corpus.samples) + " random chains";
                if (!witness.is_null()) return bad(d + " land in D_n", witness);
                return ok(d);
            });
        }
        rec.check("stab∘B on HC_0 has rank dim dA", p.input, [&] {
            Index r = rank_of(k, t.stab_B(0));
            if (r != p.kahler.exact_dim)
                return bad("rank " + std::to_string(r) + ", oracle " + std::to_string(p.kahler.exact_dim));
            return ok("rank " + std::to_string(r));
        });
    }
};

template <class K>
struct Ladder {
    static void run(Context&, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const auto& t = *p.theory;
        rec.check("HC_1 -> HGammaC_0 is an isomorphism", p.input, [&] {
            auto m = t.hc1_to_hgammac0();
            if (m.rows() != m.cols() || rank_of(k, m) != m.rows()) return bad("not invertible", matrix_witness(k, m));
            return ok("dim " + std::to_string(m.rows()));
        });
        rec.check("ladder (a): pi0∘stab = ident∘I on HH_1", p.input, [&] {
            auto lhs = multiply(k, t.low_pi0(), t.stab_homology(0));
            auto rhs = multiply(k, t.hc1_to_hgammac0(), t.periodicity_I(1));
            if (!(lhs == rhs)) return bad("squares differ", matrix_witness(k, subtract(k, lhs, rhs)));
            return ok();
        });
        rec.check("ladder (b): stab∘B = Bbar on HC_0", p.input, [&] {
            auto lhs = multiply(k, t.stab_homology(0), t.periodicity_B(0));
            const auto& tot = t.total(1);
            std::vector<SparseVector<K>> reps;
            for (const auto& z : t.hc(0)->representatives()) reps.push_back(tot.component(0, 0, z));
            auto rhs = multiply(k, t.low_Bbar(), SparseMatrix<K>::from_columns(t.module().dim(0), reps));
            if (!(lhs == rhs)) return bad("squares differ", matrix_witness(k, subtract(k, lhs, rhs)));
            return ok();
        });
        rec.check("ladder (c): delta∘j∘stab = 0 on HH_2", p.input, [&] {
            auto m = multiply(k, t.low_delta(), multiply(k, t.low_j(), t.stab_homology(1)));
            if (!m.is_zero()) return bad("nonzero", matrix_witness(k, m));
            return ok();
        });
    }
};

template <class K>
struct Q0 {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const auto& g = *p.reduced;
        const int top = std::min(2, ctx.corpus.max_degree - 1);
        std::shared_ptr<Q0Result<K>> q0;
        rec.check("Q0 closed under delta", p.input, [&] {
            q0 = std::make_shared<Q0Result<K>>(q0_subcomplex(g, top + 1));
            return ok("ranks " + dims_string(q0->complex.ranks()));
        });
        for (int n = 0; n <= top; ++n)
            rec.check(deg("dim H_n(Q0) = dim HH_(n+1)", n), p.input, [&, n] {
                if (!q0) return bad("Q0 unavailable");
                Index a = q0->complex.homology(n)->dim(), b = p.theory->hh(n + 1)->dim();
                if (a != b) return bad(std::to_string(a) + " vs " + std::to_string(b));
                return ok(std::to_string(a));
            });
    }
};

template <class K>
void pullback_iso_for_field(Context& ctx, const K& k, Recorder& rec) {
    for (int n = 0; n <= 3; ++n) {
        const std::string input = "F^" + std::to_string(n) + "/" + descriptor(k).name();
        rec.check("mu*F^n ≅ Gamma^(n+1) objectwise (m ≤ 4)", input, [&, n] {
            auto f = mu_pullback(representable(k, Site::F, n));
            auto gm = representable(k, Site::Gamma, n + 1);
            for (int m = 0; m <= 4; ++m) {
                auto iso = representable_pullback_iso(k, n, m);
                if (iso.rows() != iso.cols() || iso.rows() != gm->dim(m) || iso.cols() != f->dim(m))
                    return bad("dimension mismatch at m=" + std::to_string(m));
                if (rank_of(k, iso) != iso.rows()) return bad("not a bijection at m=" + std::to_string(m));
            }
            return ok();
        });
        rec.check("mu*F^n ≅ Gamma^(n+1) natural (20 random maps)", input, [&, n] {
            auto f = mu_pullback(representable(k, Site::F, n));
            auto gm = representable(k, Site::Gamma, n + 1);
            std::mt19937_64 rng(derive_seed(ctx.seed, input + "/pullback-iso"));
            std::uniform_int_distribution<int> size(0, 4);
            for (int s = 0; s < 20; ++s) {
                int m = size(rng), m2 = size(rng);
                std::vector<int> im{0};
                std::uniform_int_distribution<int> val(0, m2);
                for (int i = 1; i <= m; ++i) im.push_back(val(rng));
                SetMap h(FinObj::pointed_set(m), FinObj::pointed_set(m2), im);
                auto lhs = multiply(k, representable_pullback_iso(k, n, m2), *f->matrix(h));
                auto rhs = multiply(k, *gm->matrix(h), representable_pullback_iso(k, n, m));
                if (!(lhs == rhs)) return bad("square fails for " + h.descriptor(), json{{"map", h.descriptor()}});
            }
            return ok();
        });
    }
}

template <class K>
struct Degeneracy {
    static void run(Context& ctx, Pair<K>& p, Recorder& rec) {
        const K& k = p.algebra.field();
        const auto& t = *p.theory;
        rec.check("dim HGamma_0 = dim Omega^1 (oracle)", p.input, [&] {
            Index a = t.hgamma(0)->dim(), b = p.kahler.omega_dim;
            if (a != b) return bad(std::to_string(a) + " vs " + std::to_string(b));
            return ok(std::to_string(a));
        });
        rec.check("dim HH_1 = dim Omega^1 (oracle)", p.input, [&] {
            Index a = t.hh(1)->dim(), b = p.kahler.omega_dim;
            if (a != b) return bad(std::to_string(a) + " vs " + std::to_string(b));
            return ok(std::to_string(a));
        });
        rec.check("stab: HH_1 -> HGamma_0 is an isomorphism", p.input, [&] {
            auto m = t.stab_homology(0);
            if (m.rows() != m.cols() || rank_of(k, m) != m.rows()) return bad("not invertible", matrix_witness(k, m));
            return ok("dim " + std::to_string(m.rows()));
        });
        const int top = std::min(2, ctx.corpus.max_degree - 1);
        for (int n = 0; n <= top; ++n)
            rec.check(deg("HGamma_n(G) = HGamma_n(G')", n), p.input, [&, n] {
                Index a = t.hgamma(n)->dim(), b = p.reduced->hgamma(n)->dim();
                if (a != b) return bad(std::to_string(a) + " vs " + std::to_string(b));
                return ok(std::to_string(a));
            });
    }
};

void degeneracy_global(Recorder& rec) {
    rec.check("|W(n)| = 1 + 2n + (n-1)", "-", [] {
        for (int n = 0; n <= 5; ++n) {
            std::size_t want = n == 0 ? 1 : static_cast<std::size_t>(3 * n);
            if (degenerate_family(n).size() != want) return bad("n=" + std::to_string(n));
        }
        return ok("n ≤ 5");
    });
    rec.check("Omega^1(trunc:2): dim 1 over Q, 2 over F_2", "trunc:2", [] {
        Index q = kahler_oracle(truncated_polynomial(Rationals{}, 2)).omega_dim;
        Index f2 = kahler_oracle(truncated_polynomial(PrimeField(2), 2)).omega_dim;
        if (q != 1 || f2 != 2) return bad("got " + std::to_string(q) + " and " + std::to_string(f2));
        return ok("1 vs 2");
    });
}

bool per_pair(const std::string& suite) {
    return suite != "representables" && suite != "lemma31";
}

template <class K>
void run_body(const std::string& suite, Context& ctx, Pair<K>& p, Recorder& rec) {
    if (suite == "identities") return Identities<K>::run(ctx, p, rec);
    if (suite == "prop53") return CyclicDegreeOne<K>::run(ctx, p, rec);
    if (suite == "stable-sequence") return StableSequence<K>::run(ctx, p, rec);
    if (suite == "periodicity") return Periodicity<K>::run(ctx, p, rec);
    if (suite == "stab-b") return StabB<K>::run(ctx, p, rec);
    if (suite == "ladder") return Ladder<K>::run(ctx, p, rec);
    if (suite == "q0") return Q0<K>::run(ctx, p, rec);
    if (suite == "degeneracy") return Degeneracy<K>::run(ctx, p, rec);
    throw UnknownSuite("unknown suite '" + suite + "'");
}

/// One pair runs every per-pair suite in turn and is dropped afterwards, so
/// memory is bounded by the largest pair rather than the corpus.
void run_pairs(Context& ctx, const std::vector<std::string>& suites,
               std::vector<std::vector<std::vector<CheckResult>>>& buckets) {
    std::vector<std::function<void()>> jobs;
    for (const auto& a : ctx.corpus.algebras)
        for (const auto& f : ctx.corpus.fields) {
            auto& out = buckets.emplace_back(suites.size());
            jobs.push_back([&ctx, &suites, &out, a, f] {
                const std::string label = a + "/" + f.name();
                visit_field(f, [&](const auto& k) {
                    using K = std::decay_t<decltype(k)>;
                    std::unique_ptr<Pair<K>> p;
                    std::string error;
                    try {
                        p = std::make_unique<Pair<K>>(k, a, ctx.corpus.cap);
                    } catch (const std::exception& e) {
                        error = e.what();
                    }
                    for (std::size_t s = 0; s < suites.size(); ++s) {
                        Recorder rec(out[s]);
                        if (!p) {
                            rec.check("build input", label, [&]() -> Outcome { return bad(error); });
                            continue;
                        }
                        try {
                            run_body(suites[s], ctx, *p, rec);
                        } catch (const std::exception& e) {
                            rec.check("build input", label, [&]() -> Outcome { return bad(e.what()); });
                        }
                    }
                });
            });
        }
    run_jobs(ctx.options.threads, jobs);
}

void run_global(Context& ctx, const std::string& name, std::vector<CheckResult>& out) {
    Recorder rec(out);
    if (name == "degeneracy") {
        if (!ctx.corpus.algebras.empty()) degeneracy_global(rec);
        return;
    }
    for (const auto& f : ctx.corpus.fields)
        visit_field(f, [&](const auto& k) {
            if (name == "representables")
                representables_for_field(ctx, k, rec);
            else
                pullback_iso_for_field(ctx, k, rec);
        });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const Corpus& corpus, std::uint64_t seed, const RunOptions& opts) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownSuite("unknown suite '" + name + "'");
    SuiteReport r;
    r.suite = name;
    r.seed = seed;
    r.corpus = corpus;
    Context ctx;
    ctx.corpus = corpus;
    ctx.seed = seed;
    ctx.options = opts;
    std::vector<std::string> order;
    for (const auto& s : names)
        if (s != "all" && (name == "all" || s == name)) order.push_back(s);
    std::vector<std::string> pair_suites;
    for (const auto& s : order)
        if (per_pair(s)) pair_suites.push_back(s);
    std::vector<std::vector<std::vector<CheckResult>>> buckets;
    buckets.reserve(corpus.algebras.size() * corpus.fields.size());
    if (!pair_suites.empty()) run_pairs(ctx, pair_suites, buckets);
    std::size_t slot = 0;
    for (const auto& s : order) {
        if (s == "degeneracy" || !per_pair(s)) run_global(ctx, s, r.checks);
        if (!per_pair(s)) continue;
        for (auto& b : buckets)
            for (auto& c : b[slot]) r.checks.push_back(std::move(c));
        ++slot;
    }
    return r;
}

ReportFormat parse_report_format(std::string_view s) {
    if (s == "json") return ReportFormat::json;
    if (s == "markdown" || s == "md") return ReportFormat::markdown;
    if (s == "csv") return ReportFormat::csv;
    throw Error("unknown format '" + std::string(s) + "' (expected json, markdown, csv)");
}

json report_to_json(const SuiteReport& r, bool timings) {
    json fields = json::array();
    for (const auto& f : r.corpus.fields) fields.push_back(f.name());
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j{{"name", c.name}, {"input", c.input}, {"status", status_name(c.status)}, {"detail", c.detail}};
        if (!c.witness.is_null()) j["witness"] = c.witness;
        if (timings) j["seconds"] = c.seconds;
        checks.push_back(std::move(j));
    }
    return json{{"suite", r.suite},
                {"seed", r.seed},
                {"corpus",
                 {{"algebras", r.corpus.algebras},
                  {"fields", fields},
                  {"max_degree", r.corpus.max_degree},
                  {"samples", r.corpus.samples},
                  {"cap", r.corpus.cap},
                  {"representables", r.corpus.representables}}},
                {"status", status_name(r.overall())},
                {"counts",
                 {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)}}},
                {"checks", checks}};
}

SuiteReport report_from_json(const json& j) {
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto& c = j.at("corpus");
    r.corpus.algebras = c.at("algebras").get<std::vector<std::string>>();
    r.corpus.fields.clear();
    for (const auto& f : c.at("fields")) r.corpus.fields.push_back(ScalarField::parse(f.get<std::string>()));
    r.corpus.max_degree = c.at("max_degree").get<int>();
    r.corpus.samples = c.at("samples").get<int>();
    r.corpus.cap = c.at("cap").get<std::uint64_t>();
    r.corpus.representables = c.at("representables").get<std::vector<int>>();
    for (const auto& x : j.at("checks")) {
        CheckResult cr;
        cr.name = x.at("name").get<std::string>();
        cr.input = x.at("input").get<std::string>();
        cr.status = parse_status(x.at("status").get<std::string>());
        cr.detail = x.at("detail").get<std::string>();
        if (x.contains("witness")) cr.witness = x.at("witness");
        if (x.contains("seconds")) cr.seconds = x.at("seconds").get<double>();
        r.checks.push_back(std::move(cr));
    }
    return r;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else if (c == '\n')
            out += ' ';
        else
            out += c;
    }
    return out;
}

}  // namespace

std::string render_report(const SuiteReport& r, ReportFormat format, bool timings) {
    std::ostringstream os;
    switch (format) {
        case ReportFormat::json:
            os << report_to_json(r, timings).dump(2) << "\n";
            break;
        case ReportFormat::markdown:
            os << "# Suite `" << r.suite << "` (seed " << r.seed << "): " << status_name(r.overall()) << "\n\n";
            os << "pass " << r.count(Status::pass) << ", fail " << r.count(Status::fail) << ", skipped "
               << r.count(Status::skipped) << "\n\n";
            os << "| check | input | status | detail |\n|---|---|---|---|\n";
            for (const auto& c : r.checks)
                os << "| " << md_cell(c.name) << " | " << md_cell(c.input) << " | " << status_name(c.status) << " | "
                   << md_cell(c.detail) << " |\n";
            break;
        case ReportFormat::csv:
            os << "name,input,status,detail" << (timings ? ",seconds" : "") << "\n";
            for (const auto& c : r.checks) {
                os << csv_field(c.name) << "," << csv_field(c.input) << "," << status_name(c.status) << ","
                   << csv_field(c.detail);
                if (timings) os << "," << c.seconds;
                os << "\n";
            }
            break;
    }
    return os.str();
}

}  // namespace funho
