#pragma once

// HH, HC, HΓ and HΓC and the maps between them, assembled from functor
// modules. Engines cache complexes and grow them on demand.

#include "funho/chaincore/complex.hpp"
#include "funho/funmod/functor_module.hpp"

namespace funho {

/// Global sign relating the stabilization map to the two boundaries:
/// stab_{n-1}·b_{n+1} = kStabSign · δ̄_n·stab_n.
inline constexpr int kStabSign = -1;

// ---- Gamma-module constructions ---------------------------------------------

/// b_n = Σ_{i=0}^n (-1)^i G(d_i): G[n] -> G[n-1].
template <class K>
SparseMatrix<K> hochschild_boundary(const FunctorModule<K>& g, int n) {
    const K& k = g.field();
    std::vector<std::shared_ptr<const SparseMatrix<K>>> keep;
    std::vector<std::pair<typename K::value_type, const SparseMatrix<K>*>> terms;
    for (int i = 0; i <= n; ++i) {
        keep.push_back(g.matrix(face(i, n)));
        terms.emplace_back(k.from_int(i % 2 ? -1 : 1), keep.back().get());
    }
    return linear_combination(k, g.dim(n - 1), g.dim(n), terms);
}

/// Span of the degeneracy images Σ_{i=1}^n im G(s_i) inside G[n].
template <class K>
SubspacePresentation<K> hochschild_degeneracies(const FunctorModule<K>& g, int n) {
    std::vector<SparseVector<K>> vs;
    for (int i = 1; i <= n; ++i) {
        auto m = g.matrix(degeneracy_injection(i, n));
        vs.insert(vs.end(), m->columns().begin(), m->columns().end());
    }
    return SubspacePresentation<K>(g.field(), g.dim(n), std::move(vs));
}

template <class K>
ChainComplex<K> hochschild_complex(const FunctorModule<K>& g, int top) {
    if (g.site() != Site::Gamma) throw Error("hochschild_complex expects a Gamma-module");
    std::vector<Index> ranks;
    std::vector<SparseMatrix<K>> ds;
    for (int n = 0; n <= top; ++n) ranks.push_back(g.dim(n));
    for (int n = 1; n <= top; ++n) ds.push_back(hochschild_boundary(g, n));
    return ChainComplex<K>(g.field(), std::move(ranks), std::move(ds));
}

template <class K>
QuotientComplex<K> normalized_hochschild_complex(const FunctorModule<K>& g, int top) {
    auto c = hochschild_complex(g, top);
    std::vector<SubspacePresentation<K>> spans;
    for (int n = 0; n <= top; ++n) spans.push_back(hochschild_degeneracies(g, n));
    return quotient_complex(c, spans);
}

/// δ_n = Σ_{i=1}^n (-1)^i [G(p_i) - G(r_i) - G(s_i)]: G[2^n] -> G[2^(n-1)].
template <class K>
SparseMatrix<K> cube_boundary(const FunctorModule<K>& g, int n) {
    const K& k = g.field();
    std::vector<std::shared_ptr<const SparseMatrix<K>>> keep;
    std::vector<std::pair<typename K::value_type, const SparseMatrix<K>*>> terms;
    for (int i = 1; i <= n; ++i) {
        auto sgn = k.from_int(i % 2 ? -1 : 1);
        for (auto kind : {CubeMapKind::p, CubeMapKind::r, CubeMapKind::s}) {
            keep.push_back(g.matrix(cube_map(kind, i, n)));
            terms.emplace_back(kind == CubeMapKind::p ? sgn : k.neg(sgn), keep.back().get());
        }
    }
    return linear_combination(k, g.dim(1 << (n - 1)), g.dim(1 << n), terms);
}

/// D_n = Σ_{W ∈ 𝒲(n)} im G(ι_W) inside G[2^n].
template <class K>
SubspacePresentation<K> degeneracy_span(const FunctorModule<K>& g, int n) {
    std::vector<SparseVector<K>> vs;
    for (const auto& w : degenerate_family(n)) {
        auto m = g.matrix(subset_inclusion(w, n));
        vs.insert(vs.end(), m->columns().begin(), m->columns().end());
    }
    return SubspacePresentation<K>(g.field(), g.dim(1 << n), std::move(vs));
}

template <class K>
struct CubeComplexBundle {
    std::vector<Index> ambient_ranks;
    std::vector<SparseMatrix<K>> ambient_boundaries;  // δ_1 .. δ_top
    std::vector<SubspacePresentation<K>> degeneracies;
    QuotientComplex<K> quotient;

    int top() const { return quotient.complex.top(); }
};

/// Largest ambient dimension G[2^top] needed by a cube complex through top.
template <class K>
std::uint64_t cube_ambient_dim(const FunctorModule<K>& g, int top) {
    if (top >= 5) {
        // G[32] and beyond never fit; avoid evaluating an overflowing dimension
        try {
            return g.dim(1 << top);
        } catch (const ResourceError&) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return g.dim(1 << top);
}

template <class K>
CubeComplexBundle<K> cube_complex(const FunctorModule<K>& g, int top, std::uint64_t cap = kDefaultAmbientCap) {
    if (g.site() != Site::Gamma) throw Error("cube_complex expects a Gamma-module");
    std::uint64_t need = 0;
    try {
        need = cube_ambient_dim(g, top);
    } catch (const ResourceError&) {
        need = std::numeric_limits<std::uint64_t>::max();
    }
    if (need > cap)
        throw ResourceError("cube complex through degree " + std::to_string(top) + " of " + g.descriptor() +
                            " needs dimension " +
                            (need == std::numeric_limits<std::uint64_t>::max() ? std::string("beyond 2^63")
                                                                                : std::to_string(need)) +
                            ", above the cap " + std::to_string(cap));
    CubeComplexBundle<K> out;
    for (int n = 0; n <= top; ++n) {
        out.ambient_ranks.push_back(g.dim(1 << n));
        out.degeneracies.push_back(degeneracy_span(g, n));
    }
    for (int n = 1; n <= top; ++n) out.ambient_boundaries.push_back(cube_boundary(g, n));
    out.quotient = quotient_complex(g.field(), out.ambient_ranks, out.ambient_boundaries, out.degeneracies);
    return out;
}

/// Sign normalizing stab_n so that a single global sign relates it to the
/// boundaries: (-1)^{n(n+1)/2}.
inline int stab_normalization(int n) { return (n * (n + 1) / 2) % 2 ? -1 : 1; }

/// stab_n = (-1)^{n(n+1)/2} proj ∘ G(σ_n): G[n+1] -> Q_n.
template <class K>
SparseMatrix<K> stab_component(const FunctorModule<K>& g, const CubeComplexBundle<K>& cube, int n) {
    const K& k = g.field();
    const auto& pres = cube.quotient.presentations.at(static_cast<std::size_t>(n));
    auto m = g.matrix(staircase(n));
    const auto z = k.from_int(stab_normalization(n));
    std::vector<SparseVector<K>> cols;
    for (const auto& c : m->columns()) cols.push_back(scaled(k, z, pres.project(c)));
    return SparseMatrix<K>::from_columns(pres.dim(), std::move(cols));
}

/// Hochschild and cube complexes of one Gamma-module, with the stabilization
/// map between them.
template <class K>
class GammaTheory {
public:
    GammaTheory(ModulePtr<K> g, std::uint64_t cap = kDefaultAmbientCap) : g_(std::move(g)), cap_(cap) {
        if (g_->site() != Site::Gamma) throw Error("GammaTheory expects a Gamma-module");
    }

    const FunctorModule<K>& module() const { return *g_; }
    ModulePtr<K> module_ptr() const { return g_; }
    const K& field() const { return g_->field(); }
    std::uint64_t cap() const { return cap_; }

    const ChainComplex<K>& hochschild(int top) const {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        if (hh_.empty() || hh_.back()->top() < top) {
            if (g_->dim(top) > cap_)
                throw ResourceError("Hochschild chains of degree " + std::to_string(top) + " exceed the cap");
            hh_.push_back(std::make_unique<ChainComplex<K>>(hochschild_complex(*g_, top)));
        }
        return *hh_.back();
    }

    const CubeComplexBundle<K>& cube(int top) const {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        if (cube_.empty() || cube_.back()->top() < top) cube_.push_back(std::make_unique<CubeComplexBundle<K>>(cube_complex(*g_, top, cap_)));
        return *cube_.back();
    }

    /// Whether the cube complex through `top` fits under the cap.
    bool cube_feasible(int top) const {
        try {
            return cube_ambient_dim(*g_, top) <= cap_;
        } catch (const ResourceError&) {
            return false;
        }
    }

    std::shared_ptr<const HomologyResult<K>> hh(int n) const { return hochschild(n + 1).homology(n); }
    std::shared_ptr<const HomologyResult<K>> hgamma(int n) const { return cube(n + 1).quotient.complex.homology(n); }

    /// stab_n: G[n+1] -> Q_n.
    SparseMatrix<K> stab(int n) const {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        auto it = stab_.find(n);
        if (it == stab_.end()) it = stab_.emplace(n, stab_component(*g_, cube(std::max(n, 1)), n)).first;
        return it->second;
    }

    /// The chain map C_{m} -> Q_{m-1}, m = 1..top.
    ChainMap<K> stab_chain_map(int top) const {
        ChainMap<K> phi;
        phi.shift = -1;
        phi.first = 1;
        for (int m = 1; m <= top; ++m) phi.components.push_back(stab(m - 1));
        return phi;
    }

    /// stab on homology: HH_{n+1} -> HΓ_n.
    SparseMatrix<K> stab_homology(int n) const {
        return homology_map(field(), stab(n), *hh(n + 1), *hgamma(n));
    }

private:
    ModulePtr<K> g_;
    std::uint64_t cap_;
    mutable std::recursive_mutex mutex_;
    mutable std::vector<std::unique_ptr<ChainComplex<K>>> hh_;  // earlier builds stay alive for outstanding references
    mutable std::vector<std::unique_ptr<CubeComplexBundle<K>>> cube_;  // earlier builds stay alive for outstanding references
    mutable std::map<int, SparseMatrix<K>> stab_;
};

// ---- F-module constructions -------------------------------------------------

/// Connes' operator B_n: F(n) -> F(n+1),
/// B_n = Σ_{i=0}^n (-1)^{ni} [F(s∘τ^i) + (-1)^n F(τ∘s∘τ^i)].
template <class K>
SparseMatrix<K> connes_B(const FunctorModule<K>& f, int n) {
    if (f.site() != Site::F) throw Error("connes_B expects an F-module");
    const K& k = f.field();
    std::vector<std::shared_ptr<const SparseMatrix<K>>> keep;
    std::vector<std::pair<typename K::value_type, const SparseMatrix<K>*>> terms;
    SetMap rot = SetMap::identity(FinObj::unpointed(n));
    const SetMap s = shift(n), tau = cyclic(n), tau_up = cyclic(n + 1);
    for (int i = 0; i <= n; ++i) {
        SetMap a = compose(s, rot);
        SetMap b = compose(tau_up, a);
        auto sgn = k.from_int((n * i) % 2 ? -1 : 1);
        keep.push_back(f.matrix(a));
        terms.emplace_back(sgn, keep.back().get());
        keep.push_back(f.matrix(b));
        terms.emplace_back(n % 2 ? k.neg(sgn) : sgn, keep.back().get());
        rot = compose(tau, rot);
    }
    return linear_combination(k, f.dim(n + 1), f.dim(n), terms);
}

/// The (b,B)-bicomplex: E(p,q) = F(q-p), vertical b, horizontal B.
template <class K>
Bicomplex<K> cyclic_bicomplex(ModulePtr<K> f) {
    auto g = mu_pullback(f);
    Bicomplex<K> bc;
    bc.dim = [f](int p, int q) -> Index { return q >= p ? f->dim(q - p) : 0; };
    bc.vertical = [f, g](int p, int q) {
        int m = q - p;
        if (m <= 0) return SparseMatrix<K>(0, m == 0 ? f->dim(0) : 0);
        return hochschild_boundary(*g, m);
    };
    bc.horizontal = [f](int p, int q) {
        int m = q - p;
        if (m < 0) return SparseMatrix<K>(p - 1 <= q ? f->dim(m + 1) : 0, 0);
        return connes_B(*f, m);
    };
    return bc;
}

/// Result of a computation that may be refused for resources.
template <class T>
struct Maybe {
    std::optional<T> value;
    std::string refusal;

    bool ok() const { return value.has_value(); }
};

/// The four theories of an F-module and the maps between them.
template <class K>
class FTheory {
public:
    explicit FTheory(ModulePtr<K> f, std::uint64_t cap = kDefaultAmbientCap)
        : f_(std::move(f)), gamma_(mu_pullback(f_), cap), cap_(cap) {
        if (f_->site() != Site::F) throw Error("FTheory expects an F-module");
    }

    const FunctorModule<K>& module() const { return *f_; }
    ModulePtr<K> module_ptr() const { return f_; }
    const GammaTheory<K>& gamma() const { return gamma_; }
    const K& field() const { return f_->field(); }
    std::uint64_t cap() const { return cap_; }

    const TotalComplex<K>& total(int top) const {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        if (tot_.empty() || tot_.back()->complex.top() < top) {
            if (f_->dim(top) > cap_) throw ResourceError("cyclic chains of degree " + std::to_string(top) + " exceed the cap");
            tot_.push_back(std::make_unique<TotalComplex<K>>(total_complex(field(), cyclic_bicomplex(f_), top)));
        }
        return *tot_.back();
    }

    std::shared_ptr<const HomologyResult<K>> hh(int n) const { return gamma_.hh(n); }
    std::shared_ptr<const HomologyResult<K>> hc(int n) const { return total(n + 1).complex.homology(n); }
    std::shared_ptr<const HomologyResult<K>> hgamma(int n) const { return gamma_.hgamma(n); }

    /// c: F(0) -> Q_0, a ↦ class of F(s)(a) = 1⊗a for the Loday functor.
    SparseMatrix<K> cone_map() const {
        const auto& pres = gamma_.cube(1).quotient.presentations.at(0);
        auto m = f_->matrix(shift(0));
        std::vector<SparseVector<K>> cols;
        for (const auto& c : m->columns()) cols.push_back(pres.project(c));
        return SparseMatrix<K>::from_columns(pres.dim(), std::move(cols));
    }

    const ChainComplex<K>& cone(int top) const {
        std::lock_guard<std::recursive_mutex> lock(mutex_);
        if (cone_.empty() || cone_.back()->top() < top) {
            const auto& q = gamma_.cube(std::max(top, 1)).quotient.complex;
            cone_.push_back(std::make_unique<ChainComplex<K>>(mapping_cone(cone_map(), q)));
        }
        return *cone_.back();
    }

    std::shared_ptr<const HomologyResult<K>> hgammac(int n) const { return cone(n + 1).homology(n); }

    // ---- periodicity maps -----------------------------------------------

    /// I: HH_n -> HC_n (column-0 inclusion).
    SparseMatrix<K> periodicity_I(int n) const {
        const auto& t = total(n + 1);
        auto src = hh(n);
        std::vector<SparseVector<K>> images;
        for (const auto& z : src->representatives()) images.push_back(t.embed(n, 0, z));
        return classify_images(*hc(n), images);
    }

    /// S: HC_n -> HC_{n-2} (drop column 0, shift the rest down).
    SparseMatrix<K> periodicity_S(int n) const {
        if (n < 2) return SparseMatrix<K>(0, hc(n)->dim());
        const auto& t = total(n + 1);
        std::vector<SparseVector<K>> images;
        for (const auto& z : hc(n)->representatives()) images.push_back(shift_down(t, n, z));
        return classify_images(*hc(n - 2), images);
    }

    /// B: HC_n -> HH_{n+1} (connes_B on the column-0 component).
    SparseMatrix<K> periodicity_B(int n) const {
        const auto& t = total(n + 1);
        auto bn = connes_B(*f_, n);
        std::vector<SparseVector<K>> images;
        for (const auto& z : hc(n)->representatives()) images.push_back(apply(field(), bn, t.component(n, 0, z)));
        return classify_images(*hh(n + 1), images);
    }

    /// Chain-level S on Tot_n.
    SparseVector<K> shift_down(const TotalComplex<K>& t, int n, const SparseVector<K>& z) const {
        SparseVector<K> out;
        for (const auto& b : t.blocks[static_cast<std::size_t>(n)]) {
            if (b.p == 0) continue;
            auto part = t.embed(n - 2, b.p - 1, t.component(n, b.p, z));
            out.insert(out.end(), part.begin(), part.end());
        }
        canonicalize(field(), out);
        return out;
    }

    // ---- stable sequence ------------------------------------------------

    /// j: HΓ_1 -> HΓC_1, z ↦ (0, z).
    SparseMatrix<K> low_j() const {
        const Index x0 = f_->dim(0);
        std::vector<SparseVector<K>> images;
        for (auto z : hgamma(1)->representatives()) {
            for (auto& e : z) e.index += x0;
            images.push_back(std::move(z));
        }
        return classify_images(*hgammac(1), images);
    }

    /// δ: HΓC_1 -> F(0), (x, z) ↦ x.
    SparseMatrix<K> low_delta() const {
        const Index x0 = f_->dim(0);
        std::vector<SparseVector<K>> cols;
        for (const auto& v : hgammac(1)->representatives()) {
            SparseVector<K> x;
            for (const auto& e : v)
                if (e.index < x0) x.push_back(e);
            cols.push_back(std::move(x));
        }
        return SparseMatrix<K>::from_columns(x0, std::move(cols));
    }

    /// B̄: F(0) -> HΓ_0, a ↦ [c(a)].
    SparseMatrix<K> low_Bbar() const {
        auto c = cone_map();
        return classify_images(*hgamma(0), c.columns());
    }

    /// π₀: HΓ_0 -> HΓC_0 (Cone_0 = Q_0).
    SparseMatrix<K> low_pi0() const { return classify_images(*hgammac(0), hgamma(0)->representatives()); }

    // ---- stabilization ----------------------------------------------------

    /// stab: HH_{n+1} -> HΓ_n.
    SparseMatrix<K> stab_homology(int n) const { return gamma_.stab_homology(n); }

    /// stab ∘ B: HC_n -> HΓ_n.
    SparseMatrix<K> stab_B(int n) const { return multiply(field(), stab_homology(n), periodicity_B(n)); }

    /// Images in Q_n of stab_n(B(z_0)) for the HC_n representatives; they all
    /// vanish iff stab∘B = 0 at chain level on these classes. Needs only the
    /// cube complex through degree n.
    std::vector<SparseVector<K>> stab_B_chain_images(int n) const {
        const auto& t = total(n + 1);
        auto bn = connes_B(*f_, n);
        const auto& pres = gamma_.cube(std::max(n, 1)).quotient.presentations.at(static_cast<std::size_t>(n));
        auto sig = f_->matrix(staircase(n).unpointed());
        std::vector<SparseVector<K>> out;
        for (const auto& z : hc(n)->representatives())
            out.push_back(pres.project(apply(field(), *sig, apply(field(), bn, t.component(n, 0, z)))));
        return out;
    }

    /// Identification HC_1 -> HΓC_0 induced by z ↦ proj(z_0).
    SparseMatrix<K> hc1_to_hgammac0() const {
        const auto& t = total(2);
        const auto& pres = gamma_.cube(1).quotient.presentations.at(0);
        std::vector<SparseVector<K>> images;
        for (const auto& z : hc(1)->representatives()) images.push_back(pres.project(t.component(1, 0, z)));
        return classify_images(*hgammac(0), images);
    }

    /// stab_C: HC_n -> HΓC_{n-1}, n > 2: z ↦ stab_{n-1}(z_0) in Cone_{n-1} = Q_{n-1}.
    SparseMatrix<K> stab_C(int n) const {
        if (n <= 2) throw Error("stab_C is only defined in degrees n > 2");
        const auto& t = total(n + 1);
        auto st = gamma_.stab(n - 1);
        std::vector<SparseVector<K>> images;
        for (const auto& z : hc(n)->representatives()) images.push_back(apply(field(), st, t.component(n, 0, z)));
        return classify_images(*hgammac(n - 1), images);
    }

private:
    ModulePtr<K> f_;
    GammaTheory<K> gamma_;
    std::uint64_t cap_;
    mutable std::recursive_mutex mutex_;
    mutable std::vector<std::unique_ptr<TotalComplex<K>>> tot_;  // earlier builds stay alive for outstanding references
    mutable std::vector<std::unique_ptr<ChainComplex<K>>> cone_;  // earlier builds stay alive for outstanding references
};

// ---- Q⁰ subcomplex ------------------------------------------------------------

/// Q⁰_n = im stab_n ⊆ Q_n for n <= top, as a complex in echelon coordinates.
template <class K>
struct Q0Result {
    ChainComplex<K> complex;
    std::vector<EchelonBasis<K>> images;
};

template <class K>
Q0Result<K> q0_subcomplex(const GammaTheory<K>& g, int top) {
    const K& k = g.field();
    const auto& q = g.cube(top).quotient.complex;
    Q0Result<K> out;
    std::vector<Index> ranks;
    for (int n = 0; n <= top; ++n) {
        out.images.push_back(image_basis(k, g.stab(n)));
        ranks.push_back(out.images.back().rank());
    }
    std::vector<SparseMatrix<K>> ds;
    for (int n = 1; n <= top; ++n) {
        auto d = q.d(n);
        const auto& below = out.images[static_cast<std::size_t>(n - 1)];
        std::vector<SparseVector<K>> cols;
        for (const auto& v : out.images[static_cast<std::size_t>(n)].vectors()) {
            auto img = apply(k, d, v);
            if (!below.contains(img))
                throw NotSubcomplexError<K>(n, v);
            cols.push_back(below.coordinates(img));
        }
        ds.push_back(SparseMatrix<K>::from_columns(below.rank(), std::move(cols)));
    }
    out.complex = ChainComplex<K>(k, std::move(ranks), std::move(ds));
    return out;
}

// ---- Kähler differentials oracle ---------------------------------------------

/// Ω¹ = coker(A⊗A⊗A -> A⊗A, a⊗b⊗c ↦ ab⊗c + ac⊗b - a⊗bc); a db ≙ a⊗b.
template <class K>
struct KahlerResult {
    Index omega_dim = 0;     // dim Ω¹
    Index exact_dim = 0;     // dim dA inside Ω¹
    Index quotient_dim = 0;  // dim Ω¹/dA
    std::optional<QuotientPresentation<K>> presentation;
};

template <class K>
std::vector<SparseVector<K>> leibniz_relations(const Algebra<K>& a) {
    const K& k = a.field();
    const int d = a.dim();
    auto tensor = [&](const Dense<K>& u, const Dense<K>& v, const typename K::value_type& c, SparseVector<K>& out) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto x = k.mul(c, k.mul(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]));
                if (!k.is_zero(x)) out.push_back(Entry<K>{static_cast<Index>(i * d + j), x});
            }
    };
    std::vector<SparseVector<K>> rels;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                SparseVector<K> r;
                tensor(a.product(x, y), a.basis_vector(z), k.one(), r);
                tensor(a.product(x, z), a.basis_vector(y), k.one(), r);
                tensor(a.basis_vector(x), a.product(y, z), k.neg(k.one()), r);
                canonicalize(k, r);
                rels.push_back(std::move(r));
            }
    return rels;
}

template <class K>
KahlerResult<K> kahler_oracle(const Algebra<K>& a) {
    const K& k = a.field();
    const Index dd = static_cast<Index>(a.dim() * a.dim());
    auto rels = leibniz_relations(a);
    SubspacePresentation<K> span(k, dd, rels);
    KahlerResult<K> out;
    out.omega_dim = dd - span.dim();
    auto with_exact = rels;
    for (int i = 0; i < a.dim(); ++i) {
        SparseVector<K> v;
        for (int j = 0; j < a.dim(); ++j)
            if (!k.is_zero(a.unit()[static_cast<std::size_t>(j)]))
                v.push_back(Entry<K>{static_cast<Index>(j * a.dim() + i), a.unit()[static_cast<std::size_t>(j)]});
        with_exact.push_back(std::move(v));
    }
    Index big = span_basis(k, dd, with_exact).rank();
    out.quotient_dim = dd - big;
    out.exact_dim = out.omega_dim - out.quotient_dim;
    out.presentation.emplace(quotient_presentation(k, dd, span));
    return out;
}

}  // namespace funho
