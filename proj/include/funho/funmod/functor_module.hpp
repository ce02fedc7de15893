#pragma once

// Covariant functors from F or Gamma to finite-dimensional vector spaces,
// presented by a dimension per object and an induced matrix per map.

#include "funho/algkit/algebra.hpp"
#include "funho/exactlin/echelon.hpp"
#include "funho/fincat/fincat.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace funho {

enum class Site { F, Gamma };

inline std::string site_name(Site s) { return s == Site::F ? "F" : "Gamma"; }

template <class K>
class FunctorModule {
public:
    FunctorModule(const K& k, Site site) : k_(k), site_(site) {}
    virtual ~FunctorModule() = default;
    FunctorModule(const FunctorModule&) = delete;
    FunctorModule& operator=(const FunctorModule&) = delete;

    const K& field() const { return k_; }
    Site site() const { return site_; }

    /// Dimension at the object of size n.
    virtual Index dim(int n) const = 0;
    /// Stable identifier (used in cache keys and reports).
    virtual std::string descriptor() const = 0;
    /// Human-readable name of basis element i at object n.
    virtual std::string label(int n, Index i) const { return "b" + std::to_string(n) + "_" + std::to_string(i); }

    /// Induced map, memoized per map. The map must live in this module's site.
    std::shared_ptr<const SparseMatrix<K>> matrix(const SetMap& f) const {
        if (f.pointed() != (site_ == Site::Gamma))
            throw Error("module on " + site_name(site_) + " applied to a map in the other category");
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(f);
            if (it != memo_.end()) return it->second;
        }
        auto m = std::make_shared<const SparseMatrix<K>>(compute_matrix(f));
        if (m->rows() != dim(f.tgt().size) || m->cols() != dim(f.src().size))
            throw Error("internal: induced matrix has wrong shape for " + f.descriptor());
        std::lock_guard<std::mutex> lock(mutex_);
        return memo_.emplace(f, std::move(m)).first->second;
    }

    /// Labels of every basis element at object n.
    std::vector<std::string> basis_labels(int n) const {
        std::vector<std::string> out;
        for (Index i = 0; i < dim(n); ++i) out.push_back(label(n, i));
        return out;
    }

protected:
    virtual SparseMatrix<K> compute_matrix(const SetMap& f) const = 0;

private:
    K k_;
    Site site_;
    mutable std::mutex mutex_;
    mutable std::map<SetMap, std::shared_ptr<const SparseMatrix<K>>> memo_;
};

template <class K>
using ModulePtr = std::shared_ptr<const FunctorModule<K>>;

namespace detail {

inline Index checked_power(Index base, int exponent) {
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        r *= base;
        if (r > std::numeric_limits<Index>::max()) throw ResourceError("module dimension exceeds index range");
    }
    return static_cast<Index>(r);
}

}  // namespace detail

/// The Loday functor of a commutative algebra on F: n ↦ A^{⊗(n+1)}. A map f
/// sends a0⊗…⊗an to b0⊗…⊗bm with b_i the product of the a_j over f^{-1}(i)
/// (the unit for an empty fiber). Tensor words are numbered
/// lexicographically, leftmost factor most significant.
template <class K>
class LodayModule final : public FunctorModule<K> {
public:
    explicit LodayModule(Algebra<K> algebra) : FunctorModule<K>(algebra.field(), Site::F), algebra_(std::move(algebra)) {}

    const Algebra<K>& algebra() const { return algebra_; }
    Index dim(int n) const override { return detail::checked_power(static_cast<Index>(algebra_.dim()), n + 1); }
    std::string descriptor() const override { return "loday(" + algebra_.name() + ")"; }
    std::string label(int n, Index i) const override {
        auto w = word(n, i);
        std::string s;
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "|" : "") + std::to_string(w[t]);
        return s;
    }

    std::vector<int> word(int n, Index i) const {
        std::vector<int> w(static_cast<std::size_t>(n + 1));
        const Index d = static_cast<Index>(algebra_.dim());
        for (int t = n; t >= 0; --t) {
            w[static_cast<std::size_t>(t)] = static_cast<int>(i % d);
            i /= d;
        }
        return w;
    }

protected:
    SparseMatrix<K> compute_matrix(const SetMap& f) const override {
        const K& k = this->field();
        const int d = algebra_.dim();
        const int n = f.src().size, m = f.tgt().size;
        const auto fibers = f.fibers();
        const Index cols = dim(n);
        std::vector<SparseVector<K>> columns(cols);
        std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
        std::map<std::vector<int>, SparseVector<K>> products;
        auto product_of = [&](std::vector<int> factors) -> const SparseVector<K>& {
            std::sort(factors.begin(), factors.end());
            auto it = products.find(factors);
            if (it != products.end()) return it->second;
            Dense<K> p = algebra_.multiset_product(factors);
            SparseVector<K> s;
            for (int l = 0; l < d; ++l)
                if (!k.is_zero(p[static_cast<std::size_t>(l)]))
                    s.push_back(Entry<K>{static_cast<Index>(l), p[static_cast<std::size_t>(l)]});
            return products.emplace(std::move(factors), std::move(s)).first->second;
        };
        std::vector<const SparseVector<K>*> slots(static_cast<std::size_t>(m + 1));
        for (Index col = 0; col < cols; ++col) {
            bool zero = false;
            for (int i = 0; i <= m && !zero; ++i) {
                std::vector<int> factors;
                for (int j : fibers[static_cast<std::size_t>(i)]) factors.push_back(w[static_cast<std::size_t>(j)]);
                slots[static_cast<std::size_t>(i)] = &product_of(std::move(factors));
                zero = slots[static_cast<std::size_t>(i)]->empty();
            }
            if (!zero) {
                SparseVector<K> acc{Entry<K>{0, k.one()}};
                for (int i = 0; i <= m; ++i) {
                    const auto& s = *slots[static_cast<std::size_t>(i)];
                    SparseVector<K> next;
                    next.reserve(acc.size() * s.size());
                    for (const auto& a : acc)
                        for (const auto& b : s)
                            next.push_back(Entry<K>{a.index * static_cast<Index>(d) + b.index, k.mul(a.value, b.value)});
                    acc = std::move(next);
                }
                // lexicographic expansion keeps indices sorted and distinct
                columns[col] = std::move(acc);
            }
            for (int t = n; t >= 0; --t) {
                if (++w[static_cast<std::size_t>(t)] < d) break;
                w[static_cast<std::size_t>(t)] = 0;
            }
        }
        return SparseMatrix<K>::from_columns(dim(m), std::move(columns));
    }

private:
    Algebra<K> algebra_;
};

/// Representable module k[Hom(object n, -)] on F or Gamma; basis in
/// enumerate_maps order, maps act by postcomposition.
template <class K>
class RepresentableModule final : public FunctorModule<K> {
public:
    RepresentableModule(const K& k, Site site, int n) : FunctorModule<K>(k, site), n_(n) {
        if (n < 0) throw Error("representable: negative index");
    }

    int index() const { return n_; }
    FinObj object(int m) const { return {m, this->site() == Site::Gamma}; }
    Index dim(int m) const override {
        return static_cast<Index>(count_maps(object(n_), object(m), std::numeric_limits<Index>::max()));
    }
    std::string descriptor() const override {
        return std::string(this->site() == Site::F ? "F" : "Gamma") + "^" + std::to_string(n_);
    }
    std::string label(int m, Index i) const override { return map_unrank(object(n_), object(m), i).descriptor(); }

protected:
    SparseMatrix<K> compute_matrix(const SetMap& f) const override {
        const Index cols = dim(f.src().size);
        std::vector<SparseVector<K>> columns(cols);
        for (Index i = 0; i < cols; ++i) {
            SetMap g = map_unrank(object(n_), f.src(), i);
            columns[i] = unit_vector(this->field(), static_cast<Index>(map_rank(compose(f, g))));
        }
        return SparseMatrix<K>::from_columns(dim(f.tgt().size), std::move(columns));
    }

private:
    int n_;
};

/// Pullback of an F-module along the forgetful functor Gamma -> F.
template <class K>
class MuPullback final : public FunctorModule<K> {
public:
    explicit MuPullback(ModulePtr<K> base) : FunctorModule<K>(base->field(), Site::Gamma), base_(std::move(base)) {
        if (base_->site() != Site::F) throw Error("mu_pullback expects an F-module");
    }

    const FunctorModule<K>& base() const { return *base_; }
    Index dim(int n) const override { return base_->dim(n); }
    std::string descriptor() const override { return "mu*" + base_->descriptor(); }
    std::string label(int n, Index i) const override { return base_->label(n, i); }

protected:
    SparseMatrix<K> compute_matrix(const SetMap& f) const override { return *base_->matrix(f.unpointed()); }

private:
    ModulePtr<K> base_;
};

/// Reduced part G' of a Gamma-module: G'[n] = ker G([n] -> [0]), with basis
/// the reduced echelon basis of that kernel and induced maps restricted.
template <class K>
class ReducedPart final : public FunctorModule<K> {
public:
    explicit ReducedPart(ModulePtr<K> base) : FunctorModule<K>(base->field(), Site::Gamma), base_(std::move(base)) {
        if (base_->site() != Site::Gamma) throw Error("reduced_part expects a Gamma-module");
    }

    const FunctorModule<K>& base() const { return *base_; }
    Index dim(int n) const override { return kernel(n).rank(); }
    std::string descriptor() const override { return "reduced(" + base_->descriptor() + ")"; }

    /// Inclusion G'[n] -> G[n].
    SparseMatrix<K> inclusion(int n) const {
        return SparseMatrix<K>::from_columns(base_->dim(n), kernel(n).vectors());
    }

    const EchelonBasis<K>& kernel(int n) const {
        std::lock_guard<std::mutex> lock(kernel_mutex_);
        auto it = kernels_.find(n);
        if (it == kernels_.end()) {
            auto rki = rank_kernel_image(this->field(), *base_->matrix(collapse(n)));
            it = kernels_.emplace(n, EchelonBasis<K>::from_reduced(this->field(), base_->dim(n), std::move(rki.kernel),
                                                                    std::move(rki.kernel_pivots))).first;
        }
        return it->second;
    }

protected:
    SparseMatrix<K> compute_matrix(const SetMap& f) const override {
        const auto& src = kernel(f.src().size);
        const auto& tgt = kernel(f.tgt().size);
        auto g = base_->matrix(f);
        std::vector<SparseVector<K>> columns;
        for (const auto& v : src.vectors()) {
            auto img = apply(this->field(), *g, v);
            if (!tgt.contains(img)) throw Error("internal: reduced part not preserved by " + f.descriptor());
            columns.push_back(tgt.coordinates(img));
        }
        return SparseMatrix<K>::from_columns(tgt.rank(), std::move(columns));
    }

private:
    ModulePtr<K> base_;
    mutable std::mutex kernel_mutex_;
    mutable std::map<int, EchelonBasis<K>> kernels_;
};

template <class K>
ModulePtr<K> loday(Algebra<K> algebra) {
    return std::make_shared<LodayModule<K>>(std::move(algebra));
}

template <class K>
ModulePtr<K> representable(const K& k, Site site, int n) {
    return std::make_shared<RepresentableModule<K>>(k, site, n);
}

template <class K>
ModulePtr<K> mu_pullback(ModulePtr<K> f) {
    return std::make_shared<MuPullback<K>>(std::move(f));
}

template <class K>
ModulePtr<K> reduced_part(ModulePtr<K> g) {
    return std::make_shared<ReducedPart<K>>(std::move(g));
}

/// The isomorphism μ*F^n[m] -> Γ^{n+1}[m]: f ↦ g with g(0) = 0 and
/// g(j) = f(j-1). Returns the permutation matrix in the representable bases.
template <class K>
SparseMatrix<K> representable_pullback_iso(const K& k, int n, int m) {
    FinObj fsrc = FinObj::unpointed(n), ftgt = FinObj::unpointed(m);
    FinObj gsrc = FinObj::pointed_set(n + 1), gtgt = FinObj::pointed_set(m);
    auto maps = enumerate_maps(fsrc, ftgt);
    std::vector<SparseVector<K>> cols;
    cols.reserve(maps.size());
    for (const auto& f : maps) {
        std::vector<int> im{0};
        for (int v : f.images()) im.push_back(v);
        cols.push_back(unit_vector(k, static_cast<Index>(map_rank(SetMap(gsrc, gtgt, std::move(im))))));
    }
    return SparseMatrix<K>::from_columns(static_cast<Index>(count_maps(gsrc, gtgt)), std::move(cols));
}

}  // namespace funho
