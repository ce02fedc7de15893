#pragma once

// Finite-dimensional commutative unital algebras given by structure constants.

#include "funho/exactlin/sparse.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace funho {

/// Parsed algebra descriptor:
///   trunc:N  k[x]/(x^N), basis 1, x, ..., x^(N-1)
///   group:M  k[Z/M],     basis g^0, ..., g^(M-1)
///   prod:R   k^R,        basis of orthogonal idempotents e_1..e_R
///   file:P   structure constants from JSON
///   tensor(S1,S2)  tensor product, basis ordered with S1 most significant
struct AlgebraSpec {
    enum class Kind { trunc, group, prod, file, tensor };

    Kind kind = Kind::trunc;
    int param = 0;
    std::string path;
    std::vector<AlgebraSpec> factors;

    static AlgebraSpec parse(std::string_view text);
    /// Canonical textual form; parse(to_string()) round-trips.
    std::string to_string() const;
};

template <class K>
class Algebra {
public:
    using value_type = typename K::value_type;
    using Vec = Dense<K>;

    /// Validates commutativity, associativity and unitality exactly; the
    /// error message names the first failing basis pair or triple.
    Algebra(const K& k, std::string name, int dim, Vec unit, std::vector<std::vector<Vec>> table);

    const K& field() const { return k_; }
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    /// e_i · e_j as a coefficient vector.
    const Vec& product(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    Vec basis_vector(int i) const {
        Vec v(static_cast<std::size_t>(dim_), k_.zero());
        v[static_cast<std::size_t>(i)] = k_.one();
        return v;
    }

    Vec multiply(const Vec& u, const Vec& v) const;

    /// Product of the listed basis elements; the empty product is the unit.
    Vec multiset_product(const std::vector<int>& indices) const;

    /// Multiplication A⊗A -> A as a dim × dim² matrix (tensor words i*dim+j).
    SparseMatrix<K> multiplication_matrix() const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.unit_ == b.unit_ && a.table_ == b.table_;
    }

private:
    K k_;
    std::string name_;
    int dim_;
    Vec unit_;
    std::vector<std::vector<Vec>> table_;
};

template <class K>
Algebra<K> truncated_polynomial(const K& k, int n);
template <class K>
Algebra<K> cyclic_group_algebra(const K& k, int m);
template <class K>
Algebra<K> split_product(const K& k, int r);
template <class K>
Algebra<K> tensor_product(const Algebra<K>& a, const Algebra<K>& b);

/// Reads `{"name", "dim", "unit", "table"}`; scalars are integers or "num/den"
/// strings reduced into the field.
template <class K>
Algebra<K> algebra_from_json(const K& k, const std::string& json_text);

template <class K>
Algebra<K> build_algebra(const AlgebraSpec& spec, const K& k);

/// The same algebra in a basis containing the unit: the first basis vector
/// with a nonzero unit coefficient is replaced by 1. Returned unchanged when
/// the unit already is a basis vector. Name gains the suffix "@unit".
template <class K>
Algebra<K> unit_adapted(const Algebra<K>& a);

}  // namespace funho
