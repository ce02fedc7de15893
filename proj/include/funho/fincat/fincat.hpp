#pragma once

// Skeletal categories of finite sets.
//
// An object of size n is the set {0, ..., n}. Unpointed objects are the
// objects of F; pointed objects (basepoint 0) are the objects of Gamma.
// Morphisms are stored as image tables.

#include "funho/exactlin/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace funho {

struct FinObj {
    int size = 0;
    bool pointed = false;

    static FinObj unpointed(int n) { return {n, false}; }
    static FinObj pointed_set(int n) { return {n, true}; }

    int cardinality() const { return size + 1; }

    friend bool operator==(const FinObj&, const FinObj&) = default;
};

class SetMap {
public:
    /// Validates ranges and, for pointed maps, that 0 maps to 0.
    SetMap(FinObj src, FinObj tgt, std::vector<int> images);

    static SetMap identity(FinObj obj);

    const FinObj& src() const { return src_; }
    const FinObj& tgt() const { return tgt_; }
    const std::vector<int>& images() const { return images_; }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    bool pointed() const { return src_.pointed; }

    /// The same table viewed in F (forgets the basepoint).
    SetMap unpointed() const;
    /// The same table viewed in Gamma; requires 0 -> 0.
    SetMap as_pointed() const;

    /// Preimage of each target element, ascending.
    std::vector<std::vector<int>> fibers() const;

    /// e.g. "[0,3,1]:2->3*" (* marks pointed maps); used as a cache key.
    std::string descriptor() const;

    friend bool operator==(const SetMap&, const SetMap&) = default;
    friend bool operator<(const SetMap& a, const SetMap& b);

private:
    FinObj src_;
    FinObj tgt_;
    std::vector<int> images_;
};

/// g∘f. Requires f.tgt() == g.src().
SetMap compose(const SetMap& g, const SetMap& f);

/// Number of maps src -> tgt; throws ResourceError if it exceeds `limit`.
std::uint64_t count_maps(FinObj src, FinObj tgt, std::uint64_t limit = 1u << 24);

/// All maps src -> tgt in lexicographic order of their image tables.
std::vector<SetMap> enumerate_maps(FinObj src, FinObj tgt, std::uint64_t limit = 1u << 24);

/// Position of f in enumerate_maps(f.src(), f.tgt()).
std::uint64_t map_rank(const SetMap& f);

/// Inverse of map_rank.
SetMap map_unrank(FinObj src, FinObj tgt, std::uint64_t rank);

// ---- named generators -----------------------------------------------------

/// Face d_i: [n] -> [n-1], 0 <= i <= n, n >= 1. For i < n it identifies i and
/// i+1; d_n identifies n with 0.
SetMap face(int i, int n);

/// Degeneracy injection s_i: [n-1] -> [n], 1 <= i <= n, order preserving, missing i.
SetMap degeneracy_injection(int i, int n);

/// Cyclic rotation on the unpointed object of size n: i -> i+1 mod n+1.
SetMap cyclic(int n);

/// Unpointed shift of size n to size n+1: i -> i+1.
SetMap shift(int n);

/// The unique pointed map [n] -> [0].
SetMap collapse(int n);

/// The unique pointed map [0] -> [n].
SetMap basepoint_inclusion(int n);

// ---- cube vertices ----------------------------------------------------------

/// Vertices of {0,1}^n are numbered 1..2^n with eps_1 most significant:
/// index(v) = 1 + sum v_i 2^(n-i). 0 is the basepoint of V(n)_+ = [2^n].
struct CubeVertexCoding {
    int n = 0;

    int vertex_count() const { return 1 << n; }
    int index(const std::vector<int>& bits) const;
    std::vector<int> bits(int index) const;
};

enum class CubeMapKind { p, r, s };

/// Cube map [2^n] -> [2^(n-1)] for 1 <= i <= n: r_i keeps vertices with
/// v_i = 0, s_i those with v_i = 1, p_i keeps all; coordinate i is deleted
/// and discarded vertices go to the basepoint.
SetMap cube_map(CubeMapKind kind, int i, int n);

/// Staircase [n+1] -> [2^n]: j >= 1 goes to the vertex (0,...,0,1,...,1)
/// with j-1 trailing ones.
SetMap staircase(int n);

/// A set of cube vertices (sorted indices in 1..2^n) with a label.
struct VertexSubset {
    enum class Kind { empty, face, diagonal };

    Kind kind = Kind::empty;
    int i = 0;  // face coordinate, or first diagonal coordinate
    int j = 0;  // face value c, or second diagonal coordinate
    std::vector<int> vertices;

    std::string label() const;
};

/// Order-preserving inclusion [|W|] -> [2^n] of a vertex subset.
SetMap subset_inclusion(const VertexSubset& w, int n);

/// Degenerate supports of n-cubes: the empty set, the faces {v_i = c}, and
/// the adjacent diagonals {v_i = v_(i+1)}.
std::vector<VertexSubset> degenerate_family(int n);

}  // namespace funho
