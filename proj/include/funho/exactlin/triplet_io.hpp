#pragma once

// Triplet text dumps: a `rows cols field` header, then one `row col value`
// line per stored entry in row-major order. Rationals print as num/den.

#include "funho/exactlin/sparse.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace funho {

template <class K>
void write_triplets(std::ostream& os, const K& k, const SparseMatrix<K>& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << k.name() << '\n';
    for (const auto& t : m.triplets()) os << t.row << ' ' << t.col << ' ' << k.to_string(t.value) << '\n';
}

template <class K>
std::string to_triplet_string(const K& k, const SparseMatrix<K>& m) {
    std::ostringstream os;
    write_triplets(os, k, m);
    return os.str();
}

template <class K>
SparseMatrix<K> read_triplets(std::istream& is, const K& k) {
    Index rows = 0, cols = 0;
    std::string field;
    if (!(is >> rows >> cols >> field)) throw Error("triplet dump: malformed header");
    if (field != k.name()) throw Error("triplet dump: field " + field + " does not match " + k.name());
    std::vector<Triplet<K>> entries;
    Index r = 0, c = 0;
    std::string value;
    while (is >> r >> c >> value) entries.push_back(Triplet<K>{r, c, k.parse(value)});
    if (!is.eof()) throw Error("triplet dump: malformed entry line");
    return SparseMatrix<K>::from_triplets(k, rows, cols, std::move(entries));
}

}  // namespace funho
