#include "funho/fincat/fincat.hpp"

#include <algorithm>
#include <tuple>

namespace funho {

SetMap::SetMap(FinObj src, FinObj tgt, std::vector<int> images)
    : src_(src), tgt_(tgt), images_(std::move(images)) {
    if (src.size < 0 || tgt.size < 0) throw Error("negative object size");
    if (src.pointed != tgt.pointed) throw Error("map between pointed and unpointed objects");
    if (static_cast<int>(images_.size()) != src.cardinality())
        throw Error("image table has " + std::to_string(images_.size()) + " entries, expected " +
                    std::to_string(src.cardinality()));
    for (int v : images_)
        if (v < 0 || v > tgt.size) throw Error("image " + std::to_string(v) + " out of range");
    if (src.pointed && images_[0] != 0) throw Error("pointed map must send 0 to 0");
}

SetMap SetMap::identity(FinObj obj) {
    std::vector<int> im(static_cast<std::size_t>(obj.cardinality()));
    for (int i = 0; i <= obj.size; ++i) im[static_cast<std::size_t>(i)] = i;
    return SetMap(obj, obj, std::move(im));
}

SetMap SetMap::unpointed() const {
    return SetMap(FinObj::unpointed(src_.size), FinObj::unpointed(tgt_.size), images_);
}

SetMap SetMap::as_pointed() const {
    return SetMap(FinObj::pointed_set(src_.size), FinObj::pointed_set(tgt_.size), images_);
}

std::vector<std::vector<int>> SetMap::fibers() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(tgt_.cardinality()));
    for (int i = 0; i <= src_.size; ++i) out[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])].push_back(i);
    return out;
}

std::string SetMap::descriptor() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images_[i]);
    }
    s += "]:" + std::to_string(src_.size) + "->" + std::to_string(tgt_.size);
    if (src_.pointed) s += '*';
    return s;
}

bool operator<(const SetMap& a, const SetMap& b) {
    auto key = [](const SetMap& m) { return std::tie(m.src_.size, m.src_.pointed, m.tgt_.size, m.tgt_.pointed, m.images_); };
    return key(a) < key(b);
}

SetMap compose(const SetMap& g, const SetMap& f) {
    if (!(f.tgt() == g.src())) throw Error("compose: target of f does not match source of g");
    std::vector<int> im(f.images().size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = g(f.images()[i]);
    return SetMap(f.src(), g.tgt(), std::move(im));
}

std::uint64_t count_maps(FinObj src, FinObj tgt, std::uint64_t limit) {
    if (src.pointed != tgt.pointed) throw Error("count_maps: pointedness mismatch");
    int free = src.pointed ? src.size : src.size + 1;
    std::uint64_t base = static_cast<std::uint64_t>(tgt.cardinality());
    std::uint64_t n = 1;
    for (int i = 0; i < free; ++i) {
        if (n > limit / base) throw ResourceError("too many maps between objects of sizes " + std::to_string(src.size) +
                                                  " and " + std::to_string(tgt.size));
        n *= base;
    }
    return n;
}

std::vector<SetMap> enumerate_maps(FinObj src, FinObj tgt, std::uint64_t limit) {
    std::uint64_t n = count_maps(src, tgt, limit);
    std::vector<SetMap> out;
    out.reserve(n);
    for (std::uint64_t r = 0; r < n; ++r) out.push_back(map_unrank(src, tgt, r));
    return out;
}

std::uint64_t map_rank(const SetMap& f) {
    std::uint64_t base = static_cast<std::uint64_t>(f.tgt().cardinality());
    std::uint64_t r = 0;
    for (int i = f.pointed() ? 1 : 0; i <= f.src().size; ++i) r = r * base + static_cast<std::uint64_t>(f(i));
    return r;
}

SetMap map_unrank(FinObj src, FinObj tgt, std::uint64_t rank) {
    std::uint64_t base = static_cast<std::uint64_t>(tgt.cardinality());
    std::vector<int> im(static_cast<std::size_t>(src.cardinality()), 0);
    int first = src.pointed ? 1 : 0;
    for (int i = src.size; i >= first; --i) {
        im[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
        rank /= base;
    }
    if (rank != 0) throw Error("map_unrank: rank out of range");
    return SetMap(src, tgt, std::move(im));
}

SetMap face(int i, int n) {
    if (n < 1 || i < 0 || i > n) throw Error("face d_" + std::to_string(i) + " undefined on [" + std::to_string(n) + "]");
    std::vector<int> im(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        if (i < n)
            im[static_cast<std::size_t>(j)] = j <= i ? j : j - 1;
        else
            im[static_cast<std::size_t>(j)] = j == n ? 0 : j;
    }
    return SetMap(FinObj::pointed_set(n), FinObj::pointed_set(n - 1), std::move(im));
}

SetMap degeneracy_injection(int i, int n) {
    if (n < 1 || i < 1 || i > n)
        throw Error("degeneracy s_" + std::to_string(i) + " undefined into [" + std::to_string(n) + "]");
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) im[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
    return SetMap(FinObj::pointed_set(n - 1), FinObj::pointed_set(n), std::move(im));
}

SetMap cyclic(int n) {
    if (n < 0) throw Error("cyclic: negative size");
    std::vector<int> im(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) im[static_cast<std::size_t>(j)] = (j + 1) % (n + 1);
    return SetMap(FinObj::unpointed(n), FinObj::unpointed(n), std::move(im));
}

SetMap shift(int n) {
    if (n < 0) throw Error("shift: negative size");
    std::vector<int> im(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) im[static_cast<std::size_t>(j)] = j + 1;
    return SetMap(FinObj::unpointed(n), FinObj::unpointed(n + 1), std::move(im));
}

SetMap collapse(int n) {
    return SetMap(FinObj::pointed_set(n), FinObj::pointed_set(0), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
}

SetMap basepoint_inclusion(int n) { return SetMap(FinObj::pointed_set(0), FinObj::pointed_set(n), {0}); }

int CubeVertexCoding::index(const std::vector<int>& b) const {
    if (static_cast<int>(b.size()) != n) throw Error("vertex has wrong dimension");
    int r = 0;
    for (int v : b) {
        if (v != 0 && v != 1) throw Error("vertex coordinate must be 0 or 1");
        r = 2 * r + v;
    }
    return r + 1;
}

std::vector<int> CubeVertexCoding::bits(int idx) const {
    if (idx < 1 || idx > vertex_count()) throw Error("vertex index out of range");
    std::vector<int> b(static_cast<std::size_t>(n));
    int v = idx - 1;
    for (int i = n - 1; i >= 0; --i) {
        b[static_cast<std::size_t>(i)] = v & 1;
        v >>= 1;
    }
    return b;
}

SetMap cube_map(CubeMapKind kind, int i, int n) {
    if (n < 1 || i < 1 || i > n) throw Error("cube map index out of range");
    CubeVertexCoding from{n}, to{n - 1};
    std::vector<int> im(static_cast<std::size_t>(from.vertex_count() + 1), 0);
    for (int v = 1; v <= from.vertex_count(); ++v) {
        auto b = from.bits(v);
        int c = b[static_cast<std::size_t>(i - 1)];
        bool keep = kind == CubeMapKind::p || (kind == CubeMapKind::r && c == 0) || (kind == CubeMapKind::s && c == 1);
        if (!keep) continue;
        b.erase(b.begin() + (i - 1));
        im[static_cast<std::size_t>(v)] = to.index(b);
    }
    return SetMap(FinObj::pointed_set(from.vertex_count()), FinObj::pointed_set(to.vertex_count()), std::move(im));
}

SetMap staircase(int n) {
    if (n < 0) throw Error("staircase: negative degree");
    CubeVertexCoding c{n};
    std::vector<int> im(static_cast<std::size_t>(n + 2), 0);
    for (int j = 1; j <= n + 1; ++j) {
        std::vector<int> b(static_cast<std::size_t>(n), 0);
        for (int t = 0; t < j - 1; ++t) b[static_cast<std::size_t>(n - 1 - t)] = 1;
        im[static_cast<std::size_t>(j)] = c.index(b);
    }
    return SetMap(FinObj::pointed_set(n + 1), FinObj::pointed_set(c.vertex_count()), std::move(im));
}

std::string VertexSubset::label() const {
    switch (kind) {
        case Kind::empty:
            return "empty";
        case Kind::face:
            return "face(" + std::to_string(i) + "=" + std::to_string(j) + ")";
        case Kind::diagonal:
            return "diag(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return {};
}

SetMap subset_inclusion(const VertexSubset& w, int n) {
    CubeVertexCoding c{n};
    std::vector<int> im{0};
    int prev = 0;
    for (int v : w.vertices) {
        if (v <= prev || v > c.vertex_count()) throw Error("vertex subset must be sorted and in range");
        im.push_back(v);
        prev = v;
    }
    int k = static_cast<int>(w.vertices.size());
    return SetMap(FinObj::pointed_set(k), FinObj::pointed_set(c.vertex_count()), std::move(im));
}

std::vector<VertexSubset> degenerate_family(int n) {
    if (n < 0) throw Error("degenerate_family: negative degree");
    CubeVertexCoding c{n};
    std::vector<VertexSubset> out;
    out.push_back(VertexSubset{});
    for (int i = 1; i <= n; ++i)
        for (int val = 0; val <= 1; ++val) {
            VertexSubset w{VertexSubset::Kind::face, i, val, {}};
            for (int v = 1; v <= c.vertex_count(); ++v)
                if (c.bits(v)[static_cast<std::size_t>(i - 1)] == val) w.vertices.push_back(v);
            out.push_back(std::move(w));
        }
    for (int i = 1; i < n; ++i) {
        VertexSubset w{VertexSubset::Kind::diagonal, i, i + 1, {}};
        for (int v = 1; v <= c.vertex_count(); ++v) {
            auto b = c.bits(v);
            if (b[static_cast<std::size_t>(i - 1)] == b[static_cast<std::size_t>(i)]) w.vertices.push_back(v);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace funho
