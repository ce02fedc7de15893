#include "funho/algkit/algebra.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace funho {

namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error("algebra spec '" + std::string(whole) + "': missing parameter");
    int v = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error("algebra spec '" + std::string(whole) + "': parameter must be a positive integer");
        v = v * 10 + (c - '0');
        if (v > 1000000) throw Error("algebra spec '" + std::string(whole) + "': parameter too large");
    }
    if (v < 1) throw Error("algebra spec '" + std::string(whole) + "': parameter must be at least 1");
    return v;
}

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
    std::string s = strip(text);
    AlgebraSpec spec;
    if (s.rfind("tensor(", 0) == 0) {
        if (s.back() != ')') throw Error("algebra spec '" + s + "': unbalanced parentheses");
        std::string inner = s.substr(7, s.size() - 8);
        int depth = 0;
        std::size_t split = std::string::npos;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) throw Error("algebra spec '" + s + "': tensor needs two factors");
        spec.kind = Kind::tensor;
        spec.factors.push_back(parse(std::string_view(inner).substr(0, split)));
        spec.factors.push_back(parse(std::string_view(inner).substr(split + 1)));
        return spec;
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error("algebra spec '" + s + "': expected kind:parameter");
    std::string kind = s.substr(0, colon);
    std::string_view arg = std::string_view(s).substr(colon + 1);
    if (kind == "trunc") {
        spec.kind = Kind::trunc;
        spec.param = parse_positive(arg, s);
    } else if (kind == "group") {
        spec.kind = Kind::group;
        spec.param = parse_positive(arg, s);
    } else if (kind == "prod") {
        spec.kind = Kind::prod;
        spec.param = parse_positive(arg, s);
    } else if (kind == "file") {
        spec.kind = Kind::file;
        spec.path = std::string(arg);
        if (spec.path.empty()) throw Error("algebra spec '" + s + "': empty path");
    } else {
        throw Error("algebra spec '" + s + "': unknown kind '" + kind + "'");
    }
    return spec;
}

std::string AlgebraSpec::to_string() const {
    switch (kind) {
        case Kind::trunc:
            return "trunc:" + std::to_string(param);
        case Kind::group:
            return "group:" + std::to_string(param);
        case Kind::prod:
            return "prod:" + std::to_string(param);
        case Kind::file:
            return "file:" + path;
        case Kind::tensor:
            return "tensor(" + factors.at(0).to_string() + "," + factors.at(1).to_string() + ")";
    }
    return {};
}

template <class K>
Algebra<K>::Algebra(const K& k, std::string name, int dim, Vec unit, std::vector<std::vector<Vec>> table)
    : k_(k), name_(std::move(name)), dim_(dim), unit_(std::move(unit)), table_(std::move(table)) {
    const std::size_t d = static_cast<std::size_t>(dim_);
    if (dim_ < 1) throw Error("algebra '" + name_ + "': dimension must be at least 1");
    if (unit_.size() != d) throw Error("algebra '" + name_ + "': unit has wrong length");
    if (table_.size() != d) throw Error("algebra '" + name_ + "': table has wrong number of rows");
    for (std::size_t i = 0; i < d; ++i) {
        if (table_[i].size() != d) throw Error("algebra '" + name_ + "': table row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < d; ++j)
            if (table_[i][j].size() != d)
                throw Error("algebra '" + name_ + "': product e" + std::to_string(i) + "*e" + std::to_string(j) +
                            " has wrong length");
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (product(i, j) != product(j, i))
                throw Error("algebra '" + name_ + "': not commutative at (" + std::to_string(i) + ", " + std::to_string(j) +
                            ")");
    for (int i = 0; i < dim_; ++i)
        if (multiply(unit_, basis_vector(i)) != basis_vector(i))
            throw Error("algebra '" + name_ + "': unit fails on e" + std::to_string(i));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int l = 0; l < dim_; ++l) {
                Vec left = multiply(product(i, j), basis_vector(l));
                Vec right = multiply(basis_vector(i), product(j, l));
                if (left != right)
                    throw Error("algebra '" + name_ + "': not associative at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(l) + ")");
            }
}

template <class K>
typename Algebra<K>::Vec Algebra<K>::multiply(const Vec& u, const Vec& v) const {
    const std::size_t d = static_cast<std::size_t>(dim_);
    if (u.size() != d || v.size() != d) throw Error("multiply: vector length does not match algebra dimension");
    Vec out(d, k_.zero());
    for (std::size_t i = 0; i < d; ++i) {
        if (k_.is_zero(u[i])) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (k_.is_zero(v[j])) continue;
            auto c = k_.mul(u[i], v[j]);
            const Vec& p = table_[i][j];
            for (std::size_t l = 0; l < d; ++l)
                if (!k_.is_zero(p[l])) out[l] = k_.add(out[l], k_.mul(c, p[l]));
        }
    }
    return out;
}

template <class K>
typename Algebra<K>::Vec Algebra<K>::multiset_product(const std::vector<int>& indices) const {
    Vec out = unit_;
    for (int i : indices) {
        if (i < 0 || i >= dim_) throw Error("multiset_product: basis index out of range");
        out = multiply(out, basis_vector(i));
    }
    return out;
}

template <class K>
SparseMatrix<K> Algebra<K>::multiplication_matrix() const {
    std::vector<SparseVector<K>> cols;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            SparseVector<K> c;
            const Vec& p = product(i, j);
            for (int l = 0; l < dim_; ++l)
                if (!k_.is_zero(p[static_cast<std::size_t>(l)]))
                    c.push_back(Entry<K>{static_cast<Index>(l), p[static_cast<std::size_t>(l)]});
            cols.push_back(std::move(c));
        }
    return SparseMatrix<K>::from_columns(static_cast<Index>(dim_), std::move(cols));
}

template <class K>
Algebra<K> truncated_polynomial(const K& k, int n) {
    if (n < 1) throw Error("trunc: N must be at least 1");
    const std::size_t d = static_cast<std::size_t>(n);
    std::vector<std::vector<Dense<K>>> table(d, std::vector<Dense<K>>(d, Dense<K>(d, k.zero())));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i + j < d) table[i][j][i + j] = k.one();
    Dense<K> unit(d, k.zero());
    unit[0] = k.one();
    return Algebra<K>(k, "trunc:" + std::to_string(n), n, std::move(unit), std::move(table));
}

template <class K>
Algebra<K> cyclic_group_algebra(const K& k, int m) {
    if (m < 1) throw Error("group: M must be at least 1");
    const std::size_t d = static_cast<std::size_t>(m);
    std::vector<std::vector<Dense<K>>> table(d, std::vector<Dense<K>>(d, Dense<K>(d, k.zero())));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) table[i][j][(i + j) % d] = k.one();
    Dense<K> unit(d, k.zero());
    unit[0] = k.one();
    return Algebra<K>(k, "group:" + std::to_string(m), m, std::move(unit), std::move(table));
}

template <class K>
Algebra<K> split_product(const K& k, int r) {
    if (r < 1) throw Error("prod: R must be at least 1");
    const std::size_t d = static_cast<std::size_t>(r);
    std::vector<std::vector<Dense<K>>> table(d, std::vector<Dense<K>>(d, Dense<K>(d, k.zero())));
    for (std::size_t i = 0; i < d; ++i) table[i][i][i] = k.one();
    Dense<K> unit(d, k.one());
    return Algebra<K>(k, "prod:" + std::to_string(r), r, std::move(unit), std::move(table));
}

template <class K>
Algebra<K> tensor_product(const Algebra<K>& a, const Algebra<K>& b) {
    const K& k = a.field();
    const std::size_t da = static_cast<std::size_t>(a.dim()), db = static_cast<std::size_t>(b.dim());
    const std::size_t d = da * db;
    auto kron = [&](const Dense<K>& u, const Dense<K>& v) {
        Dense<K> out(d, k.zero());
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) out[i * db + j] = k.mul(u[i], v[j]);
        return out;
    };
    std::vector<std::vector<Dense<K>>> table(d, std::vector<Dense<K>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            table[i][j] = kron(a.product(static_cast<int>(i / db), static_cast<int>(j / db)),
                               b.product(static_cast<int>(i % db), static_cast<int>(j % db)));
    return Algebra<K>(k, "tensor(" + a.name() + "," + b.name() + ")", static_cast<int>(d), kron(a.unit(), b.unit()),
                      std::move(table));
}

template <class K>
Algebra<K> algebra_from_json(const K& k, const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("algebra JSON: ") + e.what());
    }
    auto scalar = [&](const nlohmann::json& s) -> typename K::value_type {
        if (s.is_number_integer()) return k.from_int(s.get<long>());
        if (s.is_string()) return k.parse(s.get<std::string>());
        throw Error("algebra JSON: scalars must be integers or \"num/den\" strings");
    };
    auto vec = [&](const nlohmann::json& a, std::size_t d) {
        if (!a.is_array() || a.size() != d) throw Error("algebra JSON: coefficient vector must have length " + std::to_string(d));
        Dense<K> v;
        for (const auto& s : a) v.push_back(scalar(s));
        return v;
    };
    if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("table"))
        throw Error("algebra JSON: expected an object with dim, unit and table");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) throw Error("algebra JSON: dim must be a positive integer");
    const std::size_t d = j["dim"].get<std::size_t>();
    std::string name = j.value("name", std::string("custom"));
    Dense<K> unit = vec(j["unit"], d);
    const auto& t = j["table"];
    if (!t.is_array() || t.size() != d) throw Error("algebra JSON: table must have dim rows");
    std::vector<std::vector<Dense<K>>> table(d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!t[r].is_array() || t[r].size() != d) throw Error("algebra JSON: table row " + std::to_string(r) + " must have dim entries");
        for (std::size_t c = 0; c < d; ++c) table[r].push_back(vec(t[r][c], d));
    }
    return Algebra<K>(k, name, static_cast<int>(d), std::move(unit), std::move(table));
}

template <class K>
Algebra<K> build_algebra(const AlgebraSpec& spec, const K& k) {
    switch (spec.kind) {
        case AlgebraSpec::Kind::trunc:
            return truncated_polynomial(k, spec.param);
        case AlgebraSpec::Kind::group:
            return cyclic_group_algebra(k, spec.param);
        case AlgebraSpec::Kind::prod:
            return split_product(k, spec.param);
        case AlgebraSpec::Kind::tensor:
            return tensor_product(build_algebra(spec.factors.at(0), k), build_algebra(spec.factors.at(1), k));
        case AlgebraSpec::Kind::file: {
            std::ifstream in(spec.path);
            if (!in) throw Error("cannot read algebra file '" + spec.path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            return algebra_from_json(k, buf.str());
        }
    }
    throw Error("unknown algebra kind");
}

template <class K>
Algebra<K> unit_adapted(const Algebra<K>& a) {
    const K& k = a.field();
    const auto& u = a.unit();
    const std::size_t d = u.size();
    std::size_t nonzero = 0, j = d;
    for (std::size_t i = 0; i < d; ++i)
        if (!k.is_zero(u[i])) {
            ++nonzero;
            if (j == d) j = i;
        }
    if (nonzero == 1 && k.equal(u[j], k.one())) return a;
    // new basis: e_i for i != j, and the unit in slot j
    const auto inv = k.inv(u[j]);
    auto to_new = [&](const Dense<K>& v) {
        Dense<K> c(d, k.zero());
        c[j] = k.mul(v[j], inv);
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) c[i] = k.sub(v[i], k.mul(u[i], c[j]));
        return c;
    };
    auto old_basis = [&](std::size_t i) { return i == j ? u : a.basis_vector(static_cast<int>(i)); };
    std::vector<std::vector<Dense<K>>> table(d, std::vector<Dense<K>>(d));
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) table[x][y] = to_new(a.multiply(old_basis(x), old_basis(y)));
    Dense<K> unit(d, k.zero());
    unit[j] = k.one();
    return Algebra<K>(k, a.name() + "@unit", a.dim(), std::move(unit), std::move(table));
}

#define FUNHO_INSTANTIATE_ALGEBRA(K)                                          \
    template class Algebra<K>;                                                \
    template Algebra<K> truncated_polynomial<K>(const K&, int);               \
    template Algebra<K> cyclic_group_algebra<K>(const K&, int);               \
    template Algebra<K> split_product<K>(const K&, int);                      \
    template Algebra<K> tensor_product<K>(const Algebra<K>&, const Algebra<K>&); \
    template Algebra<K> algebra_from_json<K>(const K&, const std::string&);   \
    template Algebra<K> build_algebra<K>(const AlgebraSpec&, const K&);       \
    template Algebra<K> unit_adapted<K>(const Algebra<K>&);

FUNHO_INSTANTIATE_ALGEBRA(Rationals)
FUNHO_INSTANTIATE_ALGEBRA(PrimeField)

}  // namespace funho
