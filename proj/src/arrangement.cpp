#include "omvar/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace omvar {

namespace {

using Row = std::vector<Rational>;
using Mat = std::vector<Row>;

// Row echelon in place; returns the rank.
size_t echelon(Mat& a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

size_t rank_of(Mat a) { return echelon(a); }

// One nonzero solution of a * x = 0 for a matrix of corank exactly 1.
Row null_vector(Mat a, size_t cols) {
    echelon(a);
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(cols, 0);
    for (const auto& row : a) {
        for (size_t c = 0; c < cols; ++c)
            if (row[c] != 0) {
                pivot_col.push_back(static_cast<int>(c));
                is_pivot[c] = 1;
                break;
            }
    }
    int free_col = -1;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = static_cast<int>(c);
            break;
        }
    if (free_col < 0)
        throw std::logic_error("null_vector: matrix has full column rank");
    Row x(cols, Rational(0));
    x[static_cast<size_t>(free_col)] = 1;
    // Echelon rows are ordered by pivot column; back-substitute.
    for (size_t k = pivot_col.size(); k-- > 0;) {
        const auto& row = a[k];
        size_t pc = static_cast<size_t>(pivot_col[k]);
        Rational s = 0;
        for (size_t c = pc + 1; c < cols; ++c)
            s += row[c] * x[c];
        x[pc] = -s / row[pc];
    }
    return x;
}

Rational dot(const Row& a, const Row& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Sign sign_of(const Rational& r) {
    if (r > 0) return Sign::Plus;
    if (r < 0) return Sign::Minus;
    return Sign::Zero;
}

void enumerate_subsets(size_t n, size_t k, std::vector<size_t>& cur,
                       size_t start, const std::function<void()>& fn) {
    if (cur.size() == k) {
        fn();
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        enumerate_subsets(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

} // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw parse_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw parse_error("invalid rational: " + s);
    }
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

OrientedMatroid from_arrangement(
    const std::vector<std::vector<Rational>>& normals) {
    if (normals.empty())
        throw std::invalid_argument("arrangement with no normals");
    const size_t n = normals.size();
    const size_t d = normals[0].size();
    if (d == 0)
        throw std::invalid_argument("arrangement in dimension zero");
    for (size_t e = 0; e < n; ++e) {
        if (normals[e].size() != d)
            throw std::invalid_argument("normals of inconsistent dimension");
        if (std::all_of(normals[e].begin(), normals[e].end(),
                        [](const Rational& r) { return r == 0; }))
            throw std::invalid_argument("zero normal (loop) at element " +
                                        std::to_string(e));
    }
    if (n > SignVector::max_size)
        throw std::invalid_argument("more than 64 hyperplanes");

    // Rank of the configuration and a basis of its span.
    Mat all(normals.begin(), normals.end());
    const size_t t = rank_of(all);
    std::vector<size_t> basis;
    {
        Mat acc;
        for (size_t e = 0; e < n && basis.size() < t; ++e) {
            acc.push_back(normals[e]);
            if (rank_of(acc) == acc.size())
                basis.push_back(e);
            else
                acc.pop_back();
        }
    }

    auto sign_vector_of = [&](const Row& x) {
        SignVector v(static_cast<uint32_t>(n));
        for (size_t e = 0; e < n; ++e)
            v.set(e, sign_of(dot(x, normals[e])));
        return v;
    };

    // Cocircuits: for every corank-1 subset S of the normals, the solutions
    // of <x, n_a> = 0 (a in S) within span(normals) form a line; both signs
    // of a generator give a cocircuit.
    std::set<SignVector, CanonicalLess> vectors;
    vectors.insert(SignVector(static_cast<uint32_t>(n)));
    std::vector<size_t> cur;
    enumerate_subsets(n, t - 1, cur, 0, [&]() {
        Mat rows;
        for (size_t i : cur) rows.push_back(normals[i]);
        if (rank_of(rows) != t - 1) return;
        // Coordinates of x = B*c with B the basis columns.
        Mat a(cur.size(), Row(t, Rational(0)));
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = 0; j < t; ++j)
                a[i][j] = dot(normals[cur[i]], normals[basis[j]]);
        Row c = null_vector(std::move(a), t);
        Row x(d, Rational(0));
        for (size_t j = 0; j < t; ++j)
            for (size_t k = 0; k < d; ++k)
                x[k] += c[j] * normals[basis[j]][k];
        SignVector v = sign_vector_of(x);
        vectors.insert(v);
        vectors.insert(v.negated());
    });

    // Close under composition.
    std::vector<SignVector> work(vectors.begin(), vectors.end());
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = 0; j < work.size(); ++j) {
            for (const SignVector& xy :
                 {compose(work[i], work[j]), compose(work[j], work[i])}) {
                if (vectors.insert(xy).second)
                    work.push_back(xy);
            }
        }
    }

    return OrientedMatroid::from_covectors(
        GroundSet(static_cast<uint32_t>(n)),
        std::vector<SignVector>(vectors.begin(), vectors.end()));
}

std::vector<std::vector<Rational>> parse_arrangement_json(
    const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid arrangement JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dimension") || !j.contains("normals"))
        throw parse_error("arrangement JSON needs \"dimension\" and \"normals\"");
    if (!j["dimension"].is_number_unsigned())
        throw parse_error("\"dimension\" must be a nonnegative integer");
    size_t d = j["dimension"].get<size_t>();
    if (!j["normals"].is_array())
        throw parse_error("\"normals\" must be an array");
    std::vector<std::vector<Rational>> normals;
    for (const auto& row : j["normals"]) {
        if (!row.is_array() || row.size() != d)
            throw parse_error("normal of wrong dimension");
        std::vector<Rational> v;
        for (const auto& entry : row) {
            if (!entry.is_string())
                throw parse_error("rational entries must be strings");
            v.push_back(parse_rational(entry.get<std::string>()));
        }
        normals.push_back(std::move(v));
    }
    return normals;
}

OrientedMatroid load_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open arrangement file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_arrangement(parse_arrangement_json(buf.str()));
}

} // namespace omvar
