#include "spreadbound/galois.hpp"

#include "spreadbound/exactmath.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spreadbound::galois {

namespace {

// Multiplies two polynomials over F_p given as base-p digit strings and
// reduces modulo the monic polynomial `poly` of degree e.
unsigned poly_mul(unsigned a, unsigned b, unsigned p, unsigned e, const std::vector<unsigned>& poly) {
    std::vector<unsigned> da(e), db(e), prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (unsigned deg = 2 * e - 1; deg >= e; --deg) {
        const unsigned lead = prod[deg];
        if (lead == 0) continue;
        for (unsigned i = 0; i <= e; ++i) {
            const unsigned idx = deg - e + i;
            prod[idx] = (prod[idx] + p * p - lead * poly[i] % p) % p;
        }
    }
    unsigned out = 0;
    for (unsigned i = e; i-- > 0;) out = out * p + prod[i];
    return out;
}

std::uint64_t bracket_u64(unsigned q, unsigned m) {
    std::uint64_t value = 0;
    for (unsigned i = 0; i < m; ++i) value = value * q + 1;
    return value;
}

} // namespace

Field Field::make(unsigned q) {
    Field f;
    f.q_ = q;
    switch (q) {
    case 2: case 3: case 5: case 7:
        f.p_ = q;
        f.e_ = 1;
        break;
    case 4:
        f.p_ = 2;
        f.e_ = 2;
        f.poly_ = {1, 1, 1};  // x^2 + x + 1
        break;
    case 8:
        f.p_ = 2;
        f.e_ = 3;
        f.poly_ = {1, 1, 0, 1};  // x^3 + x + 1
        break;
    case 9:
        f.p_ = 3;
        f.e_ = 2;
        f.poly_ = {2, 2, 1};  // x^2 + 2x + 2
        break;
    default:
        throw std::invalid_argument("no field of order " + std::to_string(q) + " (expected 2,3,4,5,7,8,9)");
    }

    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            unsigned sum = 0, place = 1, x = a, y = b;
            for (unsigned i = 0; i < f.e_; ++i) {
                sum += ((x % f.p_ + y % f.p_) % f.p_) * place;
                x /= f.p_;
                y /= f.p_;
                place *= f.p_;
            }
            f.add_[a][b] = static_cast<Element>(sum);
            f.mul_[a][b] = static_cast<Element>(f.e_ == 1 ? (a * b) % q : poly_mul(a, b, f.p_, f.e_, f.poly_));
        }
    }
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            if (f.add_[a][b] == 0) f.neg_[a] = static_cast<Element>(b);
            if (f.mul_[a][b] == 1) f.inv_[a] = static_cast<Element>(b);
        }
    }
    f.verify();
    return f;
}

void Field::verify() const {
    const auto fail = [this](const char* law) {
        throw InternalError("field of order " + std::to_string(q_) + " violates " + law);
    };
    for (unsigned a = 0; a < q_; ++a) {
        if (add_[a][0] != a || mul_[a][1] != a || mul_[a][0] != 0) fail("identities");
        if (add_[a][neg_[a]] != 0) fail("additive inverses");
        if (a != 0 && mul_[a][inv_[a]] != 1) fail("multiplicative inverses");
        for (unsigned b = 0; b < q_; ++b) {
            if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a]) fail("commutativity");
            if (a != 0 && b != 0 && mul_[a][b] == 0) fail("no zero divisors");
            for (unsigned c = 0; c < q_; ++c) {
                if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("additive associativity");
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("multiplicative associativity");
                if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("distributivity");
            }
        }
    }
}

std::uint64_t point_count(unsigned q, unsigned n) {
    return bracket_u64(q, n);
}

std::uint32_t point_index(const Field& field, std::span<const Element> v) {
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned q = field.order();
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n) throw std::invalid_argument("point_index: zero vector spans no point");
    const Element scale = field.inv(v[lead]);
    std::uint64_t tail = 0;
    for (std::size_t i = lead + 1; i < n; ++i) tail = tail * q + field.mul(scale, v[i]);
    return static_cast<std::uint32_t>(bracket_u64(q, n - 1 - static_cast<unsigned>(lead)) + tail);
}

Vector point_vector(const Field& field, unsigned n, std::uint32_t index) {
    const unsigned q = field.order();
    if (index >= point_count(q, n)) throw std::out_of_range("point_vector: index beyond [n]_q");
    unsigned m = 0;  // number of coordinates after the leading 1
    while (index >= bracket_u64(q, m + 1)) ++m;
    std::uint64_t tail = index - bracket_u64(q, m);
    Vector v(n, 0);
    const unsigned lead = n - 1 - m;
    v[lead] = 1;
    for (unsigned i = n; i-- > lead + 1;) {
        v[i] = static_cast<Element>(tail % q);
        tail /= q;
    }
    return v;
}

namespace {

// Advances base-`base` digits like an odometer (last digit fastest).
// Returns false once every combination has been visited.
bool next_tuple(std::span<Element> digits, unsigned base) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < base) return true;
        digits[k] = 0;
    }
    return false;
}

PointSet points_of(const Field& field, unsigned n, const std::vector<Vector>& basis) {
    const std::size_t d = basis.size();
    PointSet points;
    std::vector<Element> coeff(d, 0);
    Vector v(n);
    // every nonzero combination whose first nonzero coefficient is 1
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        do {
            std::fill(v.begin(), v.end(), 0);
            for (std::size_t i = lead; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (unsigned c = 0; c < n; ++c) v[c] = field.add(v[c], field.mul(coeff[i], basis[i][c]));
            }
            points.set(point_index(field, v));
        } while (next_tuple(std::span(coeff).subspan(lead + 1), field.order()));
    }
    return points;
}

void check_capacity(unsigned q, unsigned n, const EnumerationLimits& limits) {
    const std::uint64_t count = point_count(q, n);
    const std::size_t limit = limits.max_points < kMaxPoints ? limits.max_points : kMaxPoints;
    if (count > limit) {
        throw CapacityError("F_" + std::to_string(q) + "^" + std::to_string(n) + " has " + std::to_string(count) +
                            " points, above the limit of " + std::to_string(limit));
    }
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const Field& field, unsigned n, unsigned d, EnumerationLimits limits) {
    if (d < 1 || d > n) throw std::invalid_argument("enumerate_subspaces: needs 1 <= d <= n");
    const unsigned q = field.order();
    check_capacity(q, n, limits);

    std::vector<Subspace> out;
    std::vector<unsigned> pivots(d);
    for (unsigned i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
        std::vector<bool> is_pivot(n, false);
        for (unsigned c : pivots) is_pivot[c] = true;
        // free cells: (row, column) right of the row's pivot in non-pivot columns
        std::vector<std::pair<unsigned, unsigned>> cells;
        for (unsigned i = 0; i < d; ++i)
            for (unsigned c = pivots[i] + 1; c < n; ++c)
                if (!is_pivot[c]) cells.emplace_back(i, c);

        std::vector<Element> values(cells.size(), 0);
        do {
            Subspace s;
            s.dim = d;
            s.basis.assign(d, Vector(n, 0));
            for (unsigned i = 0; i < d; ++i) s.basis[i][pivots[i]] = 1;
            for (std::size_t k = 0; k < cells.size(); ++k) s.basis[cells[k].first][cells[k].second] = values[k];
            s.points = points_of(field, n, s.basis);
            out.push_back(std::move(s));
        } while (next_tuple(values, q));

        // next pivot combination in lexicographic order
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && pivots[i] == n - d + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++pivots[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<Subspace> hyperplanes(const Field& field, unsigned n, EnumerationLimits limits) {
    if (n < 2) throw std::invalid_argument("hyperplanes: needs n >= 2");
    return enumerate_subspaces(field, n, n - 1, limits);
}

Subspace span_of(const Field& field, unsigned n, std::vector<Vector> rows) {
    check_capacity(field.order(), n, {});
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("span_of: row length differs from n");
        for (Element e : row)
            if (e >= field.order()) throw std::invalid_argument("span_of: entry outside the field");
    }
    std::size_t rank = 0;
    for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Element scale = field.inv(rows[rank][col]);
        for (auto& e : rows[rank]) e = field.mul(scale, e);
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == rank || rows[other][col] == 0) continue;
            const Element factor = field.neg(rows[other][col]);
            for (unsigned c = 0; c < n; ++c)
                rows[other][c] = field.add(rows[other][c], field.mul(factor, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    Subspace s;
    s.dim = static_cast<unsigned>(rank);
    s.basis = std::move(rows);
    if (rank > 0) s.points = points_of(field, n, s.basis);
    return s;
}

} // namespace spreadbound::galois
