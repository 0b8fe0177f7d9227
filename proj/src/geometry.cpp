#include "bsroots/geometry.hpp"

#include "bsroots/errors.hpp"
#include "bsroots/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <omp.h>
#include <stdexcept>

namespace bsroots {

namespace mp = boost::multiprecision;

IntMatrix extreme_rays(const IntMatrix& rows, std::size_t dim)
{
    const std::size_t m = rows.size();
    const auto basis = independent_rows(to_rational(rows));
    if (basis.size() != dim) throw std::invalid_argument("double description needs full column rank");

    RatMatrix s;
    for (auto i : basis) s.push_back(to_rational(rows[i]));
    const auto inv = inverse(s);

    using Bits = boost::dynamic_bitset<>;
    std::vector<IntVector> rays;
    std::vector<Bits> zeros;
    std::vector<bool> done(m, false);
    for (auto i : basis) done[i] = true;
    for (std::size_t k = 0; k < dim; ++k) {
        RatVector col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = (*inv)[i][k];
        rays.push_back(primitive(col));
        Bits z(m);
        for (std::size_t b = 0; b < dim; ++b)
            if (b != k) z.set(basis[b]);
        zeros.push_back(std::move(z));
    }

    for (std::size_t g = 0; g < m; ++g) {
        if (done[g]) continue;
        done[g] = true;
        std::vector<Integer> val(rays.size());
        for (std::size_t k = 0; k < rays.size(); ++k) val[k] = dot(rows[g], rays[k]);

        std::vector<IntVector> next;
        std::vector<Bits> next_zeros;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (val[k] < 0) continue;
            next.push_back(rays[k]);
            Bits z = zeros[k];
            if (val[k] == 0) z.set(g);
            next_zeros.push_back(std::move(z));
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                const Bits common = zeros[p] & zeros[q];
                if (common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t != p && t != q && common.is_subset_of(zeros[t])) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector r(dim);
                for (std::size_t i = 0; i < dim; ++i) r[i] = val[p] * rays[q][i] - val[q] * rays[p][i];
                next.push_back(primitive(std::move(r)));
                Bits z = common;
                z.set(g);
                next_zeros.push_back(std::move(z));
            }
        }
        rays = std::move(next);
        zeros = std::move(next_zeros);
    }
    return rays;
}

Integer facet_modulus(const Facet& f)
{
    Integer m = 1;
    for (const auto& c : f.functional) m = lcm(m, mp::denominator(c));
    return m;
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : n_(ideal.nvars()), gens_(ideal.generators())
{
    if (ideal.is_unit()) throw InputError("the Newton polyhedron needs a proper ideal");
    const std::size_t d = n_ + 1;
    IntMatrix rows;
    for (const auto& a : gens_) {
        IntVector row(d);
        row[0] = 1;
        for (std::size_t i = 0; i < n_; ++i) row[i + 1] = a[i];
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        IntVector row(d, Integer(0));
        row[i + 1] = 1;
        rows.push_back(std::move(row));
    }

    std::vector<Facet> ordinary, coordinate;
    for (const auto& y : extreme_rays(rows, d)) {
        if (y[0] > 0) continue;  // the face at infinity
        Facet f;
        if (y[0] < 0) {
            for (std::size_t i = 0; i < n_; ++i) f.functional.push_back(Rational(y[i + 1], -y[0]));
            f.modulus = facet_modulus(f);
            ordinary.push_back(std::move(f));
        } else {
            f.functional = to_rational(IntVector(y.begin() + 1, y.end()));
            f.modulus = 1;
            f.in_coordinate_hyperplane = true;
            coordinate.push_back(std::move(f));
        }
    }
    auto by_functional = [](const Facet& x, const Facet& y) { return x.functional > y.functional; };
    std::sort(ordinary.begin(), ordinary.end(), by_functional);
    std::sort(coordinate.begin(), coordinate.end(), by_functional);
    facets_ = std::move(ordinary);
    facets_.insert(facets_.end(), coordinate.begin(), coordinate.end());

    const std::size_t r = gens_.size();
    for (const auto& f : facets_) {
        std::vector<bool> inc(r + n_, false);
        for (std::size_t j = 0; j < r; ++j) {
            const RatVector a = to_rational(IntVector(gens_[j].begin(), gens_[j].end()));
            inc[j] = f.in_coordinate_hyperplane ? dot(f.functional, a) == 0 : dot(f.functional, a) == 1;
        }
        for (std::size_t k = 0; k < n_; ++k) inc[r + k] = f.functional[k] == 0;
        facet_incidence_.push_back(std::move(inc));
    }

    auto has_point = [r](const std::vector<bool>& inc) {
        return std::any_of(inc.begin(), inc.begin() + static_cast<std::ptrdiff_t>(r), [](bool b) { return b; });
    };
    std::vector<std::vector<bool>> found;
    found.emplace_back(r + n_, false);  // empty face
    face_index_[found.back()] = 0;
    for (const auto& inc : facet_incidence_) {
        if (face_index_.emplace(inc, found.size()).second) found.push_back(inc);
    }
    for (std::size_t k = 1; k < found.size(); ++k) {
        for (const auto& inc : facet_incidence_) {
            std::vector<bool> meet(r + n_);
            for (std::size_t t = 0; t < meet.size(); ++t) meet[t] = found[k][t] && inc[t];
            if (!has_point(meet)) continue;
            if (face_index_.emplace(meet, found.size()).second) found.push_back(std::move(meet));
        }
    }
    for (const auto& inc : found) {
        Face face;
        for (std::size_t j = 0; j < r; ++j)
            if (inc[j]) face.points.push_back(j);
        for (std::size_t k = 0; k < n_; ++k)
            if (inc[r + k]) face.directions.push_back(k);
        if (!face.points.empty()) {
            for (std::size_t q = 0; q < facets_.size(); ++q) {
                bool all = true;
                for (std::size_t t = 0; t < inc.size() && all; ++t) all = !inc[t] || facet_incidence_[q][t];
                if (all) face.facets.push_back(q);
            }
        }
        faces_.push_back(std::move(face));
    }
}

Rational NewtonPolyhedron::evaluate(std::size_t facet, const RatVector& w) const
{
    return dot(facets_.at(facet).functional, w);
}

Rational NewtonPolyhedron::tau_q(const RatVector& w) const
{
    if (w.size() != n_) throw InputError("point has the wrong dimension");
    Rational best = -1;
    for (const auto& f : facets_) {
        if (f.in_coordinate_hyperplane) continue;
        Rational v = dot(f.functional, w);
        if (best < 0 || v < best) best = std::move(v);
    }
    return best;
}

bool NewtonPolyhedron::contains(const RatVector& w) const
{
    for (const auto& x : w)
        if (x < 0) return false;
    return tau_q(w) >= 1;
}

std::size_t NewtonPolyhedron::face_of(std::vector<bool> incidence) const
{
    auto it = face_index_.find(incidence);
    if (it == face_index_.end()) throw std::logic_error("tight set is not a face");
    return it->second;
}

std::size_t NewtonPolyhedron::locate_face(const RatVector& w) const
{
    for (const auto& x : w)
        if (x < 0) throw InputError("point outside the positive orthant");
    const Rational t = tau_q(w);
    if (t == 0) throw DegeneratePointError("tau_Q vanishes at the point");
    std::vector<bool> inc(gens_.size() + n_, true);
    for (std::size_t q = 0; q < facets_.size(); ++q) {
        const Rational v = evaluate(q, w);
        const bool tight = facets_[q].in_coordinate_hyperplane ? v == 0 : v == t;
        if (!tight) continue;
        for (std::size_t k = 0; k < inc.size(); ++k) inc[k] = inc[k] && facet_incidence_[q][k];
    }
    return face_of(std::move(inc));
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) { return NewtonPolyhedron(ideal); }

std::vector<FanCone> fan_cones(const NewtonPolyhedron& p)
{
    const std::size_t n = p.nvars();
    std::vector<FanCone> out;
    for (std::size_t k = 0; k < p.faces().size(); ++k) {
        const Face& face = p.faces()[k];
        FanCone c;
        c.face = k;
        for (auto j : face.points) c.rays.emplace_back(p.generators()[j].begin(), p.generators()[j].end());
        for (auto i : face.directions) {
            IntVector e(n, Integer(0));
            e[i] = 1;
            c.rays.push_back(std::move(e));
        }
        c.dim = c.rays.empty() ? 0 : rank(c.rays);
        c.maximal = c.dim == n;
        c.in_coordinate_hyperplane = c.rays.empty();
        for (std::size_t i = 0; i < n && !c.in_coordinate_hyperplane; ++i) {
            c.in_coordinate_hyperplane =
                std::all_of(c.rays.begin(), c.rays.end(), [i](const IntVector& v) { return v[i] == 0; });
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::size_t locate_cone(const NewtonPolyhedron& p, const RatVector& w) { return p.locate_face(w); }

namespace {

struct Minor {
    std::vector<std::size_t> rows, cols;
};

// all k-subsets of {0..n-1}
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t t = i; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
    return out;
}

std::vector<Minor> all_minors(std::size_t n, std::size_t r)
{
    std::vector<Minor> out;
    for (std::size_t k = 1; k <= std::min(n, r); ++k) {
        const auto rs = subsets(n, k);
        const auto cs = subsets(r, k);
        for (const auto& a : rs)
            for (const auto& b : cs) out.push_back({a, b});
    }
    return out;
}

Integer minor_value(const IntMatrix& m, const Minor& mi)
{
    IntMatrix sub;
    for (auto i : mi.rows) {
        IntVector row;
        for (auto j : mi.cols) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
    }
    return mp::abs(determinant(std::move(sub)));
}

}  // namespace

Integer integrality_modulus_serial(const MonomialIdeal& ideal)
{
    const IntMatrix m = ideal.exponent_matrix();
    Integer acc = 1;
    for (const auto& mi : all_minors(ideal.nvars(), ideal.size())) {
        const Integer d = minor_value(m, mi);
        if (d != 0) acc = lcm(acc, d);
    }
    return acc;
}

Integer integrality_modulus(const MonomialIdeal& ideal)
{
    const IntMatrix m = ideal.exponent_matrix();
    const auto minors = all_minors(ideal.nvars(), ideal.size());
    const int threads = omp_get_max_threads();
    std::vector<Integer> partial(static_cast<std::size_t>(threads), Integer(1));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(minors.size()); ++k) {
        const Integer d = minor_value(m, minors[static_cast<std::size_t>(k)]);
        if (d != 0) {
            auto& slot = partial[static_cast<std::size_t>(omp_get_thread_num())];
            slot = lcm(slot, d);
        }
    }
    Integer acc = 1;
    for (const auto& x : partial) acc = lcm(acc, x);
    return acc;
}

std::vector<ResidueMap> residue_table(const NewtonPolyhedron& p, const Integer& modulus, long box_multiplier)
{
    const std::size_t n = p.nvars();
    if (modulus < 1 || box_multiplier < 1) throw InputError("modulus and box multiplier must be positive");
    const long side = box_multiplier * modulus.convert_to<long>();
    const std::size_t cones = p.faces().size();

    // one slice per value of the first coordinate, merged in order
    std::vector<std::vector<ResidueMap>> slices(static_cast<std::size_t>(side), std::vector<ResidueMap>(cones));
#pragma omp parallel for schedule(dynamic, 1)
    for (long first = 1; first <= side; ++first) {
        auto& table = slices[static_cast<std::size_t>(first - 1)];
        std::vector<long> b(n, 1);
        b[0] = first;
        for (;;) {
            RatVector w(b.begin(), b.end());
            const std::size_t cone = p.locate_face(w);
            IntVector c(n), rep(n);
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = Integer((b[i] - 1) % modulus.convert_to<long>());
                rep[i] = b[i];
            }
            table[cone].emplace(std::move(c), std::move(rep));
            std::size_t i = n;
            while (i > 1 && b[i - 1] == side) b[--i] = 1;
            if (i == 1) break;
            ++b[i - 1];
        }
    }
    std::vector<ResidueMap> out(cones);
    for (const auto& table : slices)
        for (std::size_t k = 0; k < cones; ++k)
            for (const auto& [c, b] : table[k]) out[k].emplace(c, b);
    return out;
}

ResidueMap residue_representatives(const NewtonPolyhedron& p, std::size_t cone, const Integer& modulus,
                                   long box_multiplier)
{
    return residue_table(p, modulus, box_multiplier).at(cone);
}

}  // namespace bsroots
