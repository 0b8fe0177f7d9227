#pragma once

#include "bsroots/ideal.hpp"
#include "bsroots/rational.hpp"

#include <map>
#include <vector>

namespace bsroots {

/// Extreme rays of the pointed cone {x : rows·x ≥ 0} by exact double description.
/// `rows` must have full column rank. Rays are primitive integer vectors.
IntMatrix extreme_rays(const IntMatrix& rows, std::size_t dim);

/// A facet of the Newton polyhedron.
///
/// For ordinary facets `functional` is L with the facet lying in L = 1 and
/// L ≥ 1 on the polyhedron. For a facet inside the hyperplane x_i = 0 the
/// functional is e_i, the facet lies in e_i = 0, and the modulus is 1.
struct Facet {
    RatVector functional;
    Integer modulus;
    bool in_coordinate_hyperplane = false;
};

/// Least positive integer m with m·functional integral.
Integer facet_modulus(const Facet& f);

/// A face, recorded by the V-elements it contains: generator points
/// (by generator index) and recession directions e_k (by variable index).
struct Face {
    std::vector<std::size_t> points;
    std::vector<std::size_t> directions;
    std::vector<std::size_t> facets;  // indices of the facets containing the face
};

class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(const MonomialIdeal& ideal);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Exponent>& generators() const noexcept { return gens_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// Proper faces, the empty face first.
    const std::vector<Face>& faces() const noexcept { return faces_; }

    /// Value of facet k at w: L_Q(w), or w_i for a coordinate facet.
    Rational evaluate(std::size_t facet, const RatVector& w) const;

    /// max{λ ≥ 0 : w ∈ λP}, the minimum of the ordinary facet functionals.
    Rational tau_q(const RatVector& w) const;

    /// Index into faces() of the face whose relative interior contains w/τ_ℚ(w).
    /// Throws DegeneratePointError when τ_ℚ(w) = 0.
    std::size_t locate_face(const RatVector& w) const;

    /// True when w lies in the polyhedron.
    bool contains(const RatVector& w) const;

private:
    std::size_t face_of(std::vector<bool> incidence) const;

    std::size_t n_;
    std::vector<Exponent> gens_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    std::map<std::vector<bool>, std::size_t> face_index_;
    std::vector<std::vector<bool>> facet_incidence_;  // per facet, over points then directions
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Closed cone over a proper face of the Newton polyhedron.
struct FanCone {
    std::size_t face = 0;
    IntMatrix rays;  // face points and recession directions
    std::size_t dim = 0;
    bool in_coordinate_hyperplane = false;
    bool maximal = false;
};

/// One cone per proper face, in the order of NewtonPolyhedron::faces().
std::vector<FanCone> fan_cones(const NewtonPolyhedron& p);

/// Index of the cone whose relative interior contains w.
std::size_t locate_cone(const NewtonPolyhedron& p, const RatVector& w);

/// lcm of |det| over all nonzero square minors of the exponent matrix.
Integer integrality_modulus(const MonomialIdeal& ideal);
Integer integrality_modulus_serial(const MonomialIdeal& ideal);

using ResidueMap = std::map<IntVector, IntVector>;  // class c -> representative b

/// For every cone, the residue classes c ≡ b − e (mod N) realized by lattice
/// points b in its relative interior with 1 ≤ b_i ≤ K·N. The first b in
/// lexicographic order is kept per class.
std::vector<ResidueMap> residue_table(const NewtonPolyhedron& p, const Integer& modulus, long box_multiplier);

ResidueMap residue_representatives(const NewtonPolyhedron& p, std::size_t cone, const Integer& modulus,
                                   long box_multiplier);

}  // namespace bsroots
