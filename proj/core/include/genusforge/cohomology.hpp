#pragma once

#include "genusforge/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace genusforge {

struct BasisElement {
    std::string id;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Sparse cohomology class over a basis: id -> coefficient. Zero
/// coefficients are never stored. Addition and scalar multiplication need
/// no ring; products do and live on RingModel.
class CohomologyClass {
public:
    CohomologyClass() = default;

    static CohomologyClass single(std::string id, Rational coeff = Rational(1));

    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(const std::string& id) const;

    /// Accumulates c onto the id's coefficient, erasing it if the sum is 0.
    void add(const std::string& id, const Rational& c);

    CohomologyClass& operator+=(const CohomologyClass& o);
    CohomologyClass& operator-=(const CohomologyClass& o);
    CohomologyClass operator-() const;

    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(const Rational& s, const CohomologyClass& c);

    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

private:
    std::map<std::string, Rational> coeffs_;
};

/// One recorded entry of a multiplication table, kept in descriptor form
/// until ManifoldData::create validates it. `location` is echoed in error
/// messages.
struct ProductEntry {
    std::string left;
    std::string right;
    CohomologyClass result;
    std::string location;
};

/// Finite exact model of H*(M;Q): graded basis, multiplication table,
/// fundamental class, Pontryagin classes, and the spin / simply-connected
/// flags the applicability gates need.
///
/// All invariants are checked eagerly by create/parse: unique ids, exactly
/// one degree-0 element (the unit), grading of every recorded product,
/// graded commutativity (the transpose of a recorded pair is derived when
/// absent and cross-checked when present), fundamental class in top degree,
/// and every Pontryagin class homogeneous of degree 4i with 4i <= d.
/// Instances are immutable after construction.
class ManifoldData {
public:
    /// Empty placeholder; every usable instance comes from create/parse.
    ManifoldData() = default;

    static ManifoldData create(std::string name, int dimension, bool spin, bool simply_connected,
                               std::vector<BasisElement> basis, std::vector<ProductEntry> products,
                               const std::string& fundamental_id,
                               std::map<int, CohomologyClass> pontryagin);

    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }
    bool spin() const { return spin_; }
    bool simply_connected() const { return simply_connected_; }

    const std::vector<BasisElement>& basis() const { return basis_; }
    std::optional<int> index_of(const std::string& id) const;
    int unit_index() const { return unit_index_; }
    int fundamental_index() const { return fundamental_index_; }
    const std::string& unit_id() const { return basis_[static_cast<size_t>(unit_index_)].id; }
    const std::string& fundamental_id() const { return basis_[static_cast<size_t>(fundamental_index_)].id; }

    /// p_i(TM); the zero class when the descriptor does not list index i.
    CohomologyClass pontryagin_class(int i) const;
    const std::map<int, CohomologyClass>& pontryagin() const { return pontryagin_; }

    /// Product of two non-unit basis elements from the symmetrized table;
    /// zero when unrecorded.
    const CohomologyClass& basis_product(int left, int right) const;

private:
    std::string name_;
    int dimension_ = 0;
    bool spin_ = false;
    bool simply_connected_ = false;
    std::vector<BasisElement> basis_;
    std::map<std::string, int> index_;
    int unit_index_ = -1;
    int fundamental_index_ = -1;
    std::map<std::pair<int, int>, CohomologyClass> table_;
    std::map<int, CohomologyClass> pontryagin_;
};

/// Parses and validates a manifold descriptor (JSON). Error messages carry
/// the offending location. `source` names the document in messages.
ManifoldData parse_manifold(std::string_view json_text, const std::string& source = "<descriptor>");
ManifoldData parse_manifold_file(const std::string& path);

/// Serializes a descriptor back to its JSON format, deterministically:
/// same data, same bytes.
std::string descriptor_string(const ManifoldData& m);

/// M x S^n: basis doubled by the sphere class, products extended with
/// Koszul signs, Pontryagin classes pulled back from M, fundamental class
/// u_M * v_n. simply_connected survives only when both M is and n >= 2.
ManifoldData product_with_sphere(const ManifoldData& m, int n);

/// A ring to compute in: either H*(M;Q) itself or the sphere extension
/// H*(S^k x M;Q) = H*(M) (x) Q[u_k]/(u_k^2) with fundamental class u_k*u_M.
class RingModel {
public:
    /// Empty placeholder; usable rings come from base/sphere_extension.
    RingModel() = default;

    static RingModel base(ManifoldData m);
    static RingModel sphere_extension(const ManifoldData& m, int k);

    /// The ring presentation (for extensions: the extended basis/table).
    const ManifoldData& data() const { return data_; }
    int top_degree() const { return data_.dimension(); }

    bool is_sphere_extension() const { return sphere_k_ != 0; }
    int sphere_k() const { return sphere_k_; }
    /// Basis id of u_k; only meaningful on extensions.
    const std::string& sphere_class_id() const { return sphere_id_; }

    CohomologyClass unit() const { return CohomologyClass::single(data_.unit_id()); }
    CohomologyClass fundamental() const { return CohomologyClass::single(data_.fundamental_id()); }

    /// Bilinear extension of the table. Throws on ids that do not live here.
    CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;

    /// Coefficient of the fundamental-class basis element.
    Rational evaluate(const CohomologyClass& c) const;

    int degree_of_id(const std::string& id) const;
    /// Degree when homogeneous and nonzero; nullopt for zero or mixed.
    std::optional<int> homogeneous_degree(const CohomologyClass& c) const;
    CohomologyClass component(const CohomologyClass& c, int degree) const;

    /// 1 + p_1 + p_2 + ... of the underlying data, as a mixed class.
    CohomologyClass total_pontryagin_class() const;

    /// Exact inverse of a mixed class with constant term 1 (finite in a
    /// nilpotent truncated ring).
    CohomologyClass inverse_total_class(const CohomologyClass& p) const;

    /// True when every basis element in the support carries the sphere
    /// class factor (extension rings only).
    bool divisible_by_sphere_class(const CohomologyClass& c) const;

private:
    ManifoldData data_;
    int sphere_k_ = 0;
    std::string sphere_id_;
    std::set<std::string> sphere_marked_;
};

/// Solves x * c = u_M exactly over the degree-(d - deg c) slice of the
/// basis. Underdetermined systems resolve deterministically: reduced row
/// echelon with columns in basis order, free variables set to zero. Throws
/// ValidationError when no solution exists (the pairing against c is
/// degenerate, so the data does not model a closed manifold).
CohomologyClass find_dual_class(const RingModel& ring, const CohomologyClass& c);
CohomologyClass find_dual_class(const ManifoldData& m, const CohomologyClass& c);

/// Pontryagin character components on a sphere extension, where all
/// reduced products vanish: ph_i = (-1)^{i+1}/(2i-1)! * p_i. Every class
/// must be divisible by the sphere class.
std::map<int, CohomologyClass> pontryagin_character(const RingModel& extension,
                                                    const std::map<int, CohomologyClass>& classes);

} // namespace genusforge
