#include "genusforge/cohomology.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace genusforge {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// CohomologyClass

CohomologyClass CohomologyClass::single(std::string id, Rational coeff) {
    CohomologyClass c;
    if (!coeff.is_zero())
        c.coeffs_.emplace(std::move(id), std::move(coeff));
    return c;
}

Rational CohomologyClass::coefficient(const std::string& id) const {
    const auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Rational() : it->second;
}

void CohomologyClass::add(const std::string& id, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    for (const auto& [id, c] : o.coeffs_)
        add(id, c);
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
    for (const auto& [id, c] : o.coeffs_)
        add(id, -c);
    return *this;
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass out;
    for (const auto& [id, c] : coeffs_)
        out.coeffs_.emplace(id, -c);
    return out;
}

CohomologyClass operator*(const Rational& s, const CohomologyClass& c) {
    CohomologyClass out;
    if (s.is_zero())
        return out;
    for (const auto& [id, v] : c.coeffs_)
        out.coeffs_.emplace(id, s * v);
    return out;
}

// ---------------------------------------------------------------------------
// ManifoldData

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where.empty() ? what : where + ": " + what);
}

} // namespace

ManifoldData ManifoldData::create(std::string name, int dimension, bool spin, bool simply_connected,
                                  std::vector<BasisElement> basis, std::vector<ProductEntry> products,
                                  const std::string& fundamental_id,
                                  std::map<int, CohomologyClass> pontryagin) {
    ManifoldData m;
    m.name_ = std::move(name);
    m.dimension_ = dimension;
    m.spin_ = spin;
    m.simply_connected_ = simply_connected;
    m.basis_ = std::move(basis);
    m.pontryagin_ = std::move(pontryagin);

    if (m.dimension_ <= 0)
        fail("dimension", "must be positive");
    if (m.basis_.empty())
        fail("basis", "must not be empty");

    for (size_t i = 0; i < m.basis_.size(); ++i) {
        const auto& e = m.basis_[i];
        if (e.id.empty())
            fail("basis[" + std::to_string(i) + "]", "empty id");
        if (e.degree < 0 || e.degree > m.dimension_)
            fail("basis[" + std::to_string(i) + "] (" + e.id + ")",
                 "degree must lie in [0, dimension]");
        if (!m.index_.emplace(e.id, static_cast<int>(i)).second)
            fail("basis[" + std::to_string(i) + "]", "duplicate id \"" + e.id + "\"");
        if (e.degree == 0) {
            if (m.unit_index_ >= 0)
                fail("basis", "more than one degree-0 element (unit must be unique)");
            m.unit_index_ = static_cast<int>(i);
        }
    }
    if (m.unit_index_ < 0)
        fail("basis", "no degree-0 element (unit missing)");

    const auto fund = m.index_of(fundamental_id);
    if (!fund)
        fail("fundamental_class", "unknown basis id \"" + fundamental_id + "\"");
    m.fundamental_index_ = *fund;
    if (m.basis_[static_cast<size_t>(*fund)].degree != m.dimension_)
        fail("fundamental_class", "\"" + fundamental_id + "\" does not have degree " +
                                      std::to_string(m.dimension_));

    const auto degree_of = [&m](int i) { return m.basis_[static_cast<size_t>(i)].degree; };

    // First pass: resolve, check grading, reject duplicates.
    std::map<std::pair<int, int>, std::pair<CohomologyClass, std::string>> recorded;
    for (const auto& entry : products) {
        const std::string& where = entry.location;
        const auto li = m.index_of(entry.left);
        if (!li)
            fail(where, "unknown basis id \"" + entry.left + "\"");
        const auto ri = m.index_of(entry.right);
        if (!ri)
            fail(where, "unknown basis id \"" + entry.right + "\"");
        const int want = degree_of(*li) + degree_of(*ri);
        for (const auto& [id, c] : entry.result.coefficients()) {
            const auto ti = m.index_of(id);
            if (!ti)
                fail(where, "unknown basis id \"" + id + "\" in result");
            if (degree_of(*ti) != want)
                fail(where, "grading violation: deg(" + entry.left + ") + deg(" + entry.right +
                                ") = " + std::to_string(want) + " but result contains \"" + id +
                                "\" of degree " + std::to_string(degree_of(*ti)));
        }
        if (*li == m.unit_index_ || *ri == m.unit_index_) {
            const int other = *li == m.unit_index_ ? *ri : *li;
            // Unit products are implicit; a recorded one must be the identity.
            if (entry.result != CohomologyClass::single(m.basis_[static_cast<size_t>(other)].id))
                fail(where, "unit product must be the identity");
            continue;
        }
        if (!recorded.emplace(std::make_pair(*li, *ri), std::make_pair(entry.result, where)).second)
            fail(where, "duplicate product entry for (" + entry.left + ", " + entry.right + ")");
    }

    // Second pass: graded commutativity. Derive missing transposes, check
    // recorded ones, and force squares of odd-degree elements to vanish.
    for (const auto& [key, value] : recorded) {
        const auto [i, j] = key;
        const auto& [result, where] = value;
        const bool odd_sign = (degree_of(i) % 2 != 0) && (degree_of(j) % 2 != 0);
        if (i == j) {
            if (odd_sign && !result.is_zero())
                fail(where, "square of an odd-degree element must vanish");
            m.table_[key] = result;
            continue;
        }
        const CohomologyClass flipped = odd_sign ? -result : result;
        const auto other = recorded.find(std::make_pair(j, i));
        if (other != recorded.end() && other->second.first != flipped)
            fail(where, "graded commutativity violated against the (" +
                            m.basis_[static_cast<size_t>(j)].id + ", " +
                            m.basis_[static_cast<size_t>(i)].id + ") entry");
        m.table_[key] = result;
        m.table_[std::make_pair(j, i)] = flipped;
    }

    for (const auto& [i, cls] : m.pontryagin_) {
        const std::string where = "pontryagin[" + std::to_string(i) + "]";
        if (i <= 0)
            fail(where, "index must be >= 1");
        if (4 * i > m.dimension_)
            fail(where, "pontryagin degree: 4*" + std::to_string(i) + " exceeds dimension " +
                            std::to_string(m.dimension_));
        for (const auto& [id, c] : cls.coefficients()) {
            const auto ti = m.index_of(id);
            if (!ti)
                fail(where, "unknown basis id \"" + id + "\"");
            if (degree_of(*ti) != 4 * i)
                fail(where, "pontryagin degree: \"" + id + "\" has degree " +
                                std::to_string(degree_of(*ti)) + ", expected " + std::to_string(4 * i));
        }
    }

    return m;
}

std::optional<int> ManifoldData::index_of(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

CohomologyClass ManifoldData::pontryagin_class(int i) const {
    const auto it = pontryagin_.find(i);
    return it == pontryagin_.end() ? CohomologyClass() : it->second;
}

const CohomologyClass& ManifoldData::basis_product(int left, int right) const {
    static const CohomologyClass zero;
    const auto it = table_.find(std::make_pair(left, right));
    return it == table_.end() ? zero : it->second;
}

// ---------------------------------------------------------------------------
// Descriptor parsing / serialization

namespace {

CohomologyClass parse_class(const json& obj, const std::string& where) {
    if (!obj.is_object())
        fail(where, "expected an object of id -> rational literal");
    CohomologyClass out;
    for (const auto& [id, value] : obj.items()) {
        if (!value.is_string())
            fail(where + "." + id, "rational literal must be a string \"p/q\"");
        try {
            out.add(id, Rational::parse(value.get<std::string>()));
        } catch (const ValidationError& e) {
            fail(where + "." + id, e.what());
        }
    }
    return out;
}

int require_int(const json& doc, const std::string& key, const std::string& source) {
    if (!doc.contains(key))
        fail(source, "missing field \"" + key + "\"");
    if (!doc[key].is_number_integer())
        fail(source + ": " + key, "must be an integer");
    return doc[key].get<int>();
}

bool require_bool(const json& doc, const std::string& key, const std::string& source) {
    if (!doc.contains(key))
        fail(source, "missing field \"" + key + "\"");
    if (!doc[key].is_boolean())
        fail(source + ": " + key, "must be a boolean");
    return doc[key].get<bool>();
}

std::string require_string(const json& doc, const std::string& key, const std::string& source) {
    if (!doc.contains(key))
        fail(source, "missing field \"" + key + "\"");
    if (!doc[key].is_string())
        fail(source + ": " + key, "must be a string");
    return doc[key].get<std::string>();
}

} // namespace

ManifoldData parse_manifold(std::string_view json_text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(source + ": " + e.what());
    }
    if (!doc.is_object())
        fail(source, "descriptor must be a JSON object");

    static const std::set<std::string> known = {"name",     "dimension",         "spin",
                                                "basis",    "simply_connected",  "products",
                                                "pontryagin", "fundamental_class"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key))
            fail(source, "unknown field \"" + key + "\"");

    const std::string name = require_string(doc, "name", source);
    const int dimension = require_int(doc, "dimension", source);
    const bool spin = require_bool(doc, "spin", source);
    const bool simply_connected = require_bool(doc, "simply_connected", source);

    if (!doc.contains("basis") || !doc["basis"].is_array())
        fail(source, "missing or non-array field \"basis\"");
    std::vector<BasisElement> basis;
    for (size_t i = 0; i < doc["basis"].size(); ++i) {
        const auto& e = doc["basis"][i];
        const std::string where = source + ": basis[" + std::to_string(i) + "]";
        if (!e.is_object())
            fail(where, "expected {id, degree}");
        basis.push_back(BasisElement{require_string(e, "id", where), require_int(e, "degree", where)});
    }

    std::vector<ProductEntry> products;
    if (doc.contains("products")) {
        if (!doc["products"].is_array())
            fail(source + ": products", "must be an array");
        for (size_t i = 0; i < doc["products"].size(); ++i) {
            const auto& e = doc["products"][i];
            const std::string where = source + ": products[" + std::to_string(i) + "]";
            if (!e.is_object() || !e.contains("result"))
                fail(where, "expected {left, right, result}");
            products.push_back(ProductEntry{require_string(e, "left", where),
                                            require_string(e, "right", where),
                                            parse_class(e["result"], where + ".result"), where});
        }
    }

    std::map<int, CohomologyClass> pontryagin;
    if (doc.contains("pontryagin")) {
        if (!doc["pontryagin"].is_object())
            fail(source + ": pontryagin", "must be an object");
        for (const auto& [key, value] : doc["pontryagin"].items()) {
            const std::string where = source + ": pontryagin[" + key + "]";
            int index = 0;
            try {
                size_t pos = 0;
                index = std::stoi(key, &pos);
                if (pos != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                fail(where, "key must be a positive integer");
            }
            pontryagin[index] = parse_class(value, where);
        }
    }

    const std::string fundamental = require_string(doc, "fundamental_class", source);

    try {
        return ManifoldData::create(name, dimension, spin, simply_connected, std::move(basis),
                                    std::move(products), fundamental, std::move(pontryagin));
    } catch (const ValidationError& e) {
        throw ValidationError(source + ": " + e.what());
    }
}

ManifoldData parse_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_manifold(buffer.str(), path);
}

namespace {

ordered_json class_to_json(const ManifoldData& m, const CohomologyClass& c) {
    ordered_json out = ordered_json::object();
    // basis order, not id order, so serialization is stable under renames
    for (const auto& e : m.basis()) {
        const Rational v = c.coefficient(e.id);
        if (!v.is_zero())
            out[e.id] = v.str();
    }
    return out;
}

} // namespace

std::string descriptor_string(const ManifoldData& m) {
    ordered_json doc;
    doc["name"] = m.name();
    doc["dimension"] = m.dimension();
    doc["spin"] = m.spin();
    doc["simply_connected"] = m.simply_connected();
    doc["basis"] = ordered_json::array();
    for (const auto& e : m.basis())
        doc["basis"].push_back(ordered_json{{"id", e.id}, {"degree", e.degree}});
    doc["products"] = ordered_json::array();
    const int n = static_cast<int>(m.basis().size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == m.unit_index() || j == m.unit_index())
                continue;
            const CohomologyClass& r = m.basis_product(i, j);
            if (r.is_zero())
                continue;
            doc["products"].push_back(
                ordered_json{{"left", m.basis()[static_cast<size_t>(i)].id},
                             {"right", m.basis()[static_cast<size_t>(j)].id},
                             {"result", class_to_json(m, r)}});
        }
    }
    doc["fundamental_class"] = m.fundamental_id();
    doc["pontryagin"] = ordered_json::object();
    for (const auto& [i, cls] : m.pontryagin())
        doc["pontryagin"][std::to_string(i)] = class_to_json(m, cls);
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Sphere products and the extension ring

namespace {

struct SphereTensor {
    ManifoldData data;
    std::string sphere_id;
    std::set<std::string> marked; // ids carrying the sphere class factor
};

// H*(M) (x) Q[v]/(v^2). `sphere_first` fixes which product of the two
// fundamental classes normalizes the pairing: v*u_M for the surgery
// extension ring (ids "v*s"), u_M*v for sphere-product descriptors (ids
// "s*v"). The two differ by (-1)^{dim(M) * n}.
SphereTensor tensor_with_sphere(const ManifoldData& m, int n, const std::string& preferred_id,
                                const std::string& name, bool sphere_first) {
    if (n < 1)
        throw PreconditionError("sphere factor dimension must be >= 1");

    std::string v = preferred_id;
    const auto collides = [&m, &v, sphere_first]() {
        if (m.index_of(v))
            return true;
        for (const auto& e : m.basis())
            if (m.index_of(sphere_first ? v + "*" + e.id : e.id + "*" + v))
                return true;
        return false;
    };
    while (collides())
        v += "'";

    const auto tensor_id = [&m, &v, sphere_first](const std::string& id) {
        if (id == m.unit_id())
            return v;
        return sphere_first ? v + "*" + id : id + "*" + v;
    };

    std::vector<BasisElement> basis = m.basis();
    for (const auto& e : m.basis())
        basis.push_back(BasisElement{tensor_id(e.id), e.degree + n});

    SphereTensor out;
    out.sphere_id = v;
    for (const auto& e : m.basis())
        out.marked.insert(tensor_id(e.id));

    std::vector<ProductEntry> products;
    const int count = static_cast<int>(m.basis().size());
    for (int i = 0; i < count; ++i) {
        if (i == m.unit_index())
            continue;
        const BasisElement& left = m.basis()[static_cast<size_t>(i)];
        // base x base, one orientation; the validator derives the rest
        for (int j = i; j < count; ++j) {
            if (j == m.unit_index())
                continue;
            const CohomologyClass& r = m.basis_product(i, j);
            if (!r.is_zero())
                products.push_back(
                    ProductEntry{left.id, m.basis()[static_cast<size_t>(j)].id, r, ""});
        }
        // base x sphere-marked:
        //   a * (b v) = (a b) v            (sphere class last)
        //   a * (v b) = (-1)^{n |a|} v (a b)  (sphere class first)
        for (int j = 0; j < count; ++j) {
            const std::string& right = m.basis()[static_cast<size_t>(j)].id;
            CohomologyClass ab = j == m.unit_index() ? CohomologyClass::single(left.id)
                                                     : m.basis_product(i, j);
            if (ab.is_zero())
                continue;
            const bool negate = sphere_first && n % 2 != 0 && left.degree % 2 != 0;
            CohomologyClass result;
            for (const auto& [id, c] : ab.coefficients())
                result.add(tensor_id(id), negate ? -c : c);
            products.push_back(ProductEntry{left.id, tensor_id(right), result, ""});
        }
    }

    out.data = ManifoldData::create(name, m.dimension() + n, m.spin(),
                                    m.simply_connected() && n >= 2, std::move(basis),
                                    std::move(products), tensor_id(m.fundamental_id()),
                                    m.pontryagin());
    return out;
}

} // namespace

ManifoldData product_with_sphere(const ManifoldData& m, int n) {
    return tensor_with_sphere(m, n, "v" + std::to_string(n), m.name() + "xS" + std::to_string(n),
                              /*sphere_first=*/false)
        .data;
}

RingModel RingModel::base(ManifoldData m) {
    RingModel r;
    r.data_ = std::move(m);
    return r;
}

RingModel RingModel::sphere_extension(const ManifoldData& m, int k) {
    SphereTensor t = tensor_with_sphere(m, k, "u" + std::to_string(k),
                                        "S" + std::to_string(k) + "x" + m.name(),
                                        /*sphere_first=*/true);
    RingModel r;
    r.data_ = std::move(t.data);
    r.sphere_k_ = k;
    r.sphere_id_ = std::move(t.sphere_id);
    r.sphere_marked_ = std::move(t.marked);
    return r;
}

// ---------------------------------------------------------------------------
// RingModel operations

CohomologyClass RingModel::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
    CohomologyClass out;
    for (const auto& [ida, ca] : a.coefficients()) {
        const auto ia = data_.index_of(ida);
        if (!ia)
            throw PreconditionError("unknown basis id \"" + ida + "\"");
        for (const auto& [idb, cb] : b.coefficients()) {
            const auto ib = data_.index_of(idb);
            if (!ib)
                throw PreconditionError("unknown basis id \"" + idb + "\"");
            const Rational scale = ca * cb;
            if (*ia == data_.unit_index()) {
                out.add(idb, scale);
            } else if (*ib == data_.unit_index()) {
                out.add(ida, scale);
            } else {
                for (const auto& [id, c] : data_.basis_product(*ia, *ib).coefficients())
                    out.add(id, scale * c);
            }
        }
    }
    return out;
}

Rational RingModel::evaluate(const CohomologyClass& c) const {
    return c.coefficient(data_.fundamental_id());
}

int RingModel::degree_of_id(const std::string& id) const {
    const auto i = data_.index_of(id);
    if (!i)
        throw PreconditionError("unknown basis id \"" + id + "\"");
    return data_.basis()[static_cast<size_t>(*i)].degree;
}

std::optional<int> RingModel::homogeneous_degree(const CohomologyClass& c) const {
    std::optional<int> degree;
    for (const auto& [id, v] : c.coefficients()) {
        const int d = degree_of_id(id);
        if (degree && *degree != d)
            return std::nullopt;
        degree = d;
    }
    return degree;
}

CohomologyClass RingModel::component(const CohomologyClass& c, int degree) const {
    CohomologyClass out;
    for (const auto& [id, v] : c.coefficients())
        if (degree_of_id(id) == degree)
            out.add(id, v);
    return out;
}

CohomologyClass RingModel::total_pontryagin_class() const {
    CohomologyClass out = unit();
    for (const auto& [i, cls] : data_.pontryagin())
        out += cls;
    return out;
}

CohomologyClass RingModel::inverse_total_class(const CohomologyClass& p) const {
    if (p.coefficient(data_.unit_id()) != Rational(1))
        throw PreconditionError("inverse_total_class needs constant term 1");
    const CohomologyClass nilpotent = p - unit();
    CohomologyClass inverse = unit();
    CohomologyClass term = unit();
    for (int step = 0; step < top_degree() && !term.is_zero(); ++step) {
        term = -multiply(term, nilpotent);
        inverse += term;
    }
    return inverse;
}

bool RingModel::divisible_by_sphere_class(const CohomologyClass& c) const {
    if (!is_sphere_extension())
        return false;
    for (const auto& [id, v] : c.coefficients())
        if (!sphere_marked_.count(id))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Dual classes and the Pontryagin character

CohomologyClass find_dual_class(const RingModel& ring, const CohomologyClass& c) {
    if (c.is_zero())
        throw PreconditionError("dual class of the zero class");
    const auto degree = ring.homogeneous_degree(c);
    if (!degree)
        throw PreconditionError("dual class needs a homogeneous class");
    const int target = ring.top_degree() - *degree;

    const auto& basis = ring.data().basis();
    std::vector<int> columns, rows;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        if (basis[static_cast<size_t>(i)].degree == target)
            columns.push_back(i);
        if (basis[static_cast<size_t>(i)].degree == ring.top_degree())
            rows.push_back(i);
    }

    // A[row][col] = coefficient of e_row in e_col * c; solve A xi = e_fund.
    const size_t nrows = rows.size(), ncols = columns.size();
    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1));
    for (size_t col = 0; col < ncols; ++col) {
        const CohomologyClass prod = ring.multiply(
            CohomologyClass::single(basis[static_cast<size_t>(columns[col])].id), c);
        for (size_t row = 0; row < nrows; ++row)
            a[row][col] = prod.coefficient(basis[static_cast<size_t>(rows[row])].id);
    }
    for (size_t row = 0; row < nrows; ++row)
        a[row][ncols] = Rational(rows[row] == ring.data().fundamental_index() ? 1 : 0);

    // Reduced row echelon, columns in basis order; free variables stay 0,
    // which is the minimal-support deterministic choice.
    std::vector<int> pivot_of_col(ncols, -1);
    size_t next_row = 0;
    for (size_t col = 0; col < ncols && next_row < nrows; ++col) {
        size_t pivot = next_row;
        while (pivot < nrows && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == nrows)
            continue;
        std::swap(a[pivot], a[next_row]);
        const Rational lead = a[next_row][col];
        for (size_t j = col; j <= ncols; ++j)
            a[next_row][j] /= lead;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == next_row || a[r][col].is_zero())
                continue;
            const Rational factor = a[r][col];
            for (size_t j = col; j <= ncols; ++j)
                a[r][j] -= factor * a[next_row][j];
        }
        pivot_of_col[col] = static_cast<int>(next_row);
        ++next_row;
    }
    for (size_t r = next_row; r < nrows; ++r)
        if (!a[r][ncols].is_zero())
            throw ValidationError("degenerate pairing: no class x with x*c equal to the "
                                  "fundamental class (descriptor does not model a closed manifold)");

    CohomologyClass x;
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_of_col[col] >= 0)
            x.add(basis[static_cast<size_t>(columns[col])].id,
                  a[static_cast<size_t>(pivot_of_col[col])][ncols]);
    return x;
}

CohomologyClass find_dual_class(const ManifoldData& m, const CohomologyClass& c) {
    return find_dual_class(RingModel::base(m), c);
}

std::map<int, CohomologyClass> pontryagin_character(const RingModel& extension,
                                                    const std::map<int, CohomologyClass>& classes) {
    if (!extension.is_sphere_extension())
        throw PreconditionError("pontryagin_character needs a sphere extension ring");
    std::map<int, CohomologyClass> out;
    for (const auto& [i, cls] : classes) {
        if (i < 1)
            throw PreconditionError("pontryagin character index must be >= 1");
        if (!cls.is_zero() && !extension.divisible_by_sphere_class(cls))
            throw PreconditionError("class p_" + std::to_string(i) +
                                    " is not divisible by the sphere class");
        const Rational scale =
            Rational(i % 2 == 0 ? -1 : 1) / Rational(factorial(2 * i - 1));
        out[i] = scale * cls;
    }
    return out;
}

} // namespace genusforge
