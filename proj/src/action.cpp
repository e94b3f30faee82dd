#include "strat/action.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "strat/geometry.hpp"

namespace strat {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// SupportSet
// ---------------------------------------------------------------------------

SupportSet::SupportSet(std::vector<int> idx) : indices(std::move(idx)) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw ValidationError("support set is empty");
    if (indices.front() < 0) throw ValidationError("support set has a negative index");
}

SupportSet SupportSet::from_mask(uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) idx.push_back(i);
    return SupportSet(std::move(idx));
}

bool SupportSet::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

uint32_t SupportSet::mask() const {
    uint32_t m = 0;
    for (int i : indices) m |= (1u << i);
    return m;
}

std::string SupportSet::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) os << ",";
        os << indices[i];
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// RootDatum
// ---------------------------------------------------------------------------

namespace {

int linear_rank(const std::vector<RationalVector>& vecs) {
    if (vecs.empty()) return 0;
    std::vector<RationalVector> pts = vecs;
    pts.insert(pts.begin(), RationalVector::zero(vecs.front().rank()));
    return affine_rank(pts);
}

bool contains_vector(const std::vector<RationalVector>& vecs, const RationalVector& v) {
    return std::find(vecs.begin(), vecs.end(), v) != vecs.end();
}

// Unique expansion of v in the (linearly independent) basis, if consistent.
std::optional<std::vector<Rational>> solve_in_basis(const std::vector<RationalVector>& basis,
                                                    const RationalVector& v) {
    const int r = v.rank();
    const int k = static_cast<int>(basis.size());
    // Augmented system [basis columns | v], Gaussian elimination.
    std::vector<std::vector<Rational>> m(static_cast<size_t>(r),
                                         std::vector<Rational>(static_cast<size_t>(k) + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < k; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = basis[static_cast<size_t>(j)][i];
        m[static_cast<size_t>(i)][static_cast<size_t>(k)] = v[i];
    }
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < k && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(row)]);
        const Rational p = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& x : m[static_cast<size_t>(row)]) x /= p;
        for (int i = 0; i < r; ++i) {
            if (i == row) continue;
            const Rational f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= k; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    // Consistency: no row [0...0 | nonzero].
    for (int i = row; i < r; ++i)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) return std::nullopt;
    std::vector<Rational> coeff(static_cast<size_t>(k), Rational(0));
    for (int i = 0; i < row; ++i)
        coeff[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(i)])] =
            m[static_cast<size_t>(i)][static_cast<size_t>(k)];
    return coeff;
}

}  // namespace

RootDatum::RootDatum(std::vector<RationalVector> positive, std::vector<RationalVector> simple,
                     InnerProduct form)
    : positive_roots(std::move(positive)), simple_roots(std::move(simple)), ip(std::move(form)) {
    const int r = ip.rank();
    for (const auto& a : positive_roots) {
        if (a.rank() != r) throw ValidationError("roots: rank mismatch");
        if (a.is_zero()) throw ValidationError("roots: zero vector is not a root");
    }
    for (const auto& a : simple_roots) {
        if (!contains_vector(positive_roots, a))
            throw ValidationError("roots: simple root missing from positive roots");
    }
    if (linear_rank(simple_roots) != static_cast<int>(simple_roots.size()))
        throw ValidationError("roots: simple roots not linearly independent");
    for (const auto& g : positive_roots) {
        auto coeff = simple_roots.empty() ? std::nullopt : solve_in_basis(simple_roots, g);
        if (!coeff) throw ValidationError("roots: positive root outside the simple-root span");
        for (const auto& c : *coeff)
            if (c < 0 || !is_integer(c))
                throw ValidationError("roots: positive root is not a nonnegative integer combination of simple roots");
    }
    // Brute-force closure of R = positives and their negatives under every
    // root reflection.
    std::vector<RationalVector> all = positive_roots;
    for (const auto& a : positive_roots) all.push_back(a * Rational(-1));
    for (const auto& g : all)
        for (const auto& d : all)
            if (!contains_vector(all, reflect(d, g)))
                throw ValidationError("roots: system not closed under reflections");
}

RationalVector RootDatum::reflect(const RationalVector& xi, const RationalVector& alpha) const {
    const Rational f = 2 * ip.dot(xi, alpha) / ip.dot(alpha, alpha);
    return xi - alpha * f;
}

// ---------------------------------------------------------------------------
// WeightSystem / PointSample
// ---------------------------------------------------------------------------

WeightSystem::WeightSystem(int r, std::vector<RationalVector> w, InnerProduct form,
                           std::optional<std::vector<std::string>> lab)
    : rank(r), weights(std::move(w)), ip(std::move(form)), labels(std::move(lab)) {
    if (rank <= 0) throw ValidationError("rank must be positive");
    if (weights.empty()) throw ValidationError("weights must be nonempty");
    for (const auto& a : weights)
        if (a.rank() != rank) throw ValidationError("rank mismatch: weight length differs from rank");
    if (ip.rank() != rank) throw ValidationError("rank mismatch: gram size differs from rank");
    if (labels) {
        if (static_cast<int>(labels->size()) != static_cast<int>(weights.size()))
            throw ValidationError("labels: wrong count");
        std::set<std::string> seen(labels->begin(), labels->end());
        if (seen.size() != labels->size()) throw ValidationError("labels: duplicates");
    }
}

std::vector<RationalVector> WeightSystem::weights_of(const SupportSet& s) const {
    std::vector<RationalVector> out;
    out.reserve(s.indices.size());
    for (int i : s.indices) {
        if (i > n()) throw ValidationError("support index out of range");
        out.push_back(weights[static_cast<size_t>(i)]);
    }
    return out;
}

PointSample::PointSample(std::vector<Rational> m) : masses(std::move(m)) {
    if (masses.empty()) throw ValidationError("mass vector is empty");
    Rational sum(0);
    for (const auto& t : masses) {
        if (t < 0) throw ValidationError("mass vector has a negative entry");
        sum += t;
    }
    if (sum != 1) throw ValidationError("mass vector does not sum to 1");
}

SupportSet PointSample::support() const {
    std::vector<int> idx;
    for (size_t i = 0; i < masses.size(); ++i)
        if (masses[i] > 0) idx.push_back(static_cast<int>(i));
    return SupportSet(std::move(idx));
}

// ---------------------------------------------------------------------------
// Input document
// ---------------------------------------------------------------------------

namespace {

Rational json_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<int64_t>()));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError&) {
            throw ValidationError(field + ": bad rational '" + v.get<std::string>() + "'");
        }
    }
    throw ValidationError(field + ": rationals must be integers or \"p/q\" strings");
}

RationalVector json_vector(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) throw ValidationError(field + ": expected a nonempty array");
    std::vector<Rational> coords;
    for (const auto& e : v) coords.push_back(json_rational(e, field));
    return RationalVector(std::move(coords));
}

std::vector<RationalVector> json_vector_list(const json& v, const std::string& field) {
    if (!v.is_array()) throw ValidationError(field + ": expected an array");
    std::vector<RationalVector> out;
    for (const auto& e : v) out.push_back(json_vector(e, field));
    return out;
}

}  // namespace

ActionData load_action(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level value must be an object");

    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        throw ValidationError("rank: required integer");
    const int rank = doc["rank"].get<int>();
    if (rank <= 0) throw ValidationError("rank: must be positive");

    if (!doc.contains("weights")) throw ValidationError("weights: required");
    std::vector<RationalVector> weights = json_vector_list(doc["weights"], "weights");
    if (weights.empty()) throw ValidationError("weights: must be nonempty");
    for (const auto& w : weights)
        if (w.rank() != rank) throw ValidationError("rank mismatch: weights");

    InnerProduct ip = InnerProduct::identity(rank);
    if (doc.contains("gram")) {
        std::vector<RationalVector> rows = json_vector_list(doc["gram"], "gram");
        std::vector<std::vector<Rational>> g;
        if (static_cast<int>(rows.size()) != rank) throw ValidationError("gram: wrong row count");
        for (auto& row : rows) {
            if (row.rank() != rank) throw ValidationError("gram: wrong column count");
            g.push_back(std::move(row.coords));
        }
        try {
            ip = InnerProduct(std::move(g));
        } catch (const ValidationError&) {
            throw ValidationError("gram not positive definite");
        }
    }

    std::optional<std::vector<std::string>> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw ValidationError("labels: expected an array");
        std::vector<std::string> lab;
        for (const auto& e : doc["labels"]) {
            if (!e.is_string()) throw ValidationError("labels: entries must be strings");
            lab.push_back(e.get<std::string>());
        }
        labels = std::move(lab);
    }

    WeightSystem ws(rank, std::move(weights), ip, std::move(labels));

    std::optional<RootDatum> rd;
    if (doc.contains("roots")) {
        const json& roots = doc["roots"];
        if (!roots.is_object()) throw ValidationError("roots: expected an object");
        if (!roots.contains("simple") || !roots.contains("positive"))
            throw ValidationError("roots: need both \"simple\" and \"positive\"");
        std::vector<RationalVector> simple = json_vector_list(roots["simple"], "roots.simple");
        std::vector<RationalVector> positive = json_vector_list(roots["positive"], "roots.positive");
        rd.emplace(std::move(positive), std::move(simple), ip);
    }

    return ActionData{std::move(ws), std::move(rd)};
}

std::string serialize_action(const ActionData& a) {
    json doc;
    doc["rank"] = a.ws.rank;
    json weights = json::array();
    for (const auto& w : a.ws.weights) {
        json row = json::array();
        for (const auto& c : w.coords) row.push_back(to_string(c));
        weights.push_back(std::move(row));
    }
    doc["weights"] = std::move(weights);
    json gram = json::array();
    for (const auto& row : a.ws.ip.gram()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(to_string(c));
        gram.push_back(std::move(r));
    }
    doc["gram"] = std::move(gram);
    if (a.ws.labels) doc["labels"] = *a.ws.labels;
    if (a.rd) {
        json roots;
        json simple = json::array();
        for (const auto& v : a.rd->simple_roots) {
            json row = json::array();
            for (const auto& c : v.coords) row.push_back(to_string(c));
            simple.push_back(std::move(row));
        }
        json positive = json::array();
        for (const auto& v : a.rd->positive_roots) {
            json row = json::array();
            for (const auto& c : v.coords) row.push_back(to_string(c));
            positive.push_back(std::move(row));
        }
        roots["simple"] = std::move(simple);
        roots["positive"] = std::move(positive);
        doc["roots"] = std::move(roots);
    }
    return doc.dump(2) + "\n";
}

RationalVector moment_value(const WeightSystem& ws, const PointSample& p) {
    if (static_cast<int>(p.masses.size()) != ws.n() + 1)
        throw RankMismatch("mass vector length");
    RationalVector mu = RationalVector::zero(ws.rank);
    for (size_t i = 0; i < p.masses.size(); ++i) {
        if (p.masses[i] == 0) continue;
        for (int j = 0; j < ws.rank; ++j) mu[j] += p.masses[i] * ws.weights[i][j];
    }
    return mu;
}

bool chamber_membership(const RationalVector& xi, const RootDatum& rd) {
    if (xi.rank() != rd.rank()) throw RankMismatch("chamber membership");
    for (const auto& a : rd.simple_roots)
        if (rd.ip.dot(xi, a) < 0) return false;
    return true;
}

}  // namespace strat
