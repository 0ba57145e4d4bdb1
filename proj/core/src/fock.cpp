#include "smfree/fock.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

namespace smfree {

namespace {

std::vector<std::uint8_t> key_of(const FockWord& w)
{
    std::vector<std::uint8_t> key;
    key.reserve(w.size());
    for (Cell c : w) key.push_back(static_cast<std::uint8_t>(c.index()));
    return key;
}

bool can_prepend(Cell x, const FockWord& w)
{
    if (w.empty()) return x.diagonal();
    const Cell first = w.front();
    return x == first || (!x.diagonal() && first.row == x.col);
}

/// The q-projection whose range contains w.
Cell q_class(const FockWord& w)
{
    if (w.empty()) return {1, 1};
    if (w.front() == Cell{2, 2}) return {1, 2};
    if (w.front() == Cell{1, 1}) return {2, 1};
    return {2, 2};
}

void add_to(FockVector& v, std::size_t id, const Scalar& x)
{
    if (x.is_zero()) return;
    auto [it, inserted] = v.try_emplace(id, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

std::string to_string(const FockWord& w)
{
    if (w.empty()) return "Omega";
    std::string out;
    for (Cell c : w) out += "(" + c.to_string() + ")";
    return out;
}

bool valid_word(const FockWord& w)
{
    for (std::size_t k = w.size(); k-- > 0;) {
        const FockWord tail(w.begin() + static_cast<long>(k) + 1, w.end());
        if (!can_prepend(w[k], tail)) return false;
    }
    return true;
}

void FockOperator::add(std::size_t row, std::size_t col, const Scalar& value)
{
    if (value.is_zero()) return;
    auto& column = columns_.at(col);
    for (auto& [r, x] : column) {
        if (r == row) {
            x += value;
            return;
        }
    }
    column.emplace_back(row, value);
}

FockVector FockOperator::apply(const FockVector& v) const
{
    FockVector out;
    for (const auto& [col, x] : v) {
        for (const auto& [row, a] : columns_.at(col)) add_to(out, row, a * x);
    }
    return out;
}

FockOperator FockOperator::compose(const FockOperator& rhs) const
{
    FockOperator out(dimension());
    for (std::size_t col = 0; col < rhs.dimension(); ++col) {
        FockVector v;
        for (const auto& [row, x] : rhs.column(col)) add_to(v, row, x);
        for (const auto& [row, x] : apply(v)) out.add(row, col, x);
    }
    return out;
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs)
{
    for (std::size_t col = 0; col < rhs.dimension(); ++col) {
        for (const auto& [row, x] : rhs.column(col)) add(row, col, x);
    }
    return *this;
}

FockOperator& FockOperator::operator*=(const Scalar& c)
{
    for (auto& column : columns_) {
        for (auto& entry : column) entry.second *= c;
    }
    return *this;
}

Scalar FockOperator::entry(std::size_t row, std::size_t col, Mode mode) const
{
    Scalar out = Scalar::zero(mode);
    for (const auto& [r, x] : columns_.at(col)) {
        if (r == row) out += x;
    }
    return out;
}

bool FockOperator::equals_on(const FockOperator& rhs, const std::vector<std::size_t>& cols, Mode mode) const
{
    for (std::size_t col : cols) {
        FockVector a, b;
        for (const auto& [row, x] : column(col)) add_to(a, row, x);
        for (const auto& [row, x] : rhs.column(col)) add_to(b, row, x);
        if (a.size() != b.size()) return false;
        for (const auto& [row, x] : a) {
            auto it = b.find(row);
            if (it == b.end() || !(it->second == x)) return false;
        }
    }
    (void)mode;
    return true;
}

FockModel FockModel::build(const DistributionArray& d, std::size_t depth, std::optional<std::array<Scalar, 4>> alphas)
{
    if (depth < 1) throw std::invalid_argument("Fock model depth must be at least 1");
    if (depth > 20) throw std::invalid_argument("Fock model depth above 20 is not supported");
    if (d.shape().empty()) throw std::invalid_argument("empty shape");

    FockModel m;
    m.shape_ = d.shape();
    m.mode_ = d.mode();
    m.depth_ = depth;
    const Mode mode = m.mode_;
    if (alphas) {
        for (const auto& a : *alphas) {
            if (a.mode() != mode) throw ModeMismatch("alpha of the wrong mode");
            if (a.to_double() <= 0.0) throw std::invalid_argument("alpha must be positive");
        }
        m.alpha_ = *alphas;
    } else {
        m.alpha_.fill(Scalar::one(mode));
    }

    // Every word is a letter prepended to a shorter word.
    m.words_.push_back({});
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= depth; ++len) {
        const std::size_t end = m.words_.size();
        for (std::size_t id = begin; id < end; ++id) {
            for (Cell x : kAllCells) {
                if (!can_prepend(x, m.words_[id])) continue;
                FockWord w{x};
                w.insert(w.end(), m.words_[id].begin(), m.words_[id].end());
                m.words_.push_back(std::move(w));
            }
        }
        begin = end;
    }
    for (std::size_t id = 0; id < m.words_.size(); ++id) m.index_.emplace(key_of(m.words_[id]), id);

    const std::size_t n = m.words_.size();
    for (Cell c : kAllCells) {
        FockOperator create(n), annihilate(n);
        const Scalar& alpha = m.alpha_[c.index()];
        for (std::size_t id = 0; id < n; ++id) {
            const FockWord& w = m.words_[id];
            if (w.size() < depth && can_prepend(c, w)) {
                FockWord longer{c};
                longer.insert(longer.end(), w.begin(), w.end());
                create.add(*m.find(longer), id, alpha);
            }
            if (!w.empty() && w.front() == c) {
                annihilate.add(*m.find(FockWord(w.begin() + 1, w.end())), id, alpha);
            }
        }
        m.creation_[c.index()] = std::move(create);
        m.annihilation_[c.index()] = std::move(annihilate);
    }

    m.sum_ = FockOperator(n);
    for (Cell c : kAllCells) {
        FockOperator a(n);
        if (m.shape_.contains(c)) {
            a += m.creation_[c.index()];
            const Scalar& alpha = m.alpha_[c.index()];
            const auto& r = d.cumulants(c);
            const UnitElement unit = UnitElement::unit(c, mode);
            for (std::size_t id = 0; id < n; ++id) {
                const FockWord& w = m.words_[id];
                // k = 1: s(1) 1_{i,j}
                if (!r.empty()) a.add(id, id, r[0] * unit[q_class(w)]);
                // k >= 2: s(k) (l*)^(k-1) strips k-1 leading copies of c with
                // weight alpha^(k-1), so the entry is r(k) / alpha^(k-1).
                Scalar alpha_pow = Scalar::one(mode);
                for (std::size_t k = 2; k <= r.size(); ++k) {
                    if (k - 1 > w.size() || w[k - 2] != c) break;
                    alpha_pow *= alpha;
                    a.add(*m.find(FockWord(w.begin() + static_cast<long>(k) - 1, w.end())), id, r[k - 1] / alpha_pow);
                }
            }
        }
        m.sum_ += a;
        m.toeplitz_[c.index()] = std::move(a);
    }

    for (Cell c : kAllCells) {
        const auto p = m.unit_operator(UnitElement::compression(c, mode));
        m.compressed_[c.index()] = p.compose(m.sum_).compose(p);
    }
    return m;
}

std::optional<std::size_t> FockModel::find(const FockWord& w) const
{
    auto it = index_.find(key_of(w));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const FockOperator& FockModel::creation(Cell c) const
{
    return creation_[c.index()];
}

const FockOperator& FockModel::annihilation(Cell c) const
{
    return annihilation_[c.index()];
}

const FockOperator& FockModel::toeplitz(Cell c) const
{
    return toeplitz_[c.index()];
}

const FockOperator& FockModel::compressed(Cell c) const
{
    return compressed_[c.index()];
}

FockOperator FockModel::unit_operator(const UnitElement& u) const
{
    FockOperator out(dimension());
    for (std::size_t id = 0; id < dimension(); ++id) out.add(id, id, u[q_class(words_[id])]);
    return out;
}

FockOperator FockModel::direct_unit(Cell c) const
{
    FockOperator out(dimension());
    const Scalar one = Scalar::one(mode_);
    for (std::size_t id = 0; id < dimension(); ++id) {
        const FockWord& w = words_[id];
        const Cell diag{c.row, c.row};
        const bool in_fock_of_diag = w.empty() || w.front() == diag;
        if (c.diagonal() ? in_fock_of_diag : !in_fock_of_diag) out.add(id, id, one);
    }
    return out;
}

FockVector FockModel::basis_vector(const FockWord& w) const
{
    auto id = find(w);
    if (!id) throw std::invalid_argument("word " + smfree::to_string(w) + " is not in the basis");
    return FockVector{{*id, Scalar::one(mode_)}};
}

FockVector FockModel::state_vector(State s) const
{
    switch (s) {
    case State::phi:
        return vacuum();
    case State::phi1:
        return basis_vector({{1, 1}});
    case State::phi2:
        return basis_vector({{2, 2}});
    }
    return vacuum();
}

FockVector FockModel::cell_state_vector(Cell c) const
{
    if (c.diagonal()) return vacuum();
    return basis_vector({{c.col, c.col}});
}

FockVector FockModel::compression_state_vector(Cell c) const
{
    return basis_vector({{c.row, c.row}});
}

FockVector FockModel::apply(const Factor& f, const FockVector& v) const
{
    switch (f.kind) {
    case Factor::Kind::sum:
        return sum_.apply(v);
    case Factor::Kind::toeplitz:
        return toeplitz(f.cell).apply(v);
    case Factor::Kind::compressed:
        return compressed(f.cell).apply(v);
    case Factor::Kind::creation:
        return creation(f.cell).apply(v);
    case Factor::Kind::annihilation:
        return annihilation(f.cell).apply(v);
    case Factor::Kind::unit: {
        FockVector out;
        for (const auto& [id, x] : v) add_to(out, id, f.element[q_class(words_[id])] * x);
        return out;
    }
    }
    return v;
}

std::size_t FockModel::length_of(const FockVector& v) const
{
    std::size_t len = 0;
    for (const auto& entry : v) len = std::max(len, words_[entry.first].size());
    return len;
}

Scalar FockModel::moment(const FockVector& v, std::span<const Factor> factors) const
{
    std::size_t reach = length_of(v);
    for (const auto& f : factors) reach += f.creation_degree();
    if (reach > depth_) {
        throw DepthExceeded("product reaches word length " + std::to_string(reach) + " but the model has depth " +
                            std::to_string(depth_));
    }
    FockVector x = v;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) x = apply(*it, x);
    Scalar out = Scalar::zero(mode_);
    for (const auto& [id, value] : v) {
        auto hit = x.find(id);
        if (hit != x.end()) out += hit->second * value;
    }
    return out;
}

Scalar FockModel::state_moment(State s, std::span<const Factor> factors) const
{
    return moment(state_vector(s), factors);
}

void FockModel::dump(std::ostream& os, bool with_operators) const
{
    for (const auto& w : words_) os << smfree::to_string(w) << '\n';
    if (!with_operators) return;

    auto print = [&](const std::string& name, const FockOperator& op) {
        for (std::size_t col = 0; col < dimension(); ++col) {
            if (op.column(col).empty()) continue;
            auto entries = op.column(col);
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            os << name << ' ' << smfree::to_string(words_[col]) << " ->";
            for (const auto& [row, x] : entries) os << ' ' << x << '*' << smfree::to_string(words_[row]);
            os << '\n';
        }
    };
    for (Cell c : shape_.cells()) print("l" + std::to_string(c.row) + std::to_string(c.col), creation(c));
    print("A", sum_);
}

TruncatedSeries single_cell_r(const FockModel& model, Cell c, std::size_t order)
{
    if (order == 0) throw std::invalid_argument("single_cell_r needs order >= 1");
    const FockVector v = model.cell_state_vector(c);
    std::vector<Scalar> moments;
    std::vector<Factor> factors;
    for (std::size_t n = 0; n <= order; ++n) {
        moments.push_back(model.moment(v, factors));
        factors.push_back(Factor::a(c));
    }
    return r_from_moments(TruncatedSeries(std::move(moments)));
}

TruncatedSeries fock_moments(const FockModel& model, std::size_t m)
{
    if (m > model.depth()) {
        throw DepthExceeded("moment order " + std::to_string(m) + " exceeds the model depth " +
                            std::to_string(model.depth()));
    }
    const FockVector omega = model.vacuum();
    const std::size_t root = omega.begin()->first;
    std::vector<Scalar> moments;
    FockVector x = omega;
    for (std::size_t n = 0; n <= m; ++n) {
        auto hit = x.find(root);
        moments.push_back(hit == x.end() ? Scalar::zero(model.mode()) : hit->second);
        if (n < m) x = model.sum().apply(x);
    }
    return TruncatedSeries(std::move(moments));
}

namespace {

/// Random element of the algebra of one cell: c0 1_{cell} + c1 a + c2 a^2.
struct CellElement {
    Cell cell;
    std::size_t degree = 0;
    FockOperator op;
};

class AxiomChecker {
public:
    AxiomChecker(const FockModel& model, std::uint64_t seed) : m_(model), rng_(seed) {}

    void expect(bool ok, const std::string& what)
    {
        ++report_.checks;
        if (!ok) report_.violations.push_back(what);
    }

    Scalar small_int(int lo, int hi) { return Scalar::from_int(std::uniform_int_distribution<int>(lo, hi)(rng_), m_.mode()); }

    Scalar vector_moment(const FockOperator& op, const FockVector& v) const
    {
        const auto x = op.apply(v);
        Scalar out = Scalar::zero(m_.mode());
        for (const auto& [id, value] : v) {
            auto hit = x.find(id);
            if (hit != x.end()) out += hit->second * value;
        }
        return out;
    }

    CellElement random_element(Cell c, std::size_t max_degree, bool centred)
    {
        const std::size_t degree = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_degree))(rng_);
        const auto& a = m_.toeplitz(c);
        FockOperator op = m_.direct_unit(c);
        op *= small_int(-3, 3);
        FockOperator power = a;
        for (std::size_t k = 1; k <= degree; ++k) {
            Scalar coeff = small_int(-3, 3);
            if (k == degree && coeff.is_zero()) coeff = Scalar::one(m_.mode());
            FockOperator term = power;
            term *= coeff;
            op += term;
            if (k < degree) power = a.compose(power);
        }
        if (centred) {
            // The cell state gives 1 on its own internal unit.
            const Scalar shift = -vector_moment(op, m_.cell_state_vector(c));
            FockOperator unit = m_.direct_unit(c);
            unit *= shift;
            op += unit;
        }
        return {c, degree, std::move(op)};
    }

    /// Cells with consecutive entries distinct; empty when impossible.
    std::vector<Cell> alternating_cells(std::size_t n)
    {
        const auto cells = m_.shape().cells();
        std::vector<Cell> out;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Cell> options;
            for (Cell c : cells) {
                if (out.empty() || c != out.back()) options.push_back(c);
            }
            if (options.empty()) return {};
            out.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)]);
        }
        return out;
    }

    Scalar product_moment(const std::vector<CellElement>& xs, const FockVector& v) const
    {
        FockVector x = v;
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) x = it->op.apply(x);
        Scalar out = Scalar::zero(m_.mode());
        for (const auto& [id, value] : v) {
            auto hit = x.find(id);
            if (hit != x.end()) out += hit->second * value;
        }
        return out;
    }

    /// Random alternating product fitting the depth budget for a start
    /// vector of length `start_len`; `centred(k)` says which factors are centred.
    template <typename Centred>
    std::vector<CellElement> random_product(std::size_t n, std::size_t start_len, Centred centred)
    {
        const auto cells = alternating_cells(n);
        if (cells.empty()) return {};
        std::size_t budget = m_.depth() - std::min(m_.depth(), start_len);
        if (budget < n) return {};
        std::vector<CellElement> xs;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t remaining = n - k - 1;
            const std::size_t max_degree = std::min<std::size_t>(2, budget - remaining);
            xs.push_back(random_element(cells[k], max_degree, centred(k)));
            budget -= xs.back().degree;
        }
        return xs;
    }

    static std::string describe(const std::vector<CellElement>& xs)
    {
        std::string out;
        for (const auto& x : xs) out += "(" + x.cell.to_string() + ")";
        return out;
    }

    const FockModel& m_;
    std::mt19937_64 rng_;
    AxiomReport report_;
};

}  // namespace

AxiomReport axiom_check(const FockModel& model, std::size_t trials, std::uint64_t seed)
{
    AxiomChecker ck(model, seed);
    const Mode mode = model.mode();
    const Scalar zero = Scalar::zero(mode);
    const Scalar one = Scalar::one(mode);
    const std::size_t n = model.dimension();
    std::vector<std::size_t> all_cols(n);
    for (std::size_t id = 0; id < n; ++id) all_cols[id] = id;

    // Normalization of the units in the vacuum and conjugate states.
    for (Cell c : kAllCells) {
        const auto unit = model.direct_unit(c);
        ck.expect(ck.vector_moment(unit, model.vacuum()) == (c.diagonal() ? one : zero),
                  "phi(1_{" + c.to_string() + "}) != delta");
        for (int j = 1; j <= 2; ++j) {
            const auto v = model.state_vector(j == 1 ? State::phi1 : State::phi2);
            ck.expect(ck.vector_moment(unit, v) == (c.col == j ? one : zero),
                      "phi_" + std::to_string(j) + "(1_{" + c.to_string() + "}) != delta");
        }
        ck.expect(model.unit_operator(UnitElement::unit(c, mode)).equals_on(unit, all_cols, mode),
                  "q-decomposition of 1_{" + c.to_string() + "} disagrees with its range");
    }

    // l* l = alpha^2 1_{i,j} wherever the creation is not cut off.
    std::vector<std::size_t> inner_cols;
    for (std::size_t id = 0; id < n; ++id) {
        if (model.word(id).size() < model.depth()) inner_cols.push_back(id);
    }
    for (Cell c : model.shape().cells()) {
        auto lhs = model.annihilation(c).compose(model.creation(c));
        auto rhs = model.direct_unit(c);
        rhs *= model.alpha(c) * model.alpha(c);
        ck.expect(lhs.equals_on(rhs, inner_cols, mode), "l*l != alpha^2 1 on cell " + c.to_string());
    }

    // q's against their defining ranges, orthogonality, and both unit sums.
    {
        auto direct_q = [&](Cell q) {
            FockOperator out(n);
            for (std::size_t id = 0; id < n; ++id) {
                const FockWord& w = model.word(id);
                bool hit = false;
                if (q == Cell{1, 1}) hit = w.empty();
                if (q == Cell{1, 2}) hit = !w.empty() && w.front() == Cell{2, 2};
                if (q == Cell{2, 1}) hit = !w.empty() && w.front() == Cell{1, 1};
                if (q == Cell{2, 2}) hit = !w.empty() && !w.front().diagonal();
                if (hit) out.add(id, id, one);
            }
            return out;
        };
        FockOperator total(n), identity(n);
        for (std::size_t id = 0; id < n; ++id) identity.add(id, id, one);
        for (Cell q : kAllCells) {
            const auto pq = model.unit_operator(UnitElement::q(q, mode));
            ck.expect(pq.equals_on(direct_q(q), all_cols, mode), "q_" + q.to_string() + " has the wrong range");
            ck.expect(pq.compose(pq).equals_on(pq, all_cols, mode), "q_" + q.to_string() + " is not idempotent");
            for (Cell other : kAllCells) {
                if (other == q) continue;
                const auto po = model.unit_operator(UnitElement::q(other, mode));
                ck.expect(pq.compose(po).equals_on(FockOperator(n), all_cols, mode),
                          "q_" + q.to_string() + " q_" + other.to_string() + " != 0");
            }
            total += pq;
        }
        ck.expect(total.equals_on(identity, all_cols, mode), "q's do not sum to the identity");
        for (int i = 1; i <= 2; ++i) {
            auto s = model.direct_unit({i, i});
            s += model.direct_unit({i, 3 - i});
            ck.expect(s.equals_on(identity, all_cols, mode),
                      "1_{" + std::to_string(i) + "," + std::to_string(i) + "} + off-diagonal unit != 1");
        }
    }

    for (std::size_t t = 0; t < trials; ++t) {
        // Units factor out of the vacuum state.
        {
            UnitElement u1(ck.small_int(-3, 3), ck.small_int(-3, 3), ck.small_int(-3, 3), ck.small_int(-3, 3));
            UnitElement u2(ck.small_int(-3, 3), ck.small_int(-3, 3), ck.small_int(-3, 3), ck.small_int(-3, 3));
            const std::size_t len = std::uniform_int_distribution<std::size_t>(1, model.depth())(ck.rng_);
            auto xs = ck.random_product(len, 0, [](std::size_t) { return false; });
            if (!xs.empty()) {
                const Scalar middle = ck.product_moment(xs, model.vacuum());
                std::vector<CellElement> wrapped;
                wrapped.push_back({{1, 1}, 0, model.unit_operator(u1)});
                wrapped.insert(wrapped.end(), xs.begin(), xs.end());
                wrapped.push_back({{1, 1}, 0, model.unit_operator(u2)});
                ck.expect(ck.product_moment(wrapped, model.vacuum()) == u1.phi() * middle * u2.phi(),
                          "phi(u1 a u2) != phi(u1)phi(a)phi(u2) for " + AxiomChecker::describe(xs));
            }
        }

        // Alternating products of centred elements vanish in phi.
        {
            const std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(5, model.depth()))(ck.rng_);
            auto xs = ck.random_product(len, 0, [](std::size_t) { return true; });
            if (!xs.empty()) {
                ck.expect(ck.product_moment(xs, model.vacuum()).is_zero(),
                          "centred alternating product " + AxiomChecker::describe(xs) + " has nonzero phi-moment");
            }
        }

        // A product ending in a diagonal element of another column vanishes in
        // the conjugate state; one ending off-diagonal vanishes in phi.
        {
            const std::size_t len = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(5, model.depth() - 1))(ck.rng_);
            auto xs = ck.random_product(len, 1, [](std::size_t) { return false; });
            if (!xs.empty()) {
                const Cell last = xs.back().cell;
                if (last.diagonal()) {
                    const int j = 3 - last.row;
                    const auto v = model.state_vector(j == 1 ? State::phi1 : State::phi2);
                    ck.expect(ck.product_moment(xs, v).is_zero(),
                              "phi_" + std::to_string(j) + " of " + AxiomChecker::describe(xs) + " is nonzero");
                } else {
                    ck.expect(ck.product_moment(xs, model.vacuum()).is_zero(),
                              "phi of " + AxiomChecker::describe(xs) + " ending off-diagonal is nonzero");
                }
            }
        }
    }
    return ck.report_;
}

}  // namespace smfree
