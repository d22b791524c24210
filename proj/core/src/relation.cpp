#include "lcanet/relation.hpp"

#include <algorithm>
#include <cctype>

namespace lcanet {

namespace {

constexpr auto npos = Bitset::npos;

} // namespace

LeafSet::LeafSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw InvalidInput("leaf set must not be empty");
    for (const auto& n : names_) {
        if (!valid_name(n))
            throw InvalidInput("invalid leaf name '" + n + "'");
    }
    std::sort(names_.begin(), names_.end());
    auto dup = std::adjacent_find(names_.begin(), names_.end());
    if (dup != names_.end())
        throw InvalidInput("duplicate leaf name '" + *dup + "'");
}

LeafId LeafSet::id(const std::string& name) const {
    if (auto found = find(name))
        return *found;
    throw UnknownLeaf("unknown leaf '" + name + "'");
}

std::optional<LeafId> LeafSet::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        return std::nullopt;
    return static_cast<LeafId>(it - names_.begin());
}

bool LeafSet::valid_name(const std::string& name) {
    if (name.empty() || name == "_root")
        return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '#' || c == ':')
            return false;
    }
    return true;
}

std::string to_string(const LeafSet& leaves, Pair p) {
    return leaves.name(p.lo) + " " + leaves.name(p.hi);
}

Pair pair_from_id(PairId id, std::size_t leaf_count) {
    // Walk the lo-major blocks; fine for the dense scan sizes we use.
    std::size_t remaining = id;
    for (LeafId lo = 0; lo < leaf_count; ++lo) {
        std::size_t block = leaf_count - lo;
        if (remaining < block)
            return Pair(lo, static_cast<LeafId>(lo + remaining));
        remaining -= block;
    }
    throw InvalidInput("pair id out of range");
}

Relation::Relation(LeafSet leaves)
    : leaves_(std::move(leaves)), universe_(pair_count(leaves_.size())) {
    pairs_.reserve(universe_);
    for (PairId id = 0; id < universe_; ++id)
        pairs_.push_back(pair_from_id(id, leaves_.size()));
    rows_.assign(universe_, Bitset(universe_));
    cols_.assign(universe_, Bitset(universe_));
}

bool Relation::insert(PairId p, PairId q) {
    if (rows_[p].test(q))
        return false;
    rows_[p].set(q);
    cols_[q].set(p);
    ++size_;
    return true;
}

std::vector<std::pair<Pair, Pair>> Relation::facts() const {
    std::vector<std::pair<Pair, Pair>> out;
    out.reserve(size_);
    for (PairId p = 0; p < universe_; ++p) {
        for (auto q = rows_[p].find_first(); q != npos; q = rows_[p].find_next(q))
            out.emplace_back(pairs_[p], pairs_[q]);
    }
    return out;
}

bool Relation::subset_of(const Relation& other) const {
    if (!(leaves_ == other.leaves_))
        throw LeafSetMismatch("relations over different leaf sets");
    for (PairId p = 0; p < universe_; ++p) {
        if (!rows_[p].is_subset_of(other.rows_[p]))
            return false;
    }
    return true;
}

bool Relation::operator==(const Relation& other) const {
    return leaves_ == other.leaves_ && rows_ == other.rows_;
}

Bitset support_mask(const Relation& R) {
    Bitset mask(R.universe());
    for (PairId p = 0; p < R.universe(); ++p) {
        if (R.row(p).any())
            mask.set(p);
        else if (R.col(p).any())
            mask.set(p);
    }
    return mask;
}

Bitset support_plus_mask(const Relation& R) {
    Bitset mask = support_mask(R);
    const std::size_t n = R.leaves().size();
    for (LeafId x = 0; x < n; ++x)
        mask.set(pair_id(Pair(x, x), n));
    return mask;
}

namespace {

std::vector<Pair> mask_to_pairs(const Relation& R, const Bitset& mask) {
    std::vector<Pair> out;
    out.reserve(mask.count());
    for (auto p = mask.find_first(); p != npos; p = mask.find_next(p))
        out.push_back(R.pair_at(static_cast<PairId>(p)));
    return out;
}

} // namespace

std::vector<Pair> support(const Relation& R) {
    return mask_to_pairs(R, support_mask(R));
}

std::vector<Pair> support_plus(const Relation& R) {
    return mask_to_pairs(R, support_plus_mask(R));
}

Relation transitive_closure(const Relation& R) {
    Relation tc(R.leaves());
    const std::size_t universe = R.universe();
    for (PairId p = 0; p < universe; ++p) {
        // BFS over the pair digraph: reached holds everything with a path of
        // length >= 1 from p.
        Bitset reached = R.row(p);
        Bitset frontier = reached;
        while (frontier.any()) {
            Bitset next(universe);
            for (auto q = frontier.find_first(); q != npos; q = frontier.find_next(q))
                next |= R.row(static_cast<PairId>(q));
            next -= reached;
            reached |= next;
            frontier = std::move(next);
        }
        for (auto q = reached.find_first(); q != npos; q = reached.find_next(q))
            tc.insert(p, static_cast<PairId>(q));
    }
    return tc;
}

std::optional<std::pair<Pair, Pair>> asymmetry_witness(const Relation& R) {
    for (PairId p = 0; p < R.universe(); ++p) {
        Bitset both = R.row(p);
        both &= R.col(p);
        auto q = both.find_first();
        if (q != npos)
            return std::make_pair(R.pair_at(p), R.pair_at(static_cast<PairId>(q)));
    }
    return std::nullopt;
}

bool is_asymmetric(const Relation& R) {
    return !asymmetry_witness(R).has_value();
}

bool is_cross_consistent(const Relation& R) {
    const std::size_t n = R.leaves().size();
    const Bitset supp = support_mask(R);
    for (PairId xy = 0; xy < R.universe(); ++xy) {
        const Bitset& sources = R.col(xy);
        if (!sources.any())
            continue;
        // Leaves occurring in any pair related to xy; the rule closes the
        // support-restricted product of this set over column xy.
        Bitset leaves(n);
        for (auto s = sources.find_first(); s != npos; s = sources.find_next(s)) {
            Pair p = R.pair_at(static_cast<PairId>(s));
            leaves.set(p.lo);
            leaves.set(p.hi);
        }
        for (auto a = leaves.find_first(); a != npos; a = leaves.find_next(a)) {
            for (auto b = a; b != npos; b = leaves.find_next(b)) {
                PairId ab = pair_id(Pair(static_cast<LeafId>(a), static_cast<LeafId>(b)), n);
                if (supp.test(ab) && !R.contains(ab, xy))
                    return false;
            }
        }
    }
    return true;
}

Relation rebase(const Relation& R, const LeafSet& target) {
    std::vector<LeafId> map(R.leaves().size());
    for (LeafId x = 0; x < R.leaves().size(); ++x)
        map[x] = target.id(R.leaves().name(x));
    Relation out(target);
    for (const auto& [p, q] : R.facts())
        out.insert(Pair(map[p.lo], map[p.hi]), Pair(map[q.lo], map[q.hi]));
    return out;
}

} // namespace lcanet
