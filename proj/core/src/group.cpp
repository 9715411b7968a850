#include "spanind/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace spanind {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 62;

std::int64_t reduce_mod(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) {
    if (factors.empty()) factors.push_back(1);
    for (auto f : factors) {
        if (f < 1) throw std::invalid_argument("invariant factors must be >= 1");
    }

    // gcd/lcm exchange until the divisibility chain n1 | n2 | ... holds.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] != 0) {
                    const std::int64_t g = std::gcd(factors[i], factors[j]);
                    const std::int64_t l = factors[i] / g * factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    std::erase(factors, 1);
    if (factors.empty()) factors.push_back(1);

    factors_ = std::move(factors);
    order_ = 1;
    for (auto f : factors_) {
        if (order_ > kMaxOrder / f) throw std::invalid_argument("group order overflows");
        order_ *= f;
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i) {
        strides_[i] = strides_[i + 1] * factors_[i + 1];
    }
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    std::vector<std::int64_t> factors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad group literal: " + text);
        factors.push_back(v);
    }
    if (factors.empty()) throw std::invalid_argument("empty group literal");
    return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

void AbelianGroup::check_rank(const GroupElement& a) const {
    if (a.size() != factors_.size()) {
        throw std::invalid_argument("element rank does not match group shape");
    }
}

GroupElement AbelianGroup::make_element(const GroupElement& coords) const {
    check_rank(coords);
    GroupElement out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = reduce_mod(coords[i], factors_[i]);
    return out;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_rank(a);
    check_rank(b);
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = a[i] + b[i];
        if (s >= factors_[i]) s -= factors_[i];
        out[i] = s;
    }
    return out;
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    check_rank(a);
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] == 0 ? 0 : factors_[i] - a[i];
    return out;
}

GroupElement AbelianGroup::scalar_mul(std::int64_t k, const GroupElement& a) const {
    check_rank(a);
    GroupElement out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t km = reduce_mod(k, factors_[i]);
        out[i] = (km * a[i]) % factors_[i];
    }
    return out;
}

std::int64_t AbelianGroup::element_order(const GroupElement& a) const {
    check_rank(a);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t coord_order = factors_[i] / std::gcd(factors_[i], a[i]);
        ord = std::lcm(ord, coord_order);
    }
    return ord;
}

std::int64_t AbelianGroup::order2_count() const {
    int even = 0;
    for (auto f : factors_) even += (f % 2 == 0);
    return (std::int64_t{1} << even) - 1;
}

std::vector<GroupElement> AbelianGroup::elements(std::int64_t budget) const {
    if (order_ > budget) {
        throw BudgetExceeded("group of order " + std::to_string(order_) +
                             " exceeds enumeration budget " + std::to_string(budget));
    }
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    GroupElement cur = zero();
    for (std::int64_t i = 0; i < order_; ++i) {
        out.push_back(cur);
        for (int j = static_cast<int>(cur.size()) - 1; j >= 0; --j) {
            if (++cur[j] < factors_[j]) break;
            cur[j] = 0;
        }
    }
    return out;
}

std::int64_t AbelianGroup::index_of(const GroupElement& a) const {
    check_rank(a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx += a[i] * strides_[i];
    return idx;
}

GroupElement AbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    GroupElement out(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (index / strides_[i]) % factors_[i];
    return out;
}

std::int64_t AbelianGroup::index_add(std::int64_t a, std::int64_t b) const {
    if (factors_.size() == 1) {
        std::int64_t s = a + b;
        return s >= order_ ? s - order_ : s;
    }
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t s = (a / strides_[i]) % factors_[i] + (b / strides_[i]) % factors_[i];
        if (s >= factors_[i]) s -= factors_[i];
        out += s * strides_[i];
    }
    return out;
}

std::int64_t AbelianGroup::index_sub(std::int64_t a, std::int64_t b) const {
    return index_add(a, index_negate(b));
}

std::int64_t AbelianGroup::index_negate(std::int64_t a) const {
    if (factors_.size() == 1) return a == 0 ? 0 : order_ - a;
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t d = (a / strides_[i]) % factors_[i];
        out += (d == 0 ? 0 : factors_[i] - d) * strides_[i];
    }
    return out;
}

std::int64_t AbelianGroup::index_scalar_mul(std::int64_t k, std::int64_t a) const {
    if (factors_.size() == 1) return (reduce_mod(k, order_) * a) % order_;
    std::int64_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::int64_t d = (a / strides_[i]) % factors_[i];
        out += ((reduce_mod(k, factors_[i]) * d) % factors_[i]) * strides_[i];
    }
    return out;
}

std::int64_t AbelianGroup::index_sign_canonical(std::int64_t a) const {
    return std::min(a, index_negate(a));
}

std::string format_element(const GroupElement& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
    }
    return out;
}

GroupElement parse_element(const AbelianGroup& g, const std::string& text) {
    GroupElement coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stoll(item));
    return g.make_element(coords);
}

std::vector<GroupElement> parse_subset(const AbelianGroup& g, const std::string& text) {
    std::vector<GroupElement> out;
    std::string trimmed;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) return out;

    std::vector<std::string> parts;
    if (trimmed.find(';') != std::string::npos) {
        std::stringstream ss(trimmed);
        std::string item;
        while (std::getline(ss, item, ';')) parts.push_back(item);
    } else if (g.rank() == 1) {
        std::stringstream ss(trimmed);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
    } else {
        parts.push_back(trimmed);
    }
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_element(g, p));
    return out;
}

std::string format_subset(const std::vector<GroupElement>& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ';';
        out += format_element(set[i]);
    }
    return out;
}

namespace {

// Chains d_r | d_{r-1} | ... with product `rem`, collected largest first.
void chains_rec(std::int64_t rem, std::int64_t prev, std::vector<std::int64_t>& acc,
                std::vector<std::vector<std::int64_t>>& out) {
    if (rem == 1) {
        out.push_back(acc);
        return;
    }
    for (std::int64_t d = 2; d <= prev; ++d) {
        if (rem % d != 0 || prev % d != 0) continue;
        acc.push_back(d);
        chains_rec(rem / d, d, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("group order must be >= 1");
    if (n == 1) return {AbelianGroup({1})};
    std::vector<std::vector<std::int64_t>> chains;
    std::vector<std::int64_t> acc;
    chains_rec(n, n, acc, chains);
    std::vector<AbelianGroup> out;
    out.reserve(chains.size());
    for (auto& c : chains) {
        std::reverse(c.begin(), c.end());
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace spanind
